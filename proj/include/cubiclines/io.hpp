#pragma once

#include <json.hpp>

#include "cubiclines/canonicalizer.hpp"
#include "cubiclines/oracle.hpp"
#include "cubiclines/pipeline.hpp"
#include "cubiclines/realcount.hpp"
#include "cubiclines/verifier.hpp"

namespace cubiclines::io {

using Json = nlohmann::ordered_json;

// complex numbers serialize as [re, im]; projective scalars as
// {"num": [re, im], "den": [re, im]}

Json toJson(Complex v);
Complex complexFromJson(const Json& j);

Json toJson(const ProjectiveScalar& s);
ProjectiveScalar projectiveFromJson(const Json& j);

/// {"coefficients": [{"exps": [i,j,k,l], "re": r, "im": m}, ...]};
/// omitted monomials are zero, duplicated exponent quadruples are an input
/// error, "im" defaults to 0.
Json toJson(const CubicForm& f);
CubicForm surfaceFromJson(const Json& j);

/// {"form1": [[re,im] x4], "form2": [[re,im] x4]}
Json toJson(const Line& l);
Line lineFromJson(const Json& j);

Json toJson(const Transform& t);
Transform transformFromJson(const Json& j);

/// {"lines": {"E1": <line>, ..., "L56": <line>}}
Json tableToJson(const LineTable& table);
LineTable tableFromJson(const Json& j);

Json traceToJson(const PipelineTrace& trace);

Json toJson(const VerificationReport& rep);

/// {"count": n, "g_real_roots": r, "s_real": bool, "s": [...], "t": [...]};
/// an infinite s is emitted as the string "infinity".
Json toJson(const RealClassification& cls);

/// {"lines": [...], "found": n, "budget": b, "seed": s, "complete": bool}
Json toJson(const OracleResult& res);

/// {"surface": <surface>, "lines": [<line> x3]}
SkewTriple tripleFromJson(const Json& j);

Json parse(const std::string& text);

}  // namespace cubiclines::io
