#include "cubiclines/api.hpp"

#include "cubiclines/samples.hpp"
#include "cubiclines/viz.hpp"

namespace cubiclines::api {

namespace {

io::Json realLineInfo(const LineTable& table, const Tolerance& tol) {
    io::Json reals = io::Json::array();
    int count = 0;
    for (const LineLabel& lbl : LineLabel::all()) {
        if (lineIsReal(table.at(lbl), tol)) {
            reals.push_back(lbl.name());
            ++count;
        }
    }
    return io::Json{{"count", count}, {"labels", reals}};
}

}  // namespace

io::Json runSolve(const io::Json& input, const Tolerance& tol) {
    if (input.is_object() && input.contains("lines")) {
        const SkewTriple triple = io::tripleFromJson(input);
        const CanonicalizeResult canon = canonicalize(triple, tol);
        const PipelineResult res = computeAll(canon.canonical, tol);
        directTableEval(canon.canonical, res.trace, &res.table, tol);
        const LineTable original = pullBackTable(canon.toCanonical, res.table, tol);
        io::Json out;
        out["canonical_surface"] = io::toJson(canon.canonical);
        out["transform"] = io::toJson(canon.toCanonical);
        out["lines"] = io::tableToJson(res.table)["lines"];
        out["trace"] = io::traceToJson(res.trace);
        out["original_lines"] = io::tableToJson(original)["lines"];
        out["real"] = realLineInfo(original, tol);
        return out;
    }
    const CubicForm f = io::surfaceFromJson(input);
    const PipelineResult res = computeAll(f, tol);
    directTableEval(f, res.trace, &res.table, tol);
    io::Json out;
    out["lines"] = io::tableToJson(res.table)["lines"];
    out["trace"] = io::traceToJson(res.trace);
    out["real"] = realLineInfo(res.table, tol);
    return out;
}

io::Json runVerify(const io::Json& surface, const io::Json& table, const Tolerance& tol) {
    const CubicForm f = io::surfaceFromJson(surface);
    const LineTable t = io::tableFromJson(table);
    return io::toJson(verifyTable(f, t, tol));
}

io::Json runClassify(const io::Json& surface, const Tolerance& tol) {
    const CubicForm f = io::surfaceFromJson(surface);
    return io::toJson(classifyByCriterion(f, tol));
}

io::Json runOracle(const io::Json& surface, int budget, std::uint64_t seed,
                   const Tolerance& tol) {
    const CubicForm f = io::surfaceFromJson(surface);
    return io::toJson(bruteForceLines(f, budget, seed, tol));
}

io::Json runGenerate(std::uint64_t seed, double scale, bool realCoeffs) {
    return io::toJson(randomCanonical(seed, scale, realCoeffs));
}

io::Json runDemo(const Tolerance& tol) {
    io::Json surfaces = io::Json::array();
    bool allPass = true;
    for (const char* name : {"real27", "real15", "real7"}) {
        const CubicForm f = samples::byName(name);
        const PipelineResult res = computeAll(f, tol);
        const VerificationReport rep = verifyTable(f, res.table, tol);
        const RealClassification cls = classifyByCriterion(f, tol);
        const int direct = countRealLinesDirect(res.table, tol);
        const bool ok = rep.pass && cls.count == direct;
        allPass = allPass && ok;
        surfaces.push_back(io::Json{{"name", name},
                                    {"verified", rep.pass},
                                    {"max_residual", rep.maxOnSurfaceResidual},
                                    {"classified_count", cls.count},
                                    {"real_line_count", direct},
                                    {"pass", ok}});
    }
    return io::Json{{"surfaces", surfaces}, {"pass", allPass}};
}

io::Json runExportViz(const io::Json& surface, const io::Json* table, double box, int grid,
                      const Tolerance& tol) {
    const CubicForm f = io::surfaceFromJson(surface);
    if (table) {
        const LineTable t = io::tableFromJson(*table);
        return viz::exportViz(f, &t, box, grid, tol);
    }
    return viz::exportViz(f, nullptr, box, grid, tol);
}

}  // namespace cubiclines::api
