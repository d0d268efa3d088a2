#pragma once

#include <set>
#include <string>

#include "cubiclines/pipeline.hpp"

namespace cubiclines {

/// Outcome of the real-line count criterion: a real canonical surface has 27
/// real lines iff all roots of the ruling cubic and both branch values s1, s2
/// are real, 7 iff only one root is real and s1, s2 are not, and 15 otherwise.
struct RealClassification {
    int count = 0;        // 7, 15 or 27
    int gRealRoots = 0;   // 1 or 3
    bool sReal = false;   // both s1 and s2 real (infinity counts as real)
    PipelineTrace evidence;
};

/// Classifies a real canonical surface by the realness of the ruling-cubic
/// roots and of s1, s2. Throws NotReal for complex coefficients, NotCanonical
/// when the canonical frame is missing, and propagates degenerate-trace
/// errors from the underlying steps.
RealClassification classifyByCriterion(const CubicForm& f, const Tolerance& tol = {});

int countRealLinesDirect(const LineTable& table, const Tolerance& tol = {});

/// The labels expected to be real under the classification. For count 7, 27
/// and the one-real-root 15 case the exact label set is checked against the
/// table (CaseMismatch on any difference); in the three-real-roots 15 case
/// only the count and conjugation-closure are asserted, and the observed real
/// labels are returned.
std::set<std::string> caseBreakdown(const LineTable& table, const RealClassification& cls,
                                    const Tolerance& tol = {});

}  // namespace cubiclines
