#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cubiclines/surface.hpp"

namespace cubiclines {

struct OracleResult {
    std::vector<Line> lines;
    std::uint64_t seed = 0;
    int budget = 0;
    /// false when fewer than 27 distinct lines were found within the budget
    /// (possible singular surface or insufficient budget).
    bool complete = false;
};

/// Brute-force line finder, independent of the closed-form construction:
/// in each of the six coordinate-pair charts the line is a graph
/// x_p = a x_r + b x_s, x_q = c x_r + d x_s, and containment in V(f) is a
/// 4x4 polynomial system solved by multistart damped Newton from `budget`
/// seeded complex Gaussian starts per chart; results are deduplicated by
/// Plucker distance. Requires budget >= 500.
OracleResult bruteForceLines(const CubicForm& f, int budget = 2000, std::uint64_t seed = 1,
                             const Tolerance& tol = {});

int realLineCount(const std::vector<Line>& lines, const Tolerance& tol = {});

/// First pairwise-skew triple in a deterministic scan order, if any.
std::optional<std::array<Line, 3>> findSkewTriple(const std::vector<Line>& lines,
                                                  const Tolerance& tol = {});

}  // namespace cubiclines
