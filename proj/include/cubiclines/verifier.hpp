#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cubiclines/pipeline.hpp"
#include "cubiclines/surface.hpp"

namespace cubiclines {

/// Symmetric incidence structure on n lines (zero diagonal).
struct IncidenceGraph {
    int n = 0;
    std::vector<bool> adj;  // n*n, row-major

    explicit IncidenceGraph(int size = 0) : n(size), adj(size * size, false) {}
    bool at(int i, int j) const { return adj[i * n + j]; }
    void set(int i, int j, bool v) {
        adj[i * n + j] = v;
        adj[j * n + i] = v;
    }
    int degree(int i) const;
};

struct VerificationReport {
    double maxOnSurfaceResidual = 0.0;
    bool distinct = false;
    std::vector<std::pair<LineLabel, LineLabel>> incidenceMismatches;
    std::map<int, int> degreeHistogram;
    bool pass = false;
};

/// The classical incidence rule: E_i meets C_j iff i != j, E_i or C_i meets
/// L_{m,n} iff i is one of m, n, two L lines meet iff their index pairs are
/// disjoint, and no two E (or two C) lines ever meet.
bool expectedAdjacency(const LineLabel& a, const LineLabel& b);

/// Incidence graph of a computed table; an edge means the two lines meet
/// (the stacked-determinant test shared with linesSkew).
IncidenceGraph buildIncidenceGraph(const LineTable& table, const Tolerance& tol = {});

/// Full certification: on-surface residuals, pairwise distinctness, exact
/// match against expectedAdjacency, and the degree histogram.
VerificationReport verifyTable(const CubicForm& f, const LineTable& table,
                               const Tolerance& tol = {});

/// True iff no edge of the graph lies in two distinct triangles.
bool trianglePropertyHolds(const IncidenceGraph& g);
/// Same property on the subgraph induced by `keep`.
bool trianglePropertyHolds(const IncidenceGraph& g, const std::vector<int>& keep);

/// Bottleneck-optimal bijection between two equal-size line sets under the
/// Plucker metric; returns the matching (indices into b) and the largest
/// matched distance. Throws SizeMismatch.
std::pair<std::vector<int>, double> matchLineSets(const std::vector<Line>& a,
                                                  const std::vector<Line>& b,
                                                  const Tolerance& tol = {});

}  // namespace cubiclines
