#include "cubiclines/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace cubiclines {

int IncidenceGraph::degree(int i) const {
    int d = 0;
    for (int j = 0; j < n; ++j)
        if (at(i, j)) ++d;
    return d;
}

bool expectedAdjacency(const LineLabel& a, const LineLabel& b) {
    if (a.index() == b.index()) return false;
    using Kind = LineLabel::Kind;
    const Kind ka = a.kind(), kb = b.kind();
    if (ka == Kind::E && kb == Kind::E) return false;
    if (ka == Kind::C && kb == Kind::C) return false;
    if ((ka == Kind::E && kb == Kind::C) || (ka == Kind::C && kb == Kind::E))
        return a.a() != b.a();
    if (ka == Kind::L && kb == Kind::L) {
        const bool share = a.a() == b.a() || a.a() == b.b() || a.b() == b.a() || a.b() == b.b();
        return !share;
    }
    // one E-or-C, one L
    const LineLabel& single = (ka == Kind::L) ? b : a;
    const LineLabel& pair = (ka == Kind::L) ? a : b;
    return single.a() == pair.a() || single.a() == pair.b();
}

IncidenceGraph buildIncidenceGraph(const LineTable& table, const Tolerance& tol) {
    IncidenceGraph g(27);
    const auto& labels = LineLabel::all();
    for (int i = 0; i < 27; ++i)
        for (int j = i + 1; j < 27; ++j)
            g.set(i, j, !linesSkew(table.at(labels[i]), table.at(labels[j]), tol));
    return g;
}

VerificationReport verifyTable(const CubicForm& f, const LineTable& table, const Tolerance& tol) {
    VerificationReport rep;
    const auto& labels = LineLabel::all();

    for (const LineLabel& lbl : labels)
        rep.maxOnSurfaceResidual =
            std::max(rep.maxOnSurfaceResidual, lineOnSurface(f, table.at(lbl), tol));

    rep.distinct = true;
    for (int i = 0; i < 27 && rep.distinct; ++i)
        for (int j = i + 1; j < 27 && rep.distinct; ++j)
            if (sameLine(table.at(labels[i]), table.at(labels[j]), tol)) rep.distinct = false;

    const IncidenceGraph g = buildIncidenceGraph(table, tol);
    for (int i = 0; i < 27; ++i) {
        for (int j = i + 1; j < 27; ++j)
            if (g.at(i, j) != expectedAdjacency(labels[i], labels[j]))
                rep.incidenceMismatches.emplace_back(labels[i], labels[j]);
        ++rep.degreeHistogram[g.degree(i)];
    }

    rep.pass = rep.distinct && rep.incidenceMismatches.empty() &&
               rep.maxOnSurfaceResidual <= tol.rel_zero;
    return rep;
}

bool trianglePropertyHolds(const IncidenceGraph& g) {
    std::vector<int> all(g.n);
    for (int i = 0; i < g.n; ++i) all[i] = i;
    return trianglePropertyHolds(g, all);
}

bool trianglePropertyHolds(const IncidenceGraph& g, const std::vector<int>& keep) {
    const int m = static_cast<int>(keep.size());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            if (!g.at(keep[a], keep[b])) continue;
            int triangles = 0;
            for (int c = 0; c < m; ++c) {
                if (c == a || c == b) continue;
                if (g.at(keep[a], keep[c]) && g.at(keep[b], keep[c])) ++triangles;
            }
            if (triangles > 1) return false;
        }
    return true;
}

namespace {

/// Kuhn augmenting-path matching restricted to edges with distance <= thr.
bool perfectMatchingUnder(const std::vector<double>& dist, int n, double thr,
                          std::vector<int>* matchOut) {
    std::vector<int> matchB(n, -1);
    std::vector<char> visited(n);
    std::function<bool(int)> tryMatch = [&](int a) -> bool {
        for (int b = 0; b < n; ++b) {
            if (visited[b] || dist[a * n + b] > thr) continue;
            visited[b] = 1;
            if (matchB[b] < 0 || tryMatch(matchB[b])) {
                matchB[b] = a;
                return true;
            }
        }
        return false;
    };
    for (int a = 0; a < n; ++a) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!tryMatch(a)) return false;
    }
    if (matchOut) {
        matchOut->assign(n, -1);
        for (int b = 0; b < n; ++b) (*matchOut)[matchB[b]] = b;
    }
    return true;
}

}  // namespace

std::pair<std::vector<int>, double> matchLineSets(const std::vector<Line>& a,
                                                  const std::vector<Line>& b,
                                                  const Tolerance& tol) {
    if (a.size() != b.size()) throw Error("SizeMismatch", "line sets have different sizes");
    const int n = static_cast<int>(a.size());
    std::vector<double> dist(n * n);
    std::vector<double> values;
    values.reserve(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            dist[i * n + j] = pluckerDistance(a[i], b[j], tol);
            values.push_back(dist[i * n + j]);
        }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    // smallest threshold admitting a perfect matching (bottleneck optimum)
    int lo = 0, hi = static_cast<int>(values.size()) - 1;
    if (!perfectMatchingUnder(dist, n, values[hi], nullptr))
        throw Error("SizeMismatch", "no matching exists");  // cannot happen for finite distances
    while (lo < hi) {
        const int mid = (lo + hi) / 2;
        if (perfectMatchingUnder(dist, n, values[mid], nullptr))
            hi = mid;
        else
            lo = mid + 1;
    }
    std::vector<int> match;
    perfectMatchingUnder(dist, n, values[lo], &match);
    return {match, values[lo]};
}

}  // namespace cubiclines
