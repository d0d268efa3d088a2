#include "cubiclines/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace cubiclines {

namespace {

/// chart: the line is the graph x_p = a x_r + b x_s, x_q = c x_r + d x_s
struct Chart {
    int p, q, r, s;
};

constexpr Chart kCharts[6] = {
    {0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}, {1, 2, 0, 3}, {1, 3, 0, 2}, {2, 3, 0, 1},
};

struct Params {
    Complex a, b, c, d;
};

/// Spanning points of the chart line at (x_r, x_s) = (1, 0) and (0, 1).
void chartPoints(const Chart& ch, const Params& w, PointP3& P1, PointP3& P2) {
    P1 = PointP3{};
    P2 = PointP3{};
    P1.coords[ch.r] = 1.0;
    P1.coords[ch.p] = w.a;
    P1.coords[ch.q] = w.c;
    P2.coords[ch.s] = 1.0;
    P2.coords[ch.p] = w.b;
    P2.coords[ch.q] = w.d;
}

/// Residual: the four coefficients of f restricted to the chart line.
std::array<Complex, 4> residual(const CubicForm& f, const Chart& ch, const Params& w) {
    PointP3 P1, P2;
    chartPoints(ch, w, P1, P2);
    return restrictToLine(f, P1, P2);
}

double residualNorm(const std::array<Complex, 4>& r) {
    double s = 0.0;
    for (Complex v : r) s += std::norm(v);
    return std::sqrt(s);
}

/// Coefficients (s^2, s t, t^2) of df/dx_v restricted to the chart line.
std::array<Complex, 3> restrictQuadratic(const CubicForm& f, int v, const PointP3& P1,
                                         const PointP3& P2) {
    std::array<Complex, 3> out{};
    for (int m = 0; m < 20; ++m) {
        const auto& e = kCubicMonomials[m];
        if (e[v] == 0 || f.coeffs[m] == Complex{0.0, 0.0}) continue;
        // multiply out the monomial with one factor of x_v removed
        std::array<Complex, 3> bin{};
        bin[0] = f.coeffs[m] * static_cast<double>(e[v]);
        int degree = 0;
        for (int var = 0; var < 4; ++var) {
            const int reps = (var == v) ? e[var] - 1 : e[var];
            for (int rep = 0; rep < reps; ++rep) {
                std::array<Complex, 3> nxt{};
                for (int d = 0; d <= degree; ++d) {
                    nxt[d] += bin[d] * P1.coords[var];
                    nxt[d + 1] += bin[d] * P2.coords[var];
                }
                bin = nxt;
                ++degree;
            }
        }
        for (int d = 0; d < 3; ++d) out[d] += bin[d];
    }
    return out;
}

/// Solve the 4x4 complex system J x = rhs by partial-pivot elimination.
bool solve4(std::array<std::array<Complex, 4>, 4> J, std::array<Complex, 4> rhs,
            std::array<Complex, 4>& x) {
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(J[r][col]) > std::abs(J[piv][col])) piv = r;
        if (std::abs(J[piv][col]) < 1e-250) return false;
        std::swap(J[piv], J[col]);
        std::swap(rhs[piv], rhs[col]);
        for (int r = col + 1; r < 4; ++r) {
            const Complex f = J[r][col] / J[col][col];
            for (int c = col; c < 4; ++c) J[r][c] -= f * J[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    for (int r = 3; r >= 0; --r) {
        Complex s = rhs[r];
        for (int c = r + 1; c < 4; ++c) s -= J[r][c] * x[c];
        x[r] = s / J[r][r];
    }
    return true;
}

double paramScale(const Params& w) {
    const double m = std::max({1.0, std::abs(w.a), std::abs(w.b), std::abs(w.c), std::abs(w.d)});
    return m * m * m;  // the restriction coefficients grow cubically in the parameters
}

/// Damped Newton on the 4 restriction coefficients; true on convergence to
/// acceptBase relative to the parameter scale.
bool newtonPolish(const CubicForm& f, const Chart& ch, Params& w, double acceptBase) {
    auto R = residual(f, ch, w);
    double rn = residualNorm(R);
    for (int it = 0; it < 60; ++it) {
        if (rn <= acceptBase * paramScale(w)) return true;
        PointP3 P1, P2;
        chartPoints(ch, w, P1, P2);
        // d/da = s * (df/dx_p restricted), d/db = t * (...), same with x_q for c, d
        const auto gp = restrictQuadratic(f, ch.p, P1, P2);
        const auto gq = restrictQuadratic(f, ch.q, P1, P2);
        std::array<std::array<Complex, 4>, 4> J{};
        for (int row = 0; row < 4; ++row) {
            // columns: a, b, c, d
            J[row][0] = (row < 3) ? gp[row] : Complex{0.0, 0.0};
            J[row][1] = (row > 0) ? gp[row - 1] : Complex{0.0, 0.0};
            J[row][2] = (row < 3) ? gq[row] : Complex{0.0, 0.0};
            J[row][3] = (row > 0) ? gq[row - 1] : Complex{0.0, 0.0};
        }
        std::array<Complex, 4> step{};
        if (!solve4(J, R, step)) return false;
        double lambda = 1.0;
        bool improved = false;
        for (int bt = 0; bt < 8; ++bt) {
            const Params trial = {w.a - lambda * step[0], w.b - lambda * step[1],
                                  w.c - lambda * step[2], w.d - lambda * step[3]};
            const auto Rt = residual(f, ch, trial);
            const double rt = residualNorm(Rt);
            if (rt < rn) {
                w = trial;
                R = Rt;
                rn = rt;
                improved = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!improved) return rn <= acceptBase * paramScale(w);
    }
    return rn <= acceptBase * paramScale(w);
}

Line chartLine(const Chart& ch, const Params& w) {
    LinearForm f1, f2;
    f1.coeffs[ch.p] = 1.0;
    f1.coeffs[ch.r] = -w.a;
    f1.coeffs[ch.s] = -w.b;
    f2.coeffs[ch.q] = 1.0;
    f2.coeffs[ch.r] = -w.c;
    f2.coeffs[ch.s] = -w.d;
    return {f1, f2};
}

}  // namespace

OracleResult bruteForceLines(const CubicForm& f, int budget, std::uint64_t seed,
                             const Tolerance& tol) {
    if (budget < 500) throw Error("InvalidInput", "oracle budget must be at least 500");
    const double fnorm = f.norm();
    if (fnorm == 0.0) throw Error("InvalidInput", "zero cubic form");
    const double accept = 1e-12 * fnorm;

    struct Candidate {
        Line line;
        std::array<Complex, 6> plk;
    };
    std::vector<Candidate> found;

    for (int chartIdx = 0; chartIdx < 6; ++chartIdx) {
        const Chart& ch = kCharts[chartIdx];
        NormalSampler rng(seed * 6 + static_cast<std::uint64_t>(chartIdx) + 1);
        for (int start = 0; start < budget; ++start) {
            // cycle through a few start scales to also reach far-out lines
            static constexpr double kScales[4] = {0.5, 1.0, 2.0, 4.0};
            const double sc = kScales[start % 4];
            Params w = {sc * rng.complexNormal(), sc * rng.complexNormal(),
                        sc * rng.complexNormal(), sc * rng.complexNormal()};
            if (!newtonPolish(f, ch, w, accept)) continue;
            Candidate cand;
            cand.line = chartLine(ch, w);
            if (lineOnSurface(f, cand.line, tol) > tol.rel_zero) continue;
            cand.plk = pluckerCoords(cand.line, tol);
            found.push_back(std::move(cand));
        }
    }

    // deterministic reduction: sort candidates, then greedy-cluster at the
    // match distance
    std::sort(found.begin(), found.end(), [](const Candidate& x, const Candidate& y) {
        for (int i = 0; i < 6; ++i) {
            if (x.plk[i].real() != y.plk[i].real()) return x.plk[i].real() < y.plk[i].real();
            if (x.plk[i].imag() != y.plk[i].imag()) return x.plk[i].imag() < y.plk[i].imag();
        }
        return false;
    });
    OracleResult out;
    out.seed = seed;
    out.budget = budget;
    std::vector<std::array<Complex, 6>> reps;
    for (const Candidate& cand : found) {
        bool dup = false;
        for (const auto& rep : reps) {
            if (pluckerVectorDistance(cand.plk, rep) <= tol.match_dist) {
                dup = true;
                break;
            }
        }
        if (dup) continue;
        reps.push_back(cand.plk);
        out.lines.push_back(canonicalizeLine(cand.line, tol));
    }
    out.complete = out.lines.size() >= 27;
    return out;
}

int realLineCount(const std::vector<Line>& lines, const Tolerance& tol) {
    int n = 0;
    for (const Line& l : lines)
        if (lineIsReal(l, tol)) ++n;
    return n;
}

std::optional<std::array<Line, 3>> findSkewTriple(const std::vector<Line>& lines,
                                                  const Tolerance& tol) {
    const int n = static_cast<int>(lines.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!linesSkew(lines[i], lines[j], tol)) continue;
            for (int k = j + 1; k < n; ++k)
                if (linesSkew(lines[i], lines[k], tol) && linesSkew(lines[j], lines[k], tol))
                    return std::array<Line, 3>{lines[i], lines[j], lines[k]};
        }
    return std::nullopt;
}

}  // namespace cubiclines
