#include "cubiclines/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace cubiclines {

// ---------------------------------------------------------------------------
// labels

LineLabel LineLabel::E(int i) {
    if (i < 1 || i > 6) throw Error("InvalidInput", "E index out of range");
    return LineLabel(Kind::E, i, 0);
}

LineLabel LineLabel::C(int i) {
    if (i < 1 || i > 6) throw Error("InvalidInput", "C index out of range");
    return LineLabel(Kind::C, i, 0);
}

LineLabel LineLabel::L(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > 6 || i == j) throw Error("InvalidInput", "L index pair out of range");
    return LineLabel(Kind::L, i, j);
}

int LineLabel::index() const {
    switch (kind_) {
        case Kind::E: return a_ - 1;
        case Kind::C: return 6 + a_ - 1;
        default: {
            int idx = 12;
            for (int i = 1; i <= 6; ++i)
                for (int j = i + 1; j <= 6; ++j) {
                    if (i == a_ && j == b_) return idx;
                    ++idx;
                }
            throw Error("InvalidInput", "bad label");
        }
    }
}

std::string LineLabel::name() const {
    switch (kind_) {
        case Kind::E: return "E" + std::to_string(a_);
        case Kind::C: return "C" + std::to_string(a_);
        default: return "L" + std::to_string(a_) + std::to_string(b_);
    }
}

const std::array<LineLabel, 27>& LineLabel::all() {
    static const std::array<LineLabel, 27> labels = [] {
        std::vector<LineLabel> v;
        for (int i = 1; i <= 6; ++i) v.push_back(E(i));
        for (int i = 1; i <= 6; ++i) v.push_back(C(i));
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j) v.push_back(L(i, j));
        std::array<LineLabel, 27> out = {
            v[0],  v[1],  v[2],  v[3],  v[4],  v[5],  v[6],  v[7],  v[8],
            v[9],  v[10], v[11], v[12], v[13], v[14], v[15], v[16], v[17],
            v[18], v[19], v[20], v[21], v[22], v[23], v[24], v[25], v[26]};
        return out;
    }();
    return labels;
}

std::optional<LineLabel> LineLabel::parse(const std::string& s) {
    if (s.size() == 2 && (s[0] == 'E' || s[0] == 'C') && s[1] >= '1' && s[1] <= '6')
        return s[0] == 'E' ? E(s[1] - '0') : C(s[1] - '0');
    if (s.size() == 3 && s[0] == 'L' && s[1] >= '1' && s[1] <= '6' && s[2] >= '1' &&
        s[2] <= '6' && s[1] < s[2])
        return L(s[1] - '0', s[2] - '0');
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// canonical frame

namespace frame {

Line e1() { return {LinearForm{{1.0, 0.0, 0.0, 0.0}}, LinearForm{{0.0, 1.0, 0.0, 0.0}}}; }
Line e2() { return {LinearForm{{0.0, 0.0, 1.0, 0.0}}, LinearForm{{0.0, 0.0, 0.0, 1.0}}}; }
Line e3() { return {LinearForm{{1.0, 0.0, -1.0, 0.0}}, LinearForm{{0.0, 1.0, 0.0, -1.0}}}; }

Complex quadric(const PointP3& p) {
    return p.coords[0] * p.coords[3] - p.coords[1] * p.coords[2];
}

Line rulingM(const ProjectiveScalar& s) {
    return {LinearForm{{s.den, 0.0, -s.num, 0.0}}, LinearForm{{0.0, s.den, 0.0, -s.num}}};
}

Line rulingN(const ProjectiveScalar& t) {
    return {LinearForm{{t.den, -t.num, 0.0, 0.0}}, LinearForm{{0.0, 0.0, t.den, -t.num}}};
}

}  // namespace frame

// ---------------------------------------------------------------------------
// shared scalar blocks

namespace {

std::array<Complex, 3> ell1Coeffs(const CubicForm& f, Complex t) {
    auto a = [&](int i, int j, int k, int l) { return f.alpha(i, j, k, l); };
    return {t * t * a(2, 0, 1, 0) + t * a(1, 1, 1, 0) + a(0, 2, 1, 0),
            t * a(1, 0, 2, 0) + a(0, 1, 2, 0),
            t * t * a(1, 0, 2, 0) + t * (a(0, 1, 2, 0) + a(1, 0, 1, 1)) + a(0, 1, 1, 1)};
}

std::array<Complex, 3> ell2Coeffs(const CubicForm& f, Complex t) {
    auto a = [&](int i, int j, int k, int l) { return f.alpha(i, j, k, l); };
    return {t * a(2, 0, 1, 0) + a(2, 0, 0, 1),
            t * t * a(2, 0, 1, 0) + t * (a(2, 0, 0, 1) + a(1, 1, 1, 0)) + a(1, 1, 0, 1),
            t * t * a(1, 0, 2, 0) + t * a(1, 0, 1, 1) + a(1, 0, 0, 2)};
}

std::array<Complex, 3> ell3Coeffs(const CubicForm& f, Complex t) {
    auto a = [&](int i, int j, int k, int l) { return f.alpha(i, j, k, l); };
    return {t * t * a(2, 0, 1, 0) + t * a(1, 1, 1, 0) + a(0, 2, 1, 0),
            t * a(2, 0, 1, 0) + a(0, 1, 2, 0) + a(1, 1, 1, 0),
            t * a(2, 0, 0, 1) - a(1, 0, 0, 2)};
}

/// V(den x0 + (-num c1 - den t4) x1, (den + num c2) x2 + (num c3 - den t4) x3);
/// the projective parameter handles the branch at infinity in one formula.
Line c3StyleLine(const ProjectiveScalar& s, const std::array<Complex, 3>& c, Complex t4) {
    const Complex n = s.num, w = s.den;
    return {LinearForm{{w, -n * c[0] - w * t4, 0.0, 0.0}},
            LinearForm{{0.0, 0.0, w + n * c[1], n * c[2] - w * t4}}};
}

/// (a, b, c) of the line V(x0 + a x1, b x2 + c x3) at a finite branch value s.
std::array<Complex, 3> abcAt(Complex s, const std::array<Complex, 3>& c, Complex t4) {
    return {-s * c[0] - t4, 1.0 + s * c[1], s * c[2] - t4};
}

/// Residual of E1 and V(x1, c2 x2 + c3 x3) in the plane V(x1); covers the
/// branch at infinity. The restriction of f to x1 = 0 factors as
/// x0 (c2 x2 + c3 x3)(beta x0 + gamma x2 + delta x3).
Line residualMNPInfinity(const CubicForm& f, Complex c2, Complex c3,
                         std::array<Complex, 3>* out, const Tolerance& tol) {
    auto a = [&](int i, int j, int k, int l) { return f.alpha(i, j, k, l); };
    const double b2 = std::norm(c2), c2n = std::norm(c3);
    if (b2 + c2n == 0.0) throw Error("InvalidInput", "degenerate plane form");
    const Complex beta = (std::conj(c2) * a(2, 0, 1, 0) + std::conj(c3) * a(2, 0, 0, 1)) / (b2 + c2n);
    const Complex gam = (std::conj(c3) * std::conj(c3) * (c3 * a(1, 0, 1, 1) - c2 * a(1, 0, 0, 2)) +
                         std::conj(c2) * a(1, 0, 2, 0)) /
                        (b2 + c2n * c2n);
    const Complex del = (std::conj(c2) * std::conj(c2) * (c2 * a(1, 0, 1, 1) - c3 * a(1, 0, 2, 0)) +
                         std::conj(c3) * a(1, 0, 0, 2)) /
                        (b2 * b2 + c2n);
    const double sbc = std::max({1.0, std::abs(c2), std::abs(c3)});
    const double scale = f.norm() * sbc * sbc +
                         (std::abs(beta) + std::abs(gam) + std::abs(del)) * sbc;
    auto check = [&](Complex lhs, Complex rhs) {
        if (std::abs(lhs - rhs) > tol.rel_zero * scale)
            throw Error("InconsistentSystem", "input line is not on the surface");
    };
    check(c2 * beta, a(2, 0, 1, 0));
    check(c3 * beta, a(2, 0, 0, 1));
    check(c2 * gam, a(1, 0, 2, 0));
    check(c3 * del, a(1, 0, 0, 2));
    check(c2 * del + c3 * gam, a(1, 0, 1, 1));
    if (out) *out = {beta, gam, del};
    return {LinearForm{{0.0, 1.0, 0.0, 0.0}}, LinearForm{{beta, 0.0, gam, del}}};
}

/// Residual of E2 and V(x1, c2 x2 + c3 x3); covers the branch at infinity.
Line residualHJKInfinity(const CubicForm& f, Complex c2, Complex c3,
                         std::array<Complex, 3>* out, const Tolerance& tol) {
    auto a = [&](int i, int j, int k, int l) { return f.alpha(i, j, k, l); };
    const Complex lam = a(1, 1, 1, 0) * c3 - a(1, 1, 0, 1) * c2;
    const Complex mu = a(0, 2, 1, 0) * c3 - a(0, 2, 0, 1) * c2;
    const Complex nu = a(0, 1, 2, 0) * c3 * c3 - a(0, 1, 1, 1) * c2 * c3 + a(0, 1, 0, 2) * c2 * c2;
    const double sbc = std::max({1.0, std::abs(c2), std::abs(c3)});
    const double scale = f.norm() * sbc * sbc;
    const Complex h0 = a(2, 0, 1, 0) * c3 - a(2, 0, 0, 1) * c2;
    const Complex k0 = a(1, 0, 2, 0) * c3 * c3 - a(1, 0, 1, 1) * c2 * c3 + a(1, 0, 0, 2) * c2 * c2;
    if (std::abs(h0) > tol.rel_zero * scale || std::abs(k0) > tol.rel_zero * scale)
        throw Error("InconsistentSystem", "input line is not on the surface");
    if (std::max({std::abs(lam), std::abs(mu), std::abs(nu)}) <= tol.rel_zero * scale)
        throw Error("ZeroForm", "residual form vanished");
    const double D = std::norm(c2) + std::norm(c3);
    if (out) *out = {lam, mu, nu};
    return {LinearForm{{lam, mu, std::conj(c3) * nu / D, -std::conj(c2) * nu / D}},
            LinearForm{{0.0, 0.0, c2, c3}}};
}

}  // namespace

// ---------------------------------------------------------------------------
// steps

std::array<Complex, 4> gCoefficients(const CubicForm& f, const Tolerance& tol) {
    auto a = [&](int i, int j, int k, int l) { return f.alpha(i, j, k, l); };
    const std::array<Complex, 4> g1 = {a(2, 0, 1, 0), a(2, 0, 0, 1) + a(1, 1, 1, 0),
                                       a(0, 2, 1, 0) + a(1, 1, 0, 1), a(0, 2, 0, 1)};
    const std::array<Complex, 4> g2 = {-a(1, 0, 2, 0), -(a(0, 1, 2, 0) + a(1, 0, 1, 1)),
                                       -(a(1, 0, 0, 2) + a(0, 1, 1, 1)), -a(0, 1, 0, 2)};
    const double n = f.norm();
    for (int i = 0; i < 4; ++i)
        if (std::abs(g1[i] - g2[i]) > 10.0 * tol.rel_zero * n)
            throw Error("FormMismatch",
                        "the two expressions for the ruling cubic disagree (surface not canonical)");
    if (std::abs(g1[0]) <= tol.rel_zero * n)
        throw Error("DegenerateLeadingCoefficient", "ruling cubic drops degree");
    return g1;
}

RulingLines stepRulingLines(const CubicForm& f, const Tolerance& tol) {
    const auto g = gCoefficients(f, tol);
    const auto roots = solveCubic(g[0], g[1], g[2], g[3], tol);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::abs(roots[i] - roots[j]) <=
                tol.rel_zero * std::max({1.0, std::abs(roots[i]), std::abs(roots[j])}))
                throw Error("RootCollision", "ruling cubic has a repeated root");
    RulingLines out;
    out.t = roots;
    for (int i = 0; i < 3; ++i) out.c[i] = frame::rulingN(ProjectiveScalar::finite(roots[i]));
    return out;
}

Line stepNineResiduals(const CubicForm& f, Complex t, int which, const Tolerance& tol) {
    std::array<Complex, 3> e;
    Line out;
    switch (which) {
        case 1:
            e = ell1Coeffs(f, t);
            out = {LinearForm{{1.0, -t, 0.0, 0.0}}, LinearForm{{0.0, e[0], e[1], e[2]}}};
            break;
        case 2:
            e = ell2Coeffs(f, t);
            out = {LinearForm{{0.0, 0.0, 1.0, -t}}, LinearForm{{e[0], e[1], 0.0, e[2]}}};
            break;
        case 3:
            e = ell3Coeffs(f, t);
            out = {LinearForm{{1.0, -t, -1.0, t}}, LinearForm{{0.0, e[0], e[1], e[2]}}};
            break;
        default: throw Error("InvalidInput", "which must be 1, 2 or 3");
    }
    const double scale = f.norm() * std::max(1.0, std::abs(t) * std::abs(t));
    if (std::max({std::abs(e[0]), std::abs(e[1]), std::abs(e[2])}) <= tol.rel_zero * scale)
        throw Error("ZeroResidualForm", "residual linear form vanished");
    return out;
}

Line stepResidualMNP(const CubicForm& f, Complex a, Complex b, Complex c,
                     std::array<Complex, 3>* mnpOut, const Tolerance& tol) {
    auto al = [&](int i, int j, int k, int l) { return f.alpha(i, j, k, l); };
    const double nb = std::norm(b), nc = std::norm(c);
    if (nb + nc == 0.0) throw Error("InvalidInput", "(b, c) must not both vanish");

    const Complex A1 = a * a * al(2, 0, 1, 0) - a * al(1, 1, 1, 0) + al(0, 2, 1, 0);
    const Complex A2 = a * a * al(2, 0, 0, 1) - a * al(1, 1, 0, 1) + al(0, 2, 0, 1);
    const Complex B1 = -a * al(1, 0, 2, 0) + al(0, 1, 2, 0);
    const Complex B2 = -a * al(1, 0, 0, 2) + al(0, 1, 0, 2);
    const Complex B3 = -a * al(1, 0, 1, 1) + al(0, 1, 1, 1);

    const Complex m = (std::conj(b) * A1 + std::conj(c) * A2) / (nb + nc);
    const Complex n = (std::conj(c) * std::conj(c) * (c * B3 - b * B2) + std::conj(b) * B1) /
                      (nb + nc * nc);
    const Complex p = (std::conj(b) * std::conj(b) * (b * B3 - c * B1) + std::conj(c) * B2) /
                      (nb * nb + nc);

    const double sa = std::max(1.0, std::abs(a));
    const double sbc = std::max({1.0, std::abs(b), std::abs(c)});
    const double scale = f.norm() * sa * sa * sbc +
                         (std::abs(m) + std::abs(n) + std::abs(p)) * sbc;
    auto check = [&](Complex lhs, Complex rhs) {
        if (std::abs(lhs - rhs) > tol.rel_zero * scale)
            throw Error("InconsistentSystem", "input line is not on the surface");
    };
    check(b * m, A1);
    check(c * m, A2);
    check(b * n, B1);
    check(c * p, B2);
    check(b * p + c * n, B3);

    if (mnpOut) *mnpOut = {m, n, p};
    return {LinearForm{{1.0, a, 0.0, 0.0}}, LinearForm{{0.0, m, n, p}}};
}

Line stepResidualHJK(const CubicForm& f, Complex a, Complex b, Complex c,
                     std::array<Complex, 3>* hjkOut, const Tolerance& tol) {
    auto al = [&](int i, int j, int k, int l) { return f.alpha(i, j, k, l); };
    const double D = std::norm(b) + std::norm(c);
    if (D == 0.0) throw Error("InvalidInput", "(b, c) must not both vanish");

    const Complex h = al(2, 0, 1, 0) * c - al(2, 0, 0, 1) * b;
    const Complex j = al(1, 1, 1, 0) * c - al(1, 1, 0, 1) * b - a * h;
    const Complex k = al(1, 0, 2, 0) * c * c - al(1, 0, 1, 1) * b * c + al(1, 0, 0, 2) * b * b;

    const double sa = std::max(1.0, std::abs(a));
    const double sbc = std::max({1.0, std::abs(b), std::abs(c)});
    if (std::max({std::abs(h), std::abs(j), std::abs(k)}) <=
        tol.rel_zero * f.norm() * sa * sbc * sbc)
        throw Error("ZeroForm", "residual form vanished");

    if (hjkOut) *hjkOut = {h, j, k};
    return {LinearForm{{h, j, std::conj(c) * k / D, -std::conj(b) * k / D}},
            LinearForm{{0.0, 0.0, b, c}}};
}

C3L12Result stepC3L12(const CubicForm& f, PipelineTrace& trace, const Tolerance& tol,
                      bool swapSBranch) {
    const Complex t4 = trace.t[0], t5 = trace.t[1];
    const auto c = ell3Coeffs(f, t4);
    const auto d = ell3Coeffs(f, t5);
    trace.c = c;
    trace.d = d;

    const double scale = std::max({1e-300, std::abs(c[0]), std::abs(c[1]), std::abs(c[2]),
                                   std::abs(d[0]), std::abs(d[1]), std::abs(d[2])});
    if (std::abs(d[0]) <= tol.rel_zero * scale)
        throw Error("IllConditioned", "d1 vanishes at the working tolerance");
    if (std::abs(c[0]) <= tol.rel_zero * scale)
        throw Error("IllConditioned", "c1 vanishes at the working tolerance");
    const Complex denom = c[2] + c[1] * t4;
    if (std::abs(denom) <= tol.rel_zero * scale * std::max(1.0, std::abs(t4)))
        throw Error("IllConditioned", "c3 + c2 t4 vanishes (coordinate change is singular)");

    const Complex u1 = (t4 - t5) / c[0];
    const Complex u2 = -(c[2] + c[1] * t5) / denom;
    const Complex u3 = (t4 - t5) / denom;
    const Complex v2 = (c[0] / d[0]) * (d[1] * c[2] - d[2] * c[1]) / denom;
    const Complex v3 = -(c[0] / d[0]) * (d[1] * t4 + d[2]) / denom;
    trace.u = {u1, u2, u3};
    trace.v = {v2, v3};

    auto [s1, s2] = solveQuadraticProjective(v2, u1 * v2 - u2 + v3, u1 * v3 - u3, tol);
    if (swapSBranch) std::swap(s1, s2);
    trace.s1 = s1;
    trace.s2 = s2;

    return {c3StyleLine(s1, c, t4), c3StyleLine(s2, c, t4), s1, s2};
}

FinalSixResult stepFinalSix(const CubicForm& f, PipelineTrace& trace, const Line& c3,
                            const Tolerance& tol) {
    auto a = [&](int i, int j, int k, int l) { return f.alpha(i, j, k, l); };
    // zero-based index triples for (i,j,k) = (5,6,4), (4,6,5), (4,5,6)
    static constexpr int triples[3][3] = {{1, 2, 0}, {0, 2, 1}, {0, 1, 2}};
    FinalSixResult out;
    for (int branch = 0; branch < 3; ++branch) {
        const int i = triples[branch][0], j = triples[branch][1], k = triples[branch][2];
        const Complex ti = trace.t[i], tj = trace.t[j], tk = trace.t[k];
        FinalSixBranch& fb = trace.finalSix[branch];
        fb.i = 4 + i;
        fb.j = 4 + j;
        fb.k = 4 + k;

        const Complex tau = (ti - tk) / (tj - tk);
        fb.gamma = (1.0 - tau) * (tk * tk * a(2, 0, 1, 0) + tk * a(1, 1, 1, 0) + a(0, 2, 1, 0));
        fb.delta = tk * tk * a(1, 0, 2, 0) +
                   tk * (tj * a(1, 0, 2, 0) + a(0, 1, 2, 0) + a(1, 0, 1, 1)) +
                   (tj * a(0, 1, 2, 0) + a(0, 1, 1, 1));
        fb.epsilon = tk * tk * a(1, 0, 2, 0) +
                     tk * (ti * a(1, 0, 2, 0) + a(0, 1, 2, 0) + a(1, 0, 1, 1)) +
                     (ti * a(0, 1, 2, 0) + a(0, 1, 1, 1));
        fb.piVal = tk * tk * a(2, 0, 1, 0) +
                   tk * (tj * a(2, 0, 1, 0) + a(2, 0, 0, 1) + a(1, 1, 1, 0)) +
                   (tj * a(2, 0, 0, 1) + a(1, 1, 0, 1));
        fb.rho = tk * tk * a(2, 0, 1, 0) +
                 tk * (ti * a(2, 0, 1, 0) + a(2, 0, 0, 1) + a(1, 1, 1, 0)) +
                 (ti * a(2, 0, 0, 1) + a(1, 1, 0, 1));
        fb.sigma = tk * tk * a(1, 0, 2, 0) + tk * a(1, 0, 1, 1) + a(1, 0, 0, 2);

        const double tmax = std::max({1.0, std::abs(ti), std::abs(tj), std::abs(tk)});
        const double scale = f.norm() * tmax * tmax;
        if (std::abs(fb.delta) <= tol.rel_zero * scale)
            throw Error("IllConditioned", "delta vanishes at the working tolerance");
        if (std::abs(fb.epsilon) <= tol.rel_zero * scale)
            throw Error("IllConditioned", "epsilon vanishes at the working tolerance");
        if (std::abs(fb.piVal) <= tol.rel_zero * scale)
            throw Error("IllConditioned", "pi vanishes at the working tolerance");

        const Complex aq = fb.gamma * fb.delta;
        const Complex bq = (fb.sigma * fb.gamma * (ti - tj) + fb.rho * fb.epsilon * (tj - tk)) /
                               (fb.piVal * (ti - tk)) -
                           fb.delta * tau;
        const Complex cq = -(fb.sigma / fb.piVal) * (ti - tj) / (tj - tk);
        ProjectiveScalar qp, qm;
        try {
            std::tie(qp, qm) = solveQuadraticProjective(aq, bq, cq, tol);
        } catch (const Error& e) {
            throw Error("DegenerateQuadratic", std::string("ruling quadric for E") +
                                                   std::to_string(fb.k) + " degenerated: " +
                                                   e.what());
        }

        auto candidate = [&](const ProjectiveScalar& q) {
            const Complex n = q.num, w = q.den;
            const Complex lead = tau * w - fb.gamma * n;
            return Line{LinearForm{{w, -ti * w, -fb.delta * n, ti * fb.delta * n}},
                        LinearForm{{lead, -tj * lead, -fb.epsilon * n, tj * fb.epsilon * n}}};
        };
        const Line candPlus = candidate(qp);
        const Line candMinus = candidate(qm);
        const bool plusMeets = !linesSkew(candPlus, c3, tol);
        const bool minusMeets = !linesSkew(candMinus, c3, tol);
        if (plusMeets == minusMeets)
            throw Error("AmbiguousLabel", std::string("cannot separate E") +
                                              std::to_string(fb.k) + " from L" +
                                              std::to_string(fb.i) + std::to_string(fb.j) +
                                              " by incidence with C3");
        fb.branchesSwapped = !plusMeets;
        fb.qPlus = plusMeets ? qp : qm;
        fb.qMinus = plusMeets ? qm : qp;
        out.e[branch] = plusMeets ? candPlus : candMinus;
        out.l[branch] = plusMeets ? candMinus : candPlus;
    }
    return out;
}

PipelineResult computeAll(const CubicForm& f, const Tolerance& tol, const PipelineOptions& opts) {
    if (!checkCanonicalRelations(f, tol).pass)
        throw Error("NotCanonical", "surface does not contain the canonical skew frame");

    {
        std::array<int, 3> sorted = opts.rootOrder;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != std::array<int, 3>{0, 1, 2})
            throw Error("InvalidInput", "rootOrder must be a permutation of {0,1,2}");
    }

    PipelineResult res;
    PipelineTrace& trace = res.trace;
    trace.rootOrder = opts.rootOrder;
    trace.sBranchSwapped = opts.swapSBranch;

    const RulingLines rl = stepRulingLines(f, tol);
    for (int i = 0; i < 3; ++i) trace.t[i] = rl.t[opts.rootOrder[i]];

    LineTable& table = res.table;
    table.at(LineLabel::E(1)) = frame::e1();
    table.at(LineLabel::E(2)) = frame::e2();
    table.at(LineLabel::E(3)) = frame::e3();
    for (int i = 0; i < 3; ++i) {
        table.at(LineLabel::C(4 + i)) = frame::rulingN(ProjectiveScalar::finite(trace.t[i]));
        table.at(LineLabel::L(1, 4 + i)) = stepNineResiduals(f, trace.t[i], 1, tol);
        table.at(LineLabel::L(2, 4 + i)) = stepNineResiduals(f, trace.t[i], 2, tol);
        table.at(LineLabel::L(3, 4 + i)) = stepNineResiduals(f, trace.t[i], 3, tol);
    }

    const C3L12Result cl = stepC3L12(f, trace, tol, opts.swapSBranch);
    table.at(LineLabel::C(3)) = cl.c3;
    table.at(LineLabel::L(1, 2)) = cl.l12;

    auto residualsAt = [&](const ProjectiveScalar& s, std::array<Complex, 3>& mnp,
                           std::array<Complex, 3>& hjk) -> std::pair<Line, Line> {
        if (s.isInfinite(tol.rel_zero)) {
            return {residualMNPInfinity(f, trace.c[1], trace.c[2], &mnp, tol),
                    residualHJKInfinity(f, trace.c[1], trace.c[2], &hjk, tol)};
        }
        const auto abc = abcAt(s.value(), trace.c, trace.t[0]);
        return {stepResidualMNP(f, abc[0], abc[1], abc[2], &mnp, tol),
                stepResidualHJK(f, abc[0], abc[1], abc[2], &hjk, tol)};
    };
    const auto [l13, l23] = residualsAt(cl.s1, trace.mnp1, trace.hjk1);
    const auto [c2, c1] = residualsAt(cl.s2, trace.mnp2, trace.hjk2);
    table.at(LineLabel::L(1, 3)) = l13;
    table.at(LineLabel::L(2, 3)) = l23;
    table.at(LineLabel::C(2)) = c2;
    table.at(LineLabel::C(1)) = c1;

    const FinalSixResult fs = stepFinalSix(f, trace, cl.c3, tol);
    table.at(LineLabel::E(4)) = fs.e[0];
    table.at(LineLabel::E(5)) = fs.e[1];
    table.at(LineLabel::E(6)) = fs.e[2];
    table.at(LineLabel::L(5, 6)) = fs.l[0];
    table.at(LineLabel::L(4, 6)) = fs.l[1];
    table.at(LineLabel::L(4, 5)) = fs.l[2];

    // final gate: every line on the surface, all lines distinct
    std::array<std::array<Complex, 6>, 27> plk;
    for (const LineLabel& lbl : LineLabel::all()) {
        const double r = lineOnSurface(f, table.at(lbl), tol);
        if (r > 1e3 * tol.rel_zero)
            throw Error("Degenerate", lbl.name() + " failed the on-surface residual gate");
        plk[lbl.index()] = pluckerCoords(table.at(lbl), tol);
    }
    for (int i = 0; i < 27; ++i)
        for (int j = i + 1; j < 27; ++j) {
            if (pluckerVectorDistance(plk[i], plk[j]) <= tol.match_dist)
                throw Error("Degenerate", LineLabel::all()[i].name() + " and " +
                                              LineLabel::all()[j].name() + " coincide");
        }
    return res;
}

// ---------------------------------------------------------------------------
// direct table evaluation

LineTable directTableEval(const CubicForm& f, const PipelineTrace& trace,
                            const LineTable* compareTo, const Tolerance& tol) {
    LineTable table;
    const Complex t4 = trace.t[0];
    const auto& c = trace.c;

    table.at(LineLabel::E(1)) = frame::e1();
    table.at(LineLabel::E(2)) = frame::e2();
    table.at(LineLabel::E(3)) = frame::e3();

    for (int i = 0; i < 3; ++i) {
        const Complex t = trace.t[i];
        table.at(LineLabel::C(4 + i)) =
            Line{LinearForm{{1.0, -t, 0.0, 0.0}}, LinearForm{{0.0, 0.0, 1.0, -t}}};
        const auto e1c = ell1Coeffs(f, t);
        table.at(LineLabel::L(1, 4 + i)) =
            Line{LinearForm{{1.0, -t, 0.0, 0.0}}, LinearForm{{0.0, e1c[0], e1c[1], e1c[2]}}};
        const auto e2c = ell2Coeffs(f, t);
        table.at(LineLabel::L(2, 4 + i)) =
            Line{LinearForm{{0.0, 0.0, 1.0, -t}}, LinearForm{{e2c[0], e2c[1], 0.0, e2c[2]}}};
        const auto e3c = ell3Coeffs(f, t);
        table.at(LineLabel::L(3, 4 + i)) =
            Line{LinearForm{{1.0, -t, -1.0, t}}, LinearForm{{0.0, e3c[0], e3c[1], e3c[2]}}};
    }

    table.at(LineLabel::C(3)) = c3StyleLine(trace.s1, c, t4);
    table.at(LineLabel::L(1, 2)) = c3StyleLine(trace.s2, c, t4);

    auto mnpRow = [&](const ProjectiveScalar& s, const std::array<Complex, 3>& mnp) {
        if (s.isInfinite(tol.rel_zero))
            return Line{LinearForm{{0.0, 1.0, 0.0, 0.0}},
                        LinearForm{{mnp[0], 0.0, mnp[1], mnp[2]}}};
        const auto abc = abcAt(s.value(), c, t4);
        return Line{LinearForm{{1.0, abc[0], 0.0, 0.0}},
                    LinearForm{{0.0, mnp[0], mnp[1], mnp[2]}}};
    };
    auto hjkRow = [&](const ProjectiveScalar& s, const std::array<Complex, 3>& hjk) {
        Complex b, cc;
        if (s.isInfinite(tol.rel_zero)) {
            b = c[1];
            cc = c[2];
        } else {
            const auto abc = abcAt(s.value(), c, t4);
            b = abc[1];
            cc = abc[2];
        }
        const double D = std::norm(b) + std::norm(cc);
        return Line{LinearForm{{hjk[0], hjk[1], std::conj(cc) * hjk[2] / D,
                                -std::conj(b) * hjk[2] / D}},
                    LinearForm{{0.0, 0.0, b, cc}}};
    };
    table.at(LineLabel::L(1, 3)) = mnpRow(trace.s1, trace.mnp1);
    table.at(LineLabel::C(2)) = mnpRow(trace.s2, trace.mnp2);
    table.at(LineLabel::L(2, 3)) = hjkRow(trace.s1, trace.hjk1);
    table.at(LineLabel::C(1)) = hjkRow(trace.s2, trace.hjk2);

    auto qRow = [&](const FinalSixBranch& fb, const ProjectiveScalar& q) {
        const Complex ti = trace.t[fb.i - 4], tj = trace.t[fb.j - 4], tk = trace.t[fb.k - 4];
        const Complex tau = (ti - tk) / (tj - tk);
        const Complex n = q.num, w = q.den;
        const Complex lead = tau * w - fb.gamma * n;
        return Line{LinearForm{{w, -ti * w, -fb.delta * n, ti * fb.delta * n}},
                    LinearForm{{lead, -tj * lead, -fb.epsilon * n, tj * fb.epsilon * n}}};
    };
    table.at(LineLabel::E(4)) = qRow(trace.finalSix[0], trace.finalSix[0].qPlus);
    table.at(LineLabel::E(5)) = qRow(trace.finalSix[1], trace.finalSix[1].qPlus);
    table.at(LineLabel::E(6)) = qRow(trace.finalSix[2], trace.finalSix[2].qPlus);
    table.at(LineLabel::L(5, 6)) = qRow(trace.finalSix[0], trace.finalSix[0].qMinus);
    table.at(LineLabel::L(4, 6)) = qRow(trace.finalSix[1], trace.finalSix[1].qMinus);
    table.at(LineLabel::L(4, 5)) = qRow(trace.finalSix[2], trace.finalSix[2].qMinus);

    if (compareTo) {
        for (const LineLabel& lbl : LineLabel::all()) {
            if (pluckerDistance(table.at(lbl), compareTo->at(lbl), tol) > tol.match_dist)
                throw Error("TableMismatch", lbl.name() + " differs between the direct table and the stepwise construction");
        }
    }
    return table;
}

}  // namespace cubiclines
