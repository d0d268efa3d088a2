#include "cubiclines/surface.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace cubiclines {

const std::array<std::array<int, 4>, 20> kCubicMonomials = {{
    {3, 0, 0, 0}, {2, 1, 0, 0}, {2, 0, 1, 0}, {2, 0, 0, 1}, {1, 2, 0, 0},
    {1, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 2, 0}, {1, 0, 1, 1}, {1, 0, 0, 2},
    {0, 3, 0, 0}, {0, 2, 1, 0}, {0, 2, 0, 1}, {0, 1, 2, 0}, {0, 1, 1, 1},
    {0, 1, 0, 2}, {0, 0, 3, 0}, {0, 0, 2, 1}, {0, 0, 1, 2}, {0, 0, 0, 3},
}};

namespace {

const std::array<std::array<int, 4>, 4> kDeg1 = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
const std::array<std::array<int, 4>, 10> kDeg2 = {{
    {2, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 2, 0, 0},
    {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 2, 0}, {0, 0, 1, 1}, {0, 0, 0, 2},
}};

template <std::size_t N>
int indexIn(const std::array<std::array<int, 4>, N>& table, const std::array<int, 4>& e) {
    for (std::size_t i = 0; i < N; ++i)
        if (table[i] == e) return static_cast<int>(i);
    return -1;
}

int monomialIndex(int degree, const std::array<int, 4>& e) {
    switch (degree) {
        case 1: return indexIn(kDeg1, e);
        case 2: return indexIn(kDeg2, e);
        case 3: return indexIn(kCubicMonomials, e);
        default: return -1;
    }
}

const std::array<int, 4>& monomialExponents(int degree, int idx) {
    switch (degree) {
        case 1: return kDeg1[idx];
        case 2: return kDeg2[idx];
        default: return kCubicMonomials[idx];
    }
}

std::size_t monomialCount(int degree) {
    switch (degree) {
        case 0: return 1;
        case 1: return 4;
        case 2: return 10;
        default: return 20;
    }
}

// multiply a dense degree-d homogeneous polynomial by a linear form
std::vector<Complex> multiplyByLinear(const std::vector<Complex>& cur, int degree,
                                      const std::array<Complex, 4>& lin) {
    std::vector<Complex> out(monomialCount(degree + 1), Complex{0.0, 0.0});
    for (std::size_t mi = 0; mi < cur.size(); ++mi) {
        if (cur[mi] == Complex{0.0, 0.0}) continue;
        std::array<int, 4> e{};
        if (degree > 0) e = monomialExponents(degree, static_cast<int>(mi));
        for (int v = 0; v < 4; ++v) {
            if (lin[v] == Complex{0.0, 0.0}) continue;
            std::array<int, 4> t = e;
            ++t[v];
            out[monomialIndex(degree + 1, t)] += cur[mi] * lin[v];
        }
    }
    return out;
}

}  // namespace

int CubicForm::indexOf(int i, int j, int k, int l) {
    const int idx = indexIn(kCubicMonomials, {i, j, k, l});
    if (idx < 0) throw Error("InvalidInput", "exponents do not name a degree-3 monomial");
    return idx;
}

double CubicForm::norm() const {
    double s = 0.0;
    for (Complex v : coeffs) s += std::norm(v);
    return std::sqrt(s);
}

bool CubicForm::isRealForm(const Tolerance& tol) const {
    const double n = norm();
    for (Complex v : coeffs)
        if (std::abs(v.imag()) > tol.rel_zero * n) return false;
    return true;
}

CubicForm CubicForm::conjugated() const {
    CubicForm out;
    for (int i = 0; i < 20; ++i) out.coeffs[i] = std::conj(coeffs[i]);
    return out;
}

CubicForm CubicForm::scaled(Complex s) const {
    CubicForm out;
    for (int i = 0; i < 20; ++i) out.coeffs[i] = coeffs[i] * s;
    return out;
}

CubicForm CubicForm::unitNormed() const {
    const double n = norm();
    if (n == 0.0) throw Error("InvalidInput", "zero cubic form");
    return scaled(Complex{1.0 / n, 0.0});
}

Complex evaluate(const CubicForm& f, const PointP3& p) {
    Complex total{0.0, 0.0};
    for (int m = 0; m < 20; ++m) {
        if (f.coeffs[m] == Complex{0.0, 0.0}) continue;
        Complex term = f.coeffs[m];
        const auto& e = kCubicMonomials[m];
        for (int v = 0; v < 4; ++v)
            for (int r = 0; r < e[v]; ++r) term *= p.coords[v];
        total += term;
    }
    return total;
}

CubicForm composeWith(const CubicForm& f, const Transform& M) {
    CubicForm out;
    for (int m = 0; m < 20; ++m) {
        if (f.coeffs[m] == Complex{0.0, 0.0}) continue;
        std::vector<Complex> cur = {f.coeffs[m]};
        int degree = 0;
        const auto& e = kCubicMonomials[m];
        for (int v = 0; v < 4; ++v) {
            for (int r = 0; r < e[v]; ++r) {
                cur = multiplyByLinear(cur, degree, M.m[v]);
                ++degree;
            }
        }
        for (int i = 0; i < 20; ++i) out.coeffs[i] += cur[i];
    }
    return out;
}

RelationReport checkCanonicalRelations(const CubicForm& f, const Tolerance& tol) {
    auto a = [&](int i, int j, int k, int l) { return f.alpha(i, j, k, l); };
    RelationReport rep;
    rep.residuals = {
        a(3, 0, 0, 0),
        a(0, 3, 0, 0),
        a(0, 0, 3, 0),
        a(0, 0, 0, 3),
        a(2, 1, 0, 0),
        a(1, 2, 0, 0),
        a(0, 0, 2, 1),
        a(0, 0, 1, 2),
        a(0, 2, 0, 1) + a(0, 1, 0, 2),
        a(2, 0, 1, 0) + a(1, 0, 2, 0),
        a(0, 2, 1, 0) + a(1, 0, 0, 2) + a(1, 1, 0, 1) + a(0, 1, 1, 1),
        a(0, 1, 2, 0) + a(2, 0, 0, 1) + a(1, 0, 1, 1) + a(1, 1, 1, 0),
    };
    const double n = f.norm();
    rep.pass = true;
    for (Complex r : rep.residuals)
        if (std::abs(r) > tol.rel_zero * n) rep.pass = false;
    return rep;
}

std::array<Complex, 4> restrictToLine(const CubicForm& f, const PointP3& p, const PointP3& q) {
    std::array<Complex, 4> out{};
    for (int m = 0; m < 20; ++m) {
        if (f.coeffs[m] == Complex{0.0, 0.0}) continue;
        // product of (p_v s + q_v t) over the monomial's exponents
        std::array<Complex, 4> bin{};
        bin[0] = f.coeffs[m];
        int degree = 0;
        const auto& e = kCubicMonomials[m];
        for (int v = 0; v < 4; ++v) {
            for (int r = 0; r < e[v]; ++r) {
                std::array<Complex, 4> nxt{};
                for (int d = 0; d <= degree; ++d) {
                    nxt[d] += bin[d] * p.coords[v];
                    nxt[d + 1] += bin[d] * q.coords[v];
                }
                bin = nxt;
                ++degree;
            }
        }
        for (int d = 0; d < 4; ++d) out[d] += bin[d];
    }
    return out;
}

double lineOnSurface(const CubicForm& f, const Line& L, const Tolerance& tol) {
    auto pts = spanningPoints(L, tol);
    for (PointP3& p : pts) {
        const double n = p.norm();
        for (Complex& c : p.coords) c /= n;
    }
    const auto bin = restrictToLine(f, pts[0], pts[1]);
    double worst = 0.0;
    for (Complex c : bin) worst = std::max(worst, std::abs(c));
    double fn = 0.0;
    for (Complex c : f.coeffs) fn = std::max(fn, std::abs(c));
    if (fn == 0.0) throw Error("InvalidInput", "zero cubic form");
    return worst / fn;
}

std::uint64_t NormalSampler::next() {
    // splitmix64; fixed here so seeds reproduce across platforms
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double NormalSampler::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double NormalSampler::normal() {
    if (haveSpare_) {
        haveSpare_ = false;
        return spare_;
    }
    double u1 = uniform01();
    if (u1 < 1e-300) u1 = 1e-300;
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    haveSpare_ = true;
    return r * std::cos(a);
}

Complex NormalSampler::complexNormal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

CubicForm randomCanonical(std::uint64_t seed, double scale, bool realCoeffs) {
    if (scale <= 0.0) throw Error("InvalidInput", "scale must be positive");
    NormalSampler rng(seed);
    auto draw = [&]() -> Complex {
        if (realCoeffs) return {scale * rng.normal(), 0.0};
        return scale * rng.complexNormal();
    };
    CubicForm f;
    const Complex a2010 = draw(), a0201 = draw(), a0210 = draw(), a1002 = draw();
    const Complex a1101 = draw(), a0120 = draw(), a2001 = draw(), a1011 = draw();
    f.setAlpha(2, 0, 1, 0, a2010);
    f.setAlpha(0, 2, 0, 1, a0201);
    f.setAlpha(0, 2, 1, 0, a0210);
    f.setAlpha(1, 0, 0, 2, a1002);
    f.setAlpha(1, 1, 0, 1, a1101);
    f.setAlpha(0, 1, 2, 0, a0120);
    f.setAlpha(2, 0, 0, 1, a2001);
    f.setAlpha(1, 0, 1, 1, a1011);
    f.setAlpha(1, 0, 2, 0, -a2010);
    f.setAlpha(0, 1, 0, 2, -a0201);
    f.setAlpha(0, 1, 1, 1, -(a0210 + a1002 + a1101));
    f.setAlpha(1, 1, 1, 0, -(a0120 + a2001 + a1011));
    return f;
}

}  // namespace cubiclines
