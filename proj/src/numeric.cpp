#include "cubiclines/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace cubiclines {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Complex ProjectiveScalar::value() const {
    if (isInfinite()) throw Error("InvalidInput", "projective scalar is the point at infinity");
    return num / den;
}

bool ProjectiveScalar::isReal(double tol) const {
    if (isInfinite(tol)) return true;
    const Complex v = num / den;
    return std::abs(v.imag()) <= tol * std::max(1.0, std::abs(v));
}

Complex principalSqrt(Complex z) {
    const double r = std::abs(z);
    if (r == 0.0) return {0.0, 0.0};
    double theta = std::arg(z);  // (-pi, pi]
    if (theta < 0.0) theta += 2.0 * kPi;
    const double s = std::sqrt(r);
    return {s * std::cos(theta / 2.0), s * std::sin(theta / 2.0)};
}

std::array<Complex, 3> sortRoots(std::array<Complex, 3> roots, const Tolerance& tol) {
    std::vector<Complex> real, cplx;
    for (Complex r : roots) {
        if (std::abs(r.imag()) <= tol.rel_zero * std::max(1.0, std::abs(r))) {
            real.emplace_back(r.real(), 0.0);
        } else {
            cplx.push_back(r);
        }
    }
    std::sort(real.begin(), real.end(),
              [](Complex a, Complex b) { return a.real() < b.real(); });
    std::sort(cplx.begin(), cplx.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() > b.imag();
    });
    std::array<Complex, 3> out;
    std::size_t k = 0;
    for (Complex r : real) out[k++] = r;
    for (Complex r : cplx) out[k++] = r;
    return out;
}

std::array<Complex, 3> solveCubic(Complex a3, Complex a2, Complex a1, Complex a0,
                                  const Tolerance& tol) {
    const double scale = std::max({std::abs(a3), std::abs(a2), std::abs(a1), std::abs(a0)});
    if (scale == 0.0) throw Error("DegenerateLeadingCoefficient", "all cubic coefficients vanish");
    if (std::abs(a3) <= tol.rel_zero * scale)
        throw Error("DegenerateLeadingCoefficient",
                    "leading cubic coefficient vanishes at the working tolerance");

    const Complex A = a2 / a3;
    const Complex B = a1 / a3;
    const Complex C = a0 / a3;
    const Complex shift = A / 3.0;
    const Complex p = B - A * A / 3.0;
    const Complex q = 2.0 * A * A * A / 27.0 - A * B / 3.0 + C;

    std::array<Complex, 3> roots;
    if (std::abs(p) == 0.0 && std::abs(q) == 0.0) {
        roots = {-shift, -shift, -shift};
    } else {
        // Cardano with the sign of the square root chosen to avoid cancellation.
        const Complex disc = q * q / 4.0 + p * p * p / 27.0;
        const Complex sq = std::sqrt(disc);
        const Complex cand1 = -q / 2.0 + sq;
        const Complex cand2 = -q / 2.0 - sq;
        const Complex u3 = (std::abs(cand1) >= std::abs(cand2)) ? cand1 : cand2;
        const Complex u = std::pow(u3, 1.0 / 3.0);
        const Complex omega{-0.5, std::sqrt(3.0) / 2.0};
        Complex uk = u;
        for (int k = 0; k < 3; ++k) {
            roots[k] = uk - p / (3.0 * uk) - shift;
            uk *= omega;
        }
    }

    for (Complex& r : roots) {
        for (int it = 0; it < 3; ++it) {
            const Complex f = ((a3 * r + a2) * r + a1) * r + a0;
            const Complex df = (3.0 * a3 * r + 2.0 * a2) * r + a1;
            if (std::abs(df) < 1e-300) break;
            r -= f / df;
        }
    }
    return sortRoots(roots, tol);
}

std::pair<ProjectiveScalar, ProjectiveScalar> solveQuadraticProjective(Complex a, Complex b,
                                                                       Complex c,
                                                                       const Tolerance& tol) {
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
    if (scale == 0.0) throw Error("InvalidInput", "all quadratic coefficients vanish");

    if (std::abs(a) <= tol.rel_zero * scale) {
        if (std::abs(b) <= tol.rel_zero * scale)
            throw Error("DoubleRoot", "quadratic degenerates to a double root at infinity");
        return {ProjectiveScalar::finite(-c / b), ProjectiveScalar::infinity()};
    }

    const Complex disc = b * b - 4.0 * a * c;
    const double discScale = std::max(std::abs(b) * std::abs(b), 4.0 * std::abs(a) * std::abs(c));
    if (std::abs(disc) <= tol.rel_zero * discScale)
        throw Error("DoubleRoot", "quadratic discriminant vanishes at the working tolerance");

    const Complex sq = principalSqrt(disc);
    return {ProjectiveScalar::finite((-b + sq) / (2.0 * a)),
            ProjectiveScalar::finite((-b - sq) / (2.0 * a))};
}

}  // namespace cubiclines
