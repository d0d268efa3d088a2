#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace cubiclines {

using Complex = std::complex<double>;

/// Typed failure raised by numeric and geometric steps. `kind()` is a stable
/// machine-readable identifier (e.g. "NotSkew", "DoubleRoot") that the CLI
/// maps to exit codes and error messages.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Relative tolerances shared across the library. `rel_zero` drives
/// is-this-zero tests, `match_dist` drives line equality and deduplication.
struct Tolerance {
    double rel_zero = 1e-9;
    double match_dist = 1e-6;

    bool valid() const {
        return rel_zero > 0.0 && rel_zero < match_dist && match_dist < 1.0;
    }
};

/// |x| <= tol * scale, the library-wide relative zero test.
inline bool relSmall(double mag, double scale, double tol) { return mag <= tol * scale; }

/// Approximate scalar equality: |a-b| <= tol * max(1, |a|, |b|).
inline bool approxEqual(Complex a, Complex b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

/// A point of P^1 stored as num/den; den == 0 encodes the point at infinity.
struct ProjectiveScalar {
    Complex num{0.0, 0.0};
    Complex den{1.0, 0.0};

    static ProjectiveScalar finite(Complex v) { return {v, Complex{1.0, 0.0}}; }
    static ProjectiveScalar infinity() { return {Complex{1.0, 0.0}, Complex{0.0, 0.0}}; }

    bool isInfinite(double tol = 1e-9) const {
        return std::abs(den) <= tol * std::max(1.0, std::abs(num));
    }
    /// Finite value num/den; throws on the point at infinity.
    Complex value() const;
    /// Infinity counts as real (it corresponds to a real line of the ruling).
    bool isReal(double tol = 1e-9) const;
};

/// Square root with the branch fixed by writing z = r e^{i theta},
/// 0 <= theta < 2 pi, and returning sqrt(r) e^{i theta / 2}. The result
/// argument lies in [0, pi), so e.g. principalSqrt(-1) = i.
Complex principalSqrt(Complex z);

/// Deterministic root ordering: roots with negligible imaginary part come
/// first (ascending real part, imaginary part forced to exactly zero);
/// the remaining roots follow ordered by (re, -im) so the positive-imaginary
/// member of a conjugate pair precedes its partner.
std::array<Complex, 3> sortRoots(std::array<Complex, 3> roots, const Tolerance& tol = {});

/// Roots of a3 t^3 + a2 t^2 + a1 t + a0, computed by a branch-stable Cardano
/// followed by Newton polishing, returned in sortRoots order.
/// Throws DegenerateLeadingCoefficient if |a3| is negligible relative to the
/// coefficient vector.
std::array<Complex, 3> solveCubic(Complex a3, Complex a2, Complex a1, Complex a0,
                                  const Tolerance& tol = {});

/// Projective roots of a x^2 + b x + c. The first root uses +principalSqrt of
/// the discriminant, the second -principalSqrt. When |a| is negligible the
/// finite root -c/b comes first and the second root is the point at infinity.
/// Throws DoubleRoot when the discriminant is negligible (or when a and b are
/// both negligible), and InvalidInput when all three coefficients vanish.
std::pair<ProjectiveScalar, ProjectiveScalar> solveQuadraticProjective(
    Complex a, Complex b, Complex c, const Tolerance& tol = {});

}  // namespace cubiclines
