#pragma once

#include <array>
#include <cstdint>

#include "cubiclines/geometry.hpp"
#include "cubiclines/numeric.hpp"

namespace cubiclines {

/// Dense homogeneous cubic in x0..x3: 20 coefficients alpha_{i,j,k,l} indexed
/// by the fixed monomial order of kCubicMonomials (lexicographic, descending
/// exponents).
struct CubicForm {
    std::array<Complex, 20> coeffs{};

    static int indexOf(int i, int j, int k, int l);

    Complex alpha(int i, int j, int k, int l) const { return coeffs[indexOf(i, j, k, l)]; }
    void setAlpha(int i, int j, int k, int l, Complex v) { coeffs[indexOf(i, j, k, l)] = v; }

    /// Euclidean norm of the coefficient vector.
    double norm() const;
    bool isRealForm(const Tolerance& tol = {}) const;
    CubicForm conjugated() const;
    CubicForm scaled(Complex s) const;
    /// Coefficient vector rescaled to unit norm.
    CubicForm unitNormed() const;
};

/// Exponent quadruples (i, j, k, l), i+j+k+l = 3, in the library's fixed order.
extern const std::array<std::array<int, 4>, 20> kCubicMonomials;

/// One residual per canonical-frame relation, in the order the relations are
/// listed: the eight single-coefficient zeros, the two pair sums, then the two
/// four-term sums.
struct RelationReport {
    std::array<Complex, 12> residuals{};
    bool pass = false;
};

Complex evaluate(const CubicForm& f, const PointP3& p);

/// g with g(p) = f(M p); M need not be invertible. To transform a surface by
/// an invertible A, pass M = A^-1.
CubicForm composeWith(const CubicForm& f, const Transform& M);

/// Checks the coefficient relations forced by containment of the canonical
/// skew frame E1, E2, E3.
RelationReport checkCanonicalRelations(const CubicForm& f, const Tolerance& tol = {});

/// Coefficients (s^3, s^2 t, s t^2, t^3) of f restricted to s*p + t*q.
std::array<Complex, 4> restrictToLine(const CubicForm& f, const PointP3& p, const PointP3& q);

/// Max magnitude of the restricted binary cubic over unit spanning points,
/// normalized by the coefficient norm of f. At most rel_zero means contained.
double lineOnSurface(const CubicForm& f, const Line& L, const Tolerance& tol = {});

/// Deterministic sample from the canonical-relation solution space: the eight
/// free coefficients are drawn from a centered normal of the given scale and
/// the constrained ones filled in exactly. realCoeffs restricts the draw to
/// real values.
CubicForm randomCanonical(std::uint64_t seed, double scale, bool realCoeffs = false);

/// Deterministic stream of standard normals (mt19937_64 + Box-Muller), kept
/// explicit so sampled test data is reproducible across platforms.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : state_(seed == 0 ? 0x9e3779b97f4a7c15ULL : seed) {}
    double uniform01();
    double normal();
    Complex complexNormal();

private:
    std::uint64_t next();
    std::uint64_t state_;
    bool haveSpare_ = false;
    double spare_ = 0.0;
};

}  // namespace cubiclines
