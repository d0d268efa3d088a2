#pragma once

#include <array>
#include <optional>

#include "cubiclines/numeric.hpp"

namespace cubiclines {

/// Homogeneous coordinates of a point of P^3.
struct PointP3 {
    std::array<Complex, 4> coords{};

    /// Scales the largest-magnitude coordinate to exactly 1.
    PointP3 normalized() const;
    double norm() const;
};

/// Coefficients of a linear form a0 x0 + a1 x1 + a2 x2 + a3 x3.
struct LinearForm {
    std::array<Complex, 4> coeffs{};

    Complex eval(const PointP3& p) const;
    double norm() const;
};

/// A line of P^3 as the common zero locus of two independent linear forms.
struct Line {
    LinearForm form1;
    LinearForm form2;
};

/// An invertible projective change of coordinates of P^3.
/// Acts on points by matrix-vector product; on a line's form coefficients by
/// the inverse transpose.
struct Transform {
    std::array<std::array<Complex, 4>, 4> m{};

    static Transform identity();
    Transform inverse(const Tolerance& tol = {}) const;
    Transform transposed() const;
    Complex det() const;
    Transform operator*(const Transform& rhs) const;
};

PointP3 applyToPoint(const Transform& T, const PointP3& p);
Line applyToLine(const Transform& T, const Line& L, const Tolerance& tol = {});

/// True iff the stacked 4x4 matrix of the four defining forms has determinant
/// above tolerance relative to the product of row norms. The same quantity
/// decides incidence everywhere in the library.
bool linesSkew(const Line& L1, const Line& L2, const Tolerance& tol = {});

/// The unique common point of two distinct non-skew lines; empty if skew.
/// Throws CoincidentLines if the lines agree within match_dist.
std::optional<PointP3> lineIntersection(const Line& L1, const Line& L2,
                                        const Tolerance& tol = {});

/// Reduced row echelon form of the 2x4 coefficient matrix, pivots exactly 1.
/// Equal lines map to entrywise-equal representatives.
Line canonicalizeLine(const Line& L, const Tolerance& tol = {});

/// Two points spanning the line (null space basis of the form matrix).
std::array<PointP3, 2> spanningPoints(const Line& L, const Tolerance& tol = {});

/// Unit-norm Plucker vector (p01, p02, p03, p12, p13, p23) of the wedge of two
/// spanning points, with the first non-negligible entry rotated to positive
/// real phase.
std::array<Complex, 6> pluckerCoords(const Line& L, const Tolerance& tol = {});

/// Phase-invariant chordal distance between unit Plucker vectors; zero iff the
/// lines coincide, sqrt(2) for e.g. orthogonal coordinate axes.
double pluckerDistance(const Line& L1, const Line& L2, const Tolerance& tol = {});
/// Same metric on precomputed unit Plucker vectors.
double pluckerVectorDistance(const std::array<Complex, 6>& u, const std::array<Complex, 6>& v);

/// Line equality at match_dist resolution (Plucker metric).
bool sameLine(const Line& L1, const Line& L2, const Tolerance& tol = {});

Line conjugateLine(const Line& L);

/// True iff the line equals its complex conjugate, i.e. the row space of the
/// coefficient matrix is closed under conjugation.
bool lineIsReal(const Line& L, const Tolerance& tol = {});

}  // namespace cubiclines
