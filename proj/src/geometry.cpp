#include "cubiclines/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace cubiclines {

namespace {

using Mat4 = std::array<std::array<Complex, 4>, 4>;

/// Gauss-Jordan inverse with partial pivoting; also reports the determinant.
/// Throws SingularMatrix if a pivot falls below tol relative to the matrix.
Mat4 invert4(const Mat4& in, Complex* detOut, const Tolerance& tol) {
    Mat4 a = in;
    Mat4 inv{};
    for (int i = 0; i < 4; ++i) inv[i][i] = 1.0;
    double scale = 0.0;
    for (const auto& row : a)
        for (Complex v : row) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) throw Error("SingularMatrix", "zero matrix");

    Complex det{1.0, 0.0};
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) <= tol.rel_zero * scale)
            throw Error("SingularMatrix", "pivot below tolerance");
        if (piv != col) {
            std::swap(a[piv], a[col]);
            std::swap(inv[piv], inv[col]);
            det = -det;
        }
        const Complex d = a[col][col];
        det *= d;
        for (int c = 0; c < 4; ++c) {
            a[col][c] /= d;
            inv[col][c] /= d;
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            const Complex f = a[r][col];
            if (f == Complex{0.0, 0.0}) continue;
            for (int c = 0; c < 4; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    if (detOut) *detOut = det;
    return inv;
}

Complex det4(const Mat4& in) {
    Mat4 a = in;
    Complex det{1.0, 0.0};
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) == 0.0) return {0.0, 0.0};
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < 4; ++r) {
            const Complex f = a[r][col] / a[col][col];
            for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

Mat4 stackForms(const Line& L1, const Line& L2, bool normalizeRows) {
    Mat4 m{};
    const std::array<const LinearForm*, 4> forms = {&L1.form1, &L1.form2, &L2.form1, &L2.form2};
    for (int r = 0; r < 4; ++r) {
        const double n = normalizeRows ? forms[r]->norm() : 1.0;
        for (int c = 0; c < 4; ++c) m[r][c] = forms[r]->coeffs[c] / (n > 0.0 ? n : 1.0);
    }
    return m;
}

Complex det3(const std::array<std::array<Complex, 3>, 3>& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

}  // namespace

PointP3 PointP3::normalized() const {
    int best = 0;
    for (int i = 1; i < 4; ++i)
        if (std::abs(coords[i]) > std::abs(coords[best])) best = i;
    const Complex d = coords[best];
    if (std::abs(d) == 0.0) throw Error("InvalidInput", "point with all coordinates zero");
    PointP3 out;
    for (int i = 0; i < 4; ++i) out.coords[i] = coords[i] / d;
    out.coords[best] = {1.0, 0.0};
    return out;
}

double PointP3::norm() const {
    double s = 0.0;
    for (Complex v : coords) s += std::norm(v);
    return std::sqrt(s);
}

Complex LinearForm::eval(const PointP3& p) const {
    Complex s{0.0, 0.0};
    for (int i = 0; i < 4; ++i) s += coeffs[i] * p.coords[i];
    return s;
}

double LinearForm::norm() const {
    double s = 0.0;
    for (Complex v : coeffs) s += std::norm(v);
    return std::sqrt(s);
}

Transform Transform::identity() {
    Transform t;
    for (int i = 0; i < 4; ++i) t.m[i][i] = 1.0;
    return t;
}

Transform Transform::inverse(const Tolerance& tol) const {
    Transform out;
    out.m = invert4(m, nullptr, tol);
    return out;
}

Transform Transform::transposed() const {
    Transform out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out.m[r][c] = m[c][r];
    return out;
}

Complex Transform::det() const { return det4(m); }

Transform Transform::operator*(const Transform& rhs) const {
    Transform out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            Complex s{0.0, 0.0};
            for (int k = 0; k < 4; ++k) s += m[r][k] * rhs.m[k][c];
            out.m[r][c] = s;
        }
    return out;
}

PointP3 applyToPoint(const Transform& T, const PointP3& p) {
    PointP3 out;
    for (int r = 0; r < 4; ++r) {
        Complex s{0.0, 0.0};
        for (int c = 0; c < 4; ++c) s += T.m[r][c] * p.coords[c];
        out.coords[r] = s;
    }
    return out;
}

Line applyToLine(const Transform& T, const Line& L, const Tolerance& tol) {
    // form coefficients transform by the inverse transpose
    const Transform it = T.inverse(tol).transposed();
    auto apply = [&](const LinearForm& f) {
        LinearForm out;
        for (int r = 0; r < 4; ++r) {
            Complex s{0.0, 0.0};
            for (int c = 0; c < 4; ++c) s += it.m[r][c] * f.coeffs[c];
            out.coeffs[r] = s;
        }
        return out;
    };
    return {apply(L.form1), apply(L.form2)};
}

bool linesSkew(const Line& L1, const Line& L2, const Tolerance& tol) {
    const Mat4 m = stackForms(L1, L2, true);
    return std::abs(det4(m)) > tol.rel_zero;
}

std::optional<PointP3> lineIntersection(const Line& L1, const Line& L2, const Tolerance& tol) {
    if (sameLine(L1, L2, tol)) throw Error("CoincidentLines", "lines coincide at match tolerance");
    if (linesSkew(L1, L2, tol)) return std::nullopt;

    // For a rank-3 stacked matrix M, the columns of adj(M) span the null space.
    const Mat4 m = stackForms(L1, L2, true);
    std::array<std::array<Complex, 4>, 4> adj{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            std::array<std::array<Complex, 3>, 3> minor{};
            int rr = 0;
            for (int r = 0; r < 4; ++r) {
                if (r == j) continue;
                int cc = 0;
                for (int c = 0; c < 4; ++c) {
                    if (c == i) continue;
                    minor[rr][cc++] = m[r][c];
                }
                ++rr;
            }
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            adj[i][j] = sign * det3(minor);
        }
    }
    int best = 0;
    double bestNorm = -1.0;
    for (int j = 0; j < 4; ++j) {
        double n = 0.0;
        for (int i = 0; i < 4; ++i) n += std::norm(adj[i][j]);
        if (n > bestNorm) {
            bestNorm = n;
            best = j;
        }
    }
    if (std::sqrt(bestNorm) <= tol.rel_zero)
        throw Error("CoincidentLines", "stacked form matrix has rank below 3");
    PointP3 p;
    for (int i = 0; i < 4; ++i) p.coords[i] = adj[i][best];
    return p.normalized();
}

Line canonicalizeLine(const Line& L, const Tolerance& tol) {
    std::array<std::array<Complex, 4>, 2> m = {L.form1.coeffs, L.form2.coeffs};
    double scale = 0.0;
    for (const auto& row : m)
        for (Complex v : row) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) throw Error("InvalidInput", "line with zero coefficient matrix");

    // first pivot: leftmost column with a non-negligible entry
    int p0 = -1;
    for (int c = 0; c < 4 && p0 < 0; ++c)
        if (std::max(std::abs(m[0][c]), std::abs(m[1][c])) > tol.rel_zero * scale) p0 = c;
    if (p0 < 0) throw Error("InvalidInput", "line with zero coefficient matrix");
    if (std::abs(m[1][p0]) > std::abs(m[0][p0])) std::swap(m[0], m[1]);
    const Complex d0 = m[0][p0];
    for (int c = 0; c < 4; ++c) m[0][c] /= d0;
    m[0][p0] = {1.0, 0.0};
    const Complex f1 = m[1][p0];
    for (int c = 0; c < 4; ++c) m[1][c] -= f1 * m[0][c];
    m[1][p0] = {0.0, 0.0};

    double scale1 = 0.0;
    for (Complex v : m[1]) scale1 = std::max(scale1, std::abs(v));
    int p1 = -1;
    for (int c = p0 + 1; c < 4 && p1 < 0; ++c)
        if (std::abs(m[1][c]) > tol.rel_zero * std::max(scale1, tol.rel_zero * scale)) p1 = c;
    if (p1 < 0) throw Error("InvalidInput", "line coefficient matrix has rank below 2");
    const Complex d1 = m[1][p1];
    for (int c = 0; c < 4; ++c) m[1][c] /= d1;
    m[1][p1] = {1.0, 0.0};
    const Complex f0 = m[0][p1];
    for (int c = 0; c < 4; ++c) m[0][c] -= f0 * m[1][c];
    m[0][p1] = {0.0, 0.0};

    return {LinearForm{m[0]}, LinearForm{m[1]}};
}

std::array<PointP3, 2> spanningPoints(const Line& L, const Tolerance& tol) {
    const Line cl = canonicalizeLine(L, tol);
    const std::array<std::array<Complex, 4>, 2> m = {cl.form1.coeffs, cl.form2.coeffs};
    int piv0 = -1, piv1 = -1;
    for (int c = 0; c < 4; ++c) {
        if (piv0 < 0 && m[0][c] == Complex{1.0, 0.0} && m[1][c] == Complex{0.0, 0.0}) {
            piv0 = c;
        }
    }
    for (int c = 0; c < 4; ++c) {
        if (c != piv0 && piv1 < 0 && m[1][c] == Complex{1.0, 0.0} &&
            m[0][c] == Complex{0.0, 0.0}) {
            piv1 = c;
        }
    }
    std::array<PointP3, 2> pts;
    int k = 0;
    for (int c = 0; c < 4; ++c) {
        if (c == piv0 || c == piv1) continue;
        PointP3 p;
        p.coords[c] = {1.0, 0.0};
        p.coords[piv0] = -m[0][c];
        p.coords[piv1] = -m[1][c];
        pts[k++] = p;
    }
    return pts;
}

std::array<Complex, 6> pluckerCoords(const Line& L, const Tolerance& tol) {
    const auto pts = spanningPoints(L, tol);
    const auto& p = pts[0].coords;
    const auto& q = pts[1].coords;
    std::array<Complex, 6> u = {
        p[0] * q[1] - p[1] * q[0], p[0] * q[2] - p[2] * q[0], p[0] * q[3] - p[3] * q[0],
        p[1] * q[2] - p[2] * q[1], p[1] * q[3] - p[3] * q[1], p[2] * q[3] - p[3] * q[2]};
    double n = 0.0;
    for (Complex v : u) n += std::norm(v);
    n = std::sqrt(n);
    if (n == 0.0) throw Error("InvalidInput", "degenerate line (coincident spanning points)");
    for (Complex& v : u) v /= n;
    for (Complex v : u) {
        if (std::abs(v) > 1e-7) {
            const Complex phase = std::conj(v) / std::abs(v);
            for (Complex& w : u) w *= phase;
            break;
        }
    }
    return u;
}

double pluckerVectorDistance(const std::array<Complex, 6>& u, const std::array<Complex, 6>& v) {
    Complex inner{0.0, 0.0};
    for (int i = 0; i < 6; ++i) inner += u[i] * std::conj(v[i]);
    // distance at the optimal relative phase, via the explicit difference
    // vector (the 2 - 2|<u,v>| form cancels catastrophically near zero)
    const double mag = std::abs(inner);
    const Complex phase = (mag > 0.0) ? inner / mag : Complex{1.0, 0.0};
    double d2 = 0.0;
    for (int i = 0; i < 6; ++i) d2 += std::norm(u[i] - phase * v[i]);
    return std::sqrt(d2);
}

double pluckerDistance(const Line& L1, const Line& L2, const Tolerance& tol) {
    return pluckerVectorDistance(pluckerCoords(L1, tol), pluckerCoords(L2, tol));
}

bool sameLine(const Line& L1, const Line& L2, const Tolerance& tol) {
    return pluckerDistance(L1, L2, tol) <= tol.match_dist;
}

Line conjugateLine(const Line& L) {
    Line out = L;
    for (Complex& v : out.form1.coeffs) v = std::conj(v);
    for (Complex& v : out.form2.coeffs) v = std::conj(v);
    return out;
}

bool lineIsReal(const Line& L, const Tolerance& tol) {
    return pluckerDistance(L, conjugateLine(L), tol) <= tol.match_dist;
}

}  // namespace cubiclines
