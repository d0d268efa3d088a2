#include "cubiclines/canonicalizer.hpp"

#include <cmath>

namespace cubiclines {

namespace {

LinearForm unitForm(const LinearForm& f) {
    const double n = f.norm();
    if (n == 0.0) throw Error("InvalidInput", "zero linear form");
    LinearForm out;
    for (int i = 0; i < 4; ++i) out.coeffs[i] = f.coeffs[i] / n;
    return out;
}

/// 2x2 minor c[r] c'[s] - c'[r] c[s] of the two transformed Lambda3 forms.
Complex minorOf(const std::array<Complex, 4>& c, const std::array<Complex, 4>& cp, int r, int s) {
    return c[r] * cp[s] - cp[r] * c[s];
}

}  // namespace

Transform buildTransform(const SkewTriple& triple, const Tolerance& tol) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!linesSkew(triple.lines[i], triple.lines[j], tol))
                throw Error("NotSkew", "input lines " + std::to_string(i + 1) + " and " +
                                           std::to_string(j + 1) + " are not skew");
    for (int i = 0; i < 3; ++i)
        if (lineOnSurface(triple.surface, triple.lines[i], tol) > 1e3 * tol.rel_zero)
            throw Error("NotOnSurface",
                        "input line " + std::to_string(i + 1) + " is not on the surface");

    // B maps E1 -> Lambda1 and E2 -> Lambda2: the columns of (B^-1)^T are the
    // four form coefficient vectors.
    const LinearForm a1 = unitForm(triple.lines[0].form1);
    const LinearForm a2 = unitForm(triple.lines[0].form2);
    const LinearForm b1 = unitForm(triple.lines[1].form1);
    const LinearForm b2 = unitForm(triple.lines[1].form2);
    Transform binvT;
    for (int r = 0; r < 4; ++r) {
        binvT.m[r][0] = a1.coeffs[r];
        binvT.m[r][1] = a2.coeffs[r];
        binvT.m[r][2] = b1.coeffs[r];
        binvT.m[r][3] = b2.coeffs[r];
    }
    const Transform binv = binvT.transposed();

    // forms of B^-1 Lambda3: coefficients transform by ((B^-1)^T)^-1 = B^T
    const Transform bT = binvT.inverse(tol);
    auto mapForm = [&](const LinearForm& f) {
        LinearForm out;
        for (int r = 0; r < 4; ++r) {
            Complex s{0.0, 0.0};
            for (int cidx = 0; cidx < 4; ++cidx) s += bT.m[r][cidx] * f.coeffs[cidx];
            out.coeffs[r] = s;
        }
        return unitForm(out);
    };
    const std::array<Complex, 4> c = mapForm(unitForm(triple.lines[2].form1)).coeffs;
    const std::array<Complex, 4> cp = mapForm(unitForm(triple.lines[2].form2)).coeffs;

    // Anchor points of B^-1 Lambda3 in the preferred chart: the intersections
    // with {x0 = 0} and {x3 = 0}, [0:1:b:c] and [d:e:1:0].
    const Complex den03 = minorOf(c, cp, 2, 3);   // x1 coordinate of the {x0=0} point
    const Complex den03b = minorOf(c, cp, 0, 1);  // x2 coordinate of the {x3=0} point
    const Complex shared = minorOf(c, cp, 1, 2);  // numerator of both bc and d

    Transform C;
    const double mscale = std::max({std::abs(den03), std::abs(den03b), std::abs(shared), 1e-300});
    const bool chart1ok = std::abs(den03) > tol.rel_zero * mscale &&
                          std::abs(den03b) > tol.rel_zero * mscale &&
                          std::abs(shared) > tol.rel_zero * mscale;
    if (chart1ok) {
        const Complex bb = -minorOf(c, cp, 1, 3) / den03;
        const Complex cc = shared / den03;
        const Complex dd = shared / den03b;
        const Complex ee = -minorOf(c, cp, 0, 2) / den03b;
        C = Transform{{{{1.0 / dd, 0.0, 0.0, 0.0},
                        {-ee / dd, 1.0, 0.0, 0.0},
                        {0.0, 0.0, 1.0, -bb / cc},
                        {0.0, 0.0, 0.0, 1.0 / cc}}}};
    } else {
        // Anchor instead at the {x1 = 0} and {x2 = 0} intersections,
        // [1:0:q:r] and [u:v:0:1], sent to [1:0:1:0] and [0:1:0:1].
        const Complex den1 = minorOf(c, cp, 2, 3);  // x0 coordinate of the {x1=0} point
        const Complex den2 = minorOf(c, cp, 0, 1);  // x3 coordinate of the {x2=0} point
        const Complex shared2 = minorOf(c, cp, 3, 0);  // numerator of both q and v
        const double mscale2 = std::max({std::abs(den1), std::abs(den2), std::abs(shared2), 1e-300});
        if (std::abs(den1) <= tol.rel_zero * mscale2 || std::abs(den2) <= tol.rel_zero * mscale2 ||
            std::abs(shared2) <= tol.rel_zero * mscale2)
            throw Error("DegenerateIntersection",
                        "both anchor charts for the third line degenerated");
        const Complex q = shared2 / den1;
        const Complex r = minorOf(c, cp, 0, 2) / den1;
        const Complex u = minorOf(c, cp, 1, 3) / den2;
        const Complex v = shared2 / den2;
        C = Transform{{{{1.0, -u / v, 0.0, 0.0},
                        {0.0, 1.0 / v, 0.0, 0.0},
                        {0.0, 0.0, 1.0 / q, 0.0},
                        {0.0, 0.0, -r / q, 1.0}}}};
    }

    const Transform A = C * binv;

    const std::array<Line, 3> target = {frame::e1(), frame::e2(), frame::e3()};
    for (int i = 0; i < 3; ++i) {
        const Line img = applyToLine(A, triple.lines[i], tol);
        if (pluckerDistance(img, target[i], tol) > tol.match_dist)
            throw Error("DegenerateIntersection",
                        "transform failed to move line " + std::to_string(i + 1) +
                            " onto the canonical frame");
    }
    return A;
}

CanonicalizeResult canonicalize(const SkewTriple& triple, const Tolerance& tol) {
    const Transform A = buildTransform(triple, tol);
    const Transform Ainv = A.inverse(tol);
    CubicForm g = composeWith(triple.surface, Ainv).unitNormed();
    const RelationReport rep = checkCanonicalRelations(g, tol);
    if (!rep.pass) {
        double worst = 0.0;
        for (Complex r : rep.residuals) worst = std::max(worst, std::abs(r));
        if (worst > 10.0 * tol.rel_zero * g.norm())
            throw Error("RelationResidual",
                        "canonical relations violated after pullback (conditioning alarm)");
    }
    return {A, g};
}

LineTable pullBackTable(const Transform& toCanonical, const LineTable& table,
                        const Tolerance& tol) {
    const Transform back = toCanonical.inverse(tol);
    LineTable out;
    for (const LineLabel& lbl : LineLabel::all())
        out.at(lbl) = applyToLine(back, table.at(lbl), tol);
    return out;
}

}  // namespace cubiclines
