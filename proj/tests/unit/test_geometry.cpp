#include <doctest.h>

#include <cmath>

#include "cubiclines/geometry.hpp"
#include "cubiclines/pipeline.hpp"
#include "cubiclines/samples.hpp"
#include "cubiclines/surface.hpp"
#include "test_helpers.hpp"

using namespace cubiclines;
using testutil::makeLine;
using testutil::makePoint;
using testutil::near;

namespace {

Transform randomInvertible(NormalSampler& rng) {
    for (;;) {
        Transform T;
        double scale = 0.0;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                T.m[r][c] = rng.complexNormal();
                scale = std::max(scale, std::abs(T.m[r][c]));
            }
        if (std::abs(T.det()) > 0.05 * scale * scale * scale * scale) return T;
    }
}

}  // namespace

TEST_CASE("applyToPoint matches the matrix action") {
    const PointP3 p = makePoint(1, 2, 3, 4);
    CHECK(near(applyToPoint(Transform::identity(), p).normalized().coords[0], {0.25, 0}));

    Transform swap;  // (x0,x1) <-> (x2,x3)
    swap.m[0][2] = swap.m[1][3] = swap.m[2][0] = swap.m[3][1] = 1.0;
    const PointP3 q = applyToPoint(swap, makePoint(1, 0, 0, 0)).normalized();
    CHECK(near(q.coords[2], {1, 0}));
    CHECK(std::abs(q.coords[0]) + std::abs(q.coords[1]) + std::abs(q.coords[3]) < 1e-15);

    Transform diag = Transform::identity();
    diag.m[0][0] = 2.0;
    const PointP3 r = applyToPoint(diag, makePoint(1, 1, 0, 0));
    CHECK(near(r.coords[0] / r.coords[1], {2, 0}));
}

TEST_CASE("applyToLine on the frame and on the step-3 coordinate change") {
    CHECK(sameLine(applyToLine(Transform::identity(), frame::e1()), frame::e1()));

    // the coordinate change built from the 15-real-line sample's trace
    // (t4 = -1, residual form coefficients (3, -1, 0)) must move L34 to E3
    Transform A;  // A^T rows: (1,0,0,0), (-t4, c1, 0, 0), (0,0,1,-c2), (0,0,-t4,-c3)
    const Complex t4{-1, 0}, c1{3, 0}, c2{-1, 0}, c3{0, 0};
    Transform At{};
    At.m[0] = {Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}};
    At.m[1] = {-t4, c1, Complex{0, 0}, Complex{0, 0}};
    At.m[2] = {Complex{0, 0}, Complex{0, 0}, Complex{1, 0}, -c2};
    At.m[3] = {Complex{0, 0}, Complex{0, 0}, -t4, -c3};
    A = At.transposed();
    const Line l34 = makeLine(Complex{1, 0}, Complex{1, 0}, Complex{-1, 0}, Complex{-1, 0}, Complex{0, 0}, c1, c2, c3);
    CHECK(sameLine(applyToLine(A, l34), frame::e3()));

    Transform swap;
    swap.m[0][2] = swap.m[1][3] = swap.m[2][0] = swap.m[3][1] = 1.0;
    CHECK(sameLine(applyToLine(swap, frame::e1()), frame::e2()));
}

TEST_CASE("applyToLine round-trips through the inverse") {
    NormalSampler rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Transform T = randomInvertible(rng);
        const Line l = makeLine(rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal());
        const Line back = applyToLine(T.inverse(), applyToLine(T, l));
        CHECK(pluckerDistance(back, l) < 1e-7);
    }
}

TEST_CASE("linesSkew on coordinate lines") {
    CHECK(linesSkew(frame::e1(), frame::e2()));
    CHECK(linesSkew(frame::e1(), frame::e3()));
    const Line a = makeLine(Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}, Complex{0, 0}, Complex{0, 0});
    const Line b = makeLine(Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}, Complex{0, 0});
    CHECK(!linesSkew(a, b));  // share [0:0:0:1]
    CHECK(linesSkew(b, a) == linesSkew(a, b));
}

TEST_CASE("lineIntersection finds the unique common point") {
    CHECK(!lineIntersection(frame::e1(), frame::e2()).has_value());

    const Line a = makeLine(Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}, Complex{0, 0}, Complex{0, 0});
    const Line b = makeLine(Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}, Complex{0, 0});
    const auto p = lineIntersection(a, b);
    REQUIRE(p.has_value());
    CHECK(near(p->coords[3], {1, 0}));
    CHECK(std::abs(p->coords[0]) + std::abs(p->coords[1]) + std::abs(p->coords[2]) < 1e-12);

    // x0 = x2 = 0, x1 + 2 x3 = 0 -> [0 : -2 : 0 : 1]
    const Line c = makeLine(Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}, Complex{0, 0});
    const Line d = makeLine(Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{2, 0});
    const auto q = lineIntersection(c, d);
    REQUIRE(q.has_value());
    CHECK(near(q->coords[1] / q->coords[3], {-2, 0}));
    CHECK(std::abs(q->coords[0]) + std::abs(q->coords[2]) < 1e-12);

    CHECK_THROWS_WITH_AS(lineIntersection(frame::e1(), frame::e1()),
                         doctest::Contains("CoincidentLines"), Error);
}

TEST_CASE("canonicalizeLine yields the reduced row echelon representative") {
    const Line scaled = makeLine(Complex{2, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{3, 0}, Complex{0, 0}, Complex{0, 0});
    const Line canon = canonicalizeLine(scaled);
    CHECK(near(canon.form1.coeffs[0], {1, 0}));
    CHECK(near(canon.form2.coeffs[1], {1, 0}));

    const Line mixed = makeLine(Complex{1, 0}, Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}, Complex{-1, 0}, Complex{0, 0}, Complex{0, 0});
    const Line canonMixed = canonicalizeLine(mixed);
    CHECK(near(canonMixed.form1.coeffs[0], {1, 0}));
    CHECK(std::abs(canonMixed.form1.coeffs[1]) < 1e-12);
    CHECK(near(canonMixed.form2.coeffs[1], {1, 0}));

    const Line swapped = makeLine(Complex{0, 0}, Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0});
    const Line canonSwapped = canonicalizeLine(swapped);
    CHECK(near(canonSwapped.form1.coeffs[0], {1, 0}));
    CHECK(near(canonSwapped.form2.coeffs[1], {1, 0}));

    // canonicalization is idempotent
    CHECK(pluckerDistance(canonicalizeLine(canonMixed), canonMixed) < 1e-14);
}

TEST_CASE("pluckerCoords: unit norm, fixed phase, quadratic relation") {
    const auto u = pluckerCoords(frame::e1());
    int nonzero = 0;
    for (const Complex& v : u)
        if (std::abs(v) > 1e-12) ++nonzero;
    CHECK(nonzero == 1);
    CHECK(near(u[5], {1, 0}));  // spanned by [0:0:1:0] and [0:0:0:1]

    CHECK(pluckerDistance(frame::e1(), canonicalizeLine(frame::e1())) < 1e-14);
    CHECK(pluckerDistance(frame::e1(), frame::e2()) > 0.5);

    NormalSampler rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Line l = makeLine(rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal());
        const auto p = pluckerCoords(l);
        // p01 p23 - p02 p13 + p03 p12 = 0
        CHECK(std::abs(p[0] * p[5] - p[1] * p[4] + p[2] * p[3]) < 1e-10);
        double n = 0.0;
        for (const Complex& v : p) n += std::norm(v);
        CHECK(std::abs(std::sqrt(n) - 1.0) < 1e-12);
    }
}

TEST_CASE("lineIsReal on real, rescaled and genuinely complex lines") {
    CHECK(lineIsReal(frame::e1()));
    const Line rescaled = makeLine(Complex{0, 1}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 1}, Complex{0, 0}, Complex{0, 0});
    CHECK(lineIsReal(rescaled));
    const Line complexLine = makeLine(Complex{1, 0}, Complex{0, -1}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}, Complex{0, -1});
    CHECK(!lineIsReal(complexLine));
}

TEST_CASE("lineIsReal agrees with canonical-conjugate equality") {
    NormalSampler rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        Line l;
        if (trial % 2 == 0) {
            l = makeLine({rng.normal(), 0}, {rng.normal(), 0}, {rng.normal(), 0}, {rng.normal(), 0}, {rng.normal(), 0}, {rng.normal(), 0}, {rng.normal(), 0}, {rng.normal(), 0});
        } else {
            l = makeLine(rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal());
        }
        const bool viaPlucker = lineIsReal(l);
        const bool viaCanonical = sameLine(canonicalizeLine(l), canonicalizeLine(conjugateLine(l)));
        CHECK(viaPlucker == viaCanonical);
    }
}

TEST_CASE("skew lines have no intersection; meeting distinct lines have exactly one") {
    NormalSampler rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        const Line a = makeLine(rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal());
        const Line b = makeLine(rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal(), rng.complexNormal());
        const auto inter = lineIntersection(a, b);
        if (linesSkew(a, b)) {
            CHECK(!inter.has_value());
        } else {
            REQUIRE(inter.has_value());
            CHECK(std::abs(a.form1.eval(*inter)) < 1e-6);
            CHECK(std::abs(a.form2.eval(*inter)) < 1e-6);
            CHECK(std::abs(b.form1.eval(*inter)) < 1e-6);
            CHECK(std::abs(b.form2.eval(*inter)) < 1e-6);
        }
    }
}
