#include <doctest.h>

#include "cubiclines/canonicalizer.hpp"
#include "cubiclines/oracle.hpp"
#include "cubiclines/pipeline.hpp"
#include "cubiclines/samples.hpp"
#include "cubiclines/verifier.hpp"
#include "test_helpers.hpp"

using namespace cubiclines;

TEST_CASE("oracle recovers the classical Fermat lines") {
    const OracleResult res = bruteForceLines(samples::fermat(), 900, 2);
    CHECK(res.complete);
    REQUIRE(res.lines.size() == 27);
    const std::vector<Line> classical = samples::fermatLines();
    for (const Line& l : classical) CHECK(lineOnSurface(samples::fermat(), l) < 1e-14);
    const auto [match, maxDist] = matchLineSets(res.lines, classical);
    CHECK(maxDist < 1e-8);
    CHECK(realLineCount(res.lines) == 3);
}

TEST_CASE("oracle matches the closed-form construction on the 15-line sample") {
    const CubicForm f2 = samples::real15();
    const OracleResult res = bruteForceLines(f2, 900, 5);
    REQUIRE(res.lines.size() == 27);
    for (const Line& l : res.lines) CHECK(lineOnSurface(f2, l) < 1e-9);
    const PipelineResult pipe = computeAll(f2);
    std::vector<Line> fromPipe;
    for (const LineLabel& lbl : LineLabel::all()) fromPipe.push_back(pipe.table.at(lbl));
    const auto [match, maxDist] = matchLineSets(res.lines, fromPipe);
    CHECK(maxDist < 1e-6);
}

TEST_CASE("oracle on a random canonical surface") {
    const CubicForm f = randomCanonical(7, 1.0);
    const OracleResult res = bruteForceLines(f, 1200, 7);
    CHECK(res.complete);
    for (const Line& l : res.lines) CHECK(lineOnSurface(f, l) < 1e-8);
}

TEST_CASE("oracle determinism and budget monotonicity") {
    const CubicForm f2 = samples::real15();
    const OracleResult a = bruteForceLines(f2, 600, 11);
    const OracleResult b = bruteForceLines(f2, 600, 11);
    REQUIRE(a.lines.size() == b.lines.size());
    for (size_t i = 0; i < a.lines.size(); ++i)
        CHECK(pluckerDistance(a.lines[i], b.lines[i]) < 1e-14);

    const OracleResult more = bruteForceLines(f2, 1200, 11);
    // every line found at the smaller budget is still found at the larger one
    for (const Line& l : a.lines) {
        bool kept = false;
        for (const Line& m : more.lines)
            if (sameLine(l, m)) {
                kept = true;
                break;
            }
        CHECK(kept);
    }
}

TEST_CASE("oracle rejects tiny budgets") {
    CHECK_THROWS_WITH_AS(bruteForceLines(samples::real15(), 100, 1),
                         doctest::Contains("InvalidInput"), Error);
}

TEST_CASE("realLineCount on the sample tables") {
    const PipelineResult r27 = computeAll(samples::real27());
    std::vector<Line> lines;
    for (const LineLabel& lbl : LineLabel::all()) lines.push_back(r27.table.at(lbl));
    CHECK(realLineCount(lines) == 27);

    const PipelineResult r7 = computeAll(samples::real7());
    lines.clear();
    for (const LineLabel& lbl : LineLabel::all()) lines.push_back(r7.table.at(lbl));
    CHECK(realLineCount(lines) == 7);
}

TEST_CASE("findSkewTriple behavior") {
    // the 27 real lines of the 27-line sample contain a skew triple
    const PipelineResult r27 = computeAll(samples::real27());
    std::vector<Line> real27;
    for (const LineLabel& lbl : LineLabel::all())
        if (lineIsReal(r27.table.at(lbl))) real27.push_back(r27.table.at(lbl));
    CHECK(findSkewTriple(real27).has_value());

    // the three real Fermat lines pairwise meet (at points like [1:-1:-1:1])
    std::vector<Line> fermatReal;
    for (const Line& l : samples::fermatLines())
        if (lineIsReal(l)) fermatReal.push_back(l);
    REQUIRE(fermatReal.size() == 3);
    CHECK(!findSkewTriple(fermatReal).has_value());
    const auto p = lineIntersection(fermatReal[0], fermatReal[1]);
    CHECK(p.has_value());

    // a found triple feeds the canonicalizer end to end
    const PipelineResult r15 = computeAll(samples::real15());
    std::vector<Line> real15;
    for (const LineLabel& lbl : LineLabel::all())
        if (lineIsReal(r15.table.at(lbl))) real15.push_back(r15.table.at(lbl));
    const auto triple = findSkewTriple(real15);
    REQUIRE(triple.has_value());
    const CanonicalizeResult canon =
        canonicalize({samples::real15(), *triple});
    const PipelineResult res = computeAll(canon.canonical);
    int real = 0;
    for (const LineLabel& lbl : LineLabel::all())
        if (lineIsReal(res.table.at(lbl))) ++real;
    CHECK(real == 15);
}
