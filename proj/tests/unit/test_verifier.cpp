#include <doctest.h>

#include "cubiclines/samples.hpp"
#include "cubiclines/verifier.hpp"
#include "test_helpers.hpp"

using namespace cubiclines;
using testutil::makeLine;

TEST_CASE("expectedAdjacency spot values") {
    CHECK(!expectedAdjacency(LineLabel::E(1), LineLabel::C(1)));
    CHECK(!expectedAdjacency(LineLabel::E(1), LineLabel::E(2)));
    CHECK(expectedAdjacency(LineLabel::E(1), LineLabel::C(2)));
    CHECK(expectedAdjacency(LineLabel::E(1), LineLabel::L(1, 4)));
    CHECK(!expectedAdjacency(LineLabel::E(1), LineLabel::L(2, 4)));
    CHECK(expectedAdjacency(LineLabel::C(5), LineLabel::L(5, 6)));
    CHECK(expectedAdjacency(LineLabel::L(1, 2), LineLabel::L(3, 4)));
    CHECK(!expectedAdjacency(LineLabel::L(1, 2), LineLabel::L(2, 3)));
}

TEST_CASE("expectedAdjacency marks the five families of disjoint sixes") {
    auto independent = [](const std::vector<LineLabel>& six) {
        for (size_t i = 0; i < six.size(); ++i)
            for (size_t j = i + 1; j < six.size(); ++j)
                if (expectedAdjacency(six[i], six[j])) return false;
        return six.size() == 6;
    };
    // {E_i}
    {
        std::vector<LineLabel> six;
        for (int i = 1; i <= 6; ++i) six.push_back(LineLabel::E(i));
        CHECK(independent(six));
    }
    // {C_i}
    {
        std::vector<LineLabel> six;
        for (int i = 1; i <= 6; ++i) six.push_back(LineLabel::C(i));
        CHECK(independent(six));
    }
    // {E_i, C_i, L_{j,k}}_{j,k != i}: the four L lines share the index 2
    {
        std::vector<LineLabel> six = {LineLabel::E(1),    LineLabel::C(1),    LineLabel::L(2, 3),
                                      LineLabel::L(2, 4), LineLabel::L(2, 5), LineLabel::L(2, 6)};
        CHECK(independent(six));
    }
    // {E_i, E_j, E_k, L_{m,n}} with m, n outside {i,j,k}
    {
        std::vector<LineLabel> six = {LineLabel::E(1),    LineLabel::E(2),    LineLabel::E(3),
                                      LineLabel::L(4, 5), LineLabel::L(4, 6), LineLabel::L(5, 6)};
        CHECK(independent(six));
    }
    // {C_i, C_j, C_k, L_{m,n}}
    {
        std::vector<LineLabel> six = {LineLabel::C(1),    LineLabel::C(2),    LineLabel::C(3),
                                      LineLabel::L(4, 5), LineLabel::L(4, 6), LineLabel::L(5, 6)};
        CHECK(independent(six));
    }
}

TEST_CASE("buildIncidenceGraph matches the classical rules on computed tables") {
    for (const CubicForm& f : {samples::real27(), samples::real15()}) {
        const PipelineResult res = computeAll(f);
        const IncidenceGraph g = buildIncidenceGraph(res.table);
        const auto& labels = LineLabel::all();
        for (int i = 0; i < 27; ++i) {
            CHECK(g.degree(i) == 10);
            for (int j = i + 1; j < 27; ++j)
                CHECK(g.at(i, j) == expectedAdjacency(labels[i], labels[j]));
        }
    }
}

TEST_CASE("a corrupted table produces incidence mismatches") {
    const CubicForm f1 = samples::real27();
    PipelineResult res = computeAll(f1);
    res.table.at(LineLabel::L(1, 2)) =
        makeLine(Complex{1, 0}, Complex{0.3, 0.1}, Complex{-0.2, 0}, Complex{0.7, 0}, Complex{0, 0}, Complex{1, 0}, Complex{0.4, 0}, Complex{-0.9, 0.2});
    const VerificationReport rep = verifyTable(f1, res.table);
    CHECK(!rep.pass);
    CHECK(!rep.incidenceMismatches.empty());
}

TEST_CASE("verifyTable passes the pipeline output and fails perturbations") {
    const CubicForm f1 = samples::real27();
    const PipelineResult res = computeAll(f1);
    const VerificationReport good = verifyTable(f1, res.table);
    CHECK(good.pass);
    CHECK(good.maxOnSurfaceResidual < 1e-8);
    CHECK(good.degreeHistogram.size() == 1);
    CHECK(good.degreeHistogram.at(10) == 27);

    PipelineResult bad = res;
    Line& l12 = bad.table.at(LineLabel::L(1, 2));
    l12 = canonicalizeLine(l12);
    l12.form2.coeffs[1] += 1e-3;
    const VerificationReport rep = verifyTable(f1, bad.table);
    CHECK(!rep.pass);
    CHECK(rep.maxOnSurfaceResidual > 1e-4);

    // a table belonging to a different surface fails loudly
    const PipelineResult other = computeAll(samples::real7());
    const VerificationReport mismatched = verifyTable(samples::real15(), other.table);
    CHECK(!mismatched.pass);
    CHECK(mismatched.maxOnSurfaceResidual > 1e-3);
}

TEST_CASE("trianglePropertyHolds on real-line subgraphs and the K4 control") {
    for (const CubicForm& f : {samples::real27(), samples::real15()}) {
        const PipelineResult res = computeAll(f);
        const IncidenceGraph g = buildIncidenceGraph(res.table);
        std::vector<int> realIdx;
        for (const LineLabel& lbl : LineLabel::all())
            if (lineIsReal(res.table.at(lbl))) realIdx.push_back(lbl.index());
        CHECK(trianglePropertyHolds(g, realIdx));
        CHECK(trianglePropertyHolds(g));
    }

    IncidenceGraph k4(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.set(i, j, true);
    CHECK(!trianglePropertyHolds(k4));
}

TEST_CASE("matchLineSets: identity, oracle-style permutation, injected fault") {
    const PipelineResult res = computeAll(samples::real15());
    std::vector<Line> a, b;
    for (const LineLabel& lbl : LineLabel::all()) a.push_back(res.table.at(lbl));
    b = a;
    std::rotate(b.begin(), b.begin() + 9, b.end());
    const auto [match, maxDist] = matchLineSets(a, b);
    CHECK(maxDist < 1e-14);
    // the matching really is a bijection onto the rotated positions
    std::vector<bool> hit(b.size(), false);
    for (int idx : match) {
        CHECK(!hit[idx]);
        hit[idx] = true;
    }

    std::vector<Line> c = a;
    c[5] = makeLine(Complex{1, 0}, Complex{0.77, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}, Complex{-0.4, 0.3});
    const auto [match2, dist2] = matchLineSets(a, c);
    CHECK(dist2 > 0.1);

    std::vector<Line> tooFew(a.begin(), a.end() - 1);
    CHECK_THROWS_WITH_AS(matchLineSets(a, tooFew), doctest::Contains("SizeMismatch"), Error);
}
