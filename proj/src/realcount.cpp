#include "cubiclines/realcount.hpp"

#include <cmath>

#include "cubiclines/geometry.hpp"

namespace cubiclines {

namespace {

bool scalarReal(Complex v, double tol) {
    return std::abs(v.imag()) <= tol * std::max(1.0, std::abs(v));
}

}  // namespace

RealClassification classifyByCriterion(const CubicForm& f, const Tolerance& tol) {
    if (!f.isRealForm(tol)) throw Error("NotReal", "surface has complex coefficients");
    if (!checkCanonicalRelations(f, tol).pass)
        throw Error("NotCanonical", "surface does not contain the canonical skew frame");

    RealClassification cls;
    PipelineTrace& trace = cls.evidence;
    const RulingLines rl = stepRulingLines(f, tol);
    trace.t = rl.t;

    // realness judged at line-equality resolution so the verdict matches
    // lineIsReal on the produced lines
    int realRoots = 0;
    for (Complex t : rl.t)
        if (scalarReal(t, tol.match_dist)) ++realRoots;
    if (realRoots == 2)
        throw Error("DegenerateTrace", "ruling cubic sits on the real-root threshold");
    if (!scalarReal(rl.t[0], tol.match_dist))
        throw Error("DegenerateTrace", "no real root available for t4");
    cls.gRealRoots = realRoots;

    const C3L12Result cl = stepC3L12(f, trace, tol);
    cls.sReal = cl.s1.isReal(tol.match_dist) && cl.s2.isReal(tol.match_dist);

    if (cls.gRealRoots == 3 && cls.sReal)
        cls.count = 27;
    else if (cls.gRealRoots == 1 && !cls.sReal)
        cls.count = 7;
    else
        cls.count = 15;
    return cls;
}

int countRealLinesDirect(const LineTable& table, const Tolerance& tol) {
    int n = 0;
    for (const LineLabel& lbl : LineLabel::all())
        if (lineIsReal(table.at(lbl), tol)) ++n;
    return n;
}

std::set<std::string> caseBreakdown(const LineTable& table, const RealClassification& cls,
                                    const Tolerance& tol) {
    std::set<std::string> observed;
    for (const LineLabel& lbl : LineLabel::all())
        if (lineIsReal(table.at(lbl), tol)) observed.insert(lbl.name());

    // non-real lines must pair up under conjugation
    for (const LineLabel& lbl : LineLabel::all()) {
        if (observed.count(lbl.name())) continue;
        const Line conj = conjugateLine(table.at(lbl));
        bool paired = false;
        for (const LineLabel& other : LineLabel::all()) {
            if (other.index() == lbl.index()) continue;
            if (sameLine(conj, table.at(other), tol)) {
                paired = true;
                break;
            }
        }
        if (!paired)
            throw Error("CaseMismatch",
                        lbl.name() + " is not real yet has no conjugate partner in the table");
    }

    std::set<std::string> expected;
    if (cls.count == 27) {
        for (const LineLabel& lbl : LineLabel::all()) expected.insert(lbl.name());
    } else if (cls.count == 7) {
        expected = {"E1", "E2", "E3", "C4", "L14", "L24", "L34"};
    } else if (cls.gRealRoots == 1 && cls.sReal) {
        expected = {"L56"};
        for (int i = 1; i <= 4; ++i) {
            expected.insert("E" + std::to_string(i));
            expected.insert("C" + std::to_string(i));
            for (int j = i + 1; j <= 4; ++j)
                expected.insert("L" + std::to_string(i) + std::to_string(j));
        }
    } else {
        // three real roots, s not real: the label-level list is not pinned
        // down; assert the count only
        if (static_cast<int>(observed.size()) != cls.count)
            throw Error("CaseMismatch", "real-line count disagrees with the classification");
        return observed;
    }

    if (observed != expected)
        throw Error("CaseMismatch", "real label set disagrees with the classification");
    return expected;
}

}  // namespace cubiclines
