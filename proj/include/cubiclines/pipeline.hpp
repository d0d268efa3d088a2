#pragma once

#include <array>
#include <optional>
#include <string>

#include "cubiclines/surface.hpp"

namespace cubiclines {

/// One of the 27 classical labels E1..E6, C1..C6, L{i,j} with i < j.
class LineLabel {
public:
    enum class Kind { E, C, L };

    static LineLabel E(int i);
    static LineLabel C(int i);
    static LineLabel L(int i, int j);

    Kind kind() const { return kind_; }
    int a() const { return a_; }
    int b() const { return b_; }

    /// Stable position: E1..E6 = 0..5, C1..C6 = 6..11, L12..L56 (lexicographic) = 12..26.
    int index() const;
    std::string name() const;

    static const std::array<LineLabel, 27>& all();
    static std::optional<LineLabel> parse(const std::string& s);

    bool operator==(const LineLabel& o) const { return index() == o.index(); }

private:
    LineLabel(Kind k, int a, int b) : kind_(k), a_(a), b_(b) {}
    Kind kind_;
    int a_;
    int b_;
};

/// All 27 labeled lines.
struct LineTable {
    std::array<Line, 27> lines{};

    Line& at(const LineLabel& l) { return lines[l.index()]; }
    const Line& at(const LineLabel& l) const { return lines[l.index()]; }
};

/// The fixed skew frame E1 = V(x0,x1), E2 = V(x2,x3), E3 = V(x0-x2,x1-x3),
/// the quadric through it, and its two rulings.
namespace frame {
Line e1();
Line e2();
Line e3();
/// x0 x3 - x1 x2 at p.
Complex quadric(const PointP3& p);
/// V(x0 - s x2, x1 - s x3); s at infinity gives V(x2, x3).
Line rulingM(const ProjectiveScalar& s);
/// V(x0 - t x1, x2 - t x3); t at infinity gives V(x1, x3).
Line rulingN(const ProjectiveScalar& t);
}  // namespace frame

/// Scalars of one of the three q-quadric branches, keyed by the index triple
/// (i, j, k) with {i,j,k} = {4,5,6}; produces E_k and L_{i,j}.
struct FinalSixBranch {
    int i = 0, j = 0, k = 0;
    Complex gamma, delta, epsilon, piVal, rho, sigma;
    ProjectiveScalar qPlus, qMinus;
    /// true when the +sqrt and -sqrt roots were exchanged so that qPlus is the
    /// root that produces E_k (the branch meeting C3).
    bool branchesSwapped = false;
};

/// Every intermediate scalar of the run, for audit, regression and the direct
/// table evaluator.
struct PipelineTrace {
    std::array<Complex, 3> t{};  // t4, t5, t6
    std::array<Complex, 3> c{};  // coefficients of the L34 residual form
    std::array<Complex, 3> d{};  // coefficients of the L35 residual form
    std::array<Complex, 3> u{};
    std::array<Complex, 2> v{};  // v2, v3
    ProjectiveScalar s1, s2;
    // residual-form coefficients produced at s1 and s2 (m,n,p in the generic
    // chart; the x1 = 0 chart coefficients when the branch sits at infinity)
    std::array<Complex, 3> mnp1{}, mnp2{};
    std::array<Complex, 3> hjk1{}, hjk2{};
    std::array<FinalSixBranch, 3> finalSix{};
    std::array<int, 3> rootOrder = {0, 1, 2};
    bool sBranchSwapped = false;
};

/// Test and audit knobs: permute the sorted roots before use, or exchange the
/// two quadratic branches of s. Both only relabel the output set.
struct PipelineOptions {
    std::array<int, 3> rootOrder = {0, 1, 2};
    bool swapSBranch = false;
};

struct PipelineResult {
    LineTable table;
    PipelineTrace trace;
};

/// Coefficients (a3, a2, a1, a0) of the ruling cubic g(t). Both displayed
/// forms are evaluated and must agree (FormMismatch otherwise);
/// DegenerateLeadingCoefficient if the cubic degenerates.
std::array<Complex, 4> gCoefficients(const CubicForm& f, const Tolerance& tol = {});

/// Roots of g (sortRoots order) and the ruling lines C4, C5, C6.
struct RulingLines {
    std::array<Complex, 3> t;
    std::array<Line, 3> c;
};
RulingLines stepRulingLines(const CubicForm& f, const Tolerance& tol = {});

/// The residual line of E_which and the ruling line at root t
/// (which = 1, 2 or 3).
Line stepNineResiduals(const CubicForm& f, Complex t, int which, const Tolerance& tol = {});

/// Residual of E1 and V(x0 + a x1, b x2 + c x3): V(x0 + a x1, m x1 + n x2 + p x3).
/// The five bilinear identities defining m, n, p are re-checked
/// (InconsistentSystem when the input line is not on the surface).
Line stepResidualMNP(const CubicForm& f, Complex a, Complex b, Complex c,
                     std::array<Complex, 3>* mnpOut = nullptr, const Tolerance& tol = {});

/// Residual of E2 and V(x0 + a x1, b x2 + c x3), through the chart that fixes
/// E2 and moves the input line to V(x0 + a x1, x2).
Line stepResidualHJK(const CubicForm& f, Complex a, Complex b, Complex c,
                     std::array<Complex, 3>* hjkOut = nullptr, const Tolerance& tol = {});

struct C3L12Result {
    Line c3;
    Line l12;
    ProjectiveScalar s1, s2;
};

/// Solves the ruling quadric intersection for C3 and L12 and records c, d, u,
/// v, s into the trace.
C3L12Result stepC3L12(const CubicForm& f, PipelineTrace& trace, const Tolerance& tol = {},
                      bool swapSBranch = false);

/// The six q-quadric lines E4, E5, E6, L45, L46, L56. `c3` disambiguates which
/// branch is E_k (exactly one candidate meets C3; AmbiguousLabel otherwise).
struct FinalSixResult {
    std::array<Line, 3> e;  // E4, E5, E6
    std::array<Line, 3> l;  // L56, L46, L45 matched to branches (5,6,4), (4,6,5), (4,5,6)
};
FinalSixResult stepFinalSix(const CubicForm& f, PipelineTrace& trace, const Line& c3,
                            const Tolerance& tol = {});

/// Runs the whole closed-form construction on a canonical surface.
PipelineResult computeAll(const CubicForm& f, const Tolerance& tol = {},
                          const PipelineOptions& opts = {});

/// Builds the table a second time by stamping every row directly from the
/// trace scalars. When compareTo is given, throws TableMismatch naming the
/// first label whose line differs beyond match_dist.
LineTable directTableEval(const CubicForm& f, const PipelineTrace& trace,
                            const LineTable* compareTo = nullptr, const Tolerance& tol = {});

}  // namespace cubiclines
