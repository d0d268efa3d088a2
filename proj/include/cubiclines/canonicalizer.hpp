#pragma once

#include "cubiclines/pipeline.hpp"
#include "cubiclines/surface.hpp"

namespace cubiclines {

/// A surface together with three pairwise skew lines on it.
struct SkewTriple {
    CubicForm surface;
    std::array<Line, 3> lines;
};

/// The projective change of coordinates taking the triple's lines to the
/// canonical frame E1, E2, E3, built from the line forms in closed form.
/// Throws NotSkew / NotOnSurface when the triple invariants fail and
/// DegenerateIntersection when both anchor-point charts degenerate.
Transform buildTransform(const SkewTriple& triple, const Tolerance& tol = {});

struct CanonicalizeResult {
    Transform toCanonical;    // A with A Lambda_i = E_i
    CubicForm canonical;      // surface pulled to the frame, unit coefficient norm
};

/// Applies buildTransform and pulls the surface back to canonical form;
/// RelationResidual if the result misses the canonical relations badly.
CanonicalizeResult canonicalize(const SkewTriple& triple, const Tolerance& tol = {});

/// Maps a table of lines on the canonical surface back to the original
/// coordinates (the inverse line action); labels are preserved.
LineTable pullBackTable(const Transform& toCanonical, const LineTable& table,
                        const Tolerance& tol = {});

}  // namespace cubiclines
