#pragma once

#include <doctest.h>

#include <complex>

#include "cubiclines/geometry.hpp"
#include "cubiclines/pipeline.hpp"
#include "cubiclines/surface.hpp"

namespace testutil {

using cubiclines::Complex;
using cubiclines::Line;
using cubiclines::LinearForm;
using cubiclines::PointP3;

inline bool near(Complex a, Complex b, double eps = 1e-9) {
    return cubiclines::approxEqual(a, b, eps);
}

inline Line makeLine(Complex a0, Complex a1, Complex a2, Complex a3, Complex b0, Complex b1,
                     Complex b2, Complex b3) {
    return {LinearForm{{a0, a1, a2, a3}}, LinearForm{{b0, b1, b2, b3}}};
}

inline PointP3 makePoint(Complex a, Complex b, Complex c, Complex d) {
    return PointP3{{a, b, c, d}};
}

/// The s2 = infinity regression surface: a real canonical sample with the
/// alpha1002 / alpha0111 pair moved so v2 = 0 exactly (the ruling cubic is
/// unchanged by that move).
inline cubiclines::CubicForm infinityBranchSurface() {
    using cubiclines::CubicForm;
    CubicForm f = cubiclines::randomCanonical(1, 1.0, true);
    const auto rl = cubiclines::stepRulingLines(f);
    const Complex t4 = rl.t[0], t5 = rl.t[1];
    auto a = [&](int i, int j, int k, int l) { return f.alpha(i, j, k, l); };
    const Complex c2 = t4 * a(2, 0, 1, 0) + a(0, 1, 2, 0) + a(1, 1, 1, 0);
    const Complex d2 = t5 * a(2, 0, 1, 0) + a(0, 1, 2, 0) + a(1, 1, 1, 0);
    const Complex x = a(2, 0, 0, 1) * (t5 * c2 - t4 * d2) / (c2 - d2);
    f.setAlpha(1, 0, 0, 2, x);
    f.setAlpha(0, 1, 1, 1, -(a(0, 2, 1, 0) + x + a(1, 1, 0, 1)));
    return f;
}

}  // namespace testutil
