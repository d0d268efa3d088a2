#include "cubiclines/samples.hpp"

#include <cmath>

namespace cubiclines::samples {

CubicForm real27() {
    CubicForm f;
    f.setAlpha(2, 0, 1, 0, 1.0);
    f.setAlpha(1, 0, 2, 0, -1.0);
    f.setAlpha(2, 0, 0, 1, 1.0);
    f.setAlpha(1, 1, 1, 0, -1.0);
    f.setAlpha(0, 1, 2, 0, 17.0 / 39.0);
    f.setAlpha(1, 0, 1, 1, -17.0 / 39.0);
    f.setAlpha(0, 2, 1, 0, 2.0);
    f.setAlpha(1, 1, 0, 1, -3.0);
    f.setAlpha(1, 0, 0, 2, 12.0 / 13.0);
    f.setAlpha(0, 1, 1, 1, 1.0 / 13.0);
    return f;
}

CubicForm real15() {
    CubicForm f;
    f.setAlpha(2, 0, 1, 0, 1.0);
    f.setAlpha(1, 0, 2, 0, -1.0);
    f.setAlpha(2, 0, 0, 1, 1.0);
    f.setAlpha(1, 1, 1, 0, -1.0);
    f.setAlpha(0, 2, 1, 0, 1.0);
    f.setAlpha(1, 1, 0, 1, -2.0);
    f.setAlpha(0, 1, 2, 0, 1.0);
    f.setAlpha(1, 0, 1, 1, -1.0);
    f.setAlpha(1, 0, 0, 2, -1.0);
    f.setAlpha(0, 1, 1, 1, 2.0);
    return f;
}

CubicForm real7() {
    CubicForm f;
    f.setAlpha(2, 0, 1, 0, 1.0);
    f.setAlpha(1, 0, 2, 0, -1.0);
    f.setAlpha(2, 0, 0, 1, 2.0);
    f.setAlpha(1, 1, 1, 0, -2.0);
    f.setAlpha(0, 2, 1, 0, 1.0);
    f.setAlpha(1, 1, 0, 1, -1.0);
    f.setAlpha(0, 2, 0, 1, 1.0);
    f.setAlpha(0, 1, 0, 2, -1.0);
    return f;
}

CubicForm fermat() {
    CubicForm f;
    f.setAlpha(3, 0, 0, 0, 1.0);
    f.setAlpha(0, 3, 0, 0, 1.0);
    f.setAlpha(0, 0, 3, 0, 1.0);
    f.setAlpha(0, 0, 0, 3, 1.0);
    return f;
}

namespace {

std::array<Complex, 3> cubeRootsOfUnity() {
    const double s = std::sqrt(3.0) / 2.0;
    return {Complex{1.0, 0.0}, Complex{-0.5, s}, Complex{-0.5, -s}};
}

Line pairedLine(int b, int c, int d, Complex w, Complex wp) {
    // V(x0 + w x_b, x_c + w' x_d)
    LinearForm f1, f2;
    f1.coeffs[0] = 1.0;
    f1.coeffs[b] = w;
    f2.coeffs[c] = 1.0;
    f2.coeffs[d] = wp;
    return {f1, f2};
}

}  // namespace

std::vector<Line> fermatLines() {
    const auto roots = cubeRootsOfUnity();
    std::vector<Line> lines;
    lines.reserve(27);
    const int pairings[3][3] = {{1, 2, 3}, {2, 1, 3}, {3, 1, 2}};
    for (const auto& pr : pairings)
        for (Complex w : roots)
            for (Complex wp : roots) lines.push_back(pairedLine(pr[0], pr[1], pr[2], w, wp));
    return lines;
}

std::array<Line, 3> fermatSkewTriple() {
    const auto roots = cubeRootsOfUnity();
    return {pairedLine(1, 2, 3, roots[0], roots[0]), pairedLine(1, 2, 3, roots[1], roots[1]),
            pairedLine(1, 2, 3, roots[2], roots[2])};
}

CubicForm byName(const std::string& name) {
    if (name == "real27") return real27();
    if (name == "real15") return real15();
    if (name == "real7") return real7();
    if (name == "fermat") return fermat();
    throw Error("InvalidInput", "unknown sample surface: " + name);
}

}  // namespace cubiclines::samples
