#pragma once

#include <string>
#include <vector>

#include "cubiclines/surface.hpp"

namespace cubiclines::samples {

/// Built-in real canonical surfaces with 27, 15, and 7 real lines.
CubicForm real27();
CubicForm real15();
CubicForm real7();

/// x0^3 + x1^3 + x2^3 + x3^3.
CubicForm fermat();

/// The 27 lines of the Fermat cubic in closed form: for each of the three
/// index pairings, V(x_a + w x_b, x_c + w' x_d) over cube roots of unity w, w'.
std::vector<Line> fermatLines();

/// A skew triple on the Fermat cubic: V(x0 + w x1, x2 + w x3) for the three
/// cube roots of unity w.
std::array<Line, 3> fermatSkewTriple();

/// Lookup by name ("real27", "real15", "real7", "fermat"); throws InvalidInput.
CubicForm byName(const std::string& name);

}  // namespace cubiclines::samples
