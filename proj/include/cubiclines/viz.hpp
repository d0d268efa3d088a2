#pragma once

#include <string>

#include "cubiclines/io.hpp"

namespace cubiclines::viz {

/// Visualization data: every real line of the table is clipped to the affine
/// box [-box, box]^3 in the chart x3 = 1 (with a per-line fallback chart when
/// the line lies at infinity there) and emitted as a segment; complex lines
/// are listed as omitted; surface sample points come from solving the cubic
/// along grid rays. Field order in the emitted JSON is fixed.
io::Json exportViz(const CubicForm& f, const LineTable* table, double box, int gridSize = 24,
                   const Tolerance& tol = {});

/// OBJ flavor of the export: v records for segment endpoints, l records (one
/// polyline per labeled real line).
std::string exportObj(const io::Json& vizData);

}  // namespace cubiclines::viz
