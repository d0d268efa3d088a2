#pragma once

#include <cstdint>

#include "cubiclines/io.hpp"

namespace cubiclines::api {

/// Shared command implementations behind the CLI and the python module.
/// All take and return the JSON shapes documented in the README.

/// Accepts either a canonical surface ({"coefficients": ...}) or a triple
/// ({"surface": ..., "lines": [...x3]}). The triple path canonicalizes first
/// and adds the transform, the canonical surface and the back-transformed
/// lines to the output.
io::Json runSolve(const io::Json& input, const Tolerance& tol = {});

io::Json runVerify(const io::Json& surface, const io::Json& table, const Tolerance& tol = {});

io::Json runClassify(const io::Json& surface, const Tolerance& tol = {});

io::Json runOracle(const io::Json& surface, int budget, std::uint64_t seed,
                   const Tolerance& tol = {});

io::Json runGenerate(std::uint64_t seed, double scale, bool realCoeffs);

io::Json runDemo(const Tolerance& tol = {});

io::Json runExportViz(const io::Json& surface, const io::Json* table, double box, int grid,
                      const Tolerance& tol = {});

}  // namespace cubiclines::api
