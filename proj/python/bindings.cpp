#include <pybind11/pybind11.h>

#include <string>

#include "cubiclines/api.hpp"
#include "cubiclines/samples.hpp"

namespace py = pybind11;

namespace {

using cubiclines::Error;
using cubiclines::Tolerance;
using cubiclines::io::Json;

Json parseArg(const std::string& text) { return cubiclines::io::parse(text); }

std::string guard(const std::function<Json()>& fn) {
    try {
        return fn().dump();
    } catch (const Error& e) {
        if (e.kind() == "InvalidInput") throw py::value_error(e.what());
        throw std::runtime_error(e.what());
    }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "All 27 lines on a smooth cubic surface from three skew lines "
              "(JSON-string interface; see the cubiclines package for dict wrappers)";

    m.def(
        "solve_json",
        [](const std::string& input) {
            return guard([&] { return cubiclines::api::runSolve(parseArg(input)); });
        },
        py::arg("input"),
        "Solve a canonical surface or a {surface, lines} skew-triple document.");

    m.def(
        "verify_json",
        [](const std::string& surface, const std::string& table) {
            return guard(
                [&] { return cubiclines::api::runVerify(parseArg(surface), parseArg(table)); });
        },
        py::arg("surface"), py::arg("table"));

    m.def(
        "classify_json",
        [](const std::string& surface) {
            return guard([&] { return cubiclines::api::runClassify(parseArg(surface)); });
        },
        py::arg("surface"));

    m.def(
        "oracle_json",
        [](const std::string& surface, int budget, std::uint64_t seed) {
            return guard(
                [&] { return cubiclines::api::runOracle(parseArg(surface), budget, seed); });
        },
        py::arg("surface"), py::arg("budget") = 2000, py::arg("seed") = 1);

    m.def(
        "generate_json",
        [](std::uint64_t seed, double scale, bool real) {
            return guard([&] { return cubiclines::api::runGenerate(seed, scale, real); });
        },
        py::arg("seed"), py::arg("scale") = 1.0, py::arg("real") = false);

    m.def(
        "sample_json",
        [](const std::string& name) {
            return guard([&] { return cubiclines::io::toJson(cubiclines::samples::byName(name)); });
        },
        py::arg("name"), "Built-in surfaces: real27, real15, real7, fermat.");

    m.def("demo_json", [] { return guard([] { return cubiclines::api::runDemo(); }); });

    m.def(
        "export_viz_json",
        [](const std::string& surface, const std::string& table, double box, int grid) {
            return guard([&] {
                if (table.empty())
                    return cubiclines::api::runExportViz(parseArg(surface), nullptr, box, grid);
                const Json t = parseArg(table);
                return cubiclines::api::runExportViz(parseArg(surface), &t, box, grid);
            });
        },
        py::arg("surface"), py::arg("table") = std::string(), py::arg("box") = 5.0,
        py::arg("grid") = 24);
}
