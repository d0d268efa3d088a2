#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cubiclines/api.hpp"
#include "cubiclines/samples.hpp"
#include "cubiclines/viz.hpp"

namespace {

using cubiclines::Error;
using cubiclines::Tolerance;
using cubiclines::io::Json;

constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitDegenerate = 3;

std::string readFile(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("InvalidInput", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void writeOutput(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("InvalidInput", "cannot open " + path + " for writing");
    out << text << "\n";
}

int exitCodeFor(const Error& e) {
    return e.kind() == "InvalidInput" ? kExitInputError : kExitDegenerate;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"27 lines on a smooth cubic surface from three skew lines"};
    app.require_subcommand(1);

    Tolerance tol;
    std::string input, output, surfacePath, tablePath;
    std::uint64_t seed = 1;
    int budget = 2000;
    double scale = 1.0;
    double box = 5.0;
    int grid = 24;
    bool realCoeffs = false;
    std::string format = "json";
    std::string sampleName;

    app.add_option("--tolerance", tol.rel_zero, "relative zero tolerance");
    app.add_option("--match-dist", tol.match_dist, "line equality distance");

    auto* solve = app.add_subcommand("solve", "compute all 27 lines (surface or skew-triple input)");
    solve->add_option("--input", input, "surface or triple JSON file (- for stdin)")->required();
    solve->add_option("--output", output, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "certify a line table against a surface");
    verify->add_option("--surface", surfacePath, "surface JSON file")->required();
    verify->add_option("--table", tablePath, "table JSON file")->required();
    verify->add_option("--output", output, "output path (default stdout)");

    auto* classify = app.add_subcommand("classify", "real line count by the root/branch criterion");
    classify->add_option("--input", input, "surface JSON file")->required();
    classify->add_option("--output", output, "output path (default stdout)");

    auto* generate = app.add_subcommand("generate", "sample a random canonical surface");
    generate->add_option("--seed", seed, "sampler seed");
    generate->add_option("--scale", scale, "coefficient scale");
    generate->add_flag("--real", realCoeffs, "draw real coefficients");
    generate->add_option("--output", output, "output path (default stdout)");

    auto* oracle = app.add_subcommand("oracle", "brute-force line search (independent of the solver)");
    oracle->add_option("--input", input, "surface JSON file")->required();
    oracle->add_option("--budget", budget, "Newton starts per chart");
    oracle->add_option("--seed", seed, "start sampler seed");
    oracle->add_option("--output", output, "output path (default stdout)");

    auto* demo = app.add_subcommand("demo", "solve, verify and classify the three built-in surfaces");
    demo->add_option("--output", output, "output path (default stdout)");

    auto* sample = app.add_subcommand("sample", "emit a built-in surface (real27, real15, real7, fermat)");
    sample->add_option("name", sampleName, "surface name")->required();
    sample->add_option("--output", output, "output path (default stdout)");

    auto* viz = app.add_subcommand("export-viz", "clip real lines and surface samples to a box");
    viz->add_option("--surface", surfacePath, "surface JSON file")->required();
    viz->add_option("--table", tablePath, "table JSON file (optional)");
    viz->add_option("--box", box, "half-width of the affine clip box");
    viz->add_option("--grid", grid, "surface sample grid resolution");
    viz->add_option("--format", format, "json or obj")->check(CLI::IsMember({"json", "obj"}));
    viz->add_option("--output", output, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (!tol.valid()) {
        std::cerr << "InvalidInput: tolerances must satisfy 0 < tolerance < match-dist < 1\n";
        return kExitInputError;
    }

    try {
        if (solve->parsed()) {
            const Json result = cubiclines::api::runSolve(cubiclines::io::parse(readFile(input)), tol);
            writeOutput(output, result.dump(2));
            return 0;
        }
        if (verify->parsed()) {
            const Json rep = cubiclines::api::runVerify(cubiclines::io::parse(readFile(surfacePath)),
                                                        cubiclines::io::parse(readFile(tablePath)), tol);
            writeOutput(output, rep.dump(2));
            return rep.at("pass").get<bool>() ? 0 : kExitVerifyFail;
        }
        if (classify->parsed()) {
            const Json cls = cubiclines::api::runClassify(cubiclines::io::parse(readFile(input)), tol);
            writeOutput(output, cls.dump(2));
            return 0;
        }
        if (generate->parsed()) {
            writeOutput(output, cubiclines::api::runGenerate(seed, scale, realCoeffs).dump(2));
            return 0;
        }
        if (oracle->parsed()) {
            const Json res =
                cubiclines::api::runOracle(cubiclines::io::parse(readFile(input)), budget, seed, tol);
            if (!res.at("complete").get<bool>())
                std::cerr << "IncompleteSearch: found " << res.at("found")
                          << " lines; raise --budget or check the surface for singularities\n";
            writeOutput(output, res.dump(2));
            return 0;
        }
        if (demo->parsed()) {
            const Json rep = cubiclines::api::runDemo(tol);
            for (const auto& s : rep.at("surfaces"))
                std::cout << s.at("name").get<std::string>() << ": "
                          << s.at("real_line_count").get<int>() << " real lines, verified="
                          << (s.at("verified").get<bool>() ? "yes" : "no") << "\n";
            writeOutput(output.empty() ? "-" : output, rep.dump(2));
            return rep.at("pass").get<bool>() ? 0 : kExitVerifyFail;
        }
        if (sample->parsed()) {
            writeOutput(output, cubiclines::io::toJson(cubiclines::samples::byName(sampleName)).dump(2));
            return 0;
        }
        if (viz->parsed()) {
            const Json surfaceJson = cubiclines::io::parse(readFile(surfacePath));
            std::optional<Json> tableJson;
            if (!tablePath.empty()) tableJson = cubiclines::io::parse(readFile(tablePath));
            const Json data = cubiclines::api::runExportViz(
                surfaceJson, tableJson ? &*tableJson : nullptr, box, grid, tol);
            if (format == "obj")
                writeOutput(output, cubiclines::viz::exportObj(data));
            else
                writeOutput(output, data.dump(2));
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exitCodeFor(e);
    } catch (const std::exception& e) {
        std::cerr << "InternalError: " << e.what() << "\n";
        return kExitDegenerate;
    }
    return kExitInputError;
}
