#include "cubiclines/viz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cubiclines::viz {

namespace {

struct Segment {
    bool ok = false;          // line visible in the chart and box
    bool offscreen = false;   // visible in the chart but outside the box
    std::array<double, 3> a{}, b{};
    int chart = 3;
};

/// Affine coordinates of a projective point in the chart x_c = 1 (the other
/// three coordinates, in index order).
std::array<double, 3> affine(const std::array<double, 4>& h, int chart) {
    std::array<double, 3> out{};
    int k = 0;
    for (int i = 0; i < 4; ++i) {
        if (i == chart) continue;
        out[k++] = h[i] / h[chart];
    }
    return out;
}

Segment clipRealLine(const Line& line, double box, const Tolerance& tol) {
    // real spanning points
    const auto pts = spanningPoints(line, tol);
    std::array<double, 4> p{}, q{};
    for (int i = 0; i < 4; ++i) {
        p[i] = pts[0].coords[i].real();
        q[i] = pts[1].coords[i].real();
    }

    Segment seg;
    for (int chart : {3, 2, 1, 0}) {
        // the point where the line meets the plane {x_chart = 0} gives the
        // affine direction; skip the chart if the whole line sits there
        const double pc = p[chart], qc = q[chart];
        if (std::abs(pc) < 1e-12 && std::abs(qc) < 1e-12) continue;
        std::array<double, 4> base{}, dir{};
        const bool usePivotP = std::abs(pc) >= std::abs(qc);
        const double cBase = usePivotP ? pc : qc;
        for (int i = 0; i < 4; ++i) {
            base[i] = usePivotP ? p[i] : q[i];
            dir[i] = qc * p[i] - pc * q[i];  // lies in {x_chart = 0}
        }
        const auto A = affine(base, chart);
        std::array<double, 3> D{};
        int k = 0;
        double dn = 0.0;
        for (int i = 0; i < 4; ++i) {
            if (i == chart) continue;
            D[k] = dir[i] / cBase;
            dn += D[k] * D[k];
            ++k;
        }
        dn = std::sqrt(dn);
        if (dn < 1e-12) continue;
        for (double& v : D) v /= dn;

        // slab clip of A + t D against [-box, box]^3
        double tmin = -1e300, tmax = 1e300;
        bool outside = false;
        for (int i = 0; i < 3; ++i) {
            if (std::abs(D[i]) < 1e-14) {
                if (A[i] < -box || A[i] > box) outside = true;
                continue;
            }
            double t0 = (-box - A[i]) / D[i];
            double t1 = (box - A[i]) / D[i];
            if (t0 > t1) std::swap(t0, t1);
            tmin = std::max(tmin, t0);
            tmax = std::min(tmax, t1);
        }
        seg.chart = chart;
        if (outside || tmax < tmin) {
            seg.offscreen = true;
            return seg;
        }
        seg.ok = true;
        for (int i = 0; i < 3; ++i) {
            seg.a[i] = A[i] + tmin * D[i];
            seg.b[i] = A[i] + tmax * D[i];
        }
        return seg;
    }
    seg.offscreen = true;
    return seg;
}

}  // namespace

io::Json exportViz(const CubicForm& f, const LineTable* table, double box, int gridSize,
                   const Tolerance& tol) {
    if (box <= 0.0) throw Error("InvalidInput", "box must be positive");
    io::Json lines = io::Json::array();
    if (table) {
        for (const LineLabel& lbl : LineLabel::all()) {
            const Line& line = table->at(lbl);
            if (!lineIsReal(line, tol)) {
                lines.push_back(io::Json{{"label", lbl.name()}, {"real", false}, {"omitted", true}});
                continue;
            }
            const Segment seg = clipRealLine(line, box, tol);
            io::Json entry{{"label", lbl.name()}, {"real", true}, {"chart", seg.chart}};
            if (seg.ok) {
                entry["offscreen"] = false;
                entry["endpoints"] = io::Json::array(
                    {io::Json::array({seg.a[0], seg.a[1], seg.a[2]}),
                     io::Json::array({seg.b[0], seg.b[1], seg.b[2]})});
            } else {
                entry["offscreen"] = true;
            }
            lines.push_back(entry);
        }
    }

    // surface samples: for grid rays along the last affine axis in the chart
    // x3 = 1, solve the cubic in the remaining coordinate
    io::Json points = io::Json::array();
    const Tolerance rootTol{};
    for (int ix = 0; ix < gridSize; ++ix) {
        for (int iy = 0; iy < gridSize; ++iy) {
            const double x = -box + 2.0 * box * (ix + 0.5) / gridSize;
            const double y = -box + 2.0 * box * (iy + 0.5) / gridSize;
            // f(x, y, z, 1) as a cubic in z
            std::array<Complex, 4> cz{};
            for (int m = 0; m < 20; ++m) {
                if (f.coeffs[m] == Complex{0.0, 0.0}) continue;
                const auto& e = kCubicMonomials[m];
                const double factor = std::pow(x, e[0]) * std::pow(y, e[1]);
                cz[e[2]] += f.coeffs[m] * factor;
            }
            // collect real roots of cz[3] z^3 + ... + cz[0]
            std::array<Complex, 3> roots;
            bool solved = true;
            try {
                if (std::abs(cz[3]) > 1e-12 * (std::abs(cz[0]) + std::abs(cz[1]) +
                                               std::abs(cz[2]) + std::abs(cz[3]) + 1e-300)) {
                    roots = solveCubic(cz[3], cz[2], cz[1], cz[0], rootTol);
                } else if (std::abs(cz[2]) > 1e-14) {
                    auto [r1, r2] = solveQuadraticProjective(cz[2], cz[1], cz[0], rootTol);
                    roots = {r1.isInfinite() ? Complex{1e12, 0} : r1.value(),
                             r2.isInfinite() ? Complex{1e12, 0} : r2.value(),
                             {1e12, 0.0}};
                } else {
                    solved = false;
                }
            } catch (const Error&) {
                solved = false;
            }
            if (!solved) continue;
            for (const Complex& r : roots) {
                if (std::abs(r.imag()) > 1e-7 * std::max(1.0, std::abs(r))) continue;
                const double z = r.real();
                if (z < -box || z > box) continue;
                points.push_back(io::Json::array({x, y, z}));
            }
        }
    }

    return io::Json{{"box", box},
                    {"chart", 3},
                    {"grid", gridSize},
                    {"lines", lines},
                    {"surface_points", points}};
}

std::string exportObj(const io::Json& vizData) {
    std::ostringstream out;
    out << "# cubic surface line export\n";
    int vcount = 0;
    for (const auto& entry : vizData.at("lines")) {
        if (!entry.value("real", false) || entry.value("offscreen", true)) continue;
        const auto& ep = entry.at("endpoints");
        out << "# " << entry.at("label").get<std::string>() << "\n";
        for (int i = 0; i < 2; ++i) {
            out << "v";
            for (int c = 0; c < 3; ++c) out << " " << ep[i][c].get<double>();
            out << "\n";
        }
        vcount += 2;
        out << "l " << (vcount - 1) << " " << vcount << "\n";
    }
    return out.str();
}

}  // namespace cubiclines::viz
