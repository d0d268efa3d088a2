#include "cubiclines/io.hpp"

#include <set>

namespace cubiclines::io {

Json toJson(Complex v) { return Json::array({v.real(), v.imag()}); }

Complex complexFromJson(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw Error("InvalidInput", "complex number must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json toJson(const ProjectiveScalar& s) {
    return Json{{"num", toJson(s.num)}, {"den", toJson(s.den)}};
}

ProjectiveScalar projectiveFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw Error("InvalidInput", "projective scalar must be {num, den}");
    return {complexFromJson(j.at("num")), complexFromJson(j.at("den"))};
}

Json toJson(const CubicForm& f) {
    Json coeffs = Json::array();
    for (int m = 0; m < 20; ++m) {
        if (f.coeffs[m] == Complex{0.0, 0.0}) continue;
        const auto& e = kCubicMonomials[m];
        coeffs.push_back(Json{{"exps", Json::array({e[0], e[1], e[2], e[3]})},
                              {"re", f.coeffs[m].real()},
                              {"im", f.coeffs[m].imag()}});
    }
    return Json{{"coefficients", coeffs}};
}

CubicForm surfaceFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("coefficients") || !j.at("coefficients").is_array())
        throw Error("InvalidInput", "surface must be {\"coefficients\": [...]}");
    CubicForm f;
    std::set<int> seen;
    for (const Json& entry : j.at("coefficients")) {
        if (!entry.is_object() || !entry.contains("exps") || !entry.contains("re"))
            throw Error("InvalidInput", "coefficient entries need \"exps\" and \"re\"");
        const Json& ex = entry.at("exps");
        if (!ex.is_array() || ex.size() != 4)
            throw Error("InvalidInput", "\"exps\" must be four integers");
        const int i = ex[0].get<int>(), jj = ex[1].get<int>(), k = ex[2].get<int>(),
                  l = ex[3].get<int>();
        if (i < 0 || jj < 0 || k < 0 || l < 0 || i + jj + k + l != 3)
            throw Error("InvalidInput", "exponents must be nonnegative and sum to 3");
        const int idx = CubicForm::indexOf(i, jj, k, l);
        if (!seen.insert(idx).second)
            throw Error("InvalidInput", "duplicate exponent quadruple in surface");
        const double re = entry.at("re").get<double>();
        const double im = entry.contains("im") ? entry.at("im").get<double>() : 0.0;
        f.coeffs[idx] = {re, im};
    }
    if (f.norm() == 0.0) throw Error("InvalidInput", "surface has no nonzero coefficients");
    return f;
}

Json toJson(const Line& l) {
    Json f1 = Json::array(), f2 = Json::array();
    for (int i = 0; i < 4; ++i) {
        f1.push_back(toJson(l.form1.coeffs[i]));
        f2.push_back(toJson(l.form2.coeffs[i]));
    }
    return Json{{"form1", f1}, {"form2", f2}};
}

Line lineFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("form1") || !j.contains("form2"))
        throw Error("InvalidInput", "line must be {form1, form2}");
    auto formOf = [](const Json& a) {
        if (!a.is_array() || a.size() != 4)
            throw Error("InvalidInput", "line form must have 4 coefficients");
        LinearForm f;
        for (int i = 0; i < 4; ++i) f.coeffs[i] = complexFromJson(a[i]);
        return f;
    };
    return {formOf(j.at("form1")), formOf(j.at("form2"))};
}

Json toJson(const Transform& t) {
    Json rows = Json::array();
    for (int r = 0; r < 4; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 4; ++c) row.push_back(toJson(t.m[r][c]));
        rows.push_back(row);
    }
    return rows;
}

Transform transformFromJson(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw Error("InvalidInput", "transform must be 4x4");
    Transform t;
    for (int r = 0; r < 4; ++r) {
        if (!j[r].is_array() || j[r].size() != 4)
            throw Error("InvalidInput", "transform must be 4x4");
        for (int c = 0; c < 4; ++c) t.m[r][c] = complexFromJson(j[r][c]);
    }
    return t;
}

Json tableToJson(const LineTable& table) {
    Json lines = Json::object();
    for (const LineLabel& lbl : LineLabel::all()) lines[lbl.name()] = toJson(table.at(lbl));
    return Json{{"lines", lines}};
}

LineTable tableFromJson(const Json& j) {
    const Json& lines = j.is_object() && j.contains("lines") ? j.at("lines") : j;
    if (!lines.is_object()) throw Error("InvalidInput", "table must carry a \"lines\" object");
    LineTable table;
    for (const LineLabel& lbl : LineLabel::all()) {
        if (!lines.contains(lbl.name()))
            throw Error("InvalidInput", "table is missing line " + lbl.name());
        table.at(lbl) = lineFromJson(lines.at(lbl.name()));
    }
    return table;
}

Json traceToJson(const PipelineTrace& trace) {
    Json t = Json::array(), c = Json::array(), d = Json::array(), u = Json::array();
    for (int i = 0; i < 3; ++i) {
        t.push_back(toJson(trace.t[i]));
        c.push_back(toJson(trace.c[i]));
        d.push_back(toJson(trace.d[i]));
        u.push_back(toJson(trace.u[i]));
    }
    Json mnp = Json::object(), hjk = Json::object();
    auto triple = [](const std::array<Complex, 3>& a) {
        return Json::array({toJson(a[0]), toJson(a[1]), toJson(a[2])});
    };
    mnp["s1"] = triple(trace.mnp1);
    mnp["s2"] = triple(trace.mnp2);
    hjk["s1"] = triple(trace.hjk1);
    hjk["s2"] = triple(trace.hjk2);
    Json branches = Json::array();
    for (const FinalSixBranch& b : trace.finalSix) {
        branches.push_back(Json{{"ijk", Json::array({b.i, b.j, b.k})},
                                {"gamma", toJson(b.gamma)},
                                {"delta", toJson(b.delta)},
                                {"epsilon", toJson(b.epsilon)},
                                {"pi", toJson(b.piVal)},
                                {"rho", toJson(b.rho)},
                                {"sigma", toJson(b.sigma)},
                                {"q_plus", toJson(b.qPlus)},
                                {"q_minus", toJson(b.qMinus)},
                                {"branches_swapped", b.branchesSwapped}});
    }
    return Json{{"t", t},
                {"c", c},
                {"d", d},
                {"u", u},
                {"v", Json::array({toJson(trace.v[0]), toJson(trace.v[1])})},
                {"s1", toJson(trace.s1)},
                {"s2", toJson(trace.s2)},
                {"mnp", mnp},
                {"hjk", hjk},
                {"final_six", branches},
                {"root_order", Json::array({trace.rootOrder[0], trace.rootOrder[1], trace.rootOrder[2]})},
                {"s_branch_swapped", trace.sBranchSwapped}};
}

Json toJson(const VerificationReport& rep) {
    Json mism = Json::array();
    for (const auto& [a, b] : rep.incidenceMismatches)
        mism.push_back(Json::array({a.name(), b.name()}));
    Json hist = Json::object();
    for (const auto& [deg, count] : rep.degreeHistogram) hist[std::to_string(deg)] = count;
    return Json{{"pass", rep.pass},
                {"max_on_surface_residual", rep.maxOnSurfaceResidual},
                {"distinct", rep.distinct},
                {"incidence_mismatches", mism},
                {"degree_histogram", hist}};
}

Json toJson(const RealClassification& cls) {
    auto sOrInfinity = [](const ProjectiveScalar& s) -> Json {
        if (s.isInfinite()) return "infinity";
        return toJson(s.value());
    };
    return Json{{"count", cls.count},
                {"g_real_roots", cls.gRealRoots},
                {"s_real", cls.sReal},
                {"s", Json::array({sOrInfinity(cls.evidence.s1), sOrInfinity(cls.evidence.s2)})},
                {"t", Json::array({toJson(cls.evidence.t[0]), toJson(cls.evidence.t[1]),
                                   toJson(cls.evidence.t[2])})}};
}

Json toJson(const OracleResult& res) {
    Json lines = Json::array();
    for (const Line& l : res.lines) lines.push_back(toJson(l));
    return Json{{"lines", lines},
                {"found", static_cast<int>(res.lines.size())},
                {"budget", res.budget},
                {"seed", res.seed},
                {"complete", res.complete}};
}

SkewTriple tripleFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("surface") || !j.contains("lines"))
        throw Error("InvalidInput", "triple input must be {surface, lines}");
    const Json& lines = j.at("lines");
    if (!lines.is_array() || lines.size() != 3)
        throw Error("InvalidInput", "triple input needs exactly 3 lines");
    SkewTriple triple;
    triple.surface = surfaceFromJson(j.at("surface"));
    for (int i = 0; i < 3; ++i) triple.lines[i] = lineFromJson(lines[i]);
    return triple;
}

Json parse(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error("InvalidInput", "malformed JSON");
    return j;
}

}  // namespace cubiclines::io
