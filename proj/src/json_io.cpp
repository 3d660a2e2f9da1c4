#include "nubar/json_io.hpp"

namespace nubar {

Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::ParseError, "malformed JSON input");
    return j;
}

namespace {

Exponent exponent_from_json(const Json& j) {
    if (!j.is_array()) fail(ErrorCode::ParseError, "exponent must be an array");
    Exponent e;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            fail(ErrorCode::ParseError, "exponent entries must be integers");
        e.push_back(v.get<long long>());
    }
    return e;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    fail(ErrorCode::ParseError, "rationals must be integers or \"p/q\" strings");
}

} // namespace

NamedIdeal named_ideal_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("generators"))
        fail(ErrorCode::ParseError, "ideal needs {\"vars\", \"generators\"}");
    const Json& vars = j["vars"];
    std::vector<std::string> names;
    if (vars.is_number_integer()) {
        names = default_vars(vars.get<int>());
    } else if (vars.is_array()) {
        for (const auto& v : vars) {
            if (!v.is_string()) fail(ErrorCode::ParseError, "variable names must be strings");
            names.push_back(v.get<std::string>());
        }
    } else {
        fail(ErrorCode::ParseError, "vars must be a name array or a count");
    }
    if (!j["generators"].is_array())
        fail(ErrorCode::ParseError, "generators must be an array of exponents");
    std::vector<Exponent> gens;
    for (const auto& g : j["generators"]) gens.push_back(exponent_from_json(g));
    MonomialIdeal ideal = MonomialIdeal::normalize(static_cast<int>(names.size()), gens);
    bool changed = ideal.generators() != gens;
    return NamedIdeal{std::move(ideal), std::move(names), changed};
}

MonomialIdeal ideal_from_json(const Json& j) { return named_ideal_from_json(j).ideal; }

PolynomialQ polynomial_from_json(const Json& j, int expected_dim) {
    if (j.is_array()) { // shorthand: one monic monomial
        Exponent e = exponent_from_json(j);
        if (static_cast<int>(e.size()) != expected_dim)
            fail(ErrorCode::DimensionMismatch, "monomial dimension mismatch");
        PolynomialQ f(expected_dim);
        f.add_term(e, Rational(1));
        return f;
    }
    if (!j.is_object() || !j.contains("terms"))
        fail(ErrorCode::ParseError, "polynomial needs {\"terms\": [...]}");
    PolynomialQ f(expected_dim);
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exp"))
            fail(ErrorCode::ParseError, "term needs {\"coeff\", \"exp\"}");
        Exponent e = exponent_from_json(t["exp"]);
        if (static_cast<int>(e.size()) != expected_dim)
            fail(ErrorCode::DimensionMismatch, "term dimension mismatch");
        f.add_term(e, rational_from_json(t["coeff"]));
    }
    return f;
}

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Exponent& e) {
    Json a = Json::array();
    for (long long v : e) a.push_back(v);
    return a;
}

Json to_json(const PolynomialQ& f, const std::vector<std::string>& vars) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back(Json{{"coeff", to_json(c)}, {"exp", to_json(e)}});
    return Json{{"terms", terms}, {"text", f.str(vars)}};
}

Json to_json(const PolynomialQ& f) { return to_json(f, default_vars(f.dim())); }

Json to_json(const MonomialIdeal& ideal, const std::vector<std::string>& vars) {
    Json gens = Json::array();
    Json names = Json::array();
    for (const auto& v : vars) names.push_back(v);
    for (const auto& g : ideal.generators()) gens.push_back(to_json(g));
    return Json{{"vars", names}, {"generators", gens}};
}

Json to_json(const MonomialIdeal& ideal) {
    return to_json(ideal, default_vars(ideal.dim()));
}

Json to_json(const FacetValuation& f) {
    Json j{{"normal", to_json(f.normal)}, {"level", f.level}, {"compact", f.compact}};
    if (f.lattice_degree) j["lattice_degree"] = *f.lattice_degree;
    return j;
}

Json to_json(const NubarResult& r) {
    return Json{{"nubar", to_json(r.value)},
                {"lp_value", to_json(r.lp_value)},
                {"witness_term", to_json(r.witness_term)},
                {"certificate", to_json(r.certificate)}};
}

Json to_json(const DependenceCertificate& c) {
    return Json{{"p", c.p},
                {"q", c.q},
                {"m", c.m},
                {"exponent", to_json(c.exponent)},
                {"relation", c.relation}};
}

Json to_json(const VerifyReport& r) {
    Json facets = Json::array();
    for (const auto& [normal, ratio] : r.facet_ratios)
        facets.push_back(Json{{"normal", to_json(normal)}, {"ratio", to_json(ratio)}});
    return Json{{"target", to_json(r.target)},
                {"nubar", to_json(r.nubar_value)},
                {"membership", r.membership},
                {"order_bound", r.order_bound},
                {"facet_arcs", r.facet_arcs},
                {"certificate", r.certificate},
                {"numeric", r.numeric},
                {"consistent", r.consistent},
                {"monomial_route", r.monomial_route},
                {"certificate_m", r.certificate_m},
                {"facet_ratios", facets},
                {"fit_f", r.fit_f},
                {"fit_g", r.fit_g},
                {"exp_f", r.exp_f},
                {"exp_g", r.exp_g}};
}

Json to_json(const LojasiewiczReport& r) {
    Json coeffs = Json::array();
    for (const auto& c : r.arc_coeffs) coeffs.push_back(to_json(c));
    return Json{{"nubar", to_json(r.nubar_value)},
                {"theta", to_json(r.theta)},
                {"arc_weights", to_json(r.arc_weights)},
                {"arc_coeffs", coeffs},
                {"fit_f", r.fit_f},
                {"fit_g", r.fit_g},
                {"exp_f", r.exp_f},
                {"exp_g", r.exp_g},
                {"constant", r.constant},
                {"samples_checked", r.samples_checked},
                {"violations", r.violations},
                {"verdict", r.verdict}};
}

Json to_json(const GradientReport& r) {
    Json jac = Json::array(), scaled = Json::array(), exps = Json::array();
    for (const auto& g : r.jacobian_generators) jac.push_back(to_json(g));
    for (const auto& g : r.scaled_generators) scaled.push_back(to_json(g));
    for (long long a : r.exponents) exps.push_back(a);
    return Json{{"exponents", exps},
                {"jacobian_generators", jac},
                {"scaled_generators", scaled},
                {"nubar_jacobian", to_json(r.nubar_jacobian)},
                {"theta", to_json(r.theta)},
                {"nubar_scaled", to_json(r.nubar_scaled)}};
}

Json to_json(const TypeReport& r) {
    return Json{{"type", to_json(r.type_value)},
                {"nubar_radical", to_json(r.nubar_radical)},
                {"achieving_generator", to_json(r.achieving_generator)},
                {"checked_powers", r.checked_powers}};
}

Json to_json(const IzumiReport& r) {
    Json per = Json::array();
    for (const auto& v : r.per_degree_max) per.push_back(to_json(v));
    return Json{{"max_gap", to_json(r.max_gap)},
                {"argmax", to_json(r.argmax)},
                {"degree_bound", r.degree_bound},
                {"stabilized", r.stabilized},
                {"per_degree_max", per}};
}

Json to_json(const ConeDescription& c) {
    Json rows = Json::array();
    for (const auto& row : c.inequalities) {
        Json r = Json::array();
        for (long long v : row) r.push_back(v);
        rows.push_back(r);
    }
    return Json{{"inner_count", c.inner_count}, {"inequalities", rows}};
}

Json to_json(const ArcInfimumReport& r) {
    return Json{{"nubar", to_json(r.nubar_value)},
                {"min_ratio", to_json(r.min_ratio)},
                {"achieving_ratio", to_json(r.achieving_ratio)},
                {"determinate", r.determinate_count},
                {"indeterminate", r.indeterminate_count}};
}

Json to_json(const BranchInvariants& b) {
    auto arr = [](const std::vector<long long>& v) {
        Json a = Json::array();
        for (long long x : v) a.push_back(x);
        return a;
    };
    return Json{{"beta", arr(b.beta)},
                {"e", arr(b.e)},
                {"n", arr(b.n)},
                {"semigroup_generators", arr(b.semigroup_generators)},
                {"gaps", arr(b.gaps)},
                {"delta", b.delta},
                {"conductor", b.conductor},
                {"genus", b.genus}};
}

Json to_json(const NewtonPolygonSum& p) {
    auto ext = [](const ExtInt& v) -> Json {
        if (v.infinite) return "inf";
        return v.value;
    };
    Json parts = Json::array();
    for (const auto& part : p.parts())
        parts.push_back(Json{{"multiplicity", part.multiplicity},
                             {"height", ext(part.shape.height)},
                             {"width", ext(part.shape.width)}});
    Json j{{"parts", parts},
           {"width", to_json(p.width())},
           {"height", to_json(p.height())}};
    if (!p.width().is_infinite() && !p.height().is_infinite()) {
        Json verts = Json::array();
        for (const auto& v : p.vertices()) verts.push_back(Json::array({v[0], v[1]}));
        j["vertices"] = verts;
    }
    return j;
}

Json to_json(const MPowerClosure& c) {
    Json orders = Json::array();
    for (long long v : c.orders) orders.push_back(v);
    return Json{{"k", c.k},
                {"threshold", c.threshold},
                {"complete_from", c.complete_from},
                {"orders", orders}};
}

} // namespace nubar
