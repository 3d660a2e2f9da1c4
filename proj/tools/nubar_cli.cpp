// Command-line front end: parse ideals, polynomials and branch data from
// JSON (inline or by file path), run the requested operation, and emit a
// JSON report with certificates on standard output.
//
// Exit codes: 0 success, 1 mathematical falsification (a verify
// inconsistency or a violated internal cross-check — neither should ever
// occur), 2 input error. Reports are byte-identical across runs for a fixed
// command line (and NUBAR_SEED), apart from the timing_ms field.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nubar/json_io.hpp"
#include "nubar/kernels.hpp"

using namespace nubar;

namespace {

std::string load_text_arg(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
    std::ifstream in(arg);
    if (!in) fail(ErrorCode::ParseError, "cannot open input file: " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

NamedIdeal parse_ideal_arg(const std::string& arg) {
    return named_ideal_from_json(parse_json_text(load_text_arg(arg)));
}

PolynomialQ parse_poly_arg(const std::string& arg, int dim) {
    return polynomial_from_json(parse_json_text(load_text_arg(arg)), dim);
}

Exponent parse_exponent_arg(const std::string& arg) {
    Json j = parse_json_text(load_text_arg(arg));
    if (!j.is_array()) fail(ErrorCode::ParseError, "monomial must be an exponent array");
    Exponent e;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            fail(ErrorCode::ParseError, "exponent entries must be integers");
        e.push_back(v.get<long long>());
    }
    return e;
}

std::vector<long long> parse_int_list(const std::string& arg) {
    std::string text = arg;
    if (!text.empty() && text.front() == '[') {
        Json j = parse_json_text(text);
        std::vector<long long> out;
        for (const auto& v : j) out.push_back(v.get<long long>());
        return out;
    }
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "expected a comma-separated integer list");
        }
    }
    if (out.empty()) fail(ErrorCode::ParseError, "empty integer list");
    return out;
}

Json echo_ideal(const NamedIdeal& ni) {
    Json j = to_json(ni.ideal, ni.vars);
    if (ni.generators_normalized) j["note"] = "generators normalized";
    return j;
}

// u_k = nu(f^k)/k for k = 1..max_k, checked against the limit value:
// every u_k <= nubar and the powers-of-two subsequence is nondecreasing.
Json oracle_report(const PolynomialQ& f, const MonomialIdeal& ideal, int max_k,
                   const Rational& limit) {
    std::vector<Rational> u = oracle_sequence(f, ideal, max_k);
    Json uk = Json::array();
    Rational best(0);
    bool consistent = true;
    for (const auto& v : u) {
        uk.push_back(to_json(v));
        if (v > limit) consistent = false;
        if (v > best) best = v;
    }
    for (size_t j = 2; j <= u.size(); j *= 2)
        if (u[j - 1] < u[j / 2 - 1]) consistent = false;
    return Json{{"u_k", uk}, {"max", to_json(best)}, {"consistent", consistent}};
}

struct Job {
    std::function<Json()> run;
    int exit_code = 0; // runners may raise it to 1 on falsification
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact asymptotic order nubar, integral closures, Lojasiewicz "
                 "exponents, Newton polygons and plane-branch invariants for "
                 "monomial ideals, every answer carried by a certificate."};
    app.require_subcommand(1);

    std::string ideal_arg, poly_arg, monomial_arg, beta_arg;
    std::vector<std::string> inner_args;
    long long p = 1, q = 1, power = 1, colength_k = 1;
    int max_k = 24, m_max = 16, truncation = 64, samples = 100, degree_bound = 8,
        arc_count = 50;
    long long seed = 0;
    bool oracle = false, serial = false;

    Job job;

    auto add_ideal = [&](CLI::App* cmd) {
        cmd->add_option("-I,--ideal", ideal_arg, "ideal JSON (inline or file path)")
            ->required();
    };
    auto add_poly = [&](CLI::App* cmd) {
        cmd->add_option("-f,--poly", poly_arg, "polynomial JSON (inline or file path)")
            ->required();
    };
    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "random seed")->envname("NUBAR_SEED");
    };

    // nubar: asymptotic order of f along I, with certificate and optional
    // brute-force oracle (the oracle expands f^k, which is the one slow
    // path: cost grows like the number of monomials of f^max_k).
    auto* cmd_nubar = app.add_subcommand("nubar", "asymptotic order of f along I");
    add_ideal(cmd_nubar);
    add_poly(cmd_nubar);
    cmd_nubar->add_flag("--oracle", oracle, "cross-check against nu(f^k)/k");
    cmd_nubar->add_option("--max-k", max_k, "oracle depth (default 24)");
    cmd_nubar->callback([&] {
        job.run = [&]() -> Json {
            NamedIdeal ni = parse_ideal_arg(ideal_arg);
            PolynomialQ f = parse_poly_arg(poly_arg, ni.ideal.dim());
            NubarResult r = nubar::nubar(f, ni.ideal);
            Json rep{{"command", "nubar"},
                     {"inputs_echo",
                      Json{{"ideal", echo_ideal(ni)}, {"poly", to_json(f, ni.vars)}}},
                     {"result", to_json(r.value)},
                     {"certificate", to_json(r.certificate)},
                     {"lp_value", to_json(r.lp_value)},
                     {"witness_term", to_json(r.witness_term)}};
            if (oracle) rep["oracle"] = oracle_report(f, ni.ideal, max_k, r.value);
            return rep;
        };
    });

    // closure: integral closure of I^power.
    auto* cmd_closure = app.add_subcommand("closure", "integral closure of I^k");
    add_ideal(cmd_closure);
    cmd_closure->add_option("-k,--power", power, "power of the ideal (default 1)");
    cmd_closure->callback([&] {
        job.run = [&]() -> Json {
            NamedIdeal ni = parse_ideal_arg(ideal_arg);
            MonomialIdeal powered = ideal_power(ni.ideal, power);
            MonomialIdeal cl = integral_closure(powered);
            check(cl.contains(powered), "closure contains the ideal");
            return Json{{"command", "closure"},
                        {"inputs_echo", Json{{"ideal", echo_ideal(ni)}, {"power", power}}},
                        {"result", to_json(cl, ni.vars)}};
        };
    });

    // frac-closure: integral closure of I^{p/q}.
    auto* cmd_frac = app.add_subcommand("frac-closure", "integral closure of I^(p/q)");
    add_ideal(cmd_frac);
    cmd_frac->add_option("-p", p, "numerator (>= 1)")->required();
    cmd_frac->add_option("-q", q, "denominator (>= 1)")->required();
    cmd_frac->callback([&] {
        job.run = [&]() -> Json {
            NamedIdeal ni = parse_ideal_arg(ideal_arg);
            MonomialIdeal cl = fractional_closure(ni.ideal, p, q);
            return Json{{"command", "frac-closure"},
                        {"inputs_echo",
                         Json{{"ideal", echo_ideal(ni)}, {"p", p}, {"q", q}}},
                        {"result", to_json(cl, ni.vars)}};
        };
    });

    // membership: x^a in I^k, decided twice (memoized search + plain
    // recursion) and checked against nu(x^a).
    auto* cmd_member = app.add_subcommand("membership", "monomial membership in I^k");
    add_ideal(cmd_member);
    cmd_member->add_option("-m,--monomial", monomial_arg, "exponent array")->required();
    cmd_member->add_option("-k,--power", power, "power of the ideal (default 1)");
    cmd_member->callback([&] {
        job.run = [&]() -> Json {
            NamedIdeal ni = parse_ideal_arg(ideal_arg);
            Exponent a = parse_exponent_arg(monomial_arg);
            bool fast = monomial_in_power(a, ni.ideal, power);
            bool slow = monomial_in_power_oracle(a, ni.ideal, power);
            check(fast == slow, "memoized and plain membership agree");
            long long nu = nu_order_monomial(a, ni.ideal);
            check(fast == (nu >= power), "membership matches the order function");
            return Json{{"command", "membership"},
                        {"inputs_echo",
                         Json{{"ideal", echo_ideal(ni)},
                              {"monomial", to_json(a)},
                              {"power", power}}},
                        {"result", fast},
                        {"nu_order", nu}};
        };
    });

    // certificate: explicit integral-dependence witness for x^a over I^{p/q}.
    auto* cmd_cert = app.add_subcommand("certificate", "integral-dependence witness");
    add_ideal(cmd_cert);
    cmd_cert->add_option("-m,--monomial", monomial_arg, "exponent array")->required();
    cmd_cert->add_option("-p", p, "numerator (>= 1)");
    cmd_cert->add_option("-q", q, "denominator (>= 1)");
    cmd_cert->add_option("--m-max", m_max, "largest witness power tried (default 16)");
    cmd_cert->callback([&] {
        job.run = [&]() -> Json {
            NamedIdeal ni = parse_ideal_arg(ideal_arg);
            Exponent a = parse_exponent_arg(monomial_arg);
            DependenceCertificate c = dependence_certificate(a, ni.ideal, p, q, m_max);
            return Json{{"command", "certificate"},
                        {"inputs_echo",
                         Json{{"ideal", echo_ideal(ni)},
                              {"monomial", to_json(a)},
                              {"p", p},
                              {"q", q},
                              {"m_max", m_max}}},
                        {"result", to_json(c)}};
        };
    });

    // multiplicity: normalized volume under the compact facets.
    auto* cmd_mult = app.add_subcommand("multiplicity", "multiplicity of a primary ideal");
    add_ideal(cmd_mult);
    cmd_mult->callback([&] {
        job.run = [&]() -> Json {
            NamedIdeal ni = parse_ideal_arg(ideal_arg);
            return Json{{"command", "multiplicity"},
                        {"inputs_echo", Json{{"ideal", echo_ideal(ni)}}},
                        {"result", multiplicity(ni.ideal)},
                        {"universal_denominator", universal_denominator(ni.ideal)}};
        };
    });

    // colength: lattice points outside the closure of I^k.
    auto* cmd_colen = app.add_subcommand("colength", "colength of the closure of I^k");
    add_ideal(cmd_colen);
    cmd_colen->add_option("-k,--power", colength_k, "power of the ideal (default 1)");
    cmd_colen->add_flag("--serial", serial, "force the serial kernel");
    cmd_colen->callback([&] {
        job.run = [&]() -> Json {
            NamedIdeal ni = parse_ideal_arg(ideal_arg);
            long long c = kernels::colength_closure(ni.ideal, colength_k, !serial);
            return Json{{"command", "colength"},
                        {"inputs_echo",
                         Json{{"ideal", echo_ideal(ni)}, {"power", colength_k}}},
                        {"result", c},
                        {"kernel", serial || !kernels::openmp_enabled() ? "serial"
                                                                        : "parallel"}};
        };
    });

    // cone: inequality description of {(m..,n): prod closure(J_i^{m_i})
    // subset closure(I^n)} from facet data, with redundant rows pruned.
    auto* cmd_cone = app.add_subcommand("cone", "asymptotic containment cone");
    cmd_cone->add_option("-J,--inner", inner_args, "inner ideal JSON (repeatable)")
        ->required();
    add_ideal(cmd_cone);
    cmd_cone->callback([&] {
        job.run = [&]() -> Json {
            NamedIdeal ni = parse_ideal_arg(ideal_arg);
            std::vector<MonomialIdeal> inner;
            Json inner_echo = Json::array();
            for (const auto& arg : inner_args) {
                NamedIdeal nj = parse_ideal_arg(arg);
                inner_echo.push_back(echo_ideal(nj));
                inner.push_back(nj.ideal);
            }
            ConeDescription cone = asymptotic_cone(inner, ni.ideal);
            return Json{{"command", "cone"},
                        {"inputs_echo",
                         Json{{"inner", inner_echo}, {"ideal", echo_ideal(ni)}}},
                        {"result", to_json(cone)}};
        };
    });

    // type: reciprocal of the asymptotic order of the radical.
    auto* cmd_type = app.add_subcommand("type", "type of a primary ideal");
    add_ideal(cmd_type);
    cmd_type->callback([&] {
        job.run = [&]() -> Json {
            NamedIdeal ni = parse_ideal_arg(ideal_arg);
            TypeReport r = type_of_ideal(ni.ideal);
            return Json{{"command", "type"},
                        {"inputs_echo", Json{{"ideal", echo_ideal(ni)}}},
                        {"result", to_json(r)}};
        };
    });

    // gap: max of nubar - nu over monomials up to a degree bound.
    auto* cmd_gap = app.add_subcommand("gap", "largest nubar - nu gap up to a degree");
    add_ideal(cmd_gap);
    cmd_gap->add_option("-d,--degree-bound", degree_bound, "degree bound (default 8)");
    cmd_gap->add_flag("--serial", serial, "force the serial kernel");
    cmd_gap->callback([&] {
        job.run = [&]() -> Json {
            NamedIdeal ni = parse_ideal_arg(ideal_arg);
            IzumiReport r = izumi_gap_scan(ni.ideal, degree_bound, !serial);
            return Json{{"command", "gap"},
                        {"inputs_echo",
                         Json{{"ideal", echo_ideal(ni)}, {"degree_bound", degree_bound}}},
                        {"result", to_json(r)}};
        };
    });

    // polygon: Newton polygon of the image of g in the toric surface
    // attached to a two-variable primary ideal, as a sum of elementary
    // polygons with the slope of its last finite side.
    auto* cmd_poly = app.add_subcommand("polygon", "toric Newton polygon of g along I");
    add_ideal(cmd_poly);
    add_poly(cmd_poly);
    cmd_poly->callback([&] {
        job.run = [&]() -> Json {
            NamedIdeal ni = parse_ideal_arg(ideal_arg);
            PolynomialQ g = parse_poly_arg(poly_arg, ni.ideal.dim());
            NewtonPolygonSum poly = toric_polygon(ni.ideal, g);
            Json rep{{"command", "polygon"},
                     {"inputs_echo",
                      Json{{"ideal", echo_ideal(ni)}, {"poly", to_json(g, ni.vars)}}},
                     {"result", to_json(poly)}};
            rep["last_side_slope"] = to_json(last_side_slope(poly));
            return rep;
        };
    });

    // branch: full invariant set of a plane branch from its characteristic
    // sequence, plus its double-point polygon and the closure window of m^k.
    auto* cmd_branch = app.add_subcommand("branch", "plane-branch invariants");
    cmd_branch->add_option("-b,--beta", beta_arg, "characteristic exponents, e.g. 4,6,7")
        ->required();
    cmd_branch->add_option("-k,--power", power, "closure window power (default 1)");
    cmd_branch->callback([&] {
        job.run = [&]() -> Json {
            std::vector<long long> beta = parse_int_list(beta_arg);
            BranchInvariants inv = branch_invariants(beta);
            Json rep{{"command", "branch"},
                     {"inputs_echo", Json{{"beta", Json(beta)}, {"power", power}}},
                     {"result", to_json(inv)}};
            if (inv.genus > 0) {
                rep["double_point_polygon"] = to_json(double_point_polygon(beta));
                rep["nubar_m"] = to_json(branch_nubar_m(beta));
                Json gd = Json::array();
                for (const auto& d : generator_degrees(beta)) gd.push_back(to_json(d));
                rep["generator_degrees"] = gd;
            }
            rep["closure_window"] = to_json(closure_power_of_m(beta, power));
            return rep;
        };
    });

    // arcs: sampled arc ratios against nubar; the attained minimum must be
    // nubar itself (via the certificate arc).
    auto* cmd_arcs = app.add_subcommand("arcs", "arc ratios against the asymptotic order");
    add_ideal(cmd_arcs);
    add_poly(cmd_arcs);
    cmd_arcs->add_option("-c,--count", arc_count, "number of sampled arcs (default 50)");
    cmd_arcs->add_option("--truncation", truncation, "series truncation (default 64)");
    add_seed(cmd_arcs);
    cmd_arcs->callback([&] {
        job.run = [&]() -> Json {
            NamedIdeal ni = parse_ideal_arg(ideal_arg);
            PolynomialQ f = parse_poly_arg(poly_arg, ni.ideal.dim());
            auto arcs = sample_arcs(ni.ideal.dim(), arc_count,
                                    static_cast<std::uint64_t>(seed), truncation);
            ArcInfimumReport r = arc_infimum_check(f, ni.ideal, arcs);
            return Json{{"command", "arcs"},
                        {"inputs_echo",
                         Json{{"ideal", echo_ideal(ni)},
                              {"poly", to_json(f, ni.vars)},
                              {"count", arc_count},
                              {"truncation", truncation},
                              {"seed", seed}}},
                        {"result", to_json(r)}};
        };
    });

    // loja: Lojasiewicz exponent with its achieving arc and a random-sample
    // corroboration of the inequality (numerics never decide exact claims).
    auto* cmd_loja = app.add_subcommand("loja", "Lojasiewicz exponent of f along I");
    add_ideal(cmd_loja);
    add_poly(cmd_loja);
    cmd_loja->add_option("--samples", samples, "random sample count (default 100)");
    add_seed(cmd_loja);
    cmd_loja->callback([&] {
        job.run = [&]() -> Json {
            NamedIdeal ni = parse_ideal_arg(ideal_arg);
            PolynomialQ f = parse_poly_arg(poly_arg, ni.ideal.dim());
            LojasiewiczReport r =
                lojasiewicz(f, ni.ideal, samples, static_cast<std::uint64_t>(seed));
            return Json{{"command", "loja"},
                        {"inputs_echo",
                         Json{{"ideal", echo_ideal(ni)},
                              {"poly", to_json(f, ni.vars)},
                              {"samples", samples},
                              {"seed", seed}}},
                        {"result", to_json(r)}};
        };
    });

    // verify: the five-way equivalence check; any inconsistency is a
    // mathematical falsification and exits 1.
    auto* cmd_verify = app.add_subcommand("verify", "five-way integrality check");
    add_ideal(cmd_verify);
    add_poly(cmd_verify);
    cmd_verify->add_option("-p", p, "numerator (>= 1)")->required();
    cmd_verify->add_option("-q", q, "denominator (>= 1)")->required();
    cmd_verify->callback([&] {
        job.run = [&]() -> Json {
            NamedIdeal ni = parse_ideal_arg(ideal_arg);
            PolynomialQ f = parse_poly_arg(poly_arg, ni.ideal.dim());
            VerifyReport r = verify_equivalences(f, ni.ideal, p, q);
            if (!r.consistent) job.exit_code = 1;
            return Json{{"command", "verify"},
                        {"inputs_echo",
                         Json{{"ideal", echo_ideal(ni)},
                              {"poly", to_json(f, ni.vars)},
                              {"p", p},
                              {"q", q}}},
                        {"result", to_json(r)}};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        Json err{{"error", "ParseError"}, {"message", e.what()}};
        std::cout << err.dump(2) << std::endl;
        return 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    try {
        Json report = job.run();
        auto t1 = std::chrono::steady_clock::now();
        report["timing_ms"] =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
        std::cout << report.dump(2) << std::endl;
        return job.exit_code;
    } catch (const Error& e) {
        Json err{{"error", error_code_name(e.code())}, {"message", e.message()}};
        std::cout << err.dump(2) << std::endl;
        return e.code() == ErrorCode::InternalCheckFailed ? 1 : 2;
    } catch (const std::exception& e) {
        Json err{{"error", "InternalCheckFailed"}, {"message", e.what()}};
        std::cout << err.dump(2) << std::endl;
        return 1;
    }
}
