#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nubar/arcs.hpp"
#include "nubar/ideal.hpp"
#include "nubar/kernels.hpp"
#include "nubar/polyhedron.hpp"

namespace nubar {

// f^q integral over I^p, decided through the asymptotic order.
bool is_integral(const PolynomialQ& f, const MonomialIdeal& ideal, long long p,
                 long long q);

// Explicit integral-dependence witness for a monomial x^a over I^{p/q}: the
// least m <= m_max with x^{q m a} in I^{p m} as an actual ideal power, which
// yields the relation T^m - x^{q m a} with x^{q m a} in (I^p)^m. Errors
// NotIntegral when nubar(x^a, I) < p/q and NotFound when no m <= m_max works.
struct DependenceCertificate {
    long long p = 0, q = 0, m = 0;
    Exponent exponent;
    std::string relation;
};
DependenceCertificate dependence_certificate(const Exponent& a, const MonomialIdeal& ideal,
                                             long long p, long long q, long long m_max);

// Five independently computed verdicts for "f^q is integral over I^p", all
// required to agree:
//   membership   exact expansion of f^q against the closure of I^p
//   order_bound  packing LP per term of f, no facet data
//   facet_arcs   exact series ratios along one transverse arc per facet
//   certificate  dependence witness (monomial f) or facet recheck (else)
//   numeric      slopes recovered from floating-point samples on the
//                achieving arc, rounded to the underlying integers
struct VerifyReport {
    Rational target;      // p/q
    Rational nubar_value;
    bool membership = false;
    bool order_bound = false;
    bool facet_arcs = false;
    bool certificate = false;
    bool numeric = false;
    bool consistent = false;
    bool monomial_route = false; // certificate verdict via dependence witness
    long long certificate_m = 0; // valid when monomial_route and certificate
    std::vector<std::pair<Exponent, Rational>> facet_ratios;
    double fit_f = 0.0, fit_g = 0.0;  // raw regression exponents on the arc
    long long exp_f = 0, exp_g = 0;   // rounded; exp_f/exp_g reproduces nubar
};
VerifyReport verify_equivalences(const PolynomialQ& f, const MonomialIdeal& ideal,
                                 long long p, long long q);

// Lojasiewicz data: theta = 1 / nubar(f, I) (infinite when nubar = 0), the
// achieving arc, the constant fitted on it, and a random-sample check of
// |f(x)|^theta <= 10 * C * max_i |g_i(x)| on the unit box.
struct LojasiewiczReport {
    Rational nubar_value;
    Rational theta;            // infinite iff nubar_value == 0
    Exponent arc_weights;
    std::vector<Rational> arc_coeffs;
    double fit_f = 0.0, fit_g = 0.0;
    long long exp_f = 0, exp_g = 0;
    double constant = 0.0;     // fitted C on the arc
    int samples_checked = 0;
    int violations = 0;
    bool verdict = false;
};
LojasiewiczReport lojasiewicz(const PolynomialQ& f, const MonomialIdeal& ideal,
                              int samples, std::uint64_t seed);

// Brieskorn data f = sum x_i^{a_i}, a_i >= 2: the (monomial) Jacobian ideal
// j = (x_i^{a_i - 1}) gives nubar_j(f) = min a_i/(a_i - 1) > 1, while scaling
// by the maximal ideal lands exactly on 1 (the asymptotic Euler relation).
struct GradientReport {
    std::vector<long long> exponents;
    std::vector<Exponent> jacobian_generators;
    std::vector<Exponent> scaled_generators;
    Rational nubar_jacobian;
    Rational theta; // 1 / nubar_jacobian
    Rational nubar_scaled;
};
GradientReport gradient_suite(const std::vector<long long>& exponents);

// Type of a primary ideal: reciprocal of nubar_I(sqrt(I)); the containment
// sqrt(I)^ceil(m*t) inside closure(I^m) is verified for m = 1..4.
struct TypeReport {
    Rational type_value;
    Rational nubar_radical;
    Exponent achieving_generator;
    int checked_powers = 0;
};
TypeReport type_of_ideal(const MonomialIdeal& ideal);

// Max of nubar - nu over monomials of degree <= degree_bound, with a
// stabilization statement: the last two degree slices contribute no larger
// gap.
struct IzumiReport {
    Rational max_gap;
    Exponent argmax;
    int degree_bound = 0;
    bool stabilized = false;
    std::vector<Rational> per_degree_max;
};
IzumiReport izumi_gap_scan(const MonomialIdeal& ideal, int degree_bound,
                           bool parallel = true);

} // namespace nubar
