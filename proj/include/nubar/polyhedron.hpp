#pragma once

#include <optional>
#include <vector>

#include "nubar/ideal.hpp"
#include "nubar/lp.hpp"

namespace nubar {

// One facet of the Newton polyhedron carrying positive level, i.e. one
// divisorial (monomial) valuation v_w with v_w(I) = level.
struct FacetValuation {
    Exponent normal;                          // primitive, componentwise >= 0
    long long level = 0;                      // min over generators of <normal, g>, > 0
    bool compact = false;                     // true iff normal is strictly positive
    std::vector<Exponent> tight_generators;   // generators achieving the level, sorted
    std::optional<long long> lattice_degree;  // lattice length, n = 2 compact facets only
};

// Newton polyhedron of a monomial ideal: convex hull of the generator
// exponents plus the nonnegative orthant. Stores the irredundant facet list
// of positive level; zero-level inequalities <w,x> >= 0 are implied by x >= 0
// and carry no valuation, so they are omitted.
class NewtonPolyhedron {
  public:
    explicit NewtonPolyhedron(const MonomialIdeal& ideal);

    const MonomialIdeal& ideal() const { return ideal_; }
    const std::vector<FacetValuation>& facets() const { return facets_; }

    // Integer point membership: a in NP(I), equivalently x^a in the integral
    // closure of I.
    bool contains(const Exponent& a) const;
    // a in p * NP(I), equivalently x^a in the integral closure of I^p.
    bool contains_scaled(const Exponent& a, long long p) const;
    // a in (p/q) * NP(I).
    bool contains_fractional(const Exponent& a, long long p, long long q) const;

    // min over terms of f of <w, a>: the value of the facet valuation on f.
    static long long valuation(const FacetValuation& w, const PolynomialQ& f);
    static long long valuation_monomial(const FacetValuation& w, const Exponent& a);

  private:
    MonomialIdeal ideal_;
    std::vector<FacetValuation> facets_;
};

// Asymptotic order of f along I together with its certificate: the facet
// valuation achieving the minimum and the term of f it is attained on.
// `lp_value` is the same number recomputed by the dual linear-program route;
// the constructor asserts the two routes agree.
struct NubarResult {
    Rational value;
    FacetValuation certificate;
    Exponent witness_term;
    Rational lp_value;
};

NubarResult nubar(const PolynomialQ& f, const MonomialIdeal& ideal);
NubarResult nubar_monomial(const Exponent& a, const MonomialIdeal& ideal);

// Independent route for a single monomial: the optimum of
//   max sum(mu_j)  s.t.  sum(mu_j * g_j) <= a, mu >= 0
// over the generators g_j of I. Used for the cross-route assertion.
Rational nubar_lp_monomial(const Exponent& a, const MonomialIdeal& ideal);

// min over generators of J; the achieving generator is reported.
struct IdealNubarResult {
    Rational value;
    Exponent achieving_generator;
    NubarResult detail;
};
IdealNubarResult nubar_ideal(const MonomialIdeal& inner, const MonomialIdeal& ideal);

// Integral closure of a monomial ideal: monomials whose exponents are integer
// points of NP(I).
MonomialIdeal integral_closure(const MonomialIdeal& ideal);

// Integral closure of I^{p/q}: monomials with exponent in (p/q) * NP(I).
MonomialIdeal fractional_closure(const MonomialIdeal& ideal, long long p, long long q);

// lcm of the facet levels: a denominator q(I) with q(I) * nubar(f, I)
// integral for every f.
long long universal_denominator(const MonomialIdeal& ideal);

// Hilbert-Samuel multiplicity e(I) = n! * vol(orthant \ NP(I)) for primary
// ideals in n <= 3 variables, computed exactly by pyramid decomposition.
long long multiplicity(const MonomialIdeal& ideal);

// Linear description of {(m_1..m_k, n) : prod J_i^{m_i} stays integral over
// I^n asymptotically}: one inequality per facet, deduplicated and with
// Farkas-redundant rows removed.
struct ConeDescription {
    size_t inner_count = 0;                          // k
    std::vector<std::vector<long long>> inequalities; // rows (c_1..c_k, c_n), meaning sum c_i m_i + c_n n >= 0
};
ConeDescription asymptotic_cone(const std::vector<MonomialIdeal>& inner,
                                const MonomialIdeal& ideal);

} // namespace nubar
