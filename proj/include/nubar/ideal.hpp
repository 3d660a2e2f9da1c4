#pragma once

#include <map>
#include <utility>
#include <vector>

#include "nubar/exponent.hpp"
#include "nubar/polynomial.hpp"
#include "nubar/rational.hpp"

namespace nubar {

// Proper monomial ideal in Q[x_1..x_n], represented by its unique minimal
// generating set: a divisibility antichain of nonzero exponent vectors,
// sorted lexicographically. Construction goes through normalize() so equal
// ideals always compare equal generator-by-generator.
class MonomialIdeal {
  public:
    static MonomialIdeal normalize(int dim, std::vector<Exponent> gens);

    int dim() const { return dim_; }
    const std::vector<Exponent>& generators() const { return gens_; }

    // x^a in I, i.e. some generator divides x^a.
    bool contains_monomial(const Exponent& a) const;

    // Every generator of other lies in *this.
    bool contains(const MonomialIdeal& other) const;

    // V(I) = {0}: every coordinate axis carries a pure-power generator.
    bool is_primary() const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.dim_ == b.dim_ && a.gens_ == b.gens_;
    }

  private:
    MonomialIdeal(int dim, std::vector<Exponent> gens)
        : dim_(dim), gens_(std::move(gens)) {}

    int dim_;
    std::vector<Exponent> gens_;
};

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_power(const MonomialIdeal& a, long long k);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
// Radical of a monomial ideal: generated by the supports of the generators.
MonomialIdeal ideal_radical(const MonomialIdeal& a);

// Decides x^a in I^k by depth-first search over generator subtractions.
// Membership in I^k is monotone in k (I^k is contained in I^{k-1}), so the
// memo stores per residual the band [max power known in, min power known
// out]; verdicts at one power settle whole half-lines of the next queries.
class MembershipSearcher {
  public:
    explicit MembershipSearcher(const MonomialIdeal& ideal);
    bool in_power(const Exponent& a, long long k);

  private:
    struct Band {
        long long max_in = 0;              // in I^k for every k <= max_in
        long long min_out = -1;            // out of I^k for every k >= min_out (-1: none known)
    };
    bool search(const Exponent& residual, long long k);

    const MonomialIdeal& ideal_;
    long long min_gen_degree_;
    std::map<Exponent, Band> memo_;
};

bool monomial_in_power(const Exponent& a, const MonomialIdeal& ideal, long long k);

// Reference decision procedure: plain enumeration of generator multisets in
// nondecreasing index order, no memoization. Exponential; for cross-checks.
bool monomial_in_power_oracle(const Exponent& a, const MonomialIdeal& ideal, long long k);

// nu_I(x^a) = max{k : x^a in I^k}, 0 when x^a is not in I.
long long nu_order_monomial(const Exponent& a, const MonomialIdeal& ideal);

// nu_I(f) = sup{n : f in I^n}. A polynomial lies in a monomial ideal exactly
// when each of its terms does, so this is the min over terms; infinity for 0.
Rational nu_order(const PolynomialQ& f, const MonomialIdeal& ideal);

// u_k = nu_I(f^k)/k for k = 1..max_k. The sequence converges to the
// asymptotic order from below; see oracle tests for the monotonicity facts.
std::vector<Rational> oracle_sequence(const PolynomialQ& f, const MonomialIdeal& ideal,
                                      int max_k);

} // namespace nubar
