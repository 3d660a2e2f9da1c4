#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "nubar/ideal.hpp"
#include "nubar/polyhedron.hpp"

namespace nubar {

// Order of a univariate series known only up to a truncation bound: either
// the exact order (strictly below the truncation) or "at least truncation".
struct OrderValue {
    bool exact = false;
    long long value = 0;

    static OrderValue make_exact(long long v) { return {true, v}; }
    static OrderValue at_least(long long t) { return {false, t}; }

    // Minimum is computable in this lattice: an exact order is always below
    // the truncation, hence below whatever an at_least operand hides.
    friend OrderValue min(const OrderValue& a, const OrderValue& b) {
        if (a.exact && b.exact) return make_exact(std::min(a.value, b.value));
        if (a.exact) return a;
        if (b.exact) return b;
        return at_least(std::min(a.value, b.value));
    }
};

// Polynomial truncation of a power series in t: coefficients are tracked for
// exponents strictly below the truncation bound and unknown past it.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(long long truncation) : trunc_(truncation) {
        if (truncation < 1) fail(ErrorCode::TruncationTooSmall, "truncation must be >= 1");
    }

    static TruncatedSeries term(const Rational& c, long long e, long long truncation) {
        TruncatedSeries s(truncation);
        s.add_term(e, c);
        return s;
    }

    long long truncation() const { return trunc_; }
    bool known_zero() const { return coeffs_.empty(); }
    const std::map<long long, Rational>& coefficients() const { return coeffs_; }

    void add_term(long long e, const Rational& c) {
        if (e < 0) fail(ErrorCode::InvalidExponent, "negative series exponent");
        if (e >= trunc_ || c.is_zero()) return;
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    OrderValue order() const {
        if (coeffs_.empty()) return OrderValue::at_least(trunc_);
        return OrderValue::make_exact(coeffs_.begin()->first);
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.trunc_ != b.trunc_)
            fail(ErrorCode::TruncationMismatch, "series truncation mismatch");
        TruncatedSeries r = a;
        for (const auto& [e, c] : b.coeffs_) r.add_term(e, c);
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.trunc_ != b.trunc_)
            fail(ErrorCode::TruncationMismatch, "series truncation mismatch");
        TruncatedSeries r(a.trunc_);
        for (const auto& [ea, ca] : a.coeffs_) {
            if (ea >= r.trunc_) break;
            for (const auto& [eb, cb] : b.coeffs_) {
                if (ea + eb >= r.trunc_) break;
                r.add_term(ea + eb, ca * cb);
            }
        }
        return r;
    }

    TruncatedSeries scaled(const Rational& c) const {
        TruncatedSeries r(trunc_);
        for (const auto& [e, v] : coeffs_) r.add_term(e, c * v);
        return r;
    }

    TruncatedSeries pow(long long k) const {
        TruncatedSeries r = term(Rational(1), 0, trunc_);
        for (long long i = 0; i < k; ++i) r = r * *this;
        return r;
    }

  private:
    long long trunc_;
    std::map<long long, Rational> coeffs_;
};

// Parametrized arc h : t -> (h_1(t), .., h_n(t)) with h(0) = 0: every
// component has order >= 1 (or is the zero series) and all components share
// one truncation bound.
struct Arc {
    std::vector<TruncatedSeries> components;

    int dim() const { return static_cast<int>(components.size()); }
    long long truncation() const;
    void validate() const;
};

// h_i(t) = c_i t^{w_i} with strictly positive integer weights.
Arc monomial_arc(const Exponent& weights, const std::vector<Rational>& coeffs,
                 long long truncation);

// Reparametrization h(t^k); coefficient knowledge stretches to k*truncation.
Arc precompose(const Arc& h, long long k);

// Order in t of f(h(t)). The static lower bound min over terms of
// sum(a_i * ord(h_i)) must be below the truncation, otherwise the series
// carries no information and TruncationTooSmall is raised; cancellation that
// empties the window yields an at_least value, never a silent exact one.
OrderValue compose_order(const PolynomialQ& f, const Arc& h);

// min over generators; exact generator compositions cannot cancel.
OrderValue ideal_order(const MonomialIdeal& ideal, const Arc& h);

struct ArcRatio {
    bool determinate = false;
    Rational value;          // v(f(h)) / v(I(h)) when determinate
    OrderValue numerator;    // v(f(h))
    OrderValue denominator;  // v(I(h))
};
ArcRatio arc_ratio(const PolynomialQ& f, const MonomialIdeal& ideal, const Arc& h);

// Coefficients c in a small positive grid at which the initial form of f
// along w does not vanish; the monomial arc with these coefficients then
// attains v_w(f) exactly. A nonzero polynomial cannot vanish on the whole
// grid, so the scan terminates.
std::vector<Rational> transverse_coefficients(const PolynomialQ& f, const Exponent& w);

// The monomial arc along the certificate facet of nubar(f, I), with
// transverse coefficients and a truncation wide enough to see both orders.
Arc achieving_arc(const PolynomialQ& f, const MonomialIdeal& ideal,
                  long long min_truncation = 64);

// Deterministic random monomial arcs: weights uniform in [1..8]^n,
// coefficients from {1, -1, 2, -2, 1/2, -1/2}.
std::vector<Arc> sample_arcs(int dim, int count, std::uint64_t seed, long long truncation);

struct ArcInfimumReport {
    Rational nubar_value;
    Rational min_ratio;        // over the determinate sampled ratios and the achieving arc
    Rational achieving_ratio;  // equals nubar_value; asserted
    int determinate_count = 0;
    int indeterminate_count = 0;
};

// Checks that every determinate sampled ratio is >= nubar(f, I) and that the
// achieving arc attains it.
ArcInfimumReport arc_infimum_check(const PolynomialQ& f, const MonomialIdeal& ideal,
                                   const std::vector<Arc>& arcs);

} // namespace nubar
