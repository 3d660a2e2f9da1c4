#pragma once

#include <map>
#include <string>
#include <vector>

#include "nubar/exponent.hpp"
#include "nubar/rational.hpp"

namespace nubar {

// Polynomial over Q in a fixed number of variables, exponents nonnegative.
// Terms are kept in a lex-ordered map with no zero coefficients, so iteration
// order is canonical.
class PolynomialQ {
  public:
    explicit PolynomialQ(int dim) : dim_(dim) {
        if (dim < 1) fail(ErrorCode::DimensionMismatch, "polynomial needs >= 1 variable");
    }

    static PolynomialQ monomial(const Exponent& a, const Rational& c = Rational(1)) {
        require_nonnegative(a);
        PolynomialQ p(static_cast<int>(a.size()));
        p.add_term(a, c);
        return p;
    }

    static PolynomialQ zero(int dim) { return PolynomialQ(dim); }

    static PolynomialQ one(int dim) {
        PolynomialQ p(dim);
        p.add_term(Exponent(dim, 0), Rational(1));
        return p;
    }

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponent, Rational>& terms() const { return terms_; }

    void add_term(const Exponent& a, const Rational& c) {
        if (static_cast<int>(a.size()) != dim_)
            fail(ErrorCode::DimensionMismatch, "term dimension mismatch");
        require_nonnegative(a);
        if (c.is_zero()) return;
        auto it = terms_.find(a);
        if (it == terms_.end()) {
            terms_.emplace(a, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend PolynomialQ operator+(const PolynomialQ& a, const PolynomialQ& b) {
        if (a.dim_ != b.dim_) fail(ErrorCode::DimensionMismatch, "sum dimension mismatch");
        PolynomialQ r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend PolynomialQ operator-(const PolynomialQ& a, const PolynomialQ& b) {
        if (a.dim_ != b.dim_) fail(ErrorCode::DimensionMismatch, "difference dimension mismatch");
        PolynomialQ r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend PolynomialQ operator*(const PolynomialQ& a, const PolynomialQ& b) {
        if (a.dim_ != b.dim_) fail(ErrorCode::DimensionMismatch, "product dimension mismatch");
        PolynomialQ r(a.dim_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(add(ea, eb), ca * cb);
        return r;
    }

    PolynomialQ pow(long long k) const {
        if (k < 0) fail(ErrorCode::InvalidExponent, "negative polynomial power");
        PolynomialQ r = one(dim_);
        PolynomialQ base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    Rational evaluate(const std::vector<Rational>& x) const {
        if (static_cast<int>(x.size()) != dim_)
            fail(ErrorCode::DimensionMismatch, "evaluation point dimension mismatch");
        Rational s(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < dim_; ++i)
                for (long long k = 0; k < e[i]; ++k) t *= x[i];
            s += t;
        }
        return s;
    }

    std::string str(const std::vector<std::string>& vars) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            if (c == Rational(1) && !nubar::is_zero(e) && total_degree(e) > 0) {
                s += monomial_str(e, vars);
            } else if (nubar::is_zero(e)) {
                s += c.str();
            } else {
                s += "(" + c.str() + ")*" + monomial_str(e, vars);
            }
        }
        return s;
    }

  private:
    int dim_;
    std::map<Exponent, Rational> terms_;
};

} // namespace nubar
