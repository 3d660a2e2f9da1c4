#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "nubar/errors.hpp"

namespace nubar {

using Int = boost::multiprecision::cpp_int;

inline Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = gcd_int(a, b);
    Int r = (a / g) * b;
    return r < 0 ? -r : r;
}

// Exact rational with an explicit +infinity element. Finite values are kept
// reduced with positive denominator. Infinity is absorbing under addition and
// under multiplication by positive values; indeterminate combinations
// (inf - inf, inf * 0, inf / inf) throw rather than pick a convention.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(const Int& n) : num_(n), den_(1) {}
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    static Rational infinity() {
        Rational r;
        r.infinite_ = true;
        return r;
    }

    bool is_infinite() const { return infinite_; }
    bool is_zero() const { return !infinite_ && num_ == 0; }
    bool is_integer() const { return !infinite_ && den_ == 1; }
    bool is_negative() const { return !infinite_ && num_ < 0; }
    bool is_positive() const { return infinite_ || num_ > 0; }

    const Int& num() const {
        require_finite("num");
        return num_;
    }
    const Int& den() const {
        require_finite("den");
        return den_;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        if (a.infinite_ && b.infinite_)
            fail(ErrorCode::InfiniteOperand, "inf - inf is indeterminate");
        if (a.infinite_) return infinity();
        if (b.infinite_)
            fail(ErrorCode::InfiniteOperand, "finite - inf is not representable");
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a) {
        if (a.infinite_)
            fail(ErrorCode::InfiniteOperand, "-inf is not representable");
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.infinite_ || b.infinite_) {
            const Rational& fin = a.infinite_ ? b : a;
            if (!fin.is_infinite() && fin.is_zero())
                fail(ErrorCode::InfiniteOperand, "inf * 0 is indeterminate");
            if (!fin.is_infinite() && fin.is_negative())
                fail(ErrorCode::InfiniteOperand, "inf * negative is not representable");
            return infinity();
        }
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.infinite_) {
            if (a.infinite_) fail(ErrorCode::InfiniteOperand, "inf / inf is indeterminate");
            return Rational(0);
        }
        if (b.is_zero()) fail(ErrorCode::ZeroDenominator, "division by zero");
        if (a.infinite_) {
            if (b.is_negative())
                fail(ErrorCode::InfiniteOperand, "inf / negative is not representable");
            return infinity();
        }
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        if (a.infinite_) return std::strong_ordering::greater;
        if (b.infinite_) return std::strong_ordering::less;
        Int lhs = a.num_ * b.den_;
        Int rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Round toward -inf / +inf; finite values only.
    Int floor() const {
        require_finite("floor");
        Int q = num_ / den_;
        if (num_ < 0 && q * den_ != num_) q -= 1;
        return q;
    }
    Int ceil() const {
        require_finite("ceil");
        Int q = num_ / den_;
        if (num_ > 0 && q * den_ != num_) q += 1;
        return q;
    }

    double to_double() const {
        if (infinite_) return std::numeric_limits<double>::infinity();
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // "p/q" with q omitted when 1; infinity prints as "inf".
    std::string str() const {
        if (infinite_) return "inf";
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    // Accepts "p", "-p", "p/q" with optional sign on p; q must be positive.
    static Rational parse(const std::string& text) {
        if (text.empty()) fail(ErrorCode::ParseError, "empty rational literal");
        if (text == "inf") return infinity();
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) return Rational(Int(text));
            std::string ns = text.substr(0, slash);
            std::string ds = text.substr(slash + 1);
            if (ns.empty() || ds.empty())
                fail(ErrorCode::ParseError, "malformed rational literal '" + text + "'");
            Int n(ns), d(ds);
            if (d <= 0)
                fail(ErrorCode::ParseError, "denominator must be positive in '" + text + "'");
            return Rational(n, d);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "malformed rational literal '" + text + "'");
        }
    }

  private:
    void reduce() {
        if (den_ == 0) fail(ErrorCode::ZeroDenominator, "rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = gcd_int(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    void require_finite(const char* op) const {
        if (infinite_)
            fail(ErrorCode::InfiniteOperand, std::string(op) + " of infinite value");
    }

    Int num_;
    Int den_;
    bool infinite_ = false;
};

} // namespace nubar
