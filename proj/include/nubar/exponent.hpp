#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "nubar/errors.hpp"

namespace nubar {

// Exponent vector of a monomial x^a, entries nonnegative. Plain vector so the
// built-in lexicographic comparison doubles as the canonical ordering used for
// deterministic output.
using Exponent = std::vector<long long>;

inline long long dot(const Exponent& w, const Exponent& a) {
    if (w.size() != a.size())
        fail(ErrorCode::DimensionMismatch, "dot product of mismatched exponent vectors");
    long long s = 0;
    for (size_t i = 0; i < w.size(); ++i) s += w[i] * a[i];
    return s;
}

inline long long total_degree(const Exponent& a) {
    long long s = 0;
    for (long long v : a) s += v;
    return s;
}

inline Exponent add(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size())
        fail(ErrorCode::DimensionMismatch, "sum of mismatched exponent vectors");
    Exponent r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// Componentwise difference; caller guarantees b <= a.
inline Exponent sub(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size())
        fail(ErrorCode::DimensionMismatch, "difference of mismatched exponent vectors");
    Exponent r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Exponent scale(long long k, const Exponent& a) {
    Exponent r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

// Divisibility of monomials: x^b | x^a.
inline bool leq(const Exponent& b, const Exponent& a) {
    if (a.size() != b.size())
        fail(ErrorCode::DimensionMismatch, "comparison of mismatched exponent vectors");
    for (size_t i = 0; i < a.size(); ++i)
        if (b[i] > a[i]) return false;
    return true;
}

inline bool is_zero(const Exponent& a) {
    for (long long v : a)
        if (v != 0) return false;
    return true;
}

inline void require_nonnegative(const Exponent& a) {
    for (long long v : a)
        if (v < 0) fail(ErrorCode::InvalidExponent, "negative entry in exponent vector");
}

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// x^a rendered with variable names, "1" for the zero vector.
inline std::string monomial_str(const Exponent& a, const std::vector<std::string>& vars) {
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += i < vars.size() ? vars[i] : "x" + std::to_string(i + 1);
        if (a[i] != 1) s += "^" + std::to_string(a[i]);
    }
    return s.empty() ? "1" : s;
}

inline std::vector<std::string> default_vars(size_t n) {
    static const char* names[] = {"x", "y", "z", "w"};
    std::vector<std::string> v;
    for (size_t i = 0; i < n; ++i)
        v.push_back(i < 4 ? names[i] : "x" + std::to_string(i + 1));
    return v;
}

} // namespace nubar
