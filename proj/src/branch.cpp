#include "nubar/branch.hpp"

#include <algorithm>

namespace nubar {

namespace {

void validate_sequence(const std::vector<long long>& beta) {
    if (beta.empty()) fail(ErrorCode::InvalidCharSequence, "empty characteristic sequence");
    for (long long b : beta)
        if (b < 1) fail(ErrorCode::InvalidCharSequence, "characteristic exponents are >= 1");
    for (size_t i = 1; i < beta.size(); ++i)
        if (beta[i] <= beta[i - 1])
            fail(ErrorCode::InvalidCharSequence, "characteristic exponents must increase");
    if (beta[0] == 1) {
        if (beta.size() != 1)
            fail(ErrorCode::InvalidCharSequence, "a smooth branch is just (1)");
        return;
    }
    long long e = beta[0];
    for (size_t j = 1; j < beta.size(); ++j) {
        long long g = gcd_ll(e, beta[j]);
        if (g == e)
            fail(ErrorCode::InvalidCharSequence,
                 "gcd chain must drop at every characteristic exponent");
        e = g;
    }
    if (e != 1)
        fail(ErrorCode::InvalidCharSequence, "gcd chain must terminate at 1");
}

} // namespace

std::vector<bool> semigroup_table(const std::vector<long long>& generators, long long bound) {
    std::vector<bool> table(static_cast<size_t>(bound) + 1, false);
    table[0] = true;
    for (long long g : generators) {
        if (g < 1) fail(ErrorCode::InvalidCharSequence, "semigroup generators are >= 1");
        for (long long i = g; i <= bound; ++i)
            if (table[static_cast<size_t>(i - g)]) table[static_cast<size_t>(i)] = true;
    }
    return table;
}

BranchInvariants branch_invariants(const std::vector<long long>& beta) {
    validate_sequence(beta);
    BranchInvariants inv;
    inv.beta = beta;
    inv.genus = static_cast<int>(beta.size()) - 1;

    inv.e.push_back(beta[0]);
    for (size_t j = 1; j < beta.size(); ++j) {
        inv.e.push_back(gcd_ll(inv.e.back(), beta[j]));
        inv.n.push_back(inv.e[j - 1] / inv.e[j]);
    }

    // bar-beta_0 = beta_0, bar-beta_1 = beta_1, then
    // bar-beta_{j+1} = n_j * bar-beta_j + beta_{j+1} - beta_j.
    inv.semigroup_generators.push_back(beta[0]);
    if (inv.genus >= 1) inv.semigroup_generators.push_back(beta[1]);
    for (int j = 1; j < inv.genus; ++j)
        inv.semigroup_generators.push_back(inv.n[j - 1] * inv.semigroup_generators[j] +
                                           beta[j + 1] - beta[j]);

    // Closed formula: 2*delta = 1 - beta_0 + sum (e_{j-1} - e_j) * beta_j.
    long long two_delta = 1 - beta[0];
    for (int j = 1; j <= inv.genus; ++j)
        two_delta += (inv.e[j - 1] - inv.e[j]) * beta[j];
    check(two_delta >= 0 && two_delta % 2 == 0, "2*delta is a nonnegative even integer");
    inv.delta = two_delta / 2;
    inv.conductor = two_delta;

    // Independent check against the semigroup itself: gap count, conductor
    // position, and the symmetry gamma in S <=> c - 1 - gamma not in S.
    long long bound = inv.conductor + beta[0] + 1;
    std::vector<bool> table = semigroup_table(inv.semigroup_generators, bound);
    for (long long x = 0; x < inv.conductor; ++x)
        if (!table[static_cast<size_t>(x)]) inv.gaps.push_back(x);
    for (long long x = inv.conductor; x <= bound; ++x)
        check(table[static_cast<size_t>(x)], "no gaps at or past the conductor");
    check(inv.conductor == 0 || !table[static_cast<size_t>(inv.conductor - 1)],
          "the conductor is the first point after the last gap");
    check(static_cast<long long>(inv.gaps.size()) == inv.delta,
          "gap count equals delta from the closed formula");
    for (long long x = 0; x < inv.conductor; ++x) {
        bool in = table[static_cast<size_t>(x)];
        bool mirror = table[static_cast<size_t>(inv.conductor - 1 - x)];
        check(in != mirror, "semigroup symmetry about the conductor");
    }
    return inv;
}

NewtonPolygonSum double_point_polygon(const std::vector<long long>& beta) {
    BranchInvariants inv = branch_invariants(beta);
    if (inv.genus == 0)
        fail(ErrorCode::SmoothBranch, "double-point polygon needs a singular branch");
    NewtonPolygonSum p;
    for (int j = 1; j <= inv.genus; ++j)
        p = minkowski_add(p, NewtonPolygonSum::elementary(
                                 ExtInt::of(1), ExtInt::of(beta[j] - 1),
                                 inv.e[j - 1] - inv.e[j]));
    check(p.width() == Rational(2 * inv.delta),
          "double-point polygon projects onto 2*delta");
    return p;
}

Rational branch_nubar_m(const std::vector<long long>& beta) {
    BranchInvariants inv = branch_invariants(beta);
    if (inv.genus == 0)
        fail(ErrorCode::SmoothBranch, "asymptotic order needs a singular branch");
    return Rational(1, beta.back() - 1);
}

MPowerClosure closure_power_of_m(const std::vector<long long>& beta, long long k) {
    if (k < 1) fail(ErrorCode::InvalidExponent, "power needs k >= 1");
    BranchInvariants inv = branch_invariants(beta);
    MPowerClosure out;
    out.k = k;
    out.threshold = k * beta[0];
    out.complete_from = out.threshold + inv.conductor;
    std::vector<bool> table = semigroup_table(inv.semigroup_generators, out.complete_from);
    for (long long x = out.threshold; x < out.complete_from; ++x)
        if (table[static_cast<size_t>(x)]) out.orders.push_back(x);
    check(out.orders.empty() || out.orders.front() == out.threshold,
          "k*beta_0 lies in the semigroup");
    return out;
}

std::vector<Rational> graded_degrees(const std::vector<long long>& beta) {
    BranchInvariants inv = branch_invariants(beta);
    long long bound = inv.conductor + beta[0] + 1;
    std::vector<bool> table = semigroup_table(inv.semigroup_generators, bound);
    std::vector<Rational> degrees;
    for (long long x = 0; x <= bound; ++x)
        if (table[static_cast<size_t>(x)]) degrees.emplace_back(x, beta[0]);
    return degrees;
}

std::vector<Rational> generator_degrees(const std::vector<long long>& beta) {
    BranchInvariants inv = branch_invariants(beta);
    std::vector<Rational> degrees;
    for (long long g : inv.semigroup_generators) degrees.emplace_back(g, beta[0]);
    return degrees;
}

namespace {

void extend_sequences(std::vector<long long>& seq, long long e, long long betag_max,
                      std::vector<std::vector<long long>>& out) {
    for (long long b = seq.back() + 1; b <= betag_max; ++b) {
        long long g = gcd_ll(e, b);
        if (g == e) continue; // the chain must drop
        seq.push_back(b);
        if (g == 1)
            out.push_back(seq);
        else
            extend_sequences(seq, g, betag_max, out);
        seq.pop_back();
    }
}

} // namespace

std::vector<std::vector<long long>> enumerate_char_sequences(long long beta0_max,
                                                             long long betag_max) {
    std::vector<std::vector<long long>> out;
    for (long long b0 = 2; b0 <= beta0_max; ++b0) {
        std::vector<long long> seq{b0};
        extend_sequences(seq, b0, betag_max, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace nubar
