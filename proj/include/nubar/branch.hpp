#pragma once

#include <vector>

#include "nubar/polygon.hpp"
#include "nubar/rational.hpp"

namespace nubar {

// Numerical data of a plane branch with characteristic sequence
// (beta_0, beta_1, .., beta_g): gcd chain, semigroup generators, double-point
// number delta and conductor. Construction validates the sequence and checks
// delta two independent ways (closed formula vs gap count) and the conductor
// against the semigroup itself, including its symmetry.
struct BranchInvariants {
    std::vector<long long> beta;                  // characteristic exponents
    std::vector<long long> e;                     // e_j = gcd(e_{j-1}, beta_j), e_0 = beta_0
    std::vector<long long> n;                     // n_j = e_{j-1}/e_j, j = 1..g
    std::vector<long long> semigroup_generators;  // bar-beta_0 .. bar-beta_g
    std::vector<long long> gaps;                  // the delta gaps of the semigroup
    long long delta = 0;
    long long conductor = 0;                      // = 2 * delta
    int genus = 0;                                // g
};

BranchInvariants branch_invariants(const std::vector<long long>& beta);

// Membership table of the semigroup generated by bar-beta on [0, bound].
std::vector<bool> semigroup_table(const std::vector<long long>& generators, long long bound);

// Newton polygon of the double-point scheme: one part per characteristic
// index, of multiplicity e_{j-1} - e_j, width beta_j - 1 and height 1.
// Its horizontal projection equals 2 * delta. Singular branches only.
NewtonPolygonSum double_point_polygon(const std::vector<long long>& beta);

// asymptotic order of the maximal ideal along the double-point data:
// 1 / (beta_g - 1). Singular branches only.
Rational branch_nubar_m(const std::vector<long long>& beta);

// Orders appearing in the integral closure of the k-th power of the maximal
// ideal inside the branch ring: semigroup members >= k * beta_0. The window
// [k*beta_0, k*beta_0 + conductor) is listed; everything at or past
// k*beta_0 + conductor belongs.
struct MPowerClosure {
    long long k = 0;
    long long threshold = 0;      // k * beta_0
    long long complete_from = 0;  // k * beta_0 + conductor
    std::vector<long long> orders;
};
MPowerClosure closure_power_of_m(const std::vector<long long>& beta, long long k);

// Degrees gamma / beta_0 of the graded algebra attached to the branch, for
// semigroup members gamma up to one period past the conductor.
std::vector<Rational> graded_degrees(const std::vector<long long>& beta);

// Degrees of the algebra generators: bar-beta_j / beta_0.
std::vector<Rational> generator_degrees(const std::vector<long long>& beta);

// Every characteristic sequence with 2 <= beta_0 <= beta0_max and
// beta_g <= betag_max, in lexicographic order.
std::vector<std::vector<long long>> enumerate_char_sequences(long long beta0_max,
                                                             long long betag_max);

} // namespace nubar
