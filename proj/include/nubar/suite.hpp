#pragma once

#include <cstdint>
#include <vector>

#include "nubar/ideal.hpp"
#include "nubar/polynomial.hpp"

namespace nubar {

struct SuiteCase {
    MonomialIdeal ideal;
    std::vector<PolynomialQ> polys; // 10: five monomials, then five short sums
};

// Deterministic corpus: 30 primary monomial ideals (15 in two variables, 15
// in three), at most 4 generators each, generator degrees <= 6, and 10
// polynomials per ideal (5 monomials, 5 sums of 2..4 terms with coefficients
// from {1, -1, 2, -2, 1/2, -1/2}). Pinned to a fixed seed: every run and
// every machine sees the same corpus.
std::vector<SuiteCase> fixed_suite();

struct VerifyInstance {
    MonomialIdeal ideal;
    PolynomialQ f;
    long long p;
    long long q;
};

// 40 five-way-check instances per seed over fresh primary ideals. The
// targets p/q cycle through: the exact asymptotic order of a monomial (in
// lowest terms), a floor just below it, a point strictly above it, and an
// unrelated small ratio, so both integral and non-integral verdicts are
// exercised.
std::vector<VerifyInstance> verify_instances(std::uint64_t seed);

} // namespace nubar
