#pragma once

#include <vector>

#include "nubar/ideal.hpp"
#include "nubar/rational.hpp"

namespace nubar::kernels {

// True when the build has OpenMP and the parallel kernel variants actually
// fan out.
bool openmp_enabled();

// Number of standard monomials of closure(I^k): lattice points of the
// orthant outside k * NP(I). Primary ideals only (otherwise the count is
// infinite). The serial and parallel variants are independent loops over the
// same box and are tested to agree.
long long colength_closure_serial(const MonomialIdeal& ideal, long long k);
long long colength_closure_parallel(const MonomialIdeal& ideal, long long k);
long long colength_closure(const MonomialIdeal& ideal, long long k, bool parallel = true);

// Scan of nubar(x^a, I) - nu(x^a, I) over all monomials with |a| <= bound.
struct GapScan {
    Rational max_gap;
    Exponent argmax;                      // lex-least monomial attaining the max
    std::vector<Rational> per_degree_max; // index d: max over |a| == d
};
GapScan izumi_scan_serial(const MonomialIdeal& ideal, int degree_bound);
GapScan izumi_scan_parallel(const MonomialIdeal& ideal, int degree_bound);
GapScan izumi_scan(const MonomialIdeal& ideal, int degree_bound, bool parallel = true);

// Validation sweep over every characteristic sequence with beta_0 <= b0max,
// beta_g <= bgmax: recomputes all branch invariants (their construction
// cross-checks delta, conductor, and symmetry), the double-point polygon
// identity, and the closure windows for k = 1, 2. The sums act as a
// deterministic checksum for the serial/parallel comparison.
struct BranchScan {
    long long sequence_count = 0;
    long long delta_sum = 0;
    long long conductor_sum = 0;
    long long closure_checksum = 0;
};
BranchScan branch_scan_serial(long long beta0_max, long long betag_max);
BranchScan branch_scan_parallel(long long beta0_max, long long betag_max);
BranchScan branch_scan(long long beta0_max, long long betag_max, bool parallel = true);

} // namespace nubar::kernels
