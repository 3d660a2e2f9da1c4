#include "nubar/kernels.hpp"

#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nubar/branch.hpp"
#include "nubar/polyhedron.hpp"

namespace nubar::kernels {

bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

namespace {

struct ColengthGrid {
    std::vector<long long> box;    // exclusive upper bounds k * c_i
    std::vector<Exponent> normals;
    std::vector<long long> levels; // scaled by k
    long long total = 1;

    ColengthGrid(const MonomialIdeal& ideal, long long k) {
        if (k < 1) fail(ErrorCode::InvalidExponent, "colength needs k >= 1");
        if (!ideal.is_primary())
            fail(ErrorCode::NotPrimary, "colength needs a primary ideal");
        int n = ideal.dim();
        // Pure-power intercepts: a_i >= k * c_i already places x^a inside
        // k * NP, so the complement lives in the box prod [0, k*c_i).
        box.assign(n, 0);
        for (const auto& g : ideal.generators()) {
            int support = -1;
            bool pure = true;
            for (int i = 0; i < n; ++i) {
                if (g[i] == 0) continue;
                if (support >= 0) pure = false;
                support = i;
            }
            if (pure && support >= 0)
                box[support] = box[support] == 0 ? g[support] : std::min(box[support], g[support]);
        }
        NewtonPolyhedron np(ideal);
        for (const auto& f : np.facets()) {
            normals.push_back(f.normal);
            levels.push_back(k * f.level);
        }
        for (auto& b : box) {
            b *= k;
            total *= b;
        }
    }

    bool outside(long long flat) const {
        Exponent a(box.size());
        for (size_t i = 0; i < box.size(); ++i) {
            a[i] = flat % box[i];
            flat /= box[i];
        }
        for (size_t w = 0; w < normals.size(); ++w) {
            long long d = 0;
            for (size_t i = 0; i < a.size(); ++i) d += normals[w][i] * a[i];
            if (d < levels[w]) return true;
        }
        return false;
    }
};

} // namespace

long long colength_closure_serial(const MonomialIdeal& ideal, long long k) {
    ColengthGrid grid(ideal, k);
    long long count = 0;
    for (long long flat = 0; flat < grid.total; ++flat)
        if (grid.outside(flat)) ++count;
    return count;
}

long long colength_closure_parallel(const MonomialIdeal& ideal, long long k) {
    ColengthGrid grid(ideal, k);
    long long count = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : count) schedule(static)
#endif
    for (long long flat = 0; flat < grid.total; ++flat)
        if (grid.outside(flat)) ++count;
    return count;
}

long long colength_closure(const MonomialIdeal& ideal, long long k, bool parallel) {
    return parallel ? colength_closure_parallel(ideal, k)
                    : colength_closure_serial(ideal, k);
}

namespace {

void enumerate_monomials(Exponent& a, int pos, long long remaining,
                         std::vector<Exponent>& out) {
    if (pos == static_cast<int>(a.size())) {
        out.push_back(a);
        return;
    }
    for (long long v = 0; v <= remaining; ++v) {
        a[pos] = v;
        enumerate_monomials(a, pos + 1, remaining - v, out);
    }
    a[pos] = 0;
}

GapScan fold_gaps(const std::vector<Exponent>& monomials, const std::vector<Rational>& gaps,
                  int degree_bound) {
    GapScan out;
    out.max_gap = Rational(0);
    out.per_degree_max.assign(static_cast<size_t>(degree_bound) + 1, Rational(0));
    bool first = true;
    for (size_t i = 0; i < monomials.size(); ++i) {
        long long d = total_degree(monomials[i]);
        if (gaps[i] > out.per_degree_max[static_cast<size_t>(d)])
            out.per_degree_max[static_cast<size_t>(d)] = gaps[i];
        if (first || gaps[i] > out.max_gap ||
            (gaps[i] == out.max_gap && monomials[i] < out.argmax)) {
            out.max_gap = gaps[i];
            out.argmax = monomials[i];
            first = false;
        }
    }
    return out;
}

Rational gap_at(const NewtonPolyhedron& np, const MonomialIdeal& ideal, const Exponent& a) {
    if (is_zero(a)) return Rational(0);
    bool first = true;
    Rational nb;
    for (const auto& f : np.facets()) {
        Rational r(dot(f.normal, a), f.level);
        if (first || r < nb) nb = r;
        first = false;
    }
    return nb - Rational(nu_order_monomial(a, ideal));
}

} // namespace

GapScan izumi_scan_serial(const MonomialIdeal& ideal, int degree_bound) {
    if (degree_bound < 0 || degree_bound > 12)
        fail(ErrorCode::InvalidExponent, "gap scan supports degree bounds 0..12");
    NewtonPolyhedron np(ideal);
    std::vector<Exponent> monomials;
    Exponent a(ideal.dim(), 0);
    enumerate_monomials(a, 0, degree_bound, monomials);
    std::vector<Rational> gaps(monomials.size());
    for (size_t i = 0; i < monomials.size(); ++i) gaps[i] = gap_at(np, ideal, monomials[i]);
    return fold_gaps(monomials, gaps, degree_bound);
}

GapScan izumi_scan_parallel(const MonomialIdeal& ideal, int degree_bound) {
    if (degree_bound < 0 || degree_bound > 12)
        fail(ErrorCode::InvalidExponent, "gap scan supports degree bounds 0..12");
    NewtonPolyhedron np(ideal);
    std::vector<Exponent> monomials;
    Exponent a(ideal.dim(), 0);
    enumerate_monomials(a, 0, degree_bound, monomials);
    std::vector<Rational> gaps(monomials.size());
    bool failed = false;
    std::string message;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long long i = 0; i < static_cast<long long>(monomials.size()); ++i) {
        try {
            gaps[static_cast<size_t>(i)] = gap_at(np, ideal, monomials[static_cast<size_t>(i)]);
        } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
            {
                failed = true;
                message = e.what();
            }
        }
    }
    if (failed) fail(ErrorCode::InternalCheckFailed, "gap scan worker: " + message);
    // The fold is serial and order-fixed, so the result is deterministic
    // regardless of thread interleaving.
    return fold_gaps(monomials, gaps, degree_bound);
}

GapScan izumi_scan(const MonomialIdeal& ideal, int degree_bound, bool parallel) {
    return parallel ? izumi_scan_parallel(ideal, degree_bound)
                    : izumi_scan_serial(ideal, degree_bound);
}

namespace {

struct BranchPayload {
    long long delta = 0;
    long long conductor = 0;
    long long checksum = 0;
};

BranchPayload branch_payload(const std::vector<long long>& beta) {
    BranchInvariants inv = branch_invariants(beta);
    NewtonPolygonSum poly = double_point_polygon(beta);
    check(poly.width() == Rational(2 * inv.delta),
          "double-point polygon width equals 2*delta");
    check(last_side_slope(poly) == Rational(1, beta.back() - 1),
          "last side slope is 1/(beta_g - 1)");
    check(branch_nubar_m(beta) * Rational(beta.back() - 1) == Rational(1),
          "nubar of the maximal ideal inverts beta_g - 1");
    BranchPayload out;
    out.delta = inv.delta;
    out.conductor = inv.conductor;
    for (long long k = 1; k <= 2; ++k) {
        MPowerClosure c = closure_power_of_m(beta, k);
        check(c.orders.empty() || c.orders.front() == c.threshold,
              "closure window opens at k*beta_0");
        out.checksum += static_cast<long long>(c.orders.size());
        for (long long o : c.orders) out.checksum += o;
    }
    return out;
}

BranchScan fold_branch(const std::vector<BranchPayload>& payloads) {
    BranchScan out;
    out.sequence_count = static_cast<long long>(payloads.size());
    for (const auto& p : payloads) {
        out.delta_sum += p.delta;
        out.conductor_sum += p.conductor;
        out.closure_checksum += p.checksum;
    }
    return out;
}

} // namespace

BranchScan branch_scan_serial(long long beta0_max, long long betag_max) {
    auto sequences = enumerate_char_sequences(beta0_max, betag_max);
    std::vector<BranchPayload> payloads(sequences.size());
    for (size_t i = 0; i < sequences.size(); ++i) payloads[i] = branch_payload(sequences[i]);
    return fold_branch(payloads);
}

BranchScan branch_scan_parallel(long long beta0_max, long long betag_max) {
    auto sequences = enumerate_char_sequences(beta0_max, betag_max);
    std::vector<BranchPayload> payloads(sequences.size());
    bool failed = false;
    std::string message;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (long long i = 0; i < static_cast<long long>(sequences.size()); ++i) {
        try {
            payloads[static_cast<size_t>(i)] = branch_payload(sequences[static_cast<size_t>(i)]);
        } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
            {
                failed = true;
                message = e.what();
            }
        }
    }
    if (failed) fail(ErrorCode::InternalCheckFailed, "branch scan worker: " + message);
    return fold_branch(payloads);
}

BranchScan branch_scan(long long beta0_max, long long betag_max, bool parallel) {
    return parallel ? branch_scan_parallel(beta0_max, betag_max)
                    : branch_scan_serial(beta0_max, betag_max);
}

} // namespace nubar::kernels
