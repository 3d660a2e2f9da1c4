#include "nubar/ideal.hpp"

#include <algorithm>

namespace nubar {

MonomialIdeal MonomialIdeal::normalize(int dim, std::vector<Exponent> gens) {
    if (dim < 1) fail(ErrorCode::DimensionMismatch, "ideal needs >= 1 variable");
    if (gens.empty()) fail(ErrorCode::EmptyGeneratorSet, "no generators given");
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != dim)
            fail(ErrorCode::DimensionMismatch, "generator dimension mismatch");
        require_nonnegative(g);
        if (is_zero(g))
            fail(ErrorCode::UnitIdeal, "generator 1 makes the ideal improper");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // Keep the divisibility antichain: drop any generator strictly divisible
    // by another (duplicates are already gone).
    std::vector<Exponent> minimal;
    for (const auto& g : gens) {
        bool dominated = false;
        for (const auto& h : gens) {
            if (h != g && leq(h, g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(g);
    }
    return MonomialIdeal(dim, std::move(minimal));
}

bool MonomialIdeal::contains_monomial(const Exponent& a) const {
    for (const auto& g : gens_)
        if (leq(g, a)) return true;
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    if (dim_ != other.dim_) fail(ErrorCode::DimensionMismatch, "ideal dimension mismatch");
    for (const auto& g : other.gens_)
        if (!contains_monomial(g)) return false;
    return true;
}

bool MonomialIdeal::is_primary() const {
    for (int i = 0; i < dim_; ++i) {
        bool axis_covered = false;
        for (const auto& g : gens_) {
            bool pure = g[i] > 0;
            for (int j = 0; j < dim_ && pure; ++j)
                if (j != i && g[j] != 0) pure = false;
            if (pure) {
                axis_covered = true;
                break;
            }
        }
        if (!axis_covered) return false;
    }
    return true;
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.dim() != b.dim()) fail(ErrorCode::DimensionMismatch, "ideal dimension mismatch");
    std::vector<Exponent> gens;
    for (const auto& g : a.generators())
        for (const auto& h : b.generators()) gens.push_back(add(g, h));
    return MonomialIdeal::normalize(a.dim(), std::move(gens));
}

MonomialIdeal ideal_power(const MonomialIdeal& a, long long k) {
    if (k < 1) fail(ErrorCode::InvalidExponent, "ideal power needs k >= 1");
    MonomialIdeal r = a;
    for (long long i = 1; i < k; ++i) r = ideal_product(r, a);
    return r;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.dim() != b.dim()) fail(ErrorCode::DimensionMismatch, "ideal dimension mismatch");
    std::vector<Exponent> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal::normalize(a.dim(), std::move(gens));
}

MonomialIdeal ideal_radical(const MonomialIdeal& a) {
    std::vector<Exponent> gens;
    for (const auto& g : a.generators()) {
        Exponent s(g.size(), 0);
        for (size_t i = 0; i < g.size(); ++i) s[i] = g[i] > 0 ? 1 : 0;
        gens.push_back(std::move(s));
    }
    return MonomialIdeal::normalize(a.dim(), std::move(gens));
}

MembershipSearcher::MembershipSearcher(const MonomialIdeal& ideal) : ideal_(ideal) {
    min_gen_degree_ = total_degree(ideal.generators().front());
    for (const auto& g : ideal.generators())
        min_gen_degree_ = std::min(min_gen_degree_, total_degree(g));
}

bool MembershipSearcher::in_power(const Exponent& a, long long k) {
    if (static_cast<int>(a.size()) != ideal_.dim())
        fail(ErrorCode::DimensionMismatch, "monomial dimension mismatch");
    require_nonnegative(a);
    if (k <= 0) return true;
    return search(a, k);
}

bool MembershipSearcher::search(const Exponent& residual, long long k) {
    if (k == 0) return true;
    // Degree cut: k generators cost at least k * min degree.
    if (total_degree(residual) < k * min_gen_degree_) return false;
    Band& band = memo_[residual];
    if (k <= band.max_in) return true;
    if (band.min_out >= 0 && k >= band.min_out) return false;
    bool found = false;
    for (const auto& g : ideal_.generators()) {
        if (!leq(g, residual)) continue;
        if (search(sub(residual, g), k - 1)) {
            found = true;
            break;
        }
    }
    // std::map nodes are reference-stable, so band survives the recursive
    // inserts above.
    if (found)
        band.max_in = std::max(band.max_in, k);
    else
        band.min_out = band.min_out < 0 ? k : std::min(band.min_out, k);
    return found;
}

bool monomial_in_power(const Exponent& a, const MonomialIdeal& ideal, long long k) {
    MembershipSearcher s(ideal);
    return s.in_power(a, k);
}

namespace {

bool oracle_search(const Exponent& residual, const MonomialIdeal& ideal, long long k,
                   size_t first) {
    if (k == 0) return true;
    const auto& gens = ideal.generators();
    for (size_t i = first; i < gens.size(); ++i) {
        if (!leq(gens[i], residual)) continue;
        if (oracle_search(sub(residual, gens[i]), ideal, k - 1, i)) return true;
    }
    return false;
}

} // namespace

bool monomial_in_power_oracle(const Exponent& a, const MonomialIdeal& ideal, long long k) {
    if (static_cast<int>(a.size()) != ideal.dim())
        fail(ErrorCode::DimensionMismatch, "monomial dimension mismatch");
    require_nonnegative(a);
    if (k <= 0) return true;
    return oracle_search(a, ideal, k, 0);
}

long long nu_order_monomial(const Exponent& a, const MonomialIdeal& ideal) {
    MembershipSearcher s(ideal);
    long long min_deg = total_degree(ideal.generators().front());
    for (const auto& g : ideal.generators())
        min_deg = std::min(min_deg, total_degree(g));
    long long bound = total_degree(a) / min_deg;
    long long nu = 0;
    while (nu < bound && s.in_power(a, nu + 1)) ++nu;
    return nu;
}

namespace {

// Terms in ascending total degree: the term of least order fails first, and
// the degree cut settles low-degree residuals cheapest.
std::vector<Exponent> sorted_monomials(const PolynomialQ& f) {
    std::vector<Exponent> monos;
    monos.reserve(f.terms().size());
    for (const auto& [e, c] : f.terms()) monos.push_back(e);
    std::sort(monos.begin(), monos.end(), [](const Exponent& a, const Exponent& b) {
        long long da = total_degree(a), db = total_degree(b);
        return da != db ? da < db : a < b;
    });
    return monos;
}

bool all_in_power(MembershipSearcher& s, const std::vector<Exponent>& monos, long long k) {
    for (const auto& e : monos)
        if (!s.in_power(e, k)) return false;
    return true;
}

} // namespace

Rational nu_order(const PolynomialQ& f, const MonomialIdeal& ideal) {
    if (f.dim() != ideal.dim())
        fail(ErrorCode::DimensionMismatch, "polynomial/ideal dimension mismatch");
    if (f.is_zero()) return Rational::infinity();
    // Distinct monomials cannot cancel, so membership in I^k is termwise and
    // nu is the min over terms; raise the level until some term drops out.
    MembershipSearcher s(ideal);
    std::vector<Exponent> monos = sorted_monomials(f);
    long long nu = 0;
    while (all_in_power(s, monos, nu + 1)) ++nu;
    return Rational(nu);
}

std::vector<Rational> oracle_sequence(const PolynomialQ& f, const MonomialIdeal& ideal,
                                      int max_k) {
    if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "oracle sequence of the zero polynomial");
    if (max_k < 1) fail(ErrorCode::InvalidExponent, "oracle sequence needs max_k >= 1");
    if (f.dim() != ideal.dim())
        fail(ErrorCode::DimensionMismatch, "polynomial/ideal dimension mismatch");
    std::vector<Rational> u;
    u.reserve(max_k);
    MembershipSearcher s(ideal); // memo depends only on the ideal; share it
    PolynomialQ fk = PolynomialQ::one(f.dim());
    long long nu_prev = 0, nu_1 = 0;
    for (int k = 1; k <= max_k; ++k) {
        fk = fk * f;
        std::vector<Exponent> monos = sorted_monomials(fk);
        // nu(f^k) >= nu(f^{k-1}) + nu(f) because I^a I^b lies in I^{a+b},
        // so the level search can start at that floor.
        long long nu = k == 1 ? 0 : nu_prev + nu_1;
        while (all_in_power(s, monos, nu + 1)) ++nu;
        if (k == 1) nu_1 = nu;
        nu_prev = nu;
        u.push_back(Rational(nu, k));
    }
    return u;
}

} // namespace nubar
