#include "nubar/suite.hpp"

#include <algorithm>
#include <random>

#include "nubar/polyhedron.hpp"

namespace nubar {

namespace {

const Rational kCoeffPool[6] = {Rational(1),    Rational(-1),    Rational(2),
                                Rational(-2),   Rational(1, 2),  Rational(-1, 2)};

template <typename Rng>
long long draw(Rng& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

// Pure powers on every axis (so the ideal is primary) plus up to 4 - n
// genuinely mixed generators under the same degree cap. Powers are floored
// at 2 (3 in three variables): a degree-1 axis flattens the complement of
// k*NP(I), and the Ehrhart boundary term then dominates the colength ratio
// d!*colength/k^d at the moderate k the asymptotic checks run at.
template <typename Rng>
MonomialIdeal random_primary_ideal(Rng& rng, int n, long long max_power) {
    std::vector<Exponent> gens;
    std::vector<long long> pure(n);
    long long lo = std::min<long long>(n >= 3 ? 3 : 2, max_power);
    for (int i = 0; i < n; ++i) {
        pure[i] = draw(rng, lo, max_power);
        Exponent e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i)] = pure[i];
        gens.push_back(e);
    }
    long long extra = draw(rng, 0, 4 - n);
    for (long long j = 0; j < extra; ++j) {
        for (int attempt = 0; attempt < 32; ++attempt) {
            Exponent e(static_cast<size_t>(n), 0);
            long long deg = 0;
            int nonzero = 0;
            for (int i = 0; i < n; ++i) {
                long long hi = pure[i] - 1;
                e[static_cast<size_t>(i)] = hi <= 0 ? 0 : draw(rng, 0, hi);
                deg += e[static_cast<size_t>(i)];
                if (e[static_cast<size_t>(i)] > 0) ++nonzero;
            }
            if (nonzero >= 2 && deg >= 2 && deg <= 6) {
                gens.push_back(e);
                break;
            }
        }
    }
    return MonomialIdeal::normalize(n, gens);
}

template <typename Rng>
Exponent random_exponent(Rng& rng, int n, long long entry_max) {
    for (;;) {
        Exponent e(static_cast<size_t>(n), 0);
        long long deg = 0;
        for (int i = 0; i < n; ++i) {
            e[static_cast<size_t>(i)] = draw(rng, 0, entry_max);
            deg += e[static_cast<size_t>(i)];
        }
        if (deg >= 1) return e;
    }
}

template <typename Rng>
PolynomialQ random_sum(Rng& rng, int n, int terms) {
    PolynomialQ f(n);
    while (static_cast<int>(f.terms().size()) < terms)
        f.add_term(random_exponent(rng, n, 4), kCoeffPool[rng() % 6]);
    return f;
}

} // namespace

std::vector<SuiteCase> fixed_suite() {
    std::mt19937 rng(12345);
    std::vector<SuiteCase> out;
    for (int n : {2, 3}) {
        for (int rep = 0; rep < 15; ++rep) {
            SuiteCase sc{random_primary_ideal(rng, n, 6), {}};
            for (int j = 0; j < 5; ++j) {
                PolynomialQ m(n);
                m.add_term(random_exponent(rng, n, 4), Rational(1));
                sc.polys.push_back(std::move(m));
            }
            for (int j = 0; j < 5; ++j)
                sc.polys.push_back(random_sum(rng, n, static_cast<int>(draw(rng, 2, 4))));
            out.push_back(std::move(sc));
        }
    }
    check(out.size() == 30, "fixed suite has 30 cases");
    return out;
}

std::vector<VerifyInstance> verify_instances(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x6e756261722d7631ULL);
    std::vector<VerifyInstance> out;
    for (int idx = 0; idx < 40; ++idx) {
        int n = 2 + idx % 2;
        MonomialIdeal ideal = random_primary_ideal(rng, n, 5);
        long long p = 1, q = 1;
        PolynomialQ f(n);
        if (idx % 4 == 0) {
            // Monomial at its exact asymptotic order, in lowest terms.
            f.add_term(random_exponent(rng, n, 4), Rational(1));
            Rational nb = nubar_monomial(f.terms().begin()->first, ideal).value;
            p = std::max<long long>(1, nb.num().convert_to<long long>());
            q = nb.den().convert_to<long long>();
        } else {
            f = random_sum(rng, n, static_cast<int>(draw(rng, 2, 3)));
            Rational nb = nubar(f, ideal).value;
            q = draw(rng, 1, 4);
            long long fl = (nb * Rational(q)).floor().convert_to<long long>();
            if (idx % 4 == 1) {
                p = std::max<long long>(1, fl); // at or below the order
            } else if (idx % 4 == 2) {
                p = fl + 1; // strictly above: the non-integral side
            } else {
                p = draw(rng, 1, 6);
                q = draw(rng, 1, 6);
            }
        }
        out.push_back(VerifyInstance{std::move(ideal), std::move(f), p, q});
    }
    return out;
}

} // namespace nubar
