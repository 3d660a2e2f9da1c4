#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nubar/closure_ops.hpp"
#include "nubar/suite.hpp"

using namespace nubar;

namespace {
PolynomialQ poly(int dim, std::initializer_list<std::pair<Exponent, Rational>> terms) {
    PolynomialQ f(dim);
    for (const auto& [e, c] : terms) f.add_term(e, c);
    return f;
}
MonomialIdeal ideal(int n, std::initializer_list<Exponent> gens) {
    return MonomialIdeal::normalize(n, gens);
}
const MonomialIdeal kCusp = ideal(2, {{2, 0}, {0, 3}});
const PolynomialQ kXY = poly(2, {{{1, 1}, Rational(1)}});
} // namespace

TEST_CASE("is_integral reduces to the asymptotic order") {
    CHECK(is_integral(kXY, kCusp, 5, 6));       // nubar = 5/6 exactly
    CHECK_FALSE(is_integral(kXY, kCusp, 6, 7)); // 6/7 > 5/6
    CHECK(is_integral(kXY, kCusp, 1, 2));
    CHECK_THROWS_AS(is_integral(kXY, kCusp, 1, 0), Error);
    CHECK_THROWS_AS(is_integral(kXY, kCusp, 0, 2), Error);
}

TEST_CASE("dependence certificates: least m, verified relation") {
    // xy is integral over (x^2, y^2) but (xy)^1 is not in the ideal: m = 2.
    MonomialIdeal sq = ideal(2, {{2, 0}, {0, 2}});
    DependenceCertificate c = dependence_certificate({1, 1}, sq, 1, 1, 16);
    CHECK(c.m == 2);
    CHECK(c.p == 1);
    CHECK(c.q == 1);
    // the witness really is a membership of an actual ideal power
    CHECK(monomial_in_power(scale(c.q * c.m, c.exponent), sq, c.p * c.m));
    CHECK_FALSE(sq.contains_monomial(Exponent{1, 1}));

    // at the exact asymptotic order 5/6, xy lands in an actual power at m = 1
    DependenceCertificate c2 = dependence_certificate({1, 1}, kCusp, 5, 6, 16);
    CHECK(c2.m == 1);
    CHECK(monomial_in_power(scale(6, Exponent{1, 1}), kCusp, 5));

    // above nubar nothing can work
    CHECK_THROWS_AS(dependence_certificate({1, 1}, kCusp, 6, 7, 32), Error);
    try {
        dependence_certificate({1, 1}, kCusp, 6, 7, 32);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotIntegral);
    }
}

TEST_CASE("certificate exists at p = q = 1 iff nubar >= 1") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        std::vector<Exponent> pure;
        for (int i = 0; i < n; ++i) {
            Exponent e(n, 0);
            e[i] = 2 + static_cast<long long>(rng() % 3);
            pure.push_back(e);
        }
        MonomialIdeal i = MonomialIdeal::normalize(n, pure);
        Exponent a(n, 0);
        for (int k = 0; k < n; ++k) a[k] = static_cast<long long>(rng() % 4);
        if (is_zero(a)) a[0] = 1;
        Rational nb = nubar_lp_monomial(a, i);
        if (nb >= Rational(1)) {
            DependenceCertificate c = dependence_certificate(a, i, 1, 1, 16);
            CHECK(c.m >= 1);
            CHECK(monomial_in_power(scale(c.m, a), i, c.m));
        } else {
            CHECK_THROWS_AS(dependence_certificate(a, i, 1, 1, 16), Error);
        }
    }
}

TEST_CASE("five verification routes agree on a true statement") {
    VerifyReport r = verify_equivalences(kXY, kCusp, 5, 6);
    CHECK(r.consistent);
    CHECK(r.membership);
    CHECK(r.order_bound);
    CHECK(r.facet_arcs);
    CHECK(r.certificate);
    CHECK(r.numeric);
    CHECK(r.nubar_value == Rational(5, 6));
    CHECK(r.target == Rational(5, 6));
    CHECK(r.monomial_route);
    CHECK(r.certificate_m >= 1);
    CHECK(r.exp_f == 5);
    CHECK(r.exp_g == 6);
    // one exact ratio per facet, each >= 5/6 and the minimum attained
    REQUIRE(!r.facet_ratios.empty());
    Rational mn = Rational::infinity();
    for (const auto& [w, ratio] : r.facet_ratios) {
        CHECK(ratio >= Rational(5, 6));
        mn = std::min(mn, ratio);
    }
    CHECK(mn == Rational(5, 6));
}

TEST_CASE("five verification routes agree on a false statement") {
    // nubar(y, kCusp) = 1/3 < 1/2, so every route must reject
    PolynomialQ y = poly(2, {{{0, 1}, Rational(1)}});
    VerifyReport r = verify_equivalences(y, kCusp, 1, 2);
    CHECK(r.consistent);
    CHECK_FALSE(r.membership);
    CHECK_FALSE(r.order_bound);
    CHECK_FALSE(r.facet_arcs);
    CHECK_FALSE(r.certificate);
    CHECK_FALSE(r.numeric);
    CHECK(r.nubar_value == Rational(1, 3));
}

TEST_CASE("verification handles polynomial f with several terms") {
    PolynomialQ f = poly(2, {{{1, 1}, Rational(1)}, {{3, 0}, Rational(2)}});
    // nubar(f) = min(5/6, 3*3/6) = 5/6
    VerifyReport t = verify_equivalences(f, kCusp, 5, 6);
    CHECK(t.consistent);
    CHECK(t.membership);
    CHECK_FALSE(t.monomial_route);
    VerifyReport fl = verify_equivalences(f, kCusp, 9, 10);
    CHECK(fl.consistent);
    CHECK_FALSE(fl.membership);
}

TEST_CASE("verification rejects non-primary ideals") {
    CHECK_THROWS_AS(verify_equivalences(kXY, ideal(2, {{1, 0}}), 1, 2), Error);
}

TEST_CASE("randomized instances never split the verdicts") {
    for (const VerifyInstance& inst : verify_instances(17)) {
        VerifyReport r = verify_equivalences(inst.f, inst.ideal, inst.p, inst.q);
        CHECK(r.consistent);
        CHECK(r.membership == (r.nubar_value >= r.target));
    }
}

TEST_CASE("lojasiewicz exponent is the reciprocal asymptotic order") {
    LojasiewiczReport r = lojasiewicz(kXY, kCusp, 200, 5);
    CHECK(r.nubar_value == Rational(5, 6));
    CHECK(r.theta == Rational(6, 5));
    CHECK(r.exp_f == 5);
    CHECK(r.exp_g == 6);
    CHECK(r.samples_checked > 0);
    CHECK(r.violations == 0);
    CHECK(r.verdict);
    CHECK(r.constant > 0.0);
}

TEST_CASE("lojasiewicz with vanishing order: theta is infinite") {
    PolynomialQ one = poly(2, {{{0, 0}, Rational(1)}});
    LojasiewiczReport r = lojasiewicz(one, kCusp, 50, 1);
    CHECK(r.nubar_value == Rational(0));
    CHECK(r.theta.is_infinite());
    CHECK(r.verdict);
}

TEST_CASE("lojasiewicz sampling is seed-deterministic") {
    LojasiewiczReport a = lojasiewicz(kXY, kCusp, 100, 9);
    LojasiewiczReport b = lojasiewicz(kXY, kCusp, 100, 9);
    CHECK(a.constant == b.constant);
    CHECK(a.violations == b.violations);
    CHECK(a.samples_checked == b.samples_checked);
}

TEST_CASE("gradient suite: jacobian order above one, scaled order exactly one") {
    GradientReport g = gradient_suite({2, 3});
    CHECK(g.nubar_jacobian == Rational(3, 2)); // min(2/1, 3/2)
    CHECK(g.theta == Rational(2, 3));
    CHECK(g.nubar_scaled == Rational(1));
    // generator lists come back normalized (lex-ascending)
    REQUIRE(g.jacobian_generators.size() == 2);
    CHECK(g.jacobian_generators[0] == Exponent{0, 2});
    CHECK(g.jacobian_generators[1] == Exponent{1, 0});
    CHECK(g.scaled_generators[0] == Exponent{0, 3});
    CHECK(g.scaled_generators[1] == Exponent{2, 0});

    for (std::vector<long long> a :
         {std::vector<long long>{2, 2}, {3, 4, 5}, {2, 6}, {4, 4, 4}, {5}}) {
        GradientReport r = gradient_suite(a);
        CHECK(r.nubar_jacobian > Rational(1));
        CHECK(r.nubar_scaled == Rational(1));
        Rational expect = Rational::infinity();
        for (long long ai : a) expect = std::min(expect, Rational(ai, ai - 1));
        CHECK(r.nubar_jacobian == expect);
    }

    CHECK_THROWS_AS(gradient_suite({1, 3}), Error);
    CHECK_THROWS_AS(gradient_suite({}), Error);
    CHECK_THROWS_AS(gradient_suite({2, 2, 2, 2, 2}), Error);
}

TEST_CASE("type of a primary ideal") {
    TypeReport t = type_of_ideal(kCusp);
    CHECK(t.type_value == Rational(3)); // nubar(sqrt) = nubar(y) = 1/3
    CHECK(t.nubar_radical == Rational(1, 3));
    CHECK(t.checked_powers == 4);

    TypeReport m = type_of_ideal(ideal(2, {{1, 0}, {0, 1}}));
    CHECK(m.type_value == Rational(1));

    CHECK_THROWS_AS(type_of_ideal(ideal(2, {{2, 0}})), Error);
}

TEST_CASE("izumi gap scan: frozen maximum and stabilization") {
    IzumiReport r = izumi_gap_scan(kCusp, 9);
    // gap(x^a y^b) = frac(a/2) + frac(b/3), maximized by a=1, b=2
    CHECK(r.max_gap == Rational(7, 6));
    CHECK(r.argmax == Exponent{1, 2});
    CHECK(r.stabilized);
    REQUIRE(static_cast<int>(r.per_degree_max.size()) == 10); // degrees 0..9
    for (const Rational& g : r.per_degree_max) CHECK(g <= Rational(7, 6));

    IzumiReport s = izumi_gap_scan(kCusp, 9, /*parallel=*/false);
    CHECK(s.max_gap == r.max_gap);
    CHECK(s.argmax == r.argmax);
}
