#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nubar/polyhedron.hpp"

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
} // namespace

TEST_CASE("facets of (x^2, y^3): one compact facet (3,2) at level 6") {
    NewtonPolyhedron np(ideal(2, {{2, 0}, {0, 3}}));
    REQUIRE(np.facets().size() == 1);
    const FacetValuation& f = np.facets().front();
    CHECK(f.normal == Exponent{3, 2});
    CHECK(f.level == 6);
    CHECK(f.compact);
    REQUIRE(f.lattice_degree.has_value());
    CHECK(*f.lattice_degree == 1);
}

TEST_CASE("facets of a three-generator staircase") {
    NewtonPolyhedron np(ideal(2, {{3, 0}, {1, 1}, {0, 2}}));
    REQUIRE(np.facets().size() == 2);
    CHECK(np.facets()[0].normal == Exponent{1, 1});
    CHECK(np.facets()[0].level == 2);
    CHECK(np.facets()[1].normal == Exponent{1, 2});
    CHECK(np.facets()[1].level == 3);
}

TEST_CASE("non-primary ideals have non-compact positive-level facets") {
    NewtonPolyhedron np(ideal(2, {{1, 0}}));
    REQUIRE(np.facets().size() == 1);
    CHECK(np.facets()[0].normal == Exponent{1, 0});
    CHECK(np.facets()[0].level == 1);
    CHECK_FALSE(np.facets()[0].compact);
}

TEST_CASE("facets in three and four variables") {
    NewtonPolyhedron np3(ideal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
    REQUIRE(np3.facets().size() == 1);
    CHECK(np3.facets()[0].normal == Exponent{1, 1, 1});
    CHECK(np3.facets()[0].level == 2);

    NewtonPolyhedron np4(
        ideal(4, {{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}));
    REQUIRE(np4.facets().size() == 1);
    CHECK(np4.facets()[0].normal == Exponent{1, 1, 1, 1});

    CHECK_THROWS_AS(NewtonPolyhedron(ideal(5, {{1, 0, 0, 0, 0}})), Error);
}

TEST_CASE("nubar frozen values on (x^2, y^3)") {
    MonomialIdeal i = ideal(2, {{2, 0}, {0, 3}});
    PolynomialQ xy = poly(2, {{{1, 1}, Rational(1)}});
    NubarResult r = nubar::nubar(xy, i);
    CHECK(r.value == Rational(5, 6));
    CHECK(r.lp_value == Rational(5, 6));
    CHECK(r.certificate.normal == Exponent{3, 2});
    CHECK(r.witness_term == Exponent{1, 1});

    CHECK(nubar::nubar(poly(2, {{{0, 1}, Rational(1)}}), i).value == Rational(1, 3));
    CHECK(nubar::nubar(poly(2, {{{1, 0}, Rational(1)}}), i).value == Rational(1, 2));
    CHECK(nubar::nubar(poly(2, {{{2, 0}, Rational(1)}, {{0, 3}, Rational(1)}}), i).value ==
          Rational(1));
    // min over terms, not a sum: x + y has order min(1/2, 1/3).
    CHECK(nubar::nubar(poly(2, {{{1, 0}, Rational(1)}, {{0, 1}, Rational(1)}}), i).value ==
          Rational(1, 3));
    CHECK_THROWS_AS(nubar::nubar(PolynomialQ::zero(2), i), Error);
}

TEST_CASE("nubar picks the worst facet") {
    MonomialIdeal i = ideal(2, {{3, 0}, {1, 1}, {0, 2}});
    // facet (1,1)/2 values y at 1/2, facet (1,2)/3 values y at 2/3.
    CHECK(nubar::nubar(poly(2, {{{0, 1}, Rational(1)}}), i).value == Rational(1, 2));
    CHECK(nubar::nubar(poly(2, {{{1, 0}, Rational(1)}}), i).value == Rational(1, 3));
}

TEST_CASE("nubar of generators is exactly 1 and of products is additive-ish") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        long long a = 1 + static_cast<long long>(rng() % 5);
        long long b = 1 + static_cast<long long>(rng() % 5);
        MonomialIdeal i = ideal(2, {{a, 0}, {0, b}});
        for (const auto& g : i.generators()) {
            PolynomialQ f(2);
            f.add_term(g, Rational(1));
            CHECK(nubar::nubar(f, i).value == Rational(1));
        }
        // nubar(xy) = 1/a + 1/b in lowest terms (one packing unit of each).
        PolynomialQ f(2);
        f.add_term({1, 1}, Rational(1));
        CHECK(nubar::nubar(f, i).value == Rational(b + a, a * b));
        // and the full corner monomial packs one of each generator: order 2.
        PolynomialQ corner(2);
        corner.add_term({a, b}, Rational(1));
        CHECK(nubar::nubar(corner, i).value == Rational(2));
    }
}

TEST_CASE("integral closure frozen cases") {
    CHECK(integral_closure(ideal(2, {{2, 0}, {0, 2}})).generators() ==
          std::vector<Exponent>{{0, 2}, {1, 1}, {2, 0}});
    CHECK(integral_closure(ideal(2, {{1, 0}, {0, 2}})).generators() ==
          std::vector<Exponent>{{0, 2}, {1, 0}});
    CHECK(integral_closure(ideal(2, {{2, 0}, {0, 3}})).generators() ==
          std::vector<Exponent>{{0, 3}, {1, 2}, {2, 0}});
    CHECK(integral_closure(ideal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})).generators() ==
          std::vector<Exponent>{{0, 0, 2}, {0, 1, 1}, {0, 2, 0}, {1, 0, 1},
                                {1, 1, 0}, {2, 0, 0}});
}

TEST_CASE("integral closure is idempotent and contains the ideal") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        std::vector<Exponent> gens;
        for (int g = 0, count = 2 + static_cast<int>(rng() % 3); g < count; ++g) {
            Exponent e(static_cast<size_t>(n), 0);
            long long deg = 0;
            for (int k = 0; k < n; ++k) {
                e[static_cast<size_t>(k)] = static_cast<long long>(rng() % 5);
                deg += e[static_cast<size_t>(k)];
            }
            if (deg == 0) e[static_cast<size_t>(rng() % n)] = 1;
            gens.push_back(e);
        }
        MonomialIdeal i = MonomialIdeal::normalize(n, gens);
        MonomialIdeal cl = integral_closure(i);
        CHECK(cl.contains(i));
        CHECK(integral_closure(cl).generators() == cl.generators());
        // Every closure generator is certified by the facet inequalities.
        NewtonPolyhedron np(i);
        for (const auto& g : cl.generators()) CHECK(np.contains_scaled(g, 1));
    }
}

TEST_CASE("closures of powers match scaled membership") {
    MonomialIdeal i = ideal(2, {{2, 0}, {0, 3}});
    NewtonPolyhedron np(i);
    for (long long p = 1; p <= 4; ++p) {
        MonomialIdeal cl = integral_closure(ideal_power(i, p));
        for (const auto& g : cl.generators()) CHECK(np.contains_scaled(g, p));
        // and conversely the scaled hull has no smaller generator
        for (long long a = 0; a <= 2 * p; ++a)
            for (long long b = 0; b <= 3 * p; ++b)
                CHECK(np.contains_scaled({a, b}, p) == cl.contains_monomial({a, b}));
    }
}

TEST_CASE("fractional closures") {
    MonomialIdeal i = ideal(2, {{2, 0}, {0, 3}});
    CHECK(fractional_closure(i, 1, 2).generators() ==
          std::vector<Exponent>{{0, 2}, {1, 0}});
    CHECK(fractional_closure(i, 1, 3).generators() ==
          std::vector<Exponent>{{0, 1}, {1, 0}});
    CHECK(fractional_closure(i, 2, 3).generators() ==
          std::vector<Exponent>{{0, 2}, {1, 1}, {2, 0}});
    // p/q = 1 reproduces the integral closure.
    CHECK(fractional_closure(i, 3, 3).generators() ==
          integral_closure(i).generators());
    // Monotone: closure(I^{p/q}) grows as p/q shrinks.
    MonomialIdeal half = fractional_closure(i, 1, 2);
    MonomialIdeal whole = fractional_closure(i, 1, 1);
    CHECK(half.contains(whole));
    CHECK_THROWS_AS(fractional_closure(i, 0, 2), Error);
    CHECK_THROWS_AS(fractional_closure(i, 2, 0), Error);
}

TEST_CASE("universal denominator is the lcm of the facet levels") {
    CHECK(universal_denominator(ideal(2, {{2, 0}, {0, 3}})) == 6);
    CHECK(universal_denominator(ideal(2, {{1, 0}, {0, 1}})) == 1);
    CHECK(universal_denominator(ideal(2, {{2, 0}, {0, 2}})) == 2);
    CHECK(universal_denominator(ideal(2, {{3, 0}, {1, 1}, {0, 2}})) == 6);

    // q(I) * nubar is an integer for every monomial.
    MonomialIdeal i = ideal(2, {{3, 0}, {1, 1}, {0, 2}});
    long long qI = universal_denominator(i);
    for (long long a = 0; a <= 4; ++a)
        for (long long b = 0; b <= 4; ++b) {
            if (a + b == 0) continue;
            Rational v = nubar_monomial({a, b}, i).value * Rational(qI);
            CHECK(v.is_integer());
        }
}

TEST_CASE("multiplicity frozen values") {
    CHECK(multiplicity(ideal(1, {{4}})) == 4);
    CHECK(multiplicity(ideal(2, {{1, 0}, {0, 1}})) == 1);
    CHECK(multiplicity(ideal(2, {{2, 0}, {0, 3}})) == 6);
    CHECK(multiplicity(ideal(2, {{2, 0}, {1, 1}, {0, 2}})) == 4);
    CHECK(multiplicity(ideal(2, {{3, 0}, {1, 1}, {0, 2}})) == 5);
    CHECK(multiplicity(ideal(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 4}})) == 24);
    CHECK(multiplicity(ideal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})) == 8);
    // A generator already inside the hull does not change the volume.
    CHECK(multiplicity(ideal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 1}})) == 8);
    CHECK_THROWS_AS(multiplicity(ideal(2, {{1, 0}})), Error);
    CHECK_THROWS_AS(
        multiplicity(ideal(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})),
        Error);
}

TEST_CASE("multiplicity is invariant under integral closure") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        std::vector<Exponent> gens;
        for (int k = 0; k < n; ++k) {
            Exponent e(static_cast<size_t>(n), 0);
            e[static_cast<size_t>(k)] = 1 + static_cast<long long>(rng() % 5);
            gens.push_back(e);
        }
        Exponent mixed(static_cast<size_t>(n), 0);
        for (int k = 0; k < n; ++k)
            mixed[static_cast<size_t>(k)] = static_cast<long long>(rng() % 3);
        if (total_degree(mixed) >= 2) gens.push_back(mixed);
        MonomialIdeal i = MonomialIdeal::normalize(n, gens);
        CHECK(multiplicity(integral_closure(i)) == multiplicity(i));
    }
}

TEST_CASE("asymptotic containment cone") {
    MonomialIdeal i = ideal(2, {{2, 0}, {0, 3}});
    ConeDescription cone = asymptotic_cone({ideal(2, {{1, 0}, {0, 1}})}, i);
    CHECK(cone.inner_count == 1);
    REQUIRE(cone.inequalities.size() == 1);
    CHECK(cone.inequalities[0] == std::vector<long long>{1, -3});

    // Two inner ideals: (x) enters at rate 1/2, (y) at rate 1/3; mixed
    // products need 3 m1 + 2 m2 >= 6 n.
    ConeDescription cone2 =
        asymptotic_cone({ideal(2, {{1, 0}}), ideal(2, {{0, 1}})}, i);
    CHECK(cone2.inner_count == 2);
    REQUIRE(cone2.inequalities.size() == 1);
    CHECK(cone2.inequalities[0] == std::vector<long long>{3, 2, -6});

    // An inner ideal missing the radical never enters any power.
    CHECK_THROWS_AS(asymptotic_cone({ideal(2, {{0, 1}})}, ideal(2, {{1, 0}})), Error);
}

TEST_CASE("cone inequalities certify sample containments") {
    MonomialIdeal i = ideal(2, {{2, 0}, {0, 3}});
    MonomialIdeal m = ideal(2, {{1, 0}, {0, 1}});
    NewtonPolyhedron np(i);
    ConeDescription cone = asymptotic_cone({m}, i);
    for (long long mm = 1; mm <= 9; ++mm)
        for (long long nn = 1; nn <= 3; ++nn) {
            bool in_cone = true;
            for (const auto& row : cone.inequalities)
                if (row[0] * mm + row[1] * nn < 0) in_cone = false;
            bool contained = true;
            MonomialIdeal mpow = ideal_power(m, mm);
            for (const auto& g : mpow.generators())
                if (!np.contains_scaled(g, nn)) contained = false;
            CHECK(in_cone == contained);
        }
}
