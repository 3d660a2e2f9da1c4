#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nubar/arcs.hpp"

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

TEST_CASE("order lattice: exact beats at_least under min") {
    OrderValue e3 = OrderValue::make_exact(3), e5 = OrderValue::make_exact(5);
    OrderValue a4 = OrderValue::at_least(4), a2 = OrderValue::at_least(2);
    CHECK(min(e3, e5).value == 3);
    CHECK(min(e3, e5).exact);
    CHECK(min(e3, a4).value == 3);
    CHECK(min(e3, a4).exact);
    CHECK_FALSE(min(a4, a2).exact);
    CHECK(min(a4, a2).value == 2);
}

TEST_CASE("truncated series arithmetic") {
    TruncatedSeries a = TruncatedSeries::term(Rational(1), 2, 10);  // t^2
    TruncatedSeries b = TruncatedSeries::term(Rational(-1), 3, 10); // -t^3
    TruncatedSeries s = a + b;
    CHECK(s.order().exact);
    CHECK(s.order().value == 2);

    TruncatedSeries p = a * b; // -t^5
    CHECK(p.order().value == 5);
    CHECK(p.coefficients().at(5) == Rational(-1));

    // cancellation across the truncation: t^2 - t^2 = unknown >= 10
    TruncatedSeries z = a + a.scaled(Rational(-1));
    CHECK_FALSE(z.order().exact);
    CHECK(z.order().value == 10);
    CHECK(z.known_zero());

    // products past the truncation are dropped, not wrapped
    TruncatedSeries big = TruncatedSeries::term(Rational(1), 6, 10);
    CHECK_FALSE((big * big).order().exact);

    CHECK(a.pow(4).order().value == 8);
    CHECK_FALSE(a.pow(5).order().exact);

    CHECK_THROWS_AS(TruncatedSeries(0), Error);
    CHECK_THROWS_AS(a + TruncatedSeries(5), Error);
    TruncatedSeries neg(10);
    CHECK_THROWS_AS(neg.add_term(-1, Rational(1)), Error);
}

TEST_CASE("monomial arcs validate weights and collect orders") {
    Arc h = monomial_arc({2, 3}, {Rational(1), Rational(1)}, 16);
    CHECK(h.dim() == 2);
    CHECK(h.truncation() == 16);
    CHECK(h.components[0].order().value == 2);
    CHECK(h.components[1].order().value == 3);
    CHECK_THROWS_AS(monomial_arc({0, 3}, {Rational(1), Rational(1)}, 16), Error);
    CHECK_THROWS_AS(monomial_arc({-1, 3}, {Rational(1), Rational(1)}, 16), Error);
}

TEST_CASE("composition orders on the cuspidal example") {
    Arc h = monomial_arc({2, 3}, {Rational(1), Rational(1)}, 12);

    // x^3 + y^2 pulls back to 2 t^6 exactly.
    OrderValue v = compose_order(poly(2, {{{3, 0}, Rational(1)}, {{0, 2}, Rational(1)}}), h);
    CHECK(v.exact);
    CHECK(v.value == 6);

    // x^3 - y^2 pulls back to 0: cancellation empties the window.
    v = compose_order(poly(2, {{{3, 0}, Rational(1)}, {{0, 2}, Rational(-1)}}), h);
    CHECK_FALSE(v.exact);
    CHECK(v.value == 12);

    // a term too deep for the truncation raises rather than lying
    CHECK_THROWS_AS(compose_order(poly(2, {{{6, 0}, Rational(1)}}), h), Error);

    // the zero polynomial composes to an at_least, never an exact order
    CHECK_FALSE(compose_order(PolynomialQ::zero(2), h).exact);
}

TEST_CASE("ideal order along an arc is the min over generators") {
    Arc h = monomial_arc({2, 3}, {Rational(1), Rational(1)}, 16);
    MonomialIdeal i = ideal(2, {{2, 0}, {0, 3}});
    OrderValue v = ideal_order(i, h);
    CHECK(v.exact);
    CHECK(v.value == 4); // x^2 -> t^4 beats y^3 -> t^9

    ArcRatio r = arc_ratio(poly(2, {{{1, 1}, Rational(1)}}), i, h);
    CHECK(r.determinate);
    CHECK(r.value == Rational(5, 4));
}

TEST_CASE("precompose stretches truncation and orders by k") {
    Arc h = monomial_arc({2, 3}, {Rational(1), Rational(2)}, 12);
    Arc h3 = precompose(h, 3);
    CHECK(h3.truncation() == 36);
    CHECK(h3.components[0].order().value == 6);
    CHECK(h3.components[1].order().value == 9);
    PolynomialQ f = poly(2, {{{1, 1}, Rational(1)}});
    CHECK(compose_order(f, h).value * 3 == compose_order(f, h3).value);
}

TEST_CASE("transverse coefficients dodge initial-form zeros") {
    // along w = (1,1), the initial form of x - y vanishes at c = (1,1)
    PolynomialQ f = poly(2, {{{1, 0}, Rational(1)}, {{0, 1}, Rational(-1)}});
    std::vector<Rational> c = transverse_coefficients(f, {1, 1});
    REQUIRE(c.size() == 2);
    CHECK(c[0] != c[1]); // (1,1) would cancel
    Arc h = monomial_arc({1, 1}, c, 8);
    OrderValue v = compose_order(f, h);
    CHECK(v.exact);
    CHECK(v.value == 1);
}

TEST_CASE("achieving arc attains nubar exactly") {
    MonomialIdeal i = ideal(2, {{2, 0}, {0, 3}});
    PolynomialQ f = poly(2, {{{1, 1}, Rational(1)}});
    Arc h = achieving_arc(f, i);
    ArcRatio r = arc_ratio(f, i, h);
    CHECK(r.determinate);
    CHECK(r.value == Rational(5, 6));

    // cancellation-prone polynomial: (x - y)^2-ish along the diagonal facet
    MonomialIdeal m = ideal(2, {{1, 0}, {0, 1}});
    PolynomialQ g = poly(2, {{{1, 0}, Rational(1)}, {{0, 1}, Rational(-1)}});
    ArcRatio r2 = arc_ratio(g, m, achieving_arc(g, m));
    CHECK(r2.determinate);
    CHECK(r2.value == Rational(1));
}

TEST_CASE("sampled arcs are deterministic per seed") {
    std::vector<Arc> a = sample_arcs(2, 10, 42, 32);
    std::vector<Arc> b = sample_arcs(2, 10, 42, 32);
    REQUIRE(a.size() == 10);
    for (size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].components[0].coefficients() == b[k].components[0].coefficients());
        CHECK(a[k].components[1].coefficients() == b[k].components[1].coefficients());
    }
    std::vector<Arc> c = sample_arcs(2, 10, 43, 32);
    bool any_diff = false;
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k].components[0].coefficients() != c[k].components[0].coefficients())
            any_diff = true;
    CHECK(any_diff);
}

TEST_CASE("arc infimum: sampled ratios sit above nubar, certificate attains it") {
    MonomialIdeal i = ideal(2, {{2, 0}, {0, 3}});
    PolynomialQ f = poly(2, {{{1, 1}, Rational(1)}});
    ArcInfimumReport rep = arc_infimum_check(f, i, sample_arcs(2, 50, 7, 64));
    CHECK(rep.nubar_value == Rational(5, 6));
    CHECK(rep.achieving_ratio == Rational(5, 6));
    CHECK(rep.min_ratio == Rational(5, 6));
    CHECK(rep.determinate_count + rep.indeterminate_count == 50);

    // a generator of the ideal: every ratio >= 1 and 1 is attained
    PolynomialQ g = poly(2, {{{2, 0}, Rational(1)}});
    ArcInfimumReport rep2 = arc_infimum_check(g, i, sample_arcs(2, 20, 3, 64));
    CHECK(rep2.nubar_value == Rational(1));
    CHECK(rep2.achieving_ratio == Rational(1));
    CHECK(rep2.min_ratio == Rational(1));
}

TEST_CASE("deep arcs that outrun their truncation are indeterminate, not wrong") {
    MonomialIdeal i = ideal(2, {{2, 0}, {0, 3}});
    PolynomialQ f = poly(2, {{{4, 4}, Rational(1)}});
    // truncation 8 cannot see f(h) for weight-(2,3) arcs: order would be 20
    std::vector<Arc> arcs{monomial_arc({2, 3}, {Rational(1), Rational(1)}, 8)};
    ArcInfimumReport rep = arc_infimum_check(f, i, arcs);
    CHECK(rep.indeterminate_count == 1);
    CHECK(rep.determinate_count == 0);
}
