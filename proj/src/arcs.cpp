#include "nubar/arcs.hpp"

#include <algorithm>
#include <random>

namespace nubar {

long long Arc::truncation() const {
    if (components.empty()) fail(ErrorCode::DimensionMismatch, "arc needs >= 1 component");
    long long t = components.front().truncation();
    for (const auto& c : components)
        if (c.truncation() != t)
            fail(ErrorCode::TruncationMismatch, "arc components disagree on truncation");
    return t;
}

void Arc::validate() const {
    truncation();
    for (const auto& c : components) {
        OrderValue o = c.order();
        if (o.exact && o.value < 1)
            fail(ErrorCode::NonPositiveWeight, "arc is not centered at the origin");
    }
}

Arc monomial_arc(const Exponent& weights, const std::vector<Rational>& coeffs,
                 long long truncation) {
    if (weights.size() != coeffs.size())
        fail(ErrorCode::DimensionMismatch, "weights/coefficients size mismatch");
    Arc h;
    for (size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 1)
            fail(ErrorCode::NonPositiveWeight, "monomial arc weights must be >= 1");
        if (coeffs[i].is_zero())
            fail(ErrorCode::NonPositiveWeight, "monomial arc coefficients must be nonzero");
        h.components.push_back(TruncatedSeries::term(coeffs[i], weights[i], truncation));
    }
    return h;
}

Arc precompose(const Arc& h, long long k) {
    if (k < 1) fail(ErrorCode::InvalidExponent, "reparametrization needs k >= 1");
    long long t = h.truncation();
    Arc r;
    for (const auto& c : h.components) {
        // Coefficients of c(t^k) below k*t are exactly the stretched ones:
        // anything else would come from exponents >= t of c.
        TruncatedSeries s(k * t);
        for (const auto& [e, v] : c.coefficients()) s.add_term(e * k, v);
        r.components.push_back(std::move(s));
    }
    return r;
}

OrderValue compose_order(const PolynomialQ& f, const Arc& h) {
    if (f.dim() != h.dim())
        fail(ErrorCode::DimensionMismatch, "polynomial/arc dimension mismatch");
    h.validate();
    long long trunc = h.truncation();
    if (f.is_zero()) return OrderValue::at_least(trunc);

    // Static lower bound per term; infinite when the term meets a component
    // that is known to vanish identically below the truncation.
    std::vector<long long> comp_order(h.components.size());
    std::vector<bool> comp_zero(h.components.size());
    for (size_t i = 0; i < h.components.size(); ++i) {
        OrderValue o = h.components[i].order();
        comp_zero[i] = !o.exact;
        comp_order[i] = o.value;
    }
    bool any_finite = false;
    long long bound = 0;
    for (const auto& [e, c] : f.terms()) {
        long long b = 0;
        bool finite = true;
        for (size_t i = 0; i < h.components.size(); ++i) {
            if (e[i] == 0) continue;
            if (comp_zero[i]) {
                finite = false;
                break;
            }
            b += e[i] * comp_order[i];
        }
        if (!finite) continue;
        if (!any_finite || b < bound) bound = b;
        any_finite = true;
    }
    if (!any_finite) return OrderValue::at_least(trunc); // f(h) is identically zero
    if (bound >= trunc)
        fail(ErrorCode::TruncationTooSmall,
             "every term of f(h) starts at or past the truncation");

    // Exact expansion with cached component powers.
    std::vector<std::vector<TruncatedSeries>> powers(h.components.size());
    auto power = [&](size_t i, long long k) -> const TruncatedSeries& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(TruncatedSeries::term(Rational(1), 0, trunc));
        while (static_cast<long long>(cache.size()) <= k)
            cache.push_back(cache.back() * h.components[i]);
        return cache[k];
    };
    TruncatedSeries total(trunc);
    for (const auto& [e, c] : f.terms()) {
        TruncatedSeries t = TruncatedSeries::term(c, 0, trunc);
        for (size_t i = 0; i < h.components.size(); ++i)
            if (e[i] > 0) t = t * power(i, e[i]);
        total = total + t;
    }
    return total.order();
}

OrderValue ideal_order(const MonomialIdeal& ideal, const Arc& h) {
    OrderValue best = OrderValue::at_least(h.truncation());
    for (const auto& g : ideal.generators()) {
        try {
            best = min(best, compose_order(PolynomialQ::monomial(g), h));
        } catch (const Error& e) {
            // A generator starting at or past the window contributes only
            // "order >= truncation", which the running minimum already holds.
            if (e.code() != ErrorCode::TruncationTooSmall) throw;
        }
    }
    return best;
}

ArcRatio arc_ratio(const PolynomialQ& f, const MonomialIdeal& ideal, const Arc& h) {
    ArcRatio r;
    r.numerator = compose_order(f, h);
    r.denominator = ideal_order(ideal, h);
    r.determinate = r.numerator.exact && r.denominator.exact;
    if (r.determinate) {
        check(r.denominator.value >= 1, "centered arc meets the ideal at order >= 1");
        r.value = Rational(r.numerator.value, r.denominator.value);
    }
    return r;
}

std::vector<Rational> transverse_coefficients(const PolynomialQ& f, const Exponent& w) {
    if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "initial form of the zero polynomial");
    int n = f.dim();
    long long vmin = 0;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        long long v = dot(w, e);
        if (first || v < vmin) vmin = v;
        first = false;
    }
    std::vector<std::pair<Exponent, Rational>> initial;
    long long deg = 0;
    for (const auto& [e, c] : f.terms()) {
        if (dot(w, e) == vmin) initial.emplace_back(e, c);
        for (long long v : e) deg = std::max(deg, v);
    }
    // Grid of side deg+1 in each variable; the initial form has degree <= deg
    // in each variable and cannot vanish everywhere on it.
    std::vector<long long> c(n, 1);
    for (;;) {
        Rational val(0);
        for (const auto& [e, coef] : initial) {
            Rational t = coef;
            for (int i = 0; i < n; ++i)
                for (long long k = 0; k < e[i]; ++k) t *= Rational(c[i]);
            val += t;
        }
        if (!val.is_zero()) return std::vector<Rational>(c.begin(), c.end());
        int i = 0;
        while (i < n && c[i] == deg + 1) c[i++] = 1;
        check(i < n, "initial form does not vanish on the whole grid");
        ++c[i];
    }
}

Arc achieving_arc(const PolynomialQ& f, const MonomialIdeal& ideal, long long min_truncation) {
    NubarResult nb = nubar(f, ideal);
    const Exponent& w = nb.certificate.normal;
    if (!nb.certificate.compact)
        fail(ErrorCode::NotPrimary,
             "achieving arc needs a strictly positive certificate normal");
    std::vector<Rational> coeffs = transverse_coefficients(f, w);
    long long vf = NewtonPolyhedron::valuation(nb.certificate, f);
    long long trunc = std::max(min_truncation, vf + nb.certificate.level + 2);
    Arc h = monomial_arc(w, coeffs, trunc);
    // Transversality makes the composite order exactly v_w(f).
    OrderValue o = compose_order(f, h);
    check(o.exact && o.value == vf, "transverse arc attains the facet valuation");
    return h;
}

std::vector<Arc> sample_arcs(int dim, int count, std::uint64_t seed, long long truncation) {
    if (dim < 1) fail(ErrorCode::DimensionMismatch, "arcs need >= 1 variable");
    std::mt19937_64 rng(seed);
    // Values are drawn by modulus, not std::uniform_int_distribution, so the
    // stream is identical across standard library implementations.
    const Rational coeff_pool[6] = {Rational(1),     Rational(-1),    Rational(2),
                                    Rational(-2),    Rational(1, 2),  Rational(-1, 2)};
    std::vector<Arc> arcs;
    for (int k = 0; k < count; ++k) {
        Exponent w(dim);
        std::vector<Rational> c(dim);
        for (int i = 0; i < dim; ++i) {
            w[i] = 1 + static_cast<long long>(rng() % 8);
            c[i] = coeff_pool[rng() % 6];
        }
        arcs.push_back(monomial_arc(w, c, truncation));
    }
    return arcs;
}

ArcInfimumReport arc_infimum_check(const PolynomialQ& f, const MonomialIdeal& ideal,
                                   const std::vector<Arc>& arcs) {
    NubarResult nb = nubar(f, ideal);
    ArcInfimumReport rep;
    rep.nubar_value = nb.value;

    Arc best = achieving_arc(f, ideal);
    ArcRatio attained = arc_ratio(f, ideal, best);
    check(attained.determinate, "achieving arc has determinate orders");
    check(attained.value == nb.value, "achieving arc attains the asymptotic order");
    rep.achieving_ratio = attained.value;
    rep.min_ratio = attained.value;

    for (const auto& h : arcs) {
        ArcRatio r;
        try {
            r = arc_ratio(f, ideal, h);
        } catch (const Error& e) {
            // An arc too deep for its truncation cannot certify any order;
            // it contributes nothing to the attained minimum.
            if (e.code() == ErrorCode::TruncationTooSmall) {
                ++rep.indeterminate_count;
                continue;
            }
            throw;
        }
        if (!r.determinate) {
            ++rep.indeterminate_count;
            continue;
        }
        ++rep.determinate_count;
        check(r.value >= nb.value, "arc ratio below the asymptotic order");
        if (r.value < rep.min_ratio) rep.min_ratio = r.value;
    }
    return rep;
}

} // namespace nubar
