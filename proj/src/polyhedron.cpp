#include "nubar/polyhedron.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>

namespace nubar {

namespace {

constexpr int kMaxDim = 4;

// Rank of a set of integer vectors, by fraction-free elimination over Q
// (entries are small; long long is ample).
int integer_rank(std::vector<Exponent> rows) {
    size_t n = rows.empty() ? 0 : rows[0].size();
    int rank = 0;
    size_t col = 0;
    for (size_t r = 0; r < rows.size() && col < n; ++col) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            long long g = gcd_ll(rows[i][col], rows[r][col]);
            long long fi = rows[r][col] / g;
            long long fr = rows[i][col] / g;
            for (size_t j = 0; j < n; ++j) rows[i][j] = rows[i][j] * fi - rows[r][j] * fr;
        }
        ++r;
        ++rank;
    }
    return rank;
}

long long det2(const Exponent& a, const Exponent& b) {
    return a[0] * b[1] - a[1] * b[0];
}

long long det3(const Exponent& a, const Exponent& b, const Exponent& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Primitive integer normal of the hyperplane spanned by n-1 independent
// vectors in Z^n: signed maximal minors (generalized cross product).
Exponent null_normal(const std::vector<Exponent>& rows, int n) {
    Exponent w(n, 0);
    if (n == 1) {
        w[0] = 1;
        return w;
    }
    for (int drop = 0; drop < n; ++drop) {
        std::vector<Exponent> minor;
        for (const auto& r : rows) {
            Exponent m;
            for (int j = 0; j < n; ++j)
                if (j != drop) m.push_back(r[j]);
            minor.push_back(std::move(m));
        }
        long long d = 0;
        if (n == 2) d = minor[0][0];
        else if (n == 3) d = det2(minor[0], minor[1]);
        else d = det3(minor[0], minor[1], minor[2]);
        w[drop] = (drop % 2 == 0) ? d : -d;
    }
    return w;
}

void make_primitive(Exponent& w) {
    long long g = 0;
    for (long long v : w) g = gcd_ll(g, v);
    if (g > 1)
        for (auto& v : w) v /= g;
}

// 2D convex hull (Andrew monotone chain), strictly convex: collinear points
// are dropped. Input points need not be distinct.
std::vector<std::array<long long, 2>> convex_hull_2d(std::vector<std::array<long long, 2>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    auto cross = [](const std::array<long long, 2>& o, const std::array<long long, 2>& a,
                    const std::array<long long, 2>& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<std::array<long long, 2>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    size_t lower = hull.size() + 1;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), *it) <= 0)
            hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back();
    return hull;
}

} // namespace

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal& ideal) : ideal_(ideal) {
    int n = ideal.dim();
    if (n > kMaxDim)
        fail(ErrorCode::DimensionTooLarge, "Newton polyhedra support up to 4 variables");
    const auto& gens = ideal.generators();

    // Candidate directions: pairwise generator differences and coordinate
    // axes. Every facet's direction space is spanned by n-1 of these, since
    // its vertices are generators and its recession directions are axes.
    std::vector<Exponent> pool;
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) pool.push_back(sub(gens[i], gens[j]));
    for (int i = 0; i < n; ++i) {
        Exponent e(n, 0);
        e[i] = 1;
        pool.push_back(e);
    }

    std::set<Exponent> candidates;
    if (n == 1) {
        candidates.insert(Exponent{1});
    } else {
        std::vector<size_t> idx(n - 1);
        // All (n-1)-subsets of the pool.
        auto emit = [&]() {
            std::vector<Exponent> rows;
            for (size_t k : idx) rows.push_back(pool[k]);
            Exponent w = null_normal(rows, n);
            if (is_zero(w)) return;
            bool nonneg = true, nonpos = true;
            for (long long v : w) {
                if (v > 0) nonpos = false;
                if (v < 0) nonneg = false;
            }
            if (!nonneg && !nonpos) return; // mixed signs: not valid on NP
            if (nonpos)
                for (auto& v : w) v = -v;
            make_primitive(w);
            candidates.insert(std::move(w));
        };
        auto choose = [&](auto&& self, size_t start, size_t depth) -> void {
            if (depth == static_cast<size_t>(n - 1)) {
                emit();
                return;
            }
            for (size_t k = start; k < pool.size(); ++k) {
                idx[depth] = k;
                self(self, k + 1, depth + 1);
            }
        };
        choose(choose, 0, 0);
    }

    for (const auto& w : candidates) {
        long long level = dot(w, gens.front());
        for (const auto& g : gens) level = std::min(level, dot(w, g));
        if (level <= 0) continue; // valuation-free face (meets the orthant at 0-level)
        std::vector<Exponent> tight;
        for (const auto& g : gens)
            if (dot(w, g) == level) tight.push_back(g);
        // Facet test: the tight face must have dimension n-1. Its direction
        // space is spanned by differences of tight generators together with
        // the axes where the normal vanishes.
        std::vector<Exponent> dirs;
        for (size_t i = 1; i < tight.size(); ++i) dirs.push_back(sub(tight[i], tight[0]));
        for (int i = 0; i < n; ++i) {
            if (w[i] == 0) {
                Exponent e(n, 0);
                e[i] = 1;
                dirs.push_back(std::move(e));
            }
        }
        if (integer_rank(dirs) != n - 1) continue;

        FacetValuation f;
        f.normal = w;
        f.level = level;
        f.compact = std::all_of(w.begin(), w.end(), [](long long v) { return v > 0; });
        f.tight_generators = std::move(tight);
        if (n == 2 && f.compact) {
            // Endpoints are the lex extremes of the tight set; the lattice
            // length of the edge is the gcd of the coordinate differences.
            const Exponent& a = f.tight_generators.front();
            const Exponent& b = f.tight_generators.back();
            f.lattice_degree = gcd_ll(b[0] - a[0], b[1] - a[1]);
        }
        facets_.push_back(std::move(f));
    }
    std::sort(facets_.begin(), facets_.end(),
              [](const FacetValuation& a, const FacetValuation& b) {
                  return a.normal < b.normal;
              });
    check(!facets_.empty(), "a proper monomial ideal has a positive-level facet");
}

bool NewtonPolyhedron::contains(const Exponent& a) const {
    return contains_scaled(a, 1);
}

bool NewtonPolyhedron::contains_scaled(const Exponent& a, long long p) const {
    require_nonnegative(a);
    for (const auto& f : facets_)
        if (dot(f.normal, a) < p * f.level) return false;
    return true;
}

bool NewtonPolyhedron::contains_fractional(const Exponent& a, long long p, long long q) const {
    require_nonnegative(a);
    for (const auto& f : facets_)
        if (q * dot(f.normal, a) < p * f.level) return false;
    return true;
}

long long NewtonPolyhedron::valuation_monomial(const FacetValuation& w, const Exponent& a) {
    return dot(w.normal, a);
}

long long NewtonPolyhedron::valuation(const FacetValuation& w, const PolynomialQ& f) {
    if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "valuation of the zero polynomial");
    bool first = true;
    long long v = 0;
    for (const auto& [e, c] : f.terms()) {
        long long t = dot(w.normal, e);
        if (first || t < v) v = t;
        first = false;
    }
    return v;
}

Rational nubar_lp_monomial(const Exponent& a, const MonomialIdeal& ideal) {
    if (static_cast<int>(a.size()) != ideal.dim())
        fail(ErrorCode::DimensionMismatch, "monomial dimension mismatch");
    require_nonnegative(a);
    const auto& gens = ideal.generators();
    int n = ideal.dim();
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(gens.size()));
    std::vector<Rational> b(n), c(gens.size(), Rational(1));
    for (int i = 0; i < n; ++i) {
        for (size_t j = 0; j < gens.size(); ++j) A[i][j] = Rational(gens[j][i]);
        b[i] = Rational(a[i]);
    }
    LpResult r = simplex_max(A, b, c);
    check(r.status == LpStatus::Optimal, "packing LP is feasible (mu = 0) and bounded");
    return r.value;
}

NubarResult nubar(const PolynomialQ& f, const MonomialIdeal& ideal) {
    if (f.dim() != ideal.dim())
        fail(ErrorCode::DimensionMismatch, "polynomial/ideal dimension mismatch");
    if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "asymptotic order of the zero polynomial");
    NewtonPolyhedron np(ideal);

    NubarResult res;
    bool first = true;
    for (const auto& facet : np.facets()) {
        long long v = NewtonPolyhedron::valuation(facet, f);
        Rational ratio(v, facet.level);
        if (first || ratio < res.value) {
            res.value = ratio;
            res.certificate = facet;
            first = false;
        }
    }
    long long vmin = NewtonPolyhedron::valuation(res.certificate, f);
    for (const auto& [e, c] : f.terms()) {
        if (dot(res.certificate.normal, e) == vmin) {
            res.witness_term = e; // lex-least term attaining the valuation
            break;
        }
    }

    // Independent route: per-term packing LP; the minimum over terms must
    // reproduce the facet minimum (linear-programming duality).
    bool lp_first = true;
    for (const auto& [e, c] : f.terms()) {
        Rational v = nubar_lp_monomial(e, ideal);
        if (lp_first || v < res.lp_value) res.lp_value = v;
        lp_first = false;
    }
    check(res.lp_value == res.value, "facet route and LP route agree on nubar");
    return res;
}

NubarResult nubar_monomial(const Exponent& a, const MonomialIdeal& ideal) {
    return nubar(PolynomialQ::monomial(a), ideal);
}

IdealNubarResult nubar_ideal(const MonomialIdeal& inner, const MonomialIdeal& ideal) {
    if (inner.dim() != ideal.dim())
        fail(ErrorCode::DimensionMismatch, "ideal dimension mismatch");
    IdealNubarResult out;
    bool first = true;
    for (const auto& g : inner.generators()) {
        NubarResult r = nubar_monomial(g, ideal);
        if (first || r.value < out.value) {
            out.value = r.value;
            out.achieving_generator = g;
            out.detail = r;
            first = false;
        }
    }
    return out;
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
    NewtonPolyhedron np(ideal);
    int n = ideal.dim();
    // Box bound: if a in NP has a_i > M_i := max_j g_j[i], then writing
    // a = sum(lambda_j g_j) + r with r >= 0 gives r_i > 0, so a - e_i is
    // still in NP; hence the minimal monomials of the closure lie in
    // prod [0, M_i].
    Exponent box(n, 0);
    for (const auto& g : ideal.generators())
        for (int i = 0; i < n; ++i) box[i] = std::max(box[i], g[i]);
    std::vector<Exponent> gens;
    Exponent a(n, 0);
    for (;;) {
        if (np.contains(a)) gens.push_back(a);
        int i = 0;
        while (i < n && a[i] == box[i]) a[i++] = 0;
        if (i == n) break;
        ++a[i];
    }
    return MonomialIdeal::normalize(n, std::move(gens));
}

MonomialIdeal fractional_closure(const MonomialIdeal& ideal, long long p, long long q) {
    if (p < 1 || q < 1)
        fail(ErrorCode::InvalidExponent, "fractional power needs p, q >= 1");
    NewtonPolyhedron np(ideal);
    int n = ideal.dim();
    // Same recession argument scaled by p/q: minimal exponents are bounded by
    // (p/q) * M_i componentwise.
    Exponent box(n, 0);
    for (const auto& g : ideal.generators())
        for (int i = 0; i < n; ++i) box[i] = std::max(box[i], g[i]);
    for (int i = 0; i < n; ++i) box[i] = (p * box[i]) / q + 1;
    std::vector<Exponent> gens;
    Exponent a(n, 0);
    for (;;) {
        if (np.contains_fractional(a, p, q)) gens.push_back(a);
        int i = 0;
        while (i < n && a[i] == box[i]) a[i++] = 0;
        if (i == n) break;
        ++a[i];
    }
    return MonomialIdeal::normalize(n, std::move(gens));
}

long long universal_denominator(const MonomialIdeal& ideal) {
    NewtonPolyhedron np(ideal);
    long long l = 1;
    for (const auto& f : np.facets()) l = l / gcd_ll(l, f.level) * f.level;
    return l;
}

long long multiplicity(const MonomialIdeal& ideal) {
    int n = ideal.dim();
    if (n > 3)
        fail(ErrorCode::DimensionTooLarge, "multiplicity supports up to 3 variables");
    if (!ideal.is_primary())
        fail(ErrorCode::NotPrimary, "multiplicity needs a primary ideal");
    NewtonPolyhedron np(ideal);
    // n! * vol(orthant \ NP) as a sum of cones over the compact facets with
    // apex at the origin; coordinate-hyperplane pieces pass through the apex
    // and contribute nothing. Primary ideals have only compact facets.
    long long total = 0;
    for (const auto& f : np.facets()) {
        check(f.compact, "facets of a primary ideal are compact");
        if (n == 1) {
            total += f.tight_generators.front()[0];
        } else if (n == 2) {
            total += std::abs(det2(f.tight_generators.front(), f.tight_generators.back()));
        } else {
            // Triangulate the facet: project out the coordinate with the
            // largest normal entry, take the planar hull, fan from its first
            // vertex, and sum tetrahedron determinants against the origin.
            int drop = 0;
            for (int i = 1; i < 3; ++i)
                if (f.normal[i] > f.normal[drop]) drop = i;
            std::vector<std::array<long long, 2>> flat;
            for (const auto& g : f.tight_generators) {
                std::array<long long, 2> p{};
                int k = 0;
                for (int i = 0; i < 3; ++i)
                    if (i != drop) p[k++] = g[i];
                flat.push_back(p);
            }
            auto hull = convex_hull_2d(flat);
            auto lift = [&](const std::array<long long, 2>& p) {
                for (const auto& g : f.tight_generators) {
                    int k = 0;
                    bool match = true;
                    for (int i = 0; i < 3; ++i) {
                        if (i == drop) continue;
                        if (g[i] != p[k++]) match = false;
                    }
                    if (match) return g;
                }
                fail(ErrorCode::InternalCheckFailed, "hull point lifts to a tight generator");
            };
            if (hull.size() < 3) {
                // Degenerate projection cannot happen for a compact facet;
                // the facet is 2-dimensional and the projection along a
                // nonvanishing normal coordinate is injective on its plane.
                fail(ErrorCode::InternalCheckFailed, "compact facet projects to a 2d polygon");
            }
            Exponent v0 = lift(hull[0]);
            for (size_t i = 1; i + 1 < hull.size(); ++i)
                total += std::abs(det3(v0, lift(hull[i]), lift(hull[i + 1])));
        }
    }
    return total;
}

ConeDescription asymptotic_cone(const std::vector<MonomialIdeal>& inner,
                                const MonomialIdeal& ideal) {
    if (inner.empty()) fail(ErrorCode::EmptyGeneratorSet, "no inner ideals given");
    MonomialIdeal rad = ideal_radical(ideal);
    for (const auto& J : inner) {
        if (J.dim() != ideal.dim())
            fail(ErrorCode::DimensionMismatch, "ideal dimension mismatch");
        if (!rad.contains(J))
            fail(ErrorCode::ContainmentViolated, "inner ideal not inside the radical");
    }
    NewtonPolyhedron np(ideal);
    size_t k = inner.size();
    std::set<std::vector<long long>> rows;
    for (const auto& f : np.facets()) {
        std::vector<long long> row(k + 1);
        for (size_t i = 0; i < k; ++i) {
            long long v = dot(f.normal, inner[i].generators().front());
            for (const auto& g : inner[i].generators()) v = std::min(v, dot(f.normal, g));
            row[i] = v;
        }
        row[k] = -f.level;
        long long g = 0;
        for (long long v : row) g = gcd_ll(g, v);
        if (g > 1)
            for (auto& v : row) v /= g;
        rows.insert(std::move(row));
    }

    // Farkas pruning: a row r is redundant over the others B (within the
    // nonnegative orthant) iff some lambda >= 0 has sum(lambda_j B_j) <= r.
    std::vector<std::vector<long long>> kept(rows.begin(), rows.end());
    for (size_t i = 0; i < kept.size();) {
        std::vector<std::vector<long long>> others;
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        bool redundant = false;
        if (!others.empty()) {
            std::vector<std::vector<Rational>> A(k + 1, std::vector<Rational>(others.size()));
            std::vector<Rational> b(k + 1);
            for (size_t c = 0; c <= k; ++c) {
                for (size_t j = 0; j < others.size(); ++j) A[c][j] = Rational(others[j][c]);
                b[c] = Rational(kept[i][c]);
            }
            redundant = lp_feasible(A, b);
        }
        if (redundant)
            kept.erase(kept.begin() + static_cast<long>(i));
        else
            ++i;
    }
    ConeDescription out;
    out.inner_count = k;
    out.inequalities = std::move(kept);
    return out;
}

} // namespace nubar
