#include "nubar/polygon.hpp"

#include <algorithm>
#include <map>

#include "nubar/polyhedron.hpp"

namespace nubar {

namespace {

// Bucket order: decreasing slope. Vertical half-line pairs (h = inf) come
// first, then finite vertical segments (l = 0), then finite slopes, then
// horizontal half-lines (l = inf) of slope zero.
enum class Kind { VerticalRay = 0, VerticalSegment = 1, Finite = 2, HorizontalRay = 3 };

Kind kind_of(const ElementaryPolygon& e) {
    if (e.height.infinite) return Kind::VerticalRay;
    if (e.width.infinite) return Kind::HorizontalRay;
    if (e.width.value == 0) return Kind::VerticalSegment;
    return Kind::Finite;
}

void validate(const ElementaryPolygon& e) {
    if (e.height.infinite && e.width.infinite)
        fail(ErrorCode::InvalidExponent, "elementary polygon with two infinite entries");
    if (!e.height.infinite && e.height.value < 0)
        fail(ErrorCode::InvalidExponent, "negative polygon height");
    if (!e.width.infinite && e.width.value < 0)
        fail(ErrorCode::InvalidExponent, "negative polygon width");
    bool h0 = !e.height.infinite && e.height.value == 0;
    bool l0 = !e.width.infinite && e.width.value == 0;
    if (h0 && l0)
        fail(ErrorCode::InvalidExponent, "elementary polygon with empty side");
}

} // namespace

NewtonPolygonSum NewtonPolygonSum::elementary(ExtInt height, ExtInt width,
                                              long long multiplicity) {
    if (multiplicity < 0)
        fail(ErrorCode::InvalidExponent, "negative polygon multiplicity");
    ElementaryPolygon e{height, width};
    validate(e);
    NewtonPolygonSum p;
    if (multiplicity > 0) p.parts_.push_back({multiplicity, e});
    p.canonicalize();
    return p;
}

void NewtonPolygonSum::canonicalize() {
    // Totals per bucket; finite parts are grouped by slope.
    long long vertical_ray_width = 0;   // h = inf: only the width matters
    long long horizontal_ray_height = 0; // l = inf: only the height matters
    long long vertical_segment_height = 0; // l = 0
    std::map<Rational, std::pair<long long, long long>, std::greater<Rational>> finite;
    for (const auto& part : parts_) {
        validate(part.shape);
        if (part.multiplicity == 0) continue;
        if (part.multiplicity < 0)
            fail(ErrorCode::InvalidExponent, "negative polygon multiplicity");
        switch (kind_of(part.shape)) {
            case Kind::VerticalRay:
                vertical_ray_width += part.multiplicity * part.shape.width.value;
                break;
            case Kind::HorizontalRay:
                horizontal_ray_height += part.multiplicity * part.shape.height.value;
                break;
            case Kind::VerticalSegment:
                vertical_segment_height += part.multiplicity * part.shape.height.value;
                break;
            case Kind::Finite: {
                long long h = part.shape.height.value;
                long long l = part.shape.width.value;
                Rational slope(h, l);
                auto& acc = finite[slope];
                acc.first += part.multiplicity * h;
                acc.second += part.multiplicity * l;
                break;
            }
        }
    }
    parts_.clear();
    if (vertical_ray_width > 0)
        parts_.push_back({vertical_ray_width, {ExtInt::inf(), ExtInt::of(1)}});
    if (vertical_segment_height > 0)
        parts_.push_back({vertical_segment_height, {ExtInt::of(1), ExtInt::of(0)}});
    for (const auto& [slope, hl] : finite) {
        long long g = gcd_ll(hl.first, hl.second);
        parts_.push_back({g, {ExtInt::of(hl.first / g), ExtInt::of(hl.second / g)}});
    }
    if (horizontal_ray_height > 0)
        parts_.push_back({horizontal_ray_height, {ExtInt::of(1), ExtInt::inf()}});
}

bool operator==(const NewtonPolygonSum& a, const NewtonPolygonSum& b) {
    if (a.parts_.size() != b.parts_.size()) return false;
    for (size_t i = 0; i < a.parts_.size(); ++i) {
        if (a.parts_[i].multiplicity != b.parts_[i].multiplicity) return false;
        if (!(a.parts_[i].shape.height == b.parts_[i].shape.height)) return false;
        if (!(a.parts_[i].shape.width == b.parts_[i].shape.width)) return false;
    }
    return true;
}

Rational NewtonPolygonSum::width() const {
    Rational total(0);
    for (const auto& p : parts_) {
        if (p.shape.width.infinite) return Rational::infinity();
        total += Rational(p.multiplicity * p.shape.width.value);
    }
    return total;
}

Rational NewtonPolygonSum::height() const {
    Rational total(0);
    for (const auto& p : parts_) {
        if (p.shape.height.infinite) return Rational::infinity();
        total += Rational(p.multiplicity * p.shape.height.value);
    }
    return total;
}

std::vector<std::array<long long, 2>> NewtonPolygonSum::vertices() const {
    for (const auto& p : parts_)
        if (p.shape.height.infinite || p.shape.width.infinite)
            fail(ErrorCode::NoCompactSide, "vertex chain of an unbounded polygon");
    std::vector<std::array<long long, 2>> v;
    long long x = 0;
    long long y = height().num().convert_to<long long>();
    v.push_back({x, y});
    for (const auto& p : parts_) {
        x += p.multiplicity * p.shape.width.value;
        y -= p.multiplicity * p.shape.height.value;
        v.push_back({x, y});
    }
    return v;
}

NewtonPolygonSum minkowski_add(const NewtonPolygonSum& a, const NewtonPolygonSum& b) {
    NewtonPolygonSum r;
    r.parts_ = a.parts_;
    r.parts_.insert(r.parts_.end(), b.parts_.begin(), b.parts_.end());
    r.canonicalize();
    return r;
}

Rational last_side_slope(const NewtonPolygonSum& p) {
    // Slope of a compact part: vertical segments are infinitely steep,
    // finite parts have slope h/l. Half-line parts are not sides.
    bool found = false;
    Rational best;
    for (const auto& part : p.parts()) {
        if (part.shape.height.infinite || part.shape.width.infinite) continue;
        Rational slope = part.shape.width.value == 0
                             ? Rational::infinity()
                             : Rational(part.shape.height.value, part.shape.width.value);
        if (!found || slope < best) best = slope;
        found = true;
    }
    if (!found) fail(ErrorCode::NoCompactSide, "polygon has no compact side");
    return best;
}

NewtonPolygonSum toric_polygon(const MonomialIdeal& ideal, const PolynomialQ& g) {
    if (ideal.dim() != 2)
        fail(ErrorCode::PolygonUnsupportedDimension, "toric polygon needs 2 variables");
    if (!ideal.is_primary())
        fail(ErrorCode::NotPrimary, "toric polygon needs a primary ideal");
    if (g.dim() != 2)
        fail(ErrorCode::DimensionMismatch, "polynomial/ideal dimension mismatch");
    if (g.is_zero()) fail(ErrorCode::ZeroPolynomial, "toric polygon of the zero polynomial");
    NewtonPolyhedron np(ideal);
    NewtonPolygonSum sum;
    for (const auto& f : np.facets()) {
        check(f.compact && f.lattice_degree.has_value(),
              "facets of a plane primary ideal are compact edges");
        long long h = NewtonPolyhedron::valuation(f, g);
        sum = minkowski_add(sum, NewtonPolygonSum::elementary(ExtInt::of(h),
                                                              ExtInt::of(f.level),
                                                              *f.lattice_degree));
    }
    return sum;
}

} // namespace nubar
