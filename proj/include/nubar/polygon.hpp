#pragma once

#include <array>
#include <vector>

#include "nubar/ideal.hpp"
#include "nubar/polynomial.hpp"
#include "nubar/rational.hpp"

namespace nubar {

// Height or width of an elementary Newton polygon: a nonnegative integer or
// infinity.
struct ExtInt {
    bool infinite = false;
    long long value = 0;

    static ExtInt of(long long v) { return {false, v}; }
    static ExtInt inf() { return {true, 0}; }
    friend bool operator==(const ExtInt& a, const ExtInt& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

// Elementary Newton polygon with vertices (0, h) and (l, 0): the convex
// region above the single side joining them. One of h, l may be infinite
// (giving a pair of half-lines); not both, and not both zero.
struct ElementaryPolygon {
    ExtInt height; // h
    ExtInt width;  // l
};

struct PolygonPart {
    long long multiplicity = 0;
    ElementaryPolygon shape;
};

// Element of the monoid of Newton polygons under Minkowski sum, stored as a
// canonical multiset of parts: equal-slope contributions are merged and each
// part's shape is primitive (gcd of height and width is 1; infinite shapes
// carry unit finite entry). Parts are ordered by decreasing slope: vertical
// half-line pairs, then vertical segments, then finite slopes, then
// horizontal half-lines. The empty multiset is the neutral element.
class NewtonPolygonSum {
  public:
    NewtonPolygonSum() = default;

    static NewtonPolygonSum elementary(ExtInt height, ExtInt width,
                                       long long multiplicity = 1);

    const std::vector<PolygonPart>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const NewtonPolygonSum& a, const NewtonPolygonSum& b);

    // Projections onto the axes: total width and total height, infinite when
    // a half-line part is present.
    Rational width() const;
    Rational height() const;

    // Vertex chain from (0, height) to (width, 0); finite polygons only.
    std::vector<std::array<long long, 2>> vertices() const;

    friend NewtonPolygonSum minkowski_add(const NewtonPolygonSum& a,
                                          const NewtonPolygonSum& b);

  private:
    void canonicalize();

    std::vector<PolygonPart> parts_;
};

// Slope of the most horizontal compact side (the inclination of the last
// finite side); errors when every part is a half-line pair.
Rational last_side_slope(const NewtonPolygonSum& p);

// Newton polygon attached to a plane primary monomial ideal and a nonzero
// polynomial: one part per facet valuation v_k, of width v_k(I), height
// v_k(g), and multiplicity the lattice degree of the facet.
NewtonPolygonSum toric_polygon(const MonomialIdeal& ideal, const PolynomialQ& g);

} // namespace nubar
