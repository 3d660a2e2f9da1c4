#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "nubar/arcs.hpp"
#include "nubar/branch.hpp"
#include "nubar/closure_ops.hpp"
#include "nubar/ideal.hpp"
#include "nubar/polygon.hpp"
#include "nubar/polyhedron.hpp"

namespace nubar {

using Json = nlohmann::ordered_json;

// Inputs. Ideals: {"vars": ["x","y"], "generators": [[..], ..]}; "vars" may
// also be a bare variable count. Polynomials: {"terms": [{"coeff": "p/q",
// "exp": [..]}, ..]}; a bare exponent array is accepted as a shorthand for a
// single monic monomial. Rationals travel as strings ("p/q", "p", or "inf")
// so nothing is rounded.
struct NamedIdeal {
    MonomialIdeal ideal;
    std::vector<std::string> vars;
    bool generators_normalized = false; // input list was reordered or pruned
};
NamedIdeal named_ideal_from_json(const Json& j);
MonomialIdeal ideal_from_json(const Json& j);
PolynomialQ polynomial_from_json(const Json& j, int expected_dim);
Json parse_json_text(const std::string& text);

Json to_json(const Rational& r);
Json to_json(const Exponent& e);
Json to_json(const PolynomialQ& f);
Json to_json(const PolynomialQ& f, const std::vector<std::string>& vars);
Json to_json(const MonomialIdeal& ideal);
Json to_json(const MonomialIdeal& ideal, const std::vector<std::string>& vars);
Json to_json(const FacetValuation& f);
Json to_json(const NubarResult& r);
Json to_json(const DependenceCertificate& c);
Json to_json(const VerifyReport& r);
Json to_json(const LojasiewiczReport& r);
Json to_json(const GradientReport& r);
Json to_json(const TypeReport& r);
Json to_json(const IzumiReport& r);
Json to_json(const ConeDescription& c);
Json to_json(const ArcInfimumReport& r);
Json to_json(const BranchInvariants& b);
Json to_json(const NewtonPolygonSum& p);
Json to_json(const MPowerClosure& c);

} // namespace nubar
