#ifndef POLYEXT_JSON_IO_HPP
#define POLYEXT_JSON_IO_HPP

#include <polyext/analysis.hpp>

#include <json.hpp>

namespace polyext {

using Json = nlohmann::json;

// Rationals travel as canonical strings ("3", "-1/2") in every payload.
Json vector_json(const QVector& v);
QVector vector_from_json(const Json& j);

Json matrix_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j);

Json vrep_json(const VRep& v);
Json hrep_json(const HRep& h);

// {"dim": n, "vertices": [[...]]}; emitted spaces also carry the dual
// vertices under "dual_vertices".
Json space_json(const PolyhedralSpace& s);
PolyhedralSpace space_from_json(const Json& j, std::size_t cap = kDefaultDimensionCap);

// {"domain": <space>, "codomain": <space>, "matrix": [["p/q", ...], ...]}
Json operator_json(const Operator& t);
Operator operator_from_json(const Json& j, std::size_t cap = kDefaultDimensionCap);

Json support_json(const OperatorSupport& s);
Json census_json(const ContractionCensus& c);
Json weak_lp_json(const WeakLPVerdict& v);
Json lp_json(const LPVerdict& v);

} // namespace polyext

#endif
