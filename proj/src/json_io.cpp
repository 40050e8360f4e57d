#include <polyext/json_io.hpp>

#include <polyext/errors.hpp>

namespace polyext {

namespace {

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) {
        throw ValidationError("rational must be a string like \"3\" or \"-1/2\"");
    }
    return parse_rational(j.get<std::string>());
}

} // namespace

Json vector_json(const QVector& v) {
    Json a = Json::array();
    for (const auto& e : v) a.push_back(to_string(e));
    return a;
}

QVector vector_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) {
        throw ValidationError("vector must be a non-empty array of rationals");
    }
    QVector v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(rational_from_json(e));
    return v;
}

Json matrix_json(const QMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

QMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) {
        throw ValidationError("matrix must be a non-empty array of rows");
    }
    std::vector<QVector> rows;
    for (const auto& row : j) rows.push_back(vector_from_json(row));
    const std::size_t cols = rows[0].size();
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ValidationError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = rows[i][c];
    }
    return m;
}

namespace {

Json point_list_json(const std::vector<QVector>& points) {
    Json a = Json::array();
    for (const auto& p : points) a.push_back(vector_json(p));
    return a;
}

std::vector<QVector> point_list_from_json(const Json& j) {
    if (!j.is_array()) throw ValidationError("expected an array of vectors");
    std::vector<QVector> points;
    for (const auto& p : j) points.push_back(vector_from_json(p));
    return points;
}

} // namespace

Json vrep_json(const VRep& v) {
    return Json{{"dim", v.dim}, {"vertices", point_list_json(v.vertices)}};
}

Json hrep_json(const HRep& h) {
    return Json{{"dim", h.dim}, {"inequalities", point_list_json(h.inequalities)}};
}

Json space_json(const PolyhedralSpace& s) {
    return Json{{"dim", s.dim},
                {"vertices", point_list_json(s.ball.vertices)},
                {"dual_vertices", point_list_json(s.dual_ball.vertices)}};
}

PolyhedralSpace space_from_json(const Json& j, std::size_t cap) {
    if (!j.is_object() || !j.contains("vertices")) {
        throw ValidationError("space must be an object with a \"vertices\" array");
    }
    std::vector<QVector> vertices = point_list_from_json(j.at("vertices"));
    PolyhedralSpace s = make_space(vertices, cap);
    if (j.contains("dim")) {
        const auto dim = j.at("dim").get<std::size_t>();
        if (dim != s.dim) throw ValidationError("declared dim does not match the vertices");
    }
    return s;
}

Json operator_json(const Operator& t) {
    return Json{{"domain", space_json(t.domain)},
                {"codomain", space_json(t.codomain)},
                {"matrix", matrix_json(t.matrix)}};
}

Operator operator_from_json(const Json& j, std::size_t cap) {
    if (!j.is_object() || !j.contains("domain") || !j.contains("codomain") ||
        !j.contains("matrix")) {
        throw ValidationError(
            "operator must be an object with \"domain\", \"codomain\" and \"matrix\"");
    }
    PolyhedralSpace domain = space_from_json(j.at("domain"), cap);
    PolyhedralSpace codomain = space_from_json(j.at("codomain"), cap);
    QMatrix m = matrix_from_json(j.at("matrix"));
    return make_operator(std::move(domain), std::move(codomain), std::move(m));
}

Json support_json(const OperatorSupport& s) {
    Json pairs = Json::array();
    for (const auto& [x, f] : s.pairs) {
        pairs.push_back(Json{{"attainer", vector_json(x)}, {"functional", vector_json(f)}});
    }
    return Json{{"attainers", point_list_json(s.attainers)},
                {"attainer_count", attainer_count(s)},
                {"pairs", std::move(pairs)},
                {"order", s.order}};
}

Json census_json(const ContractionCensus& c) {
    Json contractions = Json::array();
    for (const auto& t : c.contractions) contractions.push_back(matrix_json(t.matrix));
    Json per_case = Json::object();
    for (const auto& [tag, n] : c.per_case) per_case[to_string(tag)] = n;
    Json out{{"pair",
              Json{{"domain", space_json(c.domain)}, {"codomain", space_json(c.codomain)}}},
             {"count", c.count},
             {"contractions", std::move(contractions)},
             {"per_case", std::move(per_case)}};
    out["isometries"] = c.isometries ? Json(*c.isometries) : Json(nullptr);
    return out;
}

Json weak_lp_json(const WeakLPVerdict& v) {
    Json out;
    switch (v.status) {
        case WeakLPStatus::Holds:
            out["holds"] = true;
            out["mode"] = "exhaustive";
            break;
        case WeakLPStatus::Fails:
            out["holds"] = false;
            out["mode"] = "exhaustive";
            break;
        case WeakLPStatus::InconclusiveBudget:
            out["holds"] = nullptr;
            out["mode"] = "inconclusive-budget";
            out["order_bound_checked"] = v.bound_checked;
            out["max_order"] = v.max_order;
            break;
    }
    out["witness"] = v.witness ? matrix_json(v.witness->matrix) : Json(nullptr);
    out["checked"] = v.checked;
    return out;
}

Json lp_json(const LPVerdict& v) {
    return Json{
        {"holds", v.holds},
        {"extreme_not_vertex_preserving",
         v.extreme_not_preserving ? matrix_json(v.extreme_not_preserving->matrix)
                                  : Json(nullptr)},
        {"vertex_preserving_not_extreme",
         v.preserving_not_extreme ? matrix_json(v.preserving_not_extreme->matrix)
                                  : Json(nullptr)},
        {"extreme_count", v.extreme_count},
        {"vertex_preserving_count", v.preserving_count}};
}

} // namespace polyext
