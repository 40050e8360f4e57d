#include <polyext/space.hpp>

#include <polyext/errors.hpp>

#include <algorithm>

namespace polyext {

PolyhedralSpace make_space(const std::vector<QVector>& vertices, std::size_t cap) {
    if (vertices.empty()) throw ValidationError("space needs at least one vertex");
    const std::size_t d = vertices[0].size();
    if (d == 0) throw ValidationError("space must have dimension at least 1");

    VRep raw = make_vrep(d, vertices);
    if (!is_symmetric_set(raw.vertices)) {
        throw ValidationError("vertex set is not centrally symmetric");
    }
    VRep ball = extreme_filter(raw.vertices);
    if (span_dimension(ball.vertices) != d) {
        throw ValidationError("unit ball is not full-dimensional");
    }
    if (ball.vertices.size() < 2 * d) {
        throw ValidationError("too few extreme points for a symmetric full-dimensional ball");
    }
    HRep facets = v_to_h(ball, cap);
    VRep dual_ball{d, facets.inequalities};
    return PolyhedralSpace{d, std::move(ball), std::move(dual_ball), std::move(facets)};
}

namespace {

std::vector<QVector> sign_vectors(std::size_t n) {
    std::vector<QVector> out;
    out.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        QVector v(n);
        for (std::size_t j = 0; j < n; ++j) {
            v[j] = (mask >> j) & 1 ? Rational(-1) : Rational(1);
        }
        out.push_back(std::move(v));
    }
    return out;
}

void check_builtin_dim(std::size_t n) {
    if (n < 1 || n > kDefaultDimensionCap) {
        throw ValidationError("built-in spaces support dimensions 1 through " +
                              std::to_string(kDefaultDimensionCap));
    }
}

} // namespace

PolyhedralSpace linf_space(std::size_t n) {
    check_builtin_dim(n);
    return make_space(sign_vectors(n));
}

PolyhedralSpace l1_space(std::size_t n) {
    check_builtin_dim(n);
    std::vector<QVector> verts;
    for (std::size_t j = 0; j < n; ++j) {
        QVector e(n, Rational(0));
        e[j] = 1;
        verts.push_back(e);
        verts.push_back(negate(e));
    }
    return make_space(verts);
}

PolyhedralSpace hexagon_space() {
    std::vector<QVector> verts = {
        {Rational(1), Rational(0)}, {Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
    std::vector<QVector> all = verts;
    for (const auto& v : verts) all.push_back(negate(v));
    return make_space(all);
}

PolyhedralSpace octagon_space() {
    std::vector<QVector> verts = {
        {Rational(2), Rational(1)},
        {Rational(1), Rational(2)},
        {Rational(-1), Rational(2)},
        {Rational(-2), Rational(1)}};
    std::vector<QVector> all = verts;
    for (const auto& v : verts) all.push_back(negate(v));
    return make_space(all);
}

PolyhedralSpace dual_space(const PolyhedralSpace& s) {
    return PolyhedralSpace{s.dim, s.dual_ball, s.ball, HRep{s.dim, s.ball.vertices}};
}

Rational norm(const PolyhedralSpace& s, const QVector& x) {
    if (x.size() != s.dim) throw ValidationError("dimension mismatch in norm");
    Rational best(0);
    for (const auto& f : s.dual_ball.vertices) {
        const Rational v = dot(f, x);
        if (v > best) best = v;
    }
    return best;
}

SupportFace ext_J(const PolyhedralSpace& s, const QVector& x) {
    if (x.size() != s.dim) throw ValidationError("dimension mismatch in ext_J");
    if (is_zero(x)) throw ValidationError("support of the zero vector is undefined");
    const Rational level = norm(s, x);
    SupportFace face;
    face.point = x;
    for (const auto& f : s.dual_ball.vertices) {
        if (dot(f, x) == level) face.functionals.push_back(f);
    }
    face.order = span_dimension(face.functionals);
    return face;
}

std::size_t smoothness_order(const PolyhedralSpace& s, const QVector& x) {
    if (norm(s, x) != 1) throw ValidationError("point is not on the unit sphere");
    return ext_J(s, x).order;
}

bool is_ball_vertex(const PolyhedralSpace& s, const QVector& x) {
    return contains_point(s.ball.vertices, x);
}

bool is_extreme_point(const PolyhedralSpace& s, const QVector& x) {
    const std::size_t order = smoothness_order(s, x);
    const bool member = is_ball_vertex(s, x);
    if (member != (order == s.dim)) {
        throw InternalInconsistencyError(
            "extreme-point membership disagrees with the smoothness criterion");
    }
    return member;
}

std::vector<QVector> cyclic_vertices_2d(const PolyhedralSpace& s) {
    if (s.dim != 2) throw ValidationError("cyclic ordering requires a 2-dimensional space");
    std::vector<QVector> verts = s.ball.vertices;
    auto half = [](const QVector& v) {
        // 0 for angles in [0, pi), 1 for [pi, 2pi)
        if (v[1] > 0 || (v[1] == 0 && v[0] > 0)) return 0;
        return 1;
    };
    std::sort(verts.begin(), verts.end(), [&](const QVector& a, const QVector& b) {
        const int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        return a[0] * b[1] - a[1] * b[0] > 0;
    });
    return verts;
}

} // namespace polyext
