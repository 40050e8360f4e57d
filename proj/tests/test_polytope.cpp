#include <polyext/errors.hpp>
#include <polyext/polytope.hpp>

#include "test_helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>

using namespace polyext;
using namespace polyext::testing;

namespace {

VRep vrep(std::size_t dim, std::vector<QVector> pts) {
    return make_vrep(dim, std::move(pts));
}

std::vector<QVector> square_vertices() {
    return {qvec({1, 1}), qvec({1, -1}), qvec({-1, 1}), qvec({-1, -1})};
}

std::vector<QVector> cross_vertices() {
    return {qvec({1, 0}), qvec({-1, 0}), qvec({0, 1}), qvec({0, -1})};
}

std::vector<QVector> hexagon_vertices() {
    return with_negatives({qvec({1, 0}), qvec({1, 1}), qvec({0, 1})});
}

} // namespace

TEST_CASE("convex hull membership") {
    CHECK(in_convex_hull(qvec({0, 0}), square_vertices()));
    CHECK(in_convex_hull(qvec({1, 0}), square_vertices()));
    CHECK_FALSE(in_convex_hull(qvec({1, 2}), square_vertices()));
    CHECK_FALSE(in_convex_hull(qvec({1, 0}), {qvec({0, 1}), qvec({0, -1})}));
    // Lower-dimensional hull.
    CHECK(in_convex_hull(qvec({0, 0}), {qvec({0, 1}), qvec({0, -1})}));
}

TEST_CASE("v_to_h on the bundled shapes") {
    const HRep square = v_to_h(vrep(2, square_vertices()));
    CHECK(square.inequalities == make_hrep(2, cross_vertices()).inequalities);

    const HRep cross = v_to_h(vrep(2, cross_vertices()));
    CHECK(cross.inequalities == make_hrep(2, square_vertices()).inequalities);

    const HRep hex = v_to_h(vrep(2, hexagon_vertices()));
    const auto expected =
        make_hrep(2, with_negatives({qvec({1, 0}), qvec({0, 1}), qvec({1, -1})}));
    CHECK(hex.inequalities == expected.inequalities);
}

TEST_CASE("v_to_h rejects bad input") {
    CHECK_THROWS_AS(v_to_h(vrep(2, {qvec({1, 0}), qvec({0, 1})})), ValidationError);
    CHECK_THROWS_AS(v_to_h(vrep(2, {qvec({1, 0}), qvec({-1, 0})})), ValidationError);
    CHECK_THROWS_AS(v_to_h(vrep(10, {QVector(10, Rational(1))}), kDefaultDimensionCap),
                    CapExceededError);
}

TEST_CASE("h_to_v on the bundled shapes") {
    const VRep square = h_to_v(make_hrep(2, cross_vertices()));
    CHECK(square.vertices == vrep(2, square_vertices()).vertices);

    const VRep cross = h_to_v(make_hrep(2, square_vertices()));
    CHECK(cross.vertices == vrep(2, cross_vertices()).vertices);
}

TEST_CASE("h_to_v reports unbounded systems") {
    CHECK_THROWS_AS(h_to_v(make_hrep(2, {qvec({1, 0}), qvec({-1, 0})})), ValidationError);
    CHECK_THROWS_AS(h_to_v(make_hrep(2, {qvec({1, 0})})), ValidationError);
}

TEST_CASE("operator ball of the square space is the product of two diamonds") {
    // Constraints <y* (x) x, T> <= 1 over x in {(1,1),(1,-1)} and y* in
    // {+-e1, +-e2}, with both signs of x as well: 16 half-spaces in R^4.
    std::vector<QVector> constraints;
    const std::vector<QVector> xs = {qvec({1, 1}), qvec({1, -1}), qvec({-1, -1}),
                                     qvec({-1, 1})};
    const std::vector<QVector> fs = cross_vertices();
    for (const auto& f : fs) {
        for (const auto& x : xs) constraints.push_back(tensor_flatten(f, x));
    }
    const VRep ball = h_to_v(make_hrep(4, constraints));

    // Oracle: the ball is a product of two diamonds, so its vertices are all
    // row choices from {+-e1, +-e2}.
    std::vector<QVector> expected;
    for (const auto& r1 : cross_vertices()) {
        for (const auto& r2 : cross_vertices()) {
            QVector flat = r1;
            flat.insert(flat.end(), r2.begin(), r2.end());
            expected.push_back(std::move(flat));
        }
    }
    CHECK(ball.vertices == vrep(4, expected).vertices);
    CHECK(ball.vertices.size() == 16);
}

TEST_CASE("extreme_filter removes interior and face-interior points") {
    const VRep mid = extreme_filter({qvec({1, 0}), qvec({0, 1}),
                                     {make_rational(BigInt(1), BigInt(2)),
                                      make_rational(BigInt(1), BigInt(2))}});
    CHECK(mid.vertices == vrep(2, {qvec({1, 0}), qvec({0, 1})}).vertices);

    const VRep square = extreme_filter(square_vertices());
    CHECK(square.vertices.size() == 4);

    // Images of the cube vertices under the coordinate projection.
    std::vector<QVector> images;
    for (int sx : {-1, 1}) {
        for (int sy : {-1, 1}) {
            for (int sz : {-1, 1}) {
                (void)sz;
                images.push_back(qvec({sx, sy}));
            }
        }
    }
    const VRep proj = extreme_filter(images);
    CHECK(proj.vertices == vrep(2, square_vertices()).vertices);

    CHECK_THROWS_AS(extreme_filter({}), ValidationError);

    // Duplicated points are deduplicated, not dropped.
    const VRep dup = extreme_filter({qvec({1, 0}), qvec({1, 0}), qvec({-1, 0})});
    CHECK(dup.vertices.size() == 2);
}

TEST_CASE("face_of returns exactly the active inequalities") {
    const HRep square = make_hrep(2, cross_vertices());
    CHECK(face_of(square, qvec({1, 0})) == std::vector<QVector>{qvec({1, 0})});
    const auto corner = face_of(square, qvec({1, 1}));
    CHECK(corner.size() == 2);
    CHECK(face_of(square, qvec({0, 0})).empty());
    CHECK_THROWS_AS(face_of(square, qvec({2, 0})), ValidationError);
}

TEST_CASE("bipolar round trip on random symmetric polytopes") {
    std::mt19937_64 rng(29);
    int done = 0;
    while (done < 25) {
        std::uniform_int_distribution<std::size_t> dim_dist(1, 4);
        const std::size_t d = dim_dist(rng);
        std::uniform_int_distribution<std::size_t> count_dist(d, d + 3);
        std::vector<QVector> pts;
        const std::size_t k = count_dist(rng);
        for (std::size_t i = 0; i < k; ++i) pts.push_back(random_vector(rng, d, 3, 2));
        pts = with_negatives(pts);
        if (span_dimension(pts) != d) continue;
        const VRep v = extreme_filter(pts);
        if (is_zero(v.vertices.front()) || v.vertices.size() < 2 * d) continue;

        const HRep h = v_to_h(v);
        const VRep back = h_to_v(h);
        CHECK(back.vertices == v.vertices);

        // Symmetry preservation.
        CHECK(is_symmetric_set(h.inequalities));
        CHECK(is_symmetric_set(back.vertices));

        // Each vertex is pinned by at least d linearly independent facets.
        for (const auto& vert : back.vertices) {
            CHECK(span_dimension(face_of(h, vert)) == d);
        }
        ++done;
    }
}

namespace {

// Independent oracle: a vertex is a feasible solution of some d linearly
// independent active inequalities. Enumerate every d-subset directly.
std::vector<QVector> brute_force_vertices(const HRep& h) {
    const std::size_t d = h.dim;
    const std::size_t r = h.inequalities.size();
    std::vector<QVector> found;
    std::vector<std::size_t> pick(d);
    auto solve = [&]() {
        QMatrix a(d, d);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) a.at(i, j) = h.inequalities[pick[i]][j];
        }
        if (rank(a) != d) return;
        const QMatrix inv = inverse(a);
        const QVector x = mat_apply(inv, QVector(d, Rational(1)));
        for (const auto& ineq : h.inequalities) {
            if (dot(ineq, x) > 1) return;
        }
        found.push_back(x);
    };
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                            std::size_t depth) {
        if (depth == d) {
            solve();
            return;
        }
        for (std::size_t i = start; i + (d - depth) <= r; ++i) {
            pick[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    std::sort(found.begin(), found.end(), LexLess{});
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

} // namespace

TEST_CASE("double description agrees with subset enumeration") {
    std::vector<HRep> systems = {
        make_hrep(2, cross_vertices()),
        make_hrep(2, square_vertices()),
        v_to_h(vrep(2, hexagon_vertices())),
        v_to_h(extreme_filter(with_negatives(
            {qvec({2, 1}), qvec({1, 2}), qvec({-1, 2}), qvec({-2, 1})}))),
    };
    // The operator ball of the square space against itself, in dimension 4.
    {
        std::vector<QVector> constraints;
        for (const auto& f : cross_vertices()) {
            for (const auto& x : square_vertices()) constraints.push_back(tensor_flatten(f, x));
        }
        systems.push_back(make_hrep(4, constraints));
    }
    std::mt19937_64 rng(31);
    int added = 0;
    while (added < 10) {
        std::uniform_int_distribution<std::size_t> dim_dist(2, 3);
        const std::size_t d = dim_dist(rng);
        std::vector<QVector> pts;
        for (std::size_t i = 0; i < d + 2; ++i) pts.push_back(random_vector(rng, d, 3, 2));
        pts = with_negatives(pts);
        if (span_dimension(pts) != d) continue;
        const VRep v = extreme_filter(pts);
        if (is_zero(v.vertices.front()) || v.vertices.size() < 2 * d) continue;
        systems.push_back(v_to_h(v));
        ++added;
    }
    for (const auto& h : systems) {
        CHECK(h_to_v(h).vertices == brute_force_vertices(h));
    }
}

TEST_CASE("conversions are deterministic") {
    const HRep h1 = v_to_h(vrep(2, hexagon_vertices()));
    const HRep h2 = v_to_h(vrep(2, hexagon_vertices()));
    CHECK(h1 == h2);
    CHECK(h_to_v(h1) == h_to_v(h2));
}

TEST_CASE("budgeted enumeration reports partial results") {
    const auto past = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    const VertexEnumeration e =
        h_to_v_budgeted(make_hrep(2, v_to_h(vrep(2, hexagon_vertices())).inequalities),
                        past);
    CHECK_FALSE(e.complete);

    const VertexEnumeration full = h_to_v_budgeted(
        make_hrep(2, v_to_h(vrep(2, hexagon_vertices())).inequalities), std::nullopt);
    CHECK(full.complete);
    CHECK(full.points.size() == 6);
}

TEST_CASE("adjacency in the square") {
    const VRep v = vrep(2, square_vertices());
    const HRep h = v_to_h(v);
    const auto edges = adjacent_vertex_pairs(v, h);
    CHECK(edges.size() == 4);
    for (const auto& [i, j] : edges) {
        // Corners of the square joined by an edge differ in one coordinate.
        const QVector diff = sub(v.vertices[i], v.vertices[j]);
        std::size_t nonzero = 0;
        for (const auto& e : diff) {
            if (e != 0) ++nonzero;
        }
        CHECK(nonzero == 1);
    }
}

TEST_CASE("one-dimensional polytopes work") {
    const VRep v = vrep(1, {qvec({2}), qvec({-2})});
    const HRep h = v_to_h(v);
    CHECK(h.inequalities ==
          std::vector<QVector>{{make_rational(BigInt(-1), BigInt(2))},
                               {make_rational(BigInt(1), BigInt(2))}});
    CHECK(h_to_v(h).vertices == v.vertices);
}
