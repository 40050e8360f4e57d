#include <polyext/errors.hpp>
#include <polyext/space.hpp>

#include "test_helpers.hpp"

#include <doctest.h>

#include <algorithm>

using namespace polyext;
using namespace polyext::testing;

namespace {

const Rational kHalf = make_rational(BigInt(1), BigInt(2));

// Point with strictly positive weight on every vertex of the facet of f.
QVector facet_interior_point(const PolyhedralSpace& s, const QVector& f,
                             std::mt19937_64& rng) {
    std::vector<QVector> on_facet;
    for (const auto& v : s.ball.vertices) {
        if (dot(f, v) == 1) on_facet.push_back(v);
    }
    REQUIRE(!on_facet.empty());
    QVector x(s.dim, Rational(0));
    Rational total(0);
    std::vector<Rational> weights;
    for (std::size_t i = 0; i < on_facet.size(); ++i) {
        const Rational w = random_unit_interval(rng);
        weights.push_back(w);
        total += w;
    }
    for (std::size_t i = 0; i < on_facet.size(); ++i) {
        x = add(x, scale(weights[i] / total, on_facet[i]));
    }
    return x;
}

} // namespace

TEST_CASE("make_space validates and canonicalizes") {
    const PolyhedralSpace square = make_space(with_negatives({qvec({1, 1}), qvec({1, -1})}));
    CHECK(square.dim == 2);
    CHECK(square.ball.vertices.size() == 4);
    CHECK(square.dual_ball.vertices ==
          make_vrep(2, with_negatives({qvec({1, 0}), qvec({0, 1})})).vertices);

    const PolyhedralSpace hex = hexagon_space();
    CHECK(hex.ball.vertices.size() == 6);
    CHECK(hex.facets.inequalities.size() == 6);
    CHECK(hex.dual_ball.vertices ==
          make_vrep(2, with_negatives({qvec({1, 0}), qvec({0, 1}), qvec({1, -1})})).vertices);

    CHECK_THROWS_AS(make_space({qvec({1, 0}), qvec({0, 1})}), ValidationError);
    CHECK_THROWS_AS(make_space({qvec({1, 0}), qvec({-1, 0})}), ValidationError); // 2D, flat
    CHECK_THROWS_AS(make_space(std::vector<QVector>{}), ValidationError);

    // Non-extreme points are dropped, not kept.
    std::vector<QVector> with_mid = with_negatives({qvec({1, 1}), qvec({1, -1})});
    with_mid.push_back(qvec({1, 0}));
    with_mid.push_back(qvec({-1, 0}));
    CHECK(make_space(with_mid).ball.vertices.size() == 4);
}

TEST_CASE("built-in spaces") {
    CHECK(linf_space(2).ball.vertices.size() == 4);
    CHECK(linf_space(3).ball.vertices.size() == 8);
    CHECK(l1_space(3).ball.vertices.size() == 6);
    CHECK(l1_space(3).ball.vertices ==
          make_vrep(3, with_negatives({qvec({1, 0, 0}), qvec({0, 1, 0}), qvec({0, 0, 1})}))
              .vertices);

    // Mutual duality of the sup and sum norms.
    CHECK(dual_space(linf_space(4)).ball == l1_space(4).ball);
    CHECK(dual_space(l1_space(4)).ball == linf_space(4).ball);

    CHECK(hexagon_space().ball.vertices.size() == 6);
    CHECK(octagon_space().ball.vertices.size() == 8);

    // Hexagon vertex relation x2 = x1 + x3.
    CHECK(add(qvec({1, 0}), qvec({0, 1})) == qvec({1, 1}));
    CHECK(is_ball_vertex(hexagon_space(), qvec({1, 1})));

    CHECK_THROWS_AS(linf_space(0), ValidationError);
    CHECK_THROWS_AS(linf_space(10), ValidationError);
}

TEST_CASE("norm evaluation") {
    const PolyhedralSpace sq = linf_space(2);
    CHECK(norm(sq, {kHalf, make_rational(BigInt(-3), BigInt(4))}) ==
          make_rational(BigInt(3), BigInt(4)));

    const PolyhedralSpace hex = hexagon_space();
    CHECK(norm(hex, qvec({1, 1})) == 1);
    CHECK(norm(hex, qvec({1, -1})) == 2);
    CHECK(norm(hex, qvec({0, 0})) == 0);
}

TEST_CASE("norm axioms and facet containment agree") {
    std::mt19937_64 rng(41);
    const std::vector<PolyhedralSpace> spaces = {linf_space(2), hexagon_space(),
                                                 octagon_space(), l1_space(3)};
    for (const auto& s : spaces) {
        for (int trial = 0; trial < 60; ++trial) {
            const QVector x = random_vector(rng, s.dim, 4, 3);
            const QVector y = random_vector(rng, s.dim, 4, 3);
            const Rational lambda = random_rational(rng, 5, 3);
            CHECK(norm(s, scale(lambda, x)) == abs(lambda) * norm(s, x));
            CHECK(norm(s, add(x, y)) <= norm(s, x) + norm(s, y));
            CHECK((norm(s, x) == 0) == is_zero(x));

            const bool inside = norm(s, x) <= 1;
            const bool in_facets = std::all_of(
                s.facets.inequalities.begin(), s.facets.inequalities.end(),
                [&](const QVector& a) { return dot(a, x) <= 1; });
            CHECK(inside == in_facets);
        }
    }
}

TEST_CASE("supporting functionals") {
    const PolyhedralSpace sq = linf_space(2);
    const SupportFace smooth = ext_J(sq, qvec({1, 0}));
    CHECK(smooth.functionals == std::vector<QVector>{qvec({1, 0})});
    CHECK(smooth.order == 1);

    const SupportFace corner = ext_J(sq, qvec({1, 1}));
    CHECK(corner.order == 2);
    CHECK(corner.functionals.size() == 2);

    const SupportFace hex = ext_J(hexagon_space(), qvec({1, 1}));
    CHECK(hex.functionals == std::vector<QVector>{qvec({0, 1}), qvec({1, 0})});
    CHECK(hex.order == 2);

    // Support works at any positive level.
    const SupportFace scaled = ext_J(sq, qvec({2, 0}));
    CHECK(scaled.functionals == std::vector<QVector>{qvec({1, 0})});

    CHECK_THROWS_AS(ext_J(sq, qvec({0, 0})), ValidationError);
}

TEST_CASE("smoothness order on the cube") {
    const PolyhedralSpace cube = linf_space(3);
    CHECK(smoothness_order(cube, qvec({1, 1, 1})) == 3);
    CHECK(smoothness_order(cube, qvec({1, 1, 0})) == 2);
    CHECK(smoothness_order(cube, qvec({1, 0, 0})) == 1);
    CHECK_THROWS_AS(smoothness_order(cube, qvec({2, 0, 0})), ValidationError);
    CHECK_THROWS_AS(smoothness_order(cube, qvec({0, 0, 0})), ValidationError);
}

TEST_CASE("extreme points and the smoothness criterion agree") {
    const PolyhedralSpace hex = hexagon_space();
    CHECK(is_extreme_point(hex, qvec({1, 1})));
    CHECK_FALSE(is_extreme_point(hex, {Rational(1), kHalf})); // edge midpoint
    CHECK_FALSE(is_extreme_point(linf_space(2), qvec({1, 0})));

    std::mt19937_64 rng(43);
    const std::vector<PolyhedralSpace> spaces = {linf_space(2), linf_space(3),
                                                 hexagon_space(), octagon_space(),
                                                 l1_space(2),    l1_space(3)};
    for (const auto& s : spaces) {
        for (const auto& v : s.ball.vertices) {
            CHECK(smoothness_order(s, v) == s.dim);
            CHECK(is_extreme_point(s, v));
        }
        for (const auto& f : s.facets.inequalities) {
            for (int trial = 0; trial < 5; ++trial) {
                const QVector x = facet_interior_point(s, f, rng);
                CHECK(smoothness_order(s, x) == 1);
                CHECK_FALSE(is_extreme_point(s, x));
            }
        }
    }
}

TEST_CASE("duality round trips") {
    const std::vector<PolyhedralSpace> spaces = {linf_space(2), linf_space(3),
                                                 hexagon_space(), octagon_space(),
                                                 l1_space(3)};
    for (const auto& s : spaces) {
        const PolyhedralSpace d = dual_space(s);
        for (const auto& f : d.ball.vertices) {
            CHECK(norm(d, f) == 1);
        }
        CHECK(dual_space(d).ball == s.ball);
        // Rebuilding the dual from scratch matches the cached data.
        const PolyhedralSpace rebuilt = make_space(d.ball.vertices);
        CHECK(rebuilt.ball == d.ball);
        CHECK(rebuilt.dual_ball == d.dual_ball);
        // Vertex counts are even.
        CHECK(s.ball.vertices.size() % 2 == 0);
    }
}

TEST_CASE("one-dimensional spaces") {
    const PolyhedralSpace line = make_space({qvec({2}), qvec({-2})});
    CHECK(line.dim == 1);
    CHECK(norm(line, qvec({1})) == kHalf);
    CHECK(ext_J(line, qvec({2})).order == 1);
    CHECK(is_extreme_point(line, qvec({2})));
    CHECK(l1_space(1).ball == linf_space(1).ball);
}

TEST_CASE("cyclic ordering walks the polygon boundary") {
    const std::vector<PolyhedralSpace> spaces = {linf_space(2), hexagon_space(),
                                                 octagon_space()};
    for (const auto& s : spaces) {
        const std::vector<QVector> ring = cyclic_vertices_2d(s);
        CHECK(ring.size() == s.ball.vertices.size());
        for (std::size_t i = 0; i < ring.size(); ++i) {
            const QVector& a = ring[i];
            const QVector& b = ring[(i + 1) % ring.size()];
            // Consecutive vertices span an edge: the midpoint stays on the sphere.
            CHECK(norm(s, scale(kHalf, add(a, b))) == 1);
            // Counterclockwise turn.
            CHECK(a[0] * b[1] - a[1] * b[0] > 0);
        }
    }
}
