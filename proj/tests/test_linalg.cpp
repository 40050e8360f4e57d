#include <polyext/errors.hpp>
#include <polyext/linalg.hpp>

#include "test_helpers.hpp"

#include <doctest.h>

using namespace polyext;
using namespace polyext::testing;

TEST_CASE("rational parsing and canonical form") {
    CHECK(to_string(parse_rational("3")) == "3");
    CHECK(to_string(parse_rational("-1/2")) == "-1/2");
    CHECK(to_string(parse_rational("2/4")) == "1/2");
    CHECK(to_string(parse_rational("4/-2")) == "-2");
    CHECK(to_string(parse_rational("-0")) == "0");
    CHECK(parse_rational("6/4") == make_rational(BigInt(3), BigInt(2)));

    CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
    CHECK_THROWS_AS(parse_rational(""), ValidationError);
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("1.5"), ValidationError);
    CHECK_THROWS_AS(parse_rational("1/"), ValidationError);
    CHECK_THROWS_AS(make_rational(BigInt(1), BigInt(0)), ValidationError);
}

TEST_CASE("rational arithmetic stays canonical and obeys field laws") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        const Rational c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (b != 0) {
            const Rational q = a / b;
            CHECK(gcd(abs(numerator(q)), denominator(q)) == 1);
            CHECK(denominator(q) > 0);
            CHECK(q * b == a);
        }
        const Rational s = a + b;
        CHECK(gcd(abs(numerator(s)), denominator(s)) == 1);
        CHECK(denominator(s) > 0);
    }
}

TEST_CASE("span_dimension on the documented examples") {
    CHECK(span_dimension({qvec({1, 0}), qvec({0, 1})}) == 2);
    CHECK(span_dimension({qvec({1, 1}), qvec({2, 2})}) == 1);
    // The four tensors of the identity on the square space.
    CHECK(span_dimension({qvec({1, 1, 0, 0}), qvec({0, 0, 1, 1}), qvec({1, -1, 0, 0}),
                          qvec({0, 0, 1, -1})}) == 4);
    CHECK(span_dimension({}) == 0);
    CHECK_THROWS_AS(span_dimension({qvec({1, 0}), qvec({1, 0, 0})}), ValidationError);
}

TEST_CASE("span_dimension invariances") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<std::size_t> dim_dist(1, 5);
        std::uniform_int_distribution<std::size_t> count_dist(1, 6);
        const std::size_t d = dim_dist(rng);
        const std::size_t k = count_dist(rng);
        std::vector<QVector> vs;
        for (std::size_t i = 0; i < k; ++i) vs.push_back(random_vector(rng, d, 4, 3));
        const std::size_t r = span_dimension(vs);

        std::vector<QVector> shuffled = vs;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(span_dimension(shuffled) == r);

        std::vector<QVector> scaled = vs;
        Rational factor = random_rational(rng, 5, 5);
        if (factor == 0) factor = 1;
        std::uniform_int_distribution<std::size_t> pick(0, k - 1);
        const std::size_t which = pick(rng);
        scaled[which] = scale(factor, scaled[which]);
        CHECK(span_dimension(scaled) == r);
    }
}

TEST_CASE("row rank equals column rank") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> size_dist(1, 5);
        const QMatrix m = random_matrix(rng, size_dist(rng), size_dist(rng), 4, 3);
        CHECK(rank(m) == rank(transpose(m)));
    }
}

TEST_CASE("mat_apply on the documented examples") {
    const QMatrix id = QMatrix::identity(2);
    QVector x = {make_rational(BigInt(3), BigInt(2)), Rational(-1)};
    CHECK(mat_apply(id, x) == x);

    QMatrix proj(2, 2);
    proj.at(0, 0) = 1;
    CHECK(mat_apply(proj, qvec({5, 7})) == qvec({5, 0}));

    QMatrix shear(2, 2);
    shear.at(0, 0) = 1;
    shear.at(0, 1) = 1;
    shear.at(1, 1) = 1;
    CHECK(mat_apply(shear, qvec({1, 2})) == qvec({3, 2}));

    CHECK_THROWS_AS(mat_apply(id, qvec({1, 2, 3})), ValidationError);
}

TEST_CASE("tensor_flatten matches the pairing identity") {
    CHECK(tensor_flatten(qvec({1, 0}), qvec({1, 1})) == qvec({1, 1, 0, 0}));
    CHECK(tensor_flatten(qvec({0, 1}), qvec({1, -1})) == qvec({0, 0, 1, -1}));

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<std::size_t> dim_dist(1, 4);
        const std::size_t m = dim_dist(rng);
        const std::size_t n = dim_dist(rng);
        const QVector f = random_vector(rng, m);
        const QVector x = random_vector(rng, n);
        const QMatrix t = random_matrix(rng, m, n);
        CHECK(dot(tensor_flatten(f, x), flatten(t)) == dot(f, mat_apply(t, x)));

        const Rational a = random_rational(rng);
        CHECK(tensor_flatten(scale(a, f), x) == scale(a, tensor_flatten(f, x)));
    }
}

TEST_CASE("matrix inverse round trip") {
    std::mt19937_64 rng(17);
    int checked = 0;
    while (checked < 20) {
        std::uniform_int_distribution<std::size_t> size_dist(1, 4);
        const std::size_t n = size_dist(rng);
        const QMatrix m = random_matrix(rng, n, n, 4, 3);
        if (rank(m) != n) continue;
        CHECK(mat_mul(m, inverse(m)) == QMatrix::identity(n));
        ++checked;
    }
    QMatrix singular(2, 2);
    singular.at(0, 0) = 1;
    singular.at(1, 0) = 2;
    CHECK_THROWS_AS(inverse(singular), ValidationError);
}

TEST_CASE("flatten and unflatten are inverse") {
    std::mt19937_64 rng(19);
    const QMatrix m = random_matrix(rng, 3, 2);
    CHECK(unflatten(3, 2, flatten(m)) == m);
    CHECK_THROWS_AS(unflatten(2, 2, flatten(m)), ValidationError);
}
