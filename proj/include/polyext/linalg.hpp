#ifndef POLYEXT_LINALG_HPP
#define POLYEXT_LINALG_HPP

#include <polyext/rational.hpp>

#include <cstddef>
#include <vector>

namespace polyext {

// Coordinate vector; the length is the dimension.
using QVector = std::vector<Rational>;

// Dense row-major matrix. Flattening an m x n matrix places entry (i, j) at
// index i*n + j; this is the one fixed convention shared with tensor vectors.
struct QMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> entries; // row-major, rows * cols long

    QMatrix() = default;
    QMatrix(std::size_t r, std::size_t c)
        : rows(r), cols(c), entries(r * c, Rational(0)) {}

    const Rational& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
    Rational& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }

    static QMatrix identity(std::size_t n);

    friend bool operator==(const QMatrix&, const QMatrix&) = default;
};

QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector scale(const Rational& c, const QVector& v);
QVector negate(const QVector& v);
Rational dot(const QVector& a, const QVector& b);
bool is_zero(const QVector& v);

// Three-way lexicographic comparison of rational vectors.
int lex_compare(const QVector& a, const QVector& b);

struct LexLess {
    bool operator()(const QVector& a, const QVector& b) const {
        return lex_compare(a, b) < 0;
    }
};

// Exact rank via fraction-free (Bareiss) elimination. Rows are scaled to
// integers first so intermediate entries stay integral minors.
std::size_t span_dimension(const std::vector<QVector>& vectors);
std::size_t rank(const QMatrix& m);

QVector mat_apply(const QMatrix& m, const QVector& x);
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
QMatrix transpose(const QMatrix& m);
QMatrix scale(const Rational& c, const QMatrix& m);

// Exact inverse of a square matrix; throws ValidationError when singular.
QMatrix inverse(const QMatrix& m);

// f tensor x, flattened: entry (i*n + j) = f_i * x_j where m = dim f and
// n = dim x. Pairing this with a flattened m x n matrix T gives f(Tx).
QVector tensor_flatten(const QVector& f, const QVector& x);

QVector flatten(const QMatrix& m);
QMatrix unflatten(std::size_t rows, std::size_t cols, const QVector& v);

} // namespace polyext

#endif
