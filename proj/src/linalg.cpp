#include <polyext/linalg.hpp>

#include <polyext/errors.hpp>

#include <algorithm>

namespace polyext {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

namespace {

void require_same_dim(const QVector& a, const QVector& b, const char* what) {
    if (a.size() != b.size()) {
        throw ValidationError(std::string("dimension mismatch in ") + what);
    }
}

} // namespace

QVector add(const QVector& a, const QVector& b) {
    require_same_dim(a, b, "vector addition");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVector sub(const QVector& a, const QVector& b) {
    require_same_dim(a, b, "vector subtraction");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVector scale(const Rational& c, const QVector& v) {
    QVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

QVector negate(const QVector& v) {
    return scale(Rational(-1), v);
}

Rational dot(const QVector& a, const QVector& b) {
    require_same_dim(a, b, "dot product");
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& e) { return e == 0; });
}

int lex_compare(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) {
        return a.size() < b.size() ? -1 : 1;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    return 0;
}

namespace {

// Fraction-free elimination on rows already scaled to integers. Each updated
// entry is a minor of the input divided by the previous pivot, so the growth
// of intermediate numerators stays polynomial.
std::size_t bareiss_rank(std::vector<QVector>& rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    Rational prev(1);
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t pivot_row = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i) {
            if (rows[i][c] != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row == rows.size()) continue;
        std::swap(rows[r], rows[pivot_row]);
        const Rational piv = rows[r][c];
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            for (std::size_t j = c + 1; j < ncols; ++j) {
                rows[i][j] = (rows[i][j] * piv - rows[i][c] * rows[r][j]) / prev;
            }
            rows[i][c] = 0;
        }
        prev = piv;
        ++r;
    }
    return r;
}

void clear_denominators(QVector& row) {
    BigInt l(1);
    for (const auto& e : row) l = lcm(l, denominator(e));
    if (l != 1) {
        for (auto& e : row) e *= l;
    }
}

} // namespace

std::size_t span_dimension(const std::vector<QVector>& vectors) {
    if (vectors.empty()) return 0;
    const std::size_t d = vectors[0].size();
    if (d == 0) throw ValidationError("span of zero-dimensional vectors");
    std::vector<QVector> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != d) throw ValidationError("dimension mismatch in span_dimension");
        rows.push_back(v);
        clear_denominators(rows.back());
    }
    return bareiss_rank(rows);
}

std::size_t rank(const QMatrix& m) {
    std::vector<QVector> rows(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        rows[i].assign(m.entries.begin() + static_cast<std::ptrdiff_t>(i * m.cols),
                       m.entries.begin() + static_cast<std::ptrdiff_t>((i + 1) * m.cols));
        clear_denominators(rows[i]);
    }
    if (m.cols == 0 || m.rows == 0) return 0;
    return bareiss_rank(rows);
}

QVector mat_apply(const QMatrix& m, const QVector& x) {
    if (m.cols != x.size()) {
        throw ValidationError("dimension mismatch in matrix-vector product");
    }
    QVector r(m.rows, Rational(0));
    for (std::size_t i = 0; i < m.rows; ++i) {
        Rational s(0);
        for (std::size_t j = 0; j < m.cols; ++j) s += m.at(i, j) * x[j];
        r[i] = s;
    }
    return r;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
    if (a.cols != b.rows) throw ValidationError("dimension mismatch in matrix product");
    QMatrix r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) {
                r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    }
    return r;
}

QMatrix transpose(const QMatrix& m) {
    QMatrix r(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    }
    return r;
}

QMatrix scale(const Rational& c, const QMatrix& m) {
    QMatrix r = m;
    for (auto& e : r.entries) e *= c;
    return r;
}

QMatrix inverse(const QMatrix& m) {
    if (m.rows != m.cols) throw ValidationError("inverse of non-square matrix");
    const std::size_t n = m.rows;
    QMatrix a = m;
    QMatrix inv = QMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = n;
        for (std::size_t i = c; i < n; ++i) {
            if (a.at(i, c) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == n) throw ValidationError("singular matrix");
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(c, j), a.at(pivot, j));
                std::swap(inv.at(c, j), inv.at(pivot, j));
            }
        }
        const Rational piv = a.at(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(c, j) /= piv;
            inv.at(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a.at(i, c) == 0) continue;
            const Rational f = a.at(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(c, j);
                inv.at(i, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

QVector tensor_flatten(const QVector& f, const QVector& x) {
    QVector r(f.size() * x.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            r[i * x.size() + j] = f[i] * x[j];
        }
    }
    return r;
}

QVector flatten(const QMatrix& m) {
    return m.entries;
}

QMatrix unflatten(std::size_t rows, std::size_t cols, const QVector& v) {
    if (v.size() != rows * cols) {
        throw ValidationError("dimension mismatch in unflatten");
    }
    QMatrix m(rows, cols);
    m.entries = v;
    return m;
}

} // namespace polyext
