#include <polyext/analysis.hpp>

#include <polyext/errors.hpp>

#include <algorithm>
#include <chrono>
#include <set>

namespace polyext {

namespace {

std::optional<std::chrono::steady_clock::time_point> deadline_from(const Budget& budget) {
    if (!budget.seconds || *budget.seconds <= 0) return std::nullopt;
    return std::chrono::steady_clock::now() +
           std::chrono::microseconds(static_cast<long long>(*budget.seconds * 1e6));
}

std::vector<QVector> all_sign_vectors(std::size_t n) {
    std::vector<QVector> out;
    out.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        QVector v(n);
        for (std::size_t j = 0; j < n; ++j) {
            v[j] = (mask >> j) & 1 ? Rational(-1) : Rational(1);
        }
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

// Is the unit ball the full sup-norm cube?
bool is_sup_cube(const PolyhedralSpace& s) {
    if (s.ball.vertices.size() != (std::size_t{1} << s.dim)) return false;
    return s.ball.vertices == all_sign_vectors(s.dim);
}

} // namespace

HRep operator_ball(const PolyhedralSpace& x, const PolyhedralSpace& y, std::size_t cap) {
    const std::size_t mn = x.dim * y.dim;
    if (mn > cap) {
        throw CapExceededError("operator ball dimension " + std::to_string(mn) +
                               " exceeds the cap of " + std::to_string(cap));
    }
    std::vector<QVector> tensors;
    tensors.reserve(x.ball.vertices.size() * y.dual_ball.vertices.size());
    for (const auto& v : x.ball.vertices) {
        for (const auto& f : y.dual_ball.vertices) {
            tensors.push_back(tensor_flatten(f, v));
        }
    }
    std::sort(tensors.begin(), tensors.end(), LexLess{});
    tensors.erase(std::unique(tensors.begin(), tensors.end()), tensors.end());
    // Every tensor of extreme points is an extreme point of the dual operator
    // ball, so redundancy reduction may only drop duplicates.
    VRep reduced = extreme_filter(tensors);
    if (reduced.vertices.size() != tensors.size()) {
        throw InternalInconsistencyError("tensor inequality unexpectedly redundant");
    }
    return HRep{mn, std::move(reduced.vertices)};
}

namespace {

struct EnumerationOutcome {
    bool complete = true;
    std::vector<Operator> contractions;
    std::vector<QVector> partial_points;
};

EnumerationOutcome enumerate_core(const PolyhedralSpace& x, const PolyhedralSpace& y,
                                  std::size_t cap, const Budget& budget) {
    const HRep ball = operator_ball(x, y, cap);
    VertexEnumeration e = h_to_v_budgeted(ball, deadline_from(budget), cap);
    EnumerationOutcome out;
    out.complete = e.complete;
    if (!e.complete) {
        out.partial_points = std::move(e.points);
        return out;
    }
    out.contractions.reserve(e.points.size());
    for (const auto& flat : e.points) {
        Operator t = make_operator(x, y, unflatten(y.dim, x.dim, flat));
        if (!is_extreme_contraction(t)) {
            throw InternalInconsistencyError(
                "operator-ball vertex fails the smoothness criterion");
        }
        out.contractions.push_back(std::move(t));
    }
    return out;
}

} // namespace

ContractionCensus enumerate_extreme_contractions(
    const PolyhedralSpace& x, const PolyhedralSpace& y, std::size_t cap, Budget budget) {
    EnumerationOutcome outcome = enumerate_core(x, y, cap, budget);
    if (!outcome.complete) {
        throw BudgetExceededError("enumeration budget exhausted");
    }
    ContractionCensus census;
    census.domain = x;
    census.codomain = y;
    census.contractions = std::move(outcome.contractions);
    census.count = census.contractions.size();
    if (x.dim == 2 && y.dim == 2) {
        for (const auto& t : census.contractions) {
            ++census.per_case[classify_2d(t)];
        }
    }
    if (x.ball == y.ball) {
        std::size_t iso = 0;
        for (const auto& t : census.contractions) {
            if (is_isometry(t)) ++iso;
        }
        census.isometries = iso;
    }
    return census;
}

WeakLPVerdict check_weak_lp(const PolyhedralSpace& x, const PolyhedralSpace& y,
                            std::size_t cap, Budget budget) {
    if (x.dim * y.dim > cap) {
        std::string hint;
        if (x.dim == 2 && x.ball.vertices.size() >= 8) {
            hint = "; witness search (construct-26) can still decide the pair "
                   "against the sup-norm plane";
        }
        throw CapExceededError("operator ball dimension " +
                               std::to_string(x.dim * y.dim) + " exceeds the cap of " +
                               std::to_string(cap) + hint);
    }
    EnumerationOutcome outcome = enumerate_core(x, y, cap, budget);
    WeakLPVerdict verdict;
    if (outcome.complete) {
        for (const auto& t : outcome.contractions) {
            ++verdict.checked;
            bool hits = false;
            for (const auto& v : x.ball.vertices) {
                if (is_ball_vertex(y, mat_apply(t.matrix, v))) {
                    hits = true;
                    break;
                }
            }
            if (!hits) {
                verdict.status = WeakLPStatus::Fails;
                verdict.witness = t;
                return verdict;
            }
        }
        verdict.status = WeakLPStatus::Holds;
        return verdict;
    }

    // Budget ran out. Spot-check the order bound on operators sampled from
    // the partial enumeration plus the projection family, and report no
    // verdict.
    verdict.status = WeakLPStatus::InconclusiveBudget;
    std::vector<Operator> samples;
    std::set<QVector, LexLess> seen;
    for (const auto& flat : outcome.partial_points) {
        if (is_zero(flat)) continue;
        Operator t = make_operator(x, y, unflatten(y.dim, x.dim, flat));
        const Rational nrm = op_norm(t);
        if (nrm == 0) continue;
        if (nrm != 1) t.matrix = scale(Rational(1) / nrm, t.matrix);
        if (seen.insert(flatten(t.matrix)).second) samples.push_back(std::move(t));
    }
    if (is_sup_cube(x) && y.dim == 2) {
        // Projection onto a coordinate pair followed by a linear map that
        // sends the projected square corners to smooth boundary points. All
        // domain vertices attain the norm and every image is smooth.
        std::vector<QVector> cyc = cyclic_vertices_2d(y);
        std::vector<QVector> midpoints;
        for (std::size_t e = 0; e < cyc.size(); ++e) {
            midpoints.push_back(
                scale(Rational(1, 2), add(cyc[e], cyc[(e + 1) % cyc.size()])));
        }
        const Rational half(1, 2);
        for (std::size_t i = 0; i < x.dim; ++i) {
            for (std::size_t j = i + 1; j < x.dim; ++j) {
                for (const auto& u : midpoints) {
                    for (const auto& w : midpoints) {
                        if (u == w || u == negate(w)) continue;
                        QMatrix m(2, x.dim);
                        for (std::size_t row = 0; row < 2; ++row) {
                            m.at(row, i) = half * (u[row] + w[row]);
                            m.at(row, j) = half * (u[row] - w[row]);
                        }
                        if (seen.insert(flatten(m)).second) {
                            samples.push_back(make_operator(x, y, std::move(m)));
                        }
                    }
                }
            }
        }
    }
    const bool bound_applies = is_sup_cube(x) && x.dim == 4 && y.dim == 2;
    for (const auto& t : samples) {
        ++verdict.checked;
        if (!bound_applies) continue;
        const KSmoothCheck c = ksmooth_bound_check(t);
        if (c.hypotheses) {
            ++verdict.bound_checked;
            verdict.max_order = std::max(verdict.max_order, c.order);
        }
    }
    return verdict;
}

LPVerdict check_lp(const PolyhedralSpace& x, const PolyhedralSpace& y,
                   std::size_t cap, Budget budget) {
    const ContractionCensus census = enumerate_extreme_contractions(x, y, cap, budget);
    std::set<QVector, LexLess> extreme_set;
    for (const auto& t : census.contractions) extreme_set.insert(flatten(t.matrix));

    // All linear maps determined by sending a vertex basis into the codomain
    // vertex set, filtered to those sending every vertex to a vertex.
    std::vector<QVector> basis;
    for (const auto& v : x.ball.vertices) {
        basis.push_back(v);
        if (span_dimension(basis) != basis.size()) basis.pop_back();
        if (basis.size() == x.dim) break;
    }
    QMatrix b(x.dim, x.dim);
    for (std::size_t j = 0; j < x.dim; ++j) {
        for (std::size_t i = 0; i < x.dim; ++i) b.at(i, j) = basis[j][i];
    }
    const QMatrix binv = inverse(b);

    const std::size_t k = y.ball.vertices.size();
    double combos = 1;
    for (std::size_t i = 0; i < x.dim; ++i) combos *= static_cast<double>(k);
    if (combos > 2e6) {
        throw CapExceededError("vertex-assignment enumeration too large");
    }

    std::set<QVector, LexLess> preserving;
    std::vector<std::size_t> idx(x.dim, 0);
    while (true) {
        QMatrix w(y.dim, x.dim);
        for (std::size_t j = 0; j < x.dim; ++j) {
            for (std::size_t i = 0; i < y.dim; ++i) {
                w.at(i, j) = y.ball.vertices[idx[j]][i];
            }
        }
        QMatrix t = mat_mul(w, binv);
        bool preserves = true;
        for (const auto& v : x.ball.vertices) {
            if (!is_ball_vertex(y, mat_apply(t, v))) {
                preserves = false;
                break;
            }
        }
        if (preserves) preserving.insert(flatten(t));

        std::size_t pos = 0;
        while (pos < x.dim && ++idx[pos] == k) {
            idx[pos] = 0;
            ++pos;
        }
        if (pos == x.dim) break;
    }

    LPVerdict verdict;
    verdict.extreme_count = extreme_set.size();
    verdict.preserving_count = preserving.size();
    for (const auto& flat : extreme_set) {
        if (!preserving.count(flat)) {
            verdict.extreme_not_preserving =
                make_operator(x, y, unflatten(y.dim, x.dim, flat));
            break;
        }
    }
    for (const auto& flat : preserving) {
        if (!extreme_set.count(flat)) {
            verdict.preserving_not_extreme =
                make_operator(x, y, unflatten(y.dim, x.dim, flat));
            break;
        }
    }
    verdict.holds = !verdict.extreme_not_preserving && !verdict.preserving_not_extreme;
    return verdict;
}

bool weak_lp_sufficient(const PolyhedralSpace& x, const PolyhedralSpace& y) {
    const std::size_t p = x.ball.vertices.size() / 2 - x.dim;
    return y.dim * p < x.dim + p;
}

Operator weak_lp_witness_linf2(const PolyhedralSpace& x, std::size_t cap) {
    (void)cap;
    if (x.dim != 2 || x.ball.vertices.size() < 8) {
        throw ValidationError(
            "construction needs a 2-dimensional space with at least 8 ball vertices");
    }
    const PolyhedralSpace xd = dual_space(x);
    const PolyhedralSpace target = linf_space(2);
    const auto& dv = xd.ball.vertices;
    const Rational half(1, 2);
    auto spans_edge = [&](const QVector& u, const QVector& w) {
        return norm(xd, scale(half, add(u, w))) == 1;
    };
    for (std::size_t i = 0; i < dv.size(); ++i) {
        for (std::size_t j = i + 1; j < dv.size(); ++j) {
            const QVector& u = dv[i];
            const QVector& w = dv[j];
            if (w == negate(u)) continue;
            if (spans_edge(u, w) || spans_edge(u, negate(w))) continue;
            QMatrix m(2, 2);
            for (std::size_t c = 0; c < 2; ++c) {
                m.at(0, c) = u[c];
                m.at(1, c) = w[c];
            }
            Operator t = make_operator(x, target, std::move(m));
            if (!is_extreme_contraction(t)) {
                throw InternalInconsistencyError(
                    "constructed adjoint operator is not an extreme contraction");
            }
            for (const auto& v : x.ball.vertices) {
                if (is_ball_vertex(target, mat_apply(t.matrix, v))) {
                    throw InternalInconsistencyError(
                        "constructed adjoint operator hits a codomain vertex");
                }
            }
            return t;
        }
    }
    throw InternalInconsistencyError(
        "no admissible dual vertex pair despite at least 8 ball vertices");
}

namespace {

struct LineIntersection {
    QVector point;
    Rational s; // parameter along p1 + s (p2 - p1)
    Rational t; // parameter along q1 + t (q2 - q1)
};

std::optional<LineIntersection> intersect_lines(const QVector& p1, const QVector& p2,
                                                const QVector& q1, const QVector& q2) {
    const QVector dp = sub(p2, p1);
    const QVector dq = sub(q2, q1);
    const Rational det = dp[0] * (-dq[1]) - (-dq[0]) * dp[1];
    if (det == 0) return std::nullopt;
    const QVector rhs = sub(q1, p1);
    LineIntersection r;
    r.s = (rhs[0] * (-dq[1]) - (-dq[0]) * rhs[1]) / det;
    r.t = (dp[0] * rhs[1] - rhs[0] * dp[1]) / det;
    r.point = add(p1, scale(r.s, dp));
    return r;
}

Rational cross2(const QVector& a, const QVector& b) {
    return a[0] * b[1] - a[1] * b[0];
}

} // namespace

ConstructedCodomain weak_lp_failing_codomain(const PolyhedralSpace& x, std::size_t n,
                                             std::size_t cap) {
    if (x.dim != 2 || x.ball.vertices.size() < 8) {
        throw ValidationError(
            "construction needs a 2-dimensional space with at least 8 ball vertices");
    }
    if (n < 3) throw ValidationError("the codomain needs at least 6 ball vertices (n >= 3)");

    const std::vector<QVector> ring = cyclic_vertices_2d(x);
    const std::size_t count = ring.size();
    const Rational half(1, 2);

    for (std::size_t start = 0; start < count; ++start) {
        const QVector& x1 = ring[start];
        const QVector& x2 = ring[(start + 1) % count];
        const QVector& x3 = ring[(start + 2) % count];
        const QVector& x4 = ring[(start + 3) % count];

        // The two outer edge lines must meet ahead of both edges.
        const auto y1i = intersect_lines(x1, x2, x4, x3);
        if (!y1i || y1i->s < 0 || y1i->t < 0) continue;
        const auto y2i = intersect_lines(x2, x1, negate(x3), negate(x4));
        if (!y2i || y2i->s < 0 || y2i->t < 0) continue;
        const QVector y1 = y1i->point;
        const QVector y2 = y2i->point;

        const QVector z_first = scale(half, add(y1, x2));
        const QVector z_last = scale(half, add(y1, x3));

        for (int k = 1; k <= 60; ++k) {
            // Interior fan points on a parabola-like bulge over the chord
            // [z_first, z_last]; the bulge shrinks as k grows.
            std::vector<QVector> fan;
            fan.push_back(z_first);
            bool degenerate = false;
            for (std::size_t i = 2; i + 1 < n; ++i) {
                const Rational t(static_cast<long>(i - 1), static_cast<long>(n - 2));
                const Rational bump = make_rational(
                    BigInt(static_cast<long>((i - 1) * (n - 1 - i))), BigInt(1) << k);
                QVector base = add(scale(Rational(1) - t, z_first), scale(t, z_last));
                fan.push_back(scale(Rational(1) + bump, base));
            }
            fan.push_back(z_last);
            // Strict convex position along the fan: the ring is
            // counterclockwise, so every consecutive triple must turn left.
            for (std::size_t i = 0; i + 2 < fan.size(); ++i) {
                const Rational c = cross2(sub(fan[i + 1], fan[i]), sub(fan[i + 2], fan[i + 1]));
                if (c <= 0) {
                    degenerate = true;
                    break;
                }
            }
            if (degenerate) continue;

            std::vector<QVector> candidates;
            candidates.push_back(y2);
            candidates.push_back(negate(y2));
            for (const auto& z : fan) {
                candidates.push_back(z);
                candidates.push_back(negate(z));
            }

            PolyhedralSpace y;
            try {
                y = make_space(candidates, cap);
            } catch (const ValidationError&) {
                continue;
            }
            if (y.ball.vertices.size() != 2 * n) continue;

            Operator certificate = make_operator(x, y, QMatrix::identity(2));
            if (op_norm(certificate) != 1) continue;

            std::set<QVector, LexLess> expected;
            for (const auto& v : {x1, x2, x3, x4}) {
                expected.insert(v);
                expected.insert(negate(v));
            }
            bool ok = true;
            for (const auto& v : x.ball.vertices) {
                const bool attains = norm(y, v) == 1;
                if (attains != (expected.count(v) > 0)) {
                    ok = false;
                    break;
                }
                if (attains && (is_ball_vertex(y, v) || ext_J(y, v).order != 1)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            if (!is_extreme_contraction(certificate)) continue;
            return ConstructedCodomain{std::move(y), std::move(certificate)};
        }
    }
    throw ValidationError(
        "construction failed: no vertex quadruple admits the ray intersections");
}

bool is_isometry(const Operator& t) {
    if (t.domain.dim != t.codomain.dim) return false;
    std::vector<QVector> images;
    images.reserve(t.domain.ball.vertices.size());
    for (const auto& v : t.domain.ball.vertices) {
        images.push_back(mat_apply(t.matrix, v));
    }
    std::sort(images.begin(), images.end(), LexLess{});
    return images == t.codomain.ball.vertices;
}

std::size_t count_isometries(const PolyhedralSpace& x, std::size_t cap) {
    const ContractionCensus census = enumerate_extreme_contractions(x, x, cap);
    std::size_t iso = 0;
    for (const auto& t : census.contractions) {
        if (is_isometry(t)) ++iso;
    }
    return iso;
}

ContractionCensus hexagon_census() {
    const PolyhedralSpace hx = hexagon_space();
    ContractionCensus census = enumerate_extreme_contractions(hx, hx);
    if (census.count != 30) {
        throw InternalInconsistencyError("hexagon census count is not 30");
    }
    std::size_t iso = 0;
    std::size_t collapsing = 0;
    for (const auto& t : census.contractions) {
        if (is_isometry(t)) {
            ++iso;
            continue;
        }
        const OperatorSupport s = support(t);
        if (attainer_count(s) != 4) {
            throw InternalInconsistencyError(
                "hexagon non-isometry without exactly four attainers");
        }
        const QVector a = mat_apply(t.matrix, s.attainers[0]);
        const QVector b = mat_apply(t.matrix, s.attainers[1]);
        if (a != b && a != negate(b)) {
            throw InternalInconsistencyError(
                "hexagon non-isometry images differ beyond sign");
        }
        if (!is_ball_vertex(hx, a)) {
            throw InternalInconsistencyError("hexagon non-isometry image is not a vertex");
        }
        ++collapsing;
    }
    if (iso != 12 || collapsing != 18) {
        throw InternalInconsistencyError("hexagon census split is not 12 + 18");
    }
    return census;
}

} // namespace polyext
