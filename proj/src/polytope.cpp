#include <polyext/polytope.hpp>

#include <polyext/errors.hpp>

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <iterator>
#include <set>

namespace polyext {

namespace {

void require_uniform_dim(const std::vector<QVector>& points, std::size_t dim,
                         const char* what) {
    for (const auto& p : points) {
        if (p.size() != dim) {
            throw ValidationError(std::string("dimension mismatch in ") + what);
        }
    }
}

void sort_unique(std::vector<QVector>& points) {
    std::sort(points.begin(), points.end(), LexLess{});
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

void check_cap(std::size_t dim, std::size_t cap) {
    if (dim > cap) {
        throw CapExceededError("dimension " + std::to_string(dim) +
                               " exceeds the cap of " + std::to_string(cap));
    }
}

} // namespace

VRep make_vrep(std::size_t dim, std::vector<QVector> points) {
    require_uniform_dim(points, dim, "VRep");
    sort_unique(points);
    return VRep{dim, std::move(points)};
}

HRep make_hrep(std::size_t dim, std::vector<QVector> inequalities) {
    require_uniform_dim(inequalities, dim, "HRep");
    sort_unique(inequalities);
    return HRep{dim, std::move(inequalities)};
}

bool contains_point(const std::vector<QVector>& sorted_points, const QVector& p) {
    return std::binary_search(sorted_points.begin(), sorted_points.end(), p, LexLess{});
}

bool is_symmetric_set(const std::vector<QVector>& points) {
    std::vector<QVector> sorted = points;
    sort_unique(sorted);
    return std::all_of(sorted.begin(), sorted.end(), [&](const QVector& p) {
        return contains_point(sorted, negate(p));
    });
}

bool in_convex_hull(const QVector& p, const std::vector<QVector>& points) {
    if (points.empty()) return false;
    const std::size_t d = p.size();
    require_uniform_dim(points, d, "convex hull test");

    // Phase-1 simplex for: sum l_j q_j = p, sum l_j = 1, l >= 0.
    const std::size_t m = d + 1;
    const std::size_t k = points.size();
    const std::size_t ncols = k + m;
    std::vector<QVector> tab(m, QVector(ncols + 1, Rational(0)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < k; ++j) tab[i][j] = points[j][i];
        tab[i][ncols] = p[i];
    }
    for (std::size_t j = 0; j < k; ++j) tab[d][j] = 1;
    tab[d][ncols] = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (tab[i][ncols] < 0) {
            for (auto& e : tab[i]) e = -e;
        }
        tab[i][k + i] = 1;
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;

    QVector zrow(ncols, Rational(0));
    Rational objective(0);
    for (std::size_t j = 0; j < k; ++j) {
        Rational s(0);
        for (std::size_t i = 0; i < m; ++i) s += tab[i][j];
        zrow[j] = -s;
    }
    for (std::size_t i = 0; i < m; ++i) objective += tab[i][ncols];

    while (true) {
        std::size_t enter = ncols;
        for (std::size_t j = 0; j < ncols; ++j) {
            if (zrow[j] < 0) { // Bland: smallest entering index
                enter = j;
                break;
            }
        }
        if (enter == ncols) break;
        std::size_t leave = m;
        Rational best(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][enter] <= 0) continue;
            const Rational ratio = tab[i][ncols] / tab[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) {
            throw InternalInconsistencyError("phase-1 simplex unbounded");
        }
        const Rational piv = tab[leave][enter];
        for (auto& e : tab[leave]) e /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            const Rational f = tab[i][enter];
            for (std::size_t j = 0; j <= ncols; ++j) tab[i][j] -= f * tab[leave][j];
        }
        if (zrow[enter] != 0) {
            const Rational f = zrow[enter];
            for (std::size_t j = 0; j < ncols; ++j) zrow[j] -= f * tab[leave][j];
            // Entering with reduced cost f < 0 lowers the objective by |f| theta.
            objective += f * tab[leave][ncols];
        }
        basis[leave] = enter;
    }
    return objective == 0;
}

namespace {

// Scales a cone direction by a positive rational so entries become coprime
// integers. Positive scaling only, so orientation is preserved.
void canonicalize_direction(QVector& v) {
    BigInt l(1);
    for (const auto& e : v) l = lcm(l, denominator(e));
    if (l != 1) {
        for (auto& e : v) e *= l;
    }
    BigInt g(0);
    for (const auto& e : v) g = gcd(g, numerator(e));
    if (g > 1) {
        for (auto& e : v) e /= g;
    }
}

struct Ray {
    QVector dir;
    boost::dynamic_bitset<> tight; // over all constraints; set only for processed ones
};

struct DDResult {
    bool complete = true;
    std::vector<QVector> rays;
};

// Double description on a pointed cone {y in R^D : <row_i, y> <= 0}.
// Constraints are inserted in their given (lexicographic) order. Two rays are
// adjacent iff their common tight set among the processed constraints has
// rank D - 2. The initial cone is the simplicial cone of the first D linearly
// independent constraints, which keeps every intermediate cone pointed.
DDResult double_description(
    const std::vector<QVector>& rows, std::size_t big_dim,
    std::optional<std::chrono::steady_clock::time_point> deadline) {
    const std::size_t r = rows.size();
    const std::size_t D = big_dim;

    std::vector<std::size_t> initial;
    {
        std::vector<QVector> chosen;
        for (std::size_t i = 0; i < r && chosen.size() < D; ++i) {
            chosen.push_back(rows[i]);
            if (span_dimension(chosen) == chosen.size()) {
                initial.push_back(i);
            } else {
                chosen.pop_back();
            }
        }
        if (initial.size() < D) {
            throw ValidationError(
                "unbounded or degenerate polytope: inequalities do not pin down a bounded region");
        }
    }

    QMatrix b0(D, D);
    for (std::size_t i = 0; i < D; ++i) {
        for (std::size_t j = 0; j < D; ++j) b0.at(i, j) = rows[initial[i]][j];
    }
    const QMatrix b0inv = inverse(b0);

    boost::dynamic_bitset<> processed(r);
    for (std::size_t i : initial) processed.set(i);

    auto tight_set_of = [&](const QVector& dir) {
        boost::dynamic_bitset<> t(r);
        for (std::size_t i = processed.find_first(); i != boost::dynamic_bitset<>::npos;
             i = processed.find_next(i)) {
            if (dot(rows[i], dir) == 0) t.set(i);
        }
        return t;
    };

    auto adjacent = [&](const Ray& a, const Ray& b) {
        boost::dynamic_bitset<> common = a.tight & b.tight;
        if (common.count() + 2 < D) return false;
        std::vector<QVector> sub;
        sub.reserve(common.count());
        for (std::size_t i = common.find_first(); i != boost::dynamic_bitset<>::npos;
             i = common.find_next(i)) {
            sub.push_back(rows[i]);
        }
        return span_dimension(sub) == D - 2;
    };

    std::vector<Ray> rays;
    rays.reserve(D);
    for (std::size_t j = 0; j < D; ++j) {
        // b0 * (-b0inv) = -I, so ray j is tight on every initial constraint
        // except its own and satisfies that one strictly.
        QVector dir(D);
        for (std::size_t i = 0; i < D; ++i) dir[i] = -b0inv.at(i, j);
        canonicalize_direction(dir);
        rays.push_back(Ray{dir, tight_set_of(dir)});
    }

    std::size_t expiry_tick = 0;
    auto expired = [&]() {
        if (!deadline) return false;
        // Poll the clock sparingly; combination loops run hot.
        if ((++expiry_tick & 63) != 0) return false;
        return std::chrono::steady_clock::now() > *deadline;
    };
    auto partial_result = [&]() {
        DDResult partial;
        partial.complete = false;
        for (const auto& ray : rays) partial.rays.push_back(ray.dir);
        return partial;
    };

    for (std::size_t i = 0; i < r; ++i) {
        if (processed.test(i)) continue;
        if (deadline && std::chrono::steady_clock::now() > *deadline) {
            return partial_result();
        }
        const QVector& b = rows[i];
        std::vector<std::size_t> pos, neg, zero;
        std::vector<Rational> vals(rays.size());
        for (std::size_t j = 0; j < rays.size(); ++j) {
            vals[j] = dot(b, rays[j].dir);
            if (vals[j] > 0) {
                pos.push_back(j);
            } else if (vals[j] < 0) {
                neg.push_back(j);
            } else {
                zero.push_back(j);
            }
        }
        if (pos.empty()) {
            for (std::size_t j : zero) rays[j].tight.set(i);
            processed.set(i);
            continue;
        }
        if (neg.empty() && zero.empty()) {
            // The homogenizing direction satisfies every constraint strictly
            // and is a conic combination of the current rays, so it cannot
            // happen that all of them violate b.
            throw InternalInconsistencyError("double description lost the interior ray");
        }

        processed.set(i);
        std::vector<Ray> created;
        std::set<QVector, LexLess> seen;
        for (std::size_t j : neg) seen.insert(rays[j].dir);
        for (std::size_t j : zero) seen.insert(rays[j].dir);
        for (std::size_t jp : pos) {
            for (std::size_t jm : neg) {
                if (expired()) return partial_result(); // rays still intact here
                if (!adjacent(rays[jp], rays[jm])) continue;
                QVector dir = sub(scale(vals[jp], rays[jm].dir),
                                  scale(vals[jm], rays[jp].dir));
                canonicalize_direction(dir);
                if (!seen.insert(dir).second) continue;
                boost::dynamic_bitset<> tight = tight_set_of(dir);
                created.push_back(Ray{std::move(dir), std::move(tight)});
            }
        }

        std::vector<Ray> next;
        next.reserve(neg.size() + zero.size() + created.size());
        for (std::size_t j : neg) next.push_back(std::move(rays[j]));
        for (std::size_t j : zero) {
            rays[j].tight.set(i);
            next.push_back(std::move(rays[j]));
        }
        for (auto& ray : created) next.push_back(std::move(ray));
        rays = std::move(next);
    }

    DDResult done;
    for (auto& ray : rays) done.rays.push_back(std::move(ray.dir));
    return done;
}

// Homogenizes {<a_i, x> <= 1} to cone rows (-1, a_i) and runs double
// description. Rays with positive first coordinate normalize to points.
DDResult enumerate_cone(const HRep& h,
                        std::optional<std::chrono::steady_clock::time_point> deadline) {
    if (h.dim == 0) throw ValidationError("zero-dimensional polytope");
    if (h.inequalities.empty()) {
        throw ValidationError("unbounded or degenerate polytope: no inequalities");
    }
    std::vector<QVector> rows;
    rows.reserve(h.inequalities.size());
    for (const auto& a : h.inequalities) {
        QVector row(h.dim + 1);
        row[0] = -1;
        for (std::size_t j = 0; j < h.dim; ++j) row[j + 1] = a[j];
        rows.push_back(std::move(row));
    }
    return double_description(rows, h.dim + 1, deadline);
}

QVector dehomogenize(const QVector& ray, std::size_t dim) {
    QVector x(dim);
    for (std::size_t j = 0; j < dim; ++j) x[j] = ray[j + 1] / ray[0];
    return x;
}

} // namespace

VertexEnumeration h_to_v_budgeted(
    const HRep& h, std::optional<std::chrono::steady_clock::time_point> deadline,
    std::size_t cap) {
    check_cap(h.dim, cap);
    DDResult dd = enumerate_cone(h, deadline);
    VertexEnumeration out;
    out.complete = dd.complete;
    for (const auto& ray : dd.rays) {
        if (!dd.complete) {
            // Intermediate rays with nonpositive height carry no point sample.
            if (ray[0] <= 0) continue;
        } else if (ray[0] <= 0) {
            throw ValidationError("unbounded polytope: recession direction found");
        }
        out.points.push_back(dehomogenize(ray, h.dim));
    }
    std::sort(out.points.begin(), out.points.end(), LexLess{});
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

VRep h_to_v(const HRep& h, std::size_t cap) {
    VertexEnumeration e = h_to_v_budgeted(h, std::nullopt, cap);
    return VRep{h.dim, std::move(e.points)};
}

HRep v_to_h(const VRep& v, std::size_t cap) {
    check_cap(v.dim, cap);
    if (v.vertices.empty()) throw ValidationError("empty vertex set");
    if (!is_symmetric_set(v.vertices)) {
        throw ValidationError("vertex set is not centrally symmetric");
    }
    if (span_dimension(v.vertices) != v.dim) {
        throw ValidationError("degenerate polytope: vertices do not span the space");
    }
    // Polar duality: the facet normals of conv(V) at level 1 are exactly the
    // vertices of the polar {a : <a, v> <= 1 for all v in V}.
    VRep polar = h_to_v(HRep{v.dim, v.vertices}, cap);
    return HRep{v.dim, std::move(polar.vertices)};
}

VRep extreme_filter(const std::vector<QVector>& points) {
    if (points.empty()) throw ValidationError("extreme_filter on empty point list");
    const std::size_t d = points[0].size();
    require_uniform_dim(points, d, "extreme_filter");
    std::vector<QVector> unique_points = points;
    sort_unique(unique_points);

    // Cheap certificate first: a point that uniquely maximizes its own
    // functional over the list is exposed, hence extreme. Only the positive
    // answer short-circuits; everything else falls back to the hull test.
    auto self_exposed = [&](std::size_t i) {
        const QVector& p = unique_points[i];
        const Rational level = dot(p, p);
        for (std::size_t j = 0; j < unique_points.size(); ++j) {
            if (j != i && dot(p, unique_points[j]) >= level) return false;
        }
        return true;
    };

    std::vector<QVector> kept;
    for (std::size_t i = 0; i < unique_points.size(); ++i) {
        if (self_exposed(i)) {
            kept.push_back(unique_points[i]);
            continue;
        }
        std::vector<QVector> others;
        others.reserve(unique_points.size() - 1);
        for (std::size_t j = 0; j < unique_points.size(); ++j) {
            if (j != i) others.push_back(unique_points[j]);
        }
        if (!in_convex_hull(unique_points[i], others)) {
            kept.push_back(unique_points[i]);
        }
    }
    return VRep{d, std::move(kept)};
}

std::vector<QVector> face_of(const HRep& h, const QVector& x) {
    if (x.size() != h.dim) throw ValidationError("dimension mismatch in face_of");
    std::vector<QVector> active;
    for (const auto& a : h.inequalities) {
        const Rational s = dot(a, x);
        if (s > 1) {
            throw ValidationError("point lies outside the polytope");
        }
        if (s == 1) active.push_back(a);
    }
    return active;
}

std::vector<std::pair<std::size_t, std::size_t>> adjacent_vertex_pairs(
    const VRep& v, const HRep& h) {
    if (v.dim != h.dim) throw ValidationError("dimension mismatch in adjacency");
    std::vector<std::vector<QVector>> active(v.vertices.size());
    for (std::size_t i = 0; i < v.vertices.size(); ++i) {
        active[i] = face_of(h, v.vertices[i]);
    }
    std::vector<std::pair<std::size_t, std::size_t>> result;
    for (std::size_t i = 0; i < v.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < v.vertices.size(); ++j) {
            std::vector<QVector> common;
            std::set_intersection(active[i].begin(), active[i].end(),
                                  active[j].begin(), active[j].end(),
                                  std::back_inserter(common), LexLess{});
            if (common.size() + 1 < v.dim) continue;
            if (span_dimension(common) == v.dim - 1) {
                result.emplace_back(i, j);
            }
        }
    }
    return result;
}

} // namespace polyext
