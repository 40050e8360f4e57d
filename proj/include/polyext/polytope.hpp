#ifndef POLYEXT_POLYTOPE_HPP
#define POLYEXT_POLYTOPE_HPP

#include <polyext/linalg.hpp>

#include <chrono>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace polyext {

// Conversions refuse dimensions above this unless the caller raises the cap.
inline constexpr std::size_t kDefaultDimensionCap = 9;

// Vertex description. Vertices are kept sorted lexicographically and
// deduplicated, so set equality is plain equality.
struct VRep {
    std::size_t dim = 0;
    std::vector<QVector> vertices;

    friend bool operator==(const VRep&, const VRep&) = default;
};

// Half-space description. Each vector a encodes {x : <a, x> <= 1}, which
// keeps 0 strictly interior by construction. Sorted and deduplicated.
struct HRep {
    std::size_t dim = 0;
    std::vector<QVector> inequalities;

    friend bool operator==(const HRep&, const HRep&) = default;
};

// Sorts, dedupes and checks uniform dimension.
VRep make_vrep(std::size_t dim, std::vector<QVector> points);
HRep make_hrep(std::size_t dim, std::vector<QVector> inequalities);

bool is_symmetric_set(const std::vector<QVector>& points);
bool contains_point(const std::vector<QVector>& sorted_points, const QVector& p);

// Exact membership test: is p a convex combination of the given points?
// Phase-1 simplex with Bland's rule on rational tableaus.
bool in_convex_hull(const QVector& p, const std::vector<QVector>& points);

// Facet enumeration of a centrally symmetric full-dimensional polytope given
// by its vertices. Computed as the polar's vertex enumeration.
HRep v_to_h(const VRep& v, std::size_t cap = kDefaultDimensionCap);

// Vertex enumeration of a bounded polytope with 0 interior, by the double
// description method on the homogenizing cone.
VRep h_to_v(const HRep& h, std::size_t cap = kDefaultDimensionCap);

// Budgeted variant. When the deadline fires mid-run, `complete` is false and
// `points` holds the normalized rays of the intermediate cone: directions
// that may still violate unprocessed inequalities, useful only as samples.
struct VertexEnumeration {
    bool complete = true;
    std::vector<QVector> points;
};
VertexEnumeration h_to_v_budgeted(
    const HRep& h,
    std::optional<std::chrono::steady_clock::time_point> deadline,
    std::size_t cap = kDefaultDimensionCap);

// Extreme points of the convex hull of an arbitrary point list (the hull may
// be lower-dimensional). A point is extreme iff it is not a convex
// combination of the other points.
VRep extreme_filter(const std::vector<QVector>& points);

// Active inequalities at x. Throws if x violates some inequality.
std::vector<QVector> face_of(const HRep& h, const QVector& x);

// Index pairs (i < j) of vertices joined by an edge: the common active set
// has rank dim - 1.
std::vector<std::pair<std::size_t, std::size_t>> adjacent_vertex_pairs(
    const VRep& v, const HRep& h);

} // namespace polyext

#endif
