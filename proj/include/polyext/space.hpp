#ifndef POLYEXT_SPACE_HPP
#define POLYEXT_SPACE_HPP

#include <polyext/polytope.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace polyext {

// A finite-dimensional space whose unit ball is a centrally symmetric
// polytope, carried together with its polar dual. The facet inequalities of
// the ball are exactly the vertices of the dual ball, so both are one vertex
// enumeration away from the input and cached at construction. Immutable.
struct PolyhedralSpace {
    std::size_t dim = 0;
    VRep ball;      // extreme points of the unit ball
    VRep dual_ball; // extreme points of the dual unit ball
    HRep facets;    // inequalities of the unit ball (same vectors as dual_ball)

    friend bool operator==(const PolyhedralSpace&, const PolyhedralSpace&) = default;
};

// The extreme supporting functionals of a point: the dual-ball vertices
// attaining <f, x> = ||x||, and the dimension of their span.
struct SupportFace {
    QVector point;
    std::vector<QVector> functionals;
    std::size_t order = 0;
};

// Validates symmetry, drops non-extreme points, requires full dimension, and
// computes the dual/facet data.
PolyhedralSpace make_space(const std::vector<QVector>& vertices,
                           std::size_t cap = kDefaultDimensionCap);

PolyhedralSpace linf_space(std::size_t n);
PolyhedralSpace l1_space(std::size_t n);

// Rational hexagon model: vertices +-(1,0), +-(1,1), +-(0,1). Linearly
// isometric to the regular hexagon, with x2 = x1 + x3 for x1=(1,0),
// x2=(1,1), x3=(0,1).
PolyhedralSpace hexagon_space();

// Fixed rational octagon: vertices +-(2,1), +-(1,2), +-(-1,2), +-(-2,1).
PolyhedralSpace octagon_space();

// Swaps ball and dual ball; valid by bipolarity.
PolyhedralSpace dual_space(const PolyhedralSpace& s);

Rational norm(const PolyhedralSpace& s, const QVector& x);

// Ext J(x) at level ||x||; x may be non-unit but must be nonzero.
SupportFace ext_J(const PolyhedralSpace& s, const QVector& x);

// Requires ||x|| = 1.
std::size_t smoothness_order(const PolyhedralSpace& s, const QVector& x);

// Requires ||x|| = 1. Vertex membership, cross-asserted against the
// smoothness criterion (order = dim); a mismatch is an internal bug.
bool is_extreme_point(const PolyhedralSpace& s, const QVector& x);

bool is_ball_vertex(const PolyhedralSpace& s, const QVector& x);

// Vertices of a 2-dimensional space in counterclockwise cyclic order
// starting in the closed upper half plane.
std::vector<QVector> cyclic_vertices_2d(const PolyhedralSpace& s);

} // namespace polyext

#endif
