#ifndef POLYEXT_OPERATORS_HPP
#define POLYEXT_OPERATORS_HPP

#include <polyext/space.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace polyext {

// A linear map between two polyhedral spaces: m x n matrix with m the
// codomain dimension and n the domain dimension.
struct Operator {
    PolyhedralSpace domain;
    PolyhedralSpace codomain;
    QMatrix matrix;
};

Operator make_operator(PolyhedralSpace domain, PolyhedralSpace codomain, QMatrix matrix);

// Exact operator norm: the max of ||Tv|| over the domain ball vertices. The
// norm is convex, so the max over extreme points is the max over the ball.
Rational op_norm(const Operator& t);

// Norm attainment data for a norm-one operator. Attainers are stored one per
// antipodal pair with the first nonzero coordinate positive; counts reported
// to users are doubled to match the full +- set. The tensors f (x) x over
// (attainer, extreme supporting functional) pairs span Ext J(T); their span
// dimension is the order of smoothness of T.
struct OperatorSupport {
    std::vector<QVector> attainers;
    std::vector<std::pair<QVector, QVector>> pairs; // (x, f) with f in Ext J(Tx)
    std::vector<QVector> tensors;                   // flattened f (x) x, length mn
    std::size_t order = 0;
};

OperatorSupport support(const Operator& t);

// T is an extreme contraction iff ||T|| = 1 and T is mn-smooth.
bool is_extreme_contraction(const Operator& t);

// Extreme points of T(B_X), i.e. of the hull of the vertex images.
VRep image_extreme_points(const Operator& t);

// Rank 2, norm one, and every domain ball vertex attains the norm.
bool rank_two_all_attaining(const Operator& t);

// The five shapes an extreme contraction between 2-dimensional spaces can
// take, keyed by the size of the attainer set and where the images land.
enum class Case2D { I, II, III, IV, V, NotExtreme };

std::string to_string(Case2D c);

Case2D classify_2d(const Operator& t);

// For operators from the 4-dimensional sup-norm space to a 2-dimensional
// space: when every vertex attains and every image is a smooth point, the
// order of smoothness is at most 6 (so T is never an extreme contraction).
struct KSmoothCheck {
    bool hypotheses = false;
    std::size_t order = 0;
};

KSmoothCheck ksmooth_bound_check(const Operator& t);

// Doubled attainer count |M_T intersect Ext(B_X)|.
std::size_t attainer_count(const OperatorSupport& s);

// Canonical total order on operators between fixed spaces (lex on the
// flattened matrix).
bool operator_less(const Operator& a, const Operator& b);

} // namespace polyext

#endif
