#ifndef POLYEXT_ANALYSIS_HPP
#define POLYEXT_ANALYSIS_HPP

#include <polyext/operators.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace polyext {

// Time budget for enumerations; empty or zero means unlimited.
struct Budget {
    std::optional<double> seconds;
};

// Every extreme contraction between a pair of spaces, in canonical order
// (lex on the flattened matrix). Antipodal pairs are both listed. The
// per-case split is filled for 2-dimensional pairs; the isometry count when
// domain and codomain coincide.
struct ContractionCensus {
    PolyhedralSpace domain;
    PolyhedralSpace codomain;
    std::vector<Operator> contractions;
    std::size_t count = 0;
    std::map<Case2D, std::size_t> per_case;
    std::optional<std::size_t> isometries;
};

enum class WeakLPStatus { Holds, Fails, InconclusiveBudget };

struct WeakLPVerdict {
    WeakLPStatus status = WeakLPStatus::Holds;
    std::optional<Operator> witness; // extreme contraction hitting no vertex
    std::size_t checked = 0;         // contractions examined (samples when budgeted)
    // Diagnostics for the budget-degraded mode: how many samples met the
    // order-bound hypotheses and the largest order seen among them.
    std::size_t bound_checked = 0;
    std::size_t max_order = 0;
};

struct LPVerdict {
    bool holds = false;
    std::optional<Operator> extreme_not_preserving;  // extreme, maps a vertex off the vertex set
    std::optional<Operator> preserving_not_extreme;  // norm-one vertex-preserving, not extreme
    std::size_t extreme_count = 0;
    std::size_t preserving_count = 0;
};

// The unit ball of L(X, Y) in dimension mn: one inequality f (x) x per
// (domain vertex, codomain dual vertex) pair, redundancy-reduced. A flattened
// matrix satisfies all of them iff its operator norm is at most 1.
HRep operator_ball(const PolyhedralSpace& x, const PolyhedralSpace& y,
                   std::size_t cap = kDefaultDimensionCap);

// Vertex enumeration of the operator ball, unflattened and cross-checked:
// every vertex must pass is_extreme_contraction or the run aborts. Throws
// BudgetExceededError when the budget runs out.
ContractionCensus enumerate_extreme_contractions(
    const PolyhedralSpace& x, const PolyhedralSpace& y,
    std::size_t cap = kDefaultDimensionCap, Budget budget = {});

// Does every extreme contraction map some domain ball vertex to a codomain
// ball vertex? Exhaustive over the census; on budget exhaustion degrades to
// order-bound spot checks on sampled operators and reports an inconclusive
// status instead of a verdict.
WeakLPVerdict check_weak_lp(const PolyhedralSpace& x, const PolyhedralSpace& y,
                            std::size_t cap = kDefaultDimensionCap, Budget budget = {});

// Are the extreme contractions exactly the norm-one maps sending every
// vertex to a vertex? Decided by comparing the census against direct
// enumeration of vertex-to-vertex assignments.
LPVerdict check_lp(const PolyhedralSpace& x, const PolyhedralSpace& y,
                   std::size_t cap = kDefaultDimensionCap, Budget budget = {});

// With |Ext(B_X)| = 2(n+p): the pair satisfies the weak intersection
// property whenever m*p < n+p.
bool weak_lp_sufficient(const PolyhedralSpace& x, const PolyhedralSpace& y);

// For a 2-dimensional X with at least 8 ball vertices: an extreme
// contraction X -> sup-norm plane that maps no vertex of B_X to a vertex,
// built from two dual-ball vertices spanning no edge. Output is re-verified.
Operator weak_lp_witness_linf2(const PolyhedralSpace& x,
                               std::size_t cap = kDefaultDimensionCap);

struct ConstructedCodomain {
    PolyhedralSpace space;    // 2n ball vertices
    Operator certificate;     // the identity X -> Y, an extreme contraction
};

// For a 2-dimensional X with at least 8 ball vertices and n >= 3: a codomain
// Y with exactly 2n ball vertices such that the identity is an extreme
// contraction mapping no vertex of B_X to a vertex of B_Y.
ConstructedCodomain weak_lp_failing_codomain(const PolyhedralSpace& x, std::size_t n,
                                             std::size_t cap = kDefaultDimensionCap);

// T maps the domain vertex set bijectively onto the codomain vertex set.
bool is_isometry(const Operator& t);

std::size_t count_isometries(const PolyhedralSpace& x,
                             std::size_t cap = kDefaultDimensionCap);

// The census of the rational hexagon against itself, with the headline
// structure asserted: 30 contractions, 12 isometries, 18 non-isometries each
// attaining at exactly two antipodal vertex pairs with images equal up to
// sign.
ContractionCensus hexagon_census();

} // namespace polyext

#endif
