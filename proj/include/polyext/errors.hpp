#ifndef POLYEXT_ERRORS_HPP
#define POLYEXT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyext {

// Bad input: dimension mismatches, asymmetric vertex sets, points outside
// the polytope, operators that are not normalized, and the like.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Work refused before it starts: dimension above the cap.
class CapExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Work abandoned mid-flight: enumeration ran out of its time budget.
class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A cross-check between two independent computations disagreed. Always a bug,
// never swallowed.
class InternalInconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace polyext

#endif
