#ifndef RHOGRAPH_ERRORS_HPP
#define RHOGRAPH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rhograph {

/// Malformed graph6/sparse6 input; `offset` is the byte position of the
/// first offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A configured search or enumeration ceiling was exceeded.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative eigensolve hit its iteration cap; carries the best estimate.
class ConvergenceFailure : public std::runtime_error {
public:
    ConvergenceFailure(const std::string& what, double best_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }

private:
    double best_estimate_;
};

} // namespace rhograph

#endif
