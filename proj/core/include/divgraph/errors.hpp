#ifndef DIVGRAPH_ERRORS_HPP
#define DIVGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace divgraph {

// Raised when a request exceeds a documented hard cap (oracle degree,
// build/diameter budgets). Distinct from invalid_argument so callers can
// map it to a dedicated exit status.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal consistency check fails (e.g. a class size
// computation would produce a negative prime exponent). Always a bug.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace divgraph

#endif
