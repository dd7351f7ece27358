#ifndef EGR_ERRORS_HPP
#define EGR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace egr {

// Caller passed an argument outside the documented domain (bad q, malformed
// flags, a non-bijective permutation, ...).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input is well-formed but the operation is undefined on it (inverse of zero,
// egr analysis of a forest).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A configured desk-scale limit was exceeded; the computation is refused
// rather than attempted.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed external data. offset is a byte offset into the input when known.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what, long long offset_ = -1)
      : std::runtime_error(what), offset(offset_) {}
  long long offset;
};

// A construction failed one of its own runtime self-checks.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace egr

#endif
