#ifndef PCLIE_ERROR_HPP
#define PCLIE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pclie {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input, violated precondition, or mixing values from different contexts.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An engine detected that one of its own invariants does not hold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

}  // namespace detail
}  // namespace pclie

#endif  // PCLIE_ERROR_HPP
