#pragma once

#include <stdexcept>
#include <string>

namespace relfrob {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A value that was required to be rational has irrational parts.
struct NotRational : Error {
  using Error::Error;
};

// Laurent polynomial with negative exponents evaluated at zero.
struct ZeroBase : Error {
  using Error::Error;
};

// A symbolic polynomial was requested where the formula is not polynomial.
struct NonPolynomial : Error {
  using Error::Error;
};

// Group or table construction past the configured size cap.
struct TooLarge : Error {
  using Error::Error;
};

// An enumeration kernel would exceed the configured iteration budget.
struct WorkBoundExceeded : Error {
  using Error::Error;
};

// A value violated an invariant the theory guarantees; indicates a bug.
struct InternalInconsistency : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, int line_no = 0)
      : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg
                          : msg),
        line(line_no) {}
  int line;
};

}  // namespace relfrob
