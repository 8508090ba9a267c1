#ifndef PIM_ERRORS_HPP_
#define PIM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace pim {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed word or equation text.
struct SyntaxError : Error {
  using Error::Error;
};

/// Both sides of an equation quasi-reduce to the same word.
struct TrivialEquation : Error {
  using Error::Error;
};

/// A degenerate (monogenic) equation where a non-degenerate one is required.
struct DegenerateInput : Error {
  using Error::Error;
};

/// Requested a finite construction on the free presentation.
struct NotFinite : Error {
  using Error::Error;
};

/// The operation is not defined for this input (e.g. monogenic verdicts).
struct Unsupported : Error {
  using Error::Error;
};

/// Oracle bound below the contract minimum.
struct BoundTooSmall : Error {
  using Error::Error;
};

/// A closure ran past its element cap.
struct CapExceeded : Error {
  using Error::Error;
};

/// The open-set family violates a topology axiom.
struct InvalidTopology : Error {
  using Error::Error;
};

}  // namespace pim

#endif  // PIM_ERRORS_HPP_
