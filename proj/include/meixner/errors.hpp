// Exception types raised by the library. Verification failures are never
// thrown; they are returned as reports.
#pragma once

#include <stdexcept>
#include <string>

namespace meixner {

/// Meixner parameters violating the admissibility conditions.
class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A truncation degree at or beyond the first vanishing omega_n.
class TruncationBeyondSupport : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A moment sequence that cannot come from a probability measure.
class InvalidMoments : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operator raising degree by more than its declared k.
class NotFaithful : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact translation form requested but Delta has no rational square root.
class NotASquare : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Translation combination failing its structural conditions.
class InvalidCombo : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested computation has no exact route for this input.
class Unsupported : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace meixner
