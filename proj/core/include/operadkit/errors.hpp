#pragma once

#include <stdexcept>
#include <string>

namespace operadkit {

/// Composition result would exceed the operad's arity window.
class ArityOverflow : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Partial-composition slot outside 1..arity(f).
class SlotOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on data that does not satisfy its documented precondition
/// (e.g. splitting a non-Rota-Baxter element, or a non-multiplication passed as pi).
class PreconditionFailure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A graded operation does not have the degree its arity requires.
class DegreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace operadkit
