#pragma once

#include <stdexcept>
#include <string>

namespace wr {

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Negative exponent meets a zero (or non-invertible) value.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotDivisibleError : std::domain_error {
  using std::domain_error::domain_error;
};

struct SingularMatrixError : std::domain_error {
  using std::domain_error::domain_error;
};

struct RankError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotARootError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotSignedPermError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CapExceededError : std::length_error {
  CapExceededError(const std::string& what, unsigned long long predicted)
      : std::length_error(what), predicted_order(predicted) {}
  unsigned long long predicted_order;
};

struct InvarianceError : std::logic_error {
  using std::logic_error::logic_error;
};

struct DegenerateSeedError : std::domain_error {
  using std::domain_error::domain_error;
};

struct WeightError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A supposedly genuine character produced a negative multiplicity.
struct BranchingError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace wr
