#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wgs {

// Coordinate into the index set Γ. The finite model uses [0, n), the
// half-infinite model the naturals, the bi-infinite model all of ℤ.
using Index = std::int64_t;

struct NotAUnit : std::domain_error {
  using std::domain_error::domain_error;
};
struct BadWitnessPoint : std::domain_error {
  using std::domain_error::domain_error;
};
struct NotApplicable : std::domain_error {
  using std::domain_error::domain_error;
};
struct HypothesisViolated : std::domain_error {
  using std::domain_error::domain_error;
};
struct LinkNotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SpaceTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Schema/validation failure with the document path that triggered it.
struct ParseError : std::runtime_error {
  std::string path;
  ParseError(std::string at, const std::string& what)
      : std::runtime_error(at + ": " + what), path(std::move(at)) {}
};

}  // namespace wgs
