#pragma once

#include <stdexcept>
#include <string>

namespace jacgen {

// Raised when an Euler-characteristic computation would leave the ring of
// Tate classes (a nonzero coefficient on a symmetric-power local system of
// weight beyond the supported range). Carries the offending motive weight.
struct NonTateRegime : std::runtime_error {
  int weight;
  explicit NonTateRegime(int w)
      : std::runtime_error("non-Tate regime: weight " + std::to_string(w) +
                           " cusp-form motive is nonzero"),
        weight(w) {}
};

struct NotDivisible : std::runtime_error {
  explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

struct PositiveDegreeRequired : std::runtime_error {
  explicit PositiveDegreeRequired(const std::string& what)
      : std::runtime_error(what) {}
};

struct BadLeadingTerm : std::runtime_error {
  explicit BadLeadingTerm(const std::string& what) : std::runtime_error(what) {}
};

struct NonIntegralSchur : std::runtime_error {
  explicit NonIntegralSchur(const std::string& what)
      : std::runtime_error(what) {}
};

struct InvalidSequence : std::runtime_error {
  explicit InvalidSequence(const std::string& what)
      : std::runtime_error(what) {}
};

struct NotAnNCycle : std::runtime_error {
  explicit NotAnNCycle(const std::string& what) : std::runtime_error(what) {}
};

struct NotSmoothable : std::runtime_error {
  explicit NotSmoothable(const std::string& what) : std::runtime_error(what) {}
};

struct DegeneratePolarisation : std::runtime_error {
  explicit DegeneratePolarisation(const std::string& what)
      : std::runtime_error(what) {}
};

struct NotSuperadditive : std::runtime_error {
  explicit NotSuperadditive(const std::string& what)
      : std::runtime_error(what) {}
};

// A wall of the stability-space decomposition was hit exactly.
struct DegenerateWall : std::runtime_error {
  explicit DegenerateWall(const std::string& what) : std::runtime_error(what) {}
};

struct NTooSmall : std::runtime_error {
  explicit NTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct BoundExceeded : std::runtime_error {
  explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

// An open stability cell promised by the theory turned out empty.  This is an
// internal invariant violation, never a user error.
struct InternalCellEmpty : std::logic_error {
  explicit InternalCellEmpty(const std::string& what) : std::logic_error(what) {}
};

}  // namespace jacgen
