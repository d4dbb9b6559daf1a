#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dynfpt {

enum class Errc {
  DuplicateEdge,
  MissingEdge,
  SelfLoop,
  OutOfRange,
  DuplicateElement,
  MissingElement,
  NotARoot,
  SameTree,
  NoSuchForestEdge,
  DifferentTrees,
  NotFree,
  NotInX,
  AssumptionViolated,
  CapExceeded,
  StaleLabel,
  DegreeBoundExceeded,
  BudgetExceeded,
  ParseError,
  InvalidOp,
};

std::string_view to_string(Errc code);

// Recoverable precondition failure. The structure that threw is unchanged.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// An internal consistency check failed; the structure may be corrupt.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dynfpt
