#include "dynfpt/error.hpp"

namespace dynfpt {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::MissingEdge: return "MissingEdge";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::DuplicateElement: return "DuplicateElement";
    case Errc::MissingElement: return "MissingElement";
    case Errc::NotARoot: return "NotARoot";
    case Errc::SameTree: return "SameTree";
    case Errc::NoSuchForestEdge: return "NoSuchForestEdge";
    case Errc::DifferentTrees: return "DifferentTrees";
    case Errc::NotFree: return "NotFree";
    case Errc::NotInX: return "NotInX";
    case Errc::AssumptionViolated: return "AssumptionViolated";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::StaleLabel: return "StaleLabel";
    case Errc::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidOp: return "InvalidOp";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace dynfpt
