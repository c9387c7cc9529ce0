#include "rackkit/error.hpp"

namespace rackkit {

std::string_view kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::DoNotGenerate: return "DoNotGenerate";
    case ErrorKind::NotBijectiveColumn: return "NotBijectiveColumn";
    case ErrorKind::NotSelfDistributive: return "NotSelfDistributive";
    case ErrorKind::CompatibilityFail: return "CompatibilityFail";
    case ErrorKind::CyclicAxiomFail: return "CyclicAxiomFail";
    case ErrorKind::ActionNotByAutomorphisms: return "ActionNotByAutomorphisms";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::EquivarianceFail: return "EquivarianceFail";
    case ErrorKind::CocycleFail: return "CocycleFail";
    case ErrorKind::FiberNotRack: return "FiberNotRack";
    case ErrorKind::BundleCompatFail: return "BundleCompatFail";
    case ErrorKind::GFamilyAxiomFail: return "GFamilyAxiomFail";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::ConjugationFail: return "ConjugationFail";
    case ErrorKind::ConductorTooSmall: return "ConductorTooSmall";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::RackMismatch: return "RackMismatch";
    case ErrorKind::HypothesesFail: return "HypothesesFail";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::vector<std::size_t> witness)
    : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

bool Error::is_resource_limit() const noexcept {
  return kind_ == ErrorKind::SizeCapExceeded || kind_ == ErrorKind::ClosureCapExceeded ||
         kind_ == ErrorKind::BudgetExceeded;
}

}  // namespace rackkit
