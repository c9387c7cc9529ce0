#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rackkit {

/// Index of an element in a finite universe {0, ..., n-1}.
using Elem = std::uint32_t;

enum class ErrorKind {
  // generic
  InvalidArgument,
  ShapeMismatch,
  OutOfRange,
  ParseError,
  // groups
  NotBijective,
  NotHomomorphism,
  NotAbelian,
  DoNotGenerate,
  // racks
  NotBijectiveColumn,
  NotSelfDistributive,
  // actions, cocycles, bundles
  CompatibilityFail,
  CyclicAxiomFail,
  ActionNotByAutomorphisms,
  NotAutomorphism,
  EquivarianceFail,
  CocycleFail,
  FiberNotRack,
  BundleCompatFail,
  GFamilyAxiomFail,
  // representations and duality
  NotInvertible,
  ConjugationFail,
  ConductorTooSmall,
  Inconclusive,
  RackMismatch,
  HypothesesFail,
  // resource limits
  SizeCapExceeded,
  ClosureCapExceeded,
  BudgetExceeded,
};

std::string_view kind_name(ErrorKind kind) noexcept;

/// Error carrying a machine-readable kind and a minimal witness tuple.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<std::size_t> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

  /// Caps and budgets, as opposed to a failed validation.
  bool is_resource_limit() const noexcept;

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

}  // namespace rackkit
