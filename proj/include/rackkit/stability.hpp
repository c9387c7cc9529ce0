#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rackkit/constructors.hpp"
#include "rackkit/fingroup.hpp"
#include "rackkit/rack.hpp"

namespace rackkit {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;
/// Generated groups above this order are searched by direct backtracking.
inline constexpr std::size_t kDefaultSearchClosureCap = 200'000;
inline constexpr std::size_t kAllWitnesses = static_cast<std::size_t>(-1);

struct SearchOptions {
  std::size_t max_witnesses = 16;
  /// Node budget for direct backtracking, split evenly over first letters.
  std::uint64_t budget = kDefaultSearchBudget;
  std::size_t closure_cap = kDefaultSearchClosureCap;
  unsigned jobs = 1;
};

/// Words of a fixed length whose composite is the identity.
struct WordSearchResult {
  std::size_t length = 0;
  std::uint64_t count = 0;
  /// False when the node budget truncated the search; count is then a lower bound.
  bool exact = true;
  /// Count saturated at 2^64 - 1.
  bool overflow = false;
  /// Lexicographically first witnesses.
  std::vector<std::vector<Elem>> witnesses;
  /// Number of classes under cyclic rotation, when computed exactly.
  std::optional<std::uint64_t> rotation_classes;
};

/// Counts words (w_1, ..., w_n) over `letters` with
/// letters[w_n] ∘ ... ∘ letters[w_1] = id. All letters act on the same set.
WordSearchResult search_identity_words(std::span<const Permutation> letters, std::size_t n,
                                       const SearchOptions& options = {});

using CenterResult = WordSearchResult;

/// x ▷ (u_i) = x for every x.
bool is_stabilizing(const FiniteRack& x, std::span<const Elem> family);

/// The n-center S^n(X): stabilizing families of order n.
CenterResult search_center(const FiniteRack& x, std::size_t n, const SearchOptions& options = {});

/// Every stabilizing family of order n, in lexicographic order.
std::vector<std::vector<Elem>> enumerate_center(const FiniteRack& x, std::size_t n, const SearchOptions& options = {});

struct StabilityReport {
  std::vector<CenterResult> orders;
  std::optional<std::size_t> least_stable_order;
};

StabilityReport stability_report(const FiniteRack& x, std::size_t min_order, std::size_t max_order,
                                 const SearchOptions& options = {});

/// True iff every cyclic rotation of a stabilizing family is stabilizing.
/// Throws Error(InvalidArgument) if `family` itself is not stabilizing.
bool cyclic_invariance_check(const FiniteRack& x, std::span<const Elem> family);

struct AlexanderCenter {
  bool stable = false;
  /// Solutions of F_γ(u) = Σ u_i γ^{n−i} = 0 when γ^n = I, otherwise 0.
  std::uint64_t f_solution_count = 0;
  /// Solutions of F_γ(u) = 0 regardless of γ^n.
  std::uint64_t f_kernel_count = 0;
  /// |S^n| from the composite x ↦ xγ^n + F_γ(u)(I − γ).
  std::uint64_t true_center_count = 0;
  /// |{v : v(I − γ) = 0}|.
  std::uint64_t fixed_kernel_size = 0;
  /// gcd(det(I − γ), m) = 1.
  bool one_minus_gamma_invertible = false;
};

/// Throws Error(SizeCapExceeded) if a count does not fit in 64 bits.
AlexanderCenter alexander_center_solver(const AlexanderModule& module, std::size_t n);

struct CoreOddCheck {
  bool paper_predicts = false;
  bool oracle = false;
  bool agree() const noexcept { return paper_predicts == oracle; }
};

/// Odd order 2k+1 stability of Core(G) against the exponent-2 test.
CoreOddCheck core_odd_stability_check(const FiniteGroup& g, std::size_t k, const SearchOptions& options = {});

struct ConjPhiCriterion {
  /// φ^n = Ad_w with w = u_n φ(u_{n−1}) ⋯ φ^{n−1}(u_1).
  bool printed_criterion = false;
  /// φ(w) = w and φ^n = Ad_{w⁻¹}: the composite g ↦ w φ^n(g) φ(w)⁻¹ is the identity.
  bool corrected_criterion = false;
  /// is_stabilizing on Conj_φ(G).
  bool direct = false;
};

ConjPhiCriterion conj_phi_criterion_check(const FiniteGroup& g, const GroupAutomorphism& phi,
                                          std::span<const Elem> family);

struct GphiTorsion {
  std::optional<std::size_t> torsion_order;
  /// Orders n ≤ maxorder with S^n(G_φ) nonempty, by search.
  std::vector<std::size_t> stable_orders;
  /// Orders n ≤ maxorder with φ^n = id.
  std::vector<std::size_t> predicted_orders;
};

GphiTorsion gphi_torsion_check(const FiniteGroup& g, const GroupAutomorphism& phi, std::size_t maxorder,
                               const SearchOptions& options = {});

struct PivotBijection {
  std::uint64_t center_count = 0;
  std::uint64_t pivot_count = 0;
  /// Reversal (u_1..u_n) ↦ (u_n..u_1) maps S^n(Conj(G)) bijectively onto P^n(G).
  bool match = false;
  /// Whether the unreversed tuples already coincide with P^n(G).
  bool identity_map_matches = false;
};

PivotBijection pivot_bijection_check(const FiniteGroup& g, std::size_t n, const SearchOptions& options = {});

}  // namespace rackkit
