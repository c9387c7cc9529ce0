#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rackkit/cyclotomic.hpp"
#include "rackkit/rack.hpp"

namespace rackkit {

/// Dimension limit for the dense commutant solve of non-permutation representations.
inline constexpr std::size_t kMaxCommutantDim = 16;
/// Largest number of exponent assignments tried by enumerate_strong_onedim.
inline constexpr std::uint64_t kMaxOneDimAssignments = 1'000'000;
/// Grid points tried exhaustively before random intertwiner combinations.
inline constexpr std::uint64_t kMaxIntertwinerGrid = 5000;

/// x ↦ π_x with π_{x▷y} = π_y π_x π_y⁻¹. A word (w_1, ..., w_k) maps to π_{w_k} ⋯ π_{w_1}.
class RackRep {
 public:
  /// Throws Error(ShapeMismatch | NotInvertible{x} | ConjugationFail{x,y}); witnesses least.
  static RackRep validate(const FiniteRack& x, std::vector<CMatrix> matrices);

  const FiniteRack& rack() const noexcept { return rack_; }
  std::size_t dimension() const noexcept { return dim_; }
  const CycloField& field() const noexcept { return *field_; }
  const CMatrix& matrix(Elem x) const { return matrices_[x]; }
  const std::vector<CMatrix>& matrices() const noexcept { return matrices_; }
  /// Images of basis vectors, when every π_x is a permutation matrix.
  const std::optional<std::vector<Permutation>>& permutations() const noexcept { return perms_; }

 private:
  RackRep(FiniteRack x, const CycloField& f, std::size_t dim, std::vector<CMatrix> m)
      : rack_(std::move(x)), field_(&f), dim_(dim), matrices_(std::move(m)) {}
  FiniteRack rack_;
  const CycloField* field_;
  std::size_t dim_;
  std::vector<CMatrix> matrices_;
  std::optional<std::vector<Permutation>> perms_;
};

inline RackRep rep_validate(const FiniteRack& x, std::vector<CMatrix> matrices) {
  return RackRep::validate(x, std::move(matrices));
}

/// λ_t(f) = f ∘ R_t⁻¹ on functions X → K; basis vector δ_y goes to δ_{y▷t}.
RackRep regular_rep(const FiniteRack& x, std::uint32_t conductor = kDefaultConductor);

/// π_x = τ for every x.
RackRep constant_rep(const FiniteRack& x, const CMatrix& tau);

RackRep direct_sum(const RackRep& a, const RackRep& b);

/// M π_x M⁻¹.
RackRep conjugate_rep(const RackRep& r, const CMatrix& m);

struct StrongRepCheck {
  bool strong = true;
  std::vector<Elem> word_a;
  std::vector<Elem> word_b;
  /// A word equal to the identity in Inn(X) whose matrix is not the identity.
  std::vector<Elem> identity_word;
  explicit operator bool() const noexcept { return strong; }
};

/// Whether R_x ↦ π_x extends to a homomorphism on Inn(X). Throws Error(ClosureCapExceeded).
StrongRepCheck is_strong_rep(const RackRep& r, std::size_t closure_cap = kDefaultClosureCap);

struct XLinearCheck {
  bool linear = true;
  /// Least x with φ π1_x ≠ π2_x φ.
  std::optional<Elem> witness;
  /// Basis columns of ker φ ⊆ V1 and im φ ⊆ V2, when linear.
  std::optional<CMatrix> kernel;
  std::optional<CMatrix> image;
  explicit operator bool() const noexcept { return linear; }
};

XLinearCheck xlinear_check(const RackRep& r1, const RackRep& r2, const CMatrix& phi);

/// Whether the column span of `basis` is preserved by every π_x.
bool is_invariant(const RackRep& r, const CMatrix& basis);

struct InvariantSearch {
  /// Basis columns of a proper nonzero invariant subspace.
  std::optional<CMatrix> proper_invariant;
  /// dim of {C : π_x C = C π_x}; 0 when a subspace was found before it was needed.
  std::size_t commutant_dimension = 0;
  bool irreducible() const noexcept { return !proper_invariant; }
};

/// Spins a fixed candidate list, then the dual representation, then decides by
/// the commutant. Throws Error(ConductorTooSmall) when the commutant is larger
/// than the scalars but no eigenspace is found in the field, and
/// Error(SizeCapExceeded) for dense commutants above kMaxCommutantDim.
InvariantSearch invariant_subspace_search(const RackRep& r);

/// Basis matrices of the commutant, columns flattened row-major.
std::vector<CMatrix> commutant_basis(const RackRep& r);
std::size_t commutant_dimension(const RackRep& r);

/// Basis of {φ : φ π1_x = π2_x φ} as d2×d1 matrices.
std::vector<CMatrix> intertwiner_basis(const RackRep& r1, const RackRep& r2);

struct Equivalence {
  bool equivalent = false;
  /// Invertible φ with φ π1_x φ⁻¹ = π2_x.
  std::optional<CMatrix> intertwiner;
};

/// Throws Error(ShapeMismatch | RackMismatch | Inconclusive).
Equivalence rep_equivalence_check(const RackRep& r1, const RackRep& r2, std::uint64_t seed = 1);

/// The representation on span(basis) in the coordinates of `basis`.
/// Throws Error(InvalidArgument) if the span is not invariant or basis is dependent.
RackRep restrict_rep(const RackRep& r, const CMatrix& basis);
/// The representation on V / span(basis), on the standard vectors completing `basis`.
RackRep quotient_rep(const RackRep& r, const CMatrix& basis);

/// x ↦ ζ_k^{exponents[x]}.
struct OneDimRep {
  FiniteRack rack;
  std::uint32_t conductor = 1;
  std::vector<std::uint32_t> exponents;

  RackRep to_rep() const;
  friend bool operator==(const OneDimRep& a, const OneDimRep& b) {
    return a.rack == b.rack && a.conductor == b.conductor && a.exponents == b.exponents;
  }
};

/// Every strong x ↦ μ_k, constant on orbits, in lexicographic order of the
/// per-orbit exponents. Throws Error(SizeCapExceeded) above kMaxOneDimAssignments.
std::vector<OneDimRep> enumerate_strong_onedim(const FiniteRack& x, std::uint32_t conductor);

/// Pointwise product. Throws Error(RackMismatch | ShapeMismatch).
OneDimRep tensor_onedim(const OneDimRep& a, const OneDimRep& b);
OneDimRep inverse_onedim(const OneDimRep& a);
OneDimRep trivial_onedim(const FiniteRack& x, std::uint32_t conductor);

struct Constituent {
  RackRep rep;
  bool strong = false;
  std::size_t commutant_dimension = 0;
};

/// Composition factors of r, found by recursive restriction and quotient.
std::vector<Constituent> decompose(const RackRep& r);

struct IrrepsReport {
  std::string name;
  std::uint32_t conductor = 0;
  std::vector<Constituent> constituents;
  /// A strong constituent of dimension ≥ 2 with commutant dimension 1.
  bool counterexample_candidate = false;
  std::string verdict_line() const;
};

/// Decomposes the regular representation of an involutive connected rack over
/// the field of exponent(Inn(X))-th roots of unity (or `conductor` if nonzero).
/// Throws Error(HypothesesFail{0 involutive, 1 connected}).
IrrepsReport irreps_check(const FiniteRack& x, const std::string& name, std::uint32_t conductor = 0);

}  // namespace rackkit
