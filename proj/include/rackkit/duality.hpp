#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rackkit/fingroup.hpp"
#include "rackkit/rack.hpp"
#include "rackkit/repr.hpp"

namespace rackkit {

/// An element p/q of ℚ/ℤ with 0 ≤ p < q, gcd(p, q) = 1; read as e^{2πi p/q}.
class QZ {
 public:
  QZ() = default;
  /// Reduces mod 1. Throws Error(InvalidArgument) for q = 0.
  QZ(std::int64_t p, std::int64_t q);

  std::int64_t num() const noexcept { return p_; }
  std::int64_t den() const noexcept { return q_; }
  /// "p/q", or "0".
  std::string to_string() const;
  /// Accepts "p/q" or "p". Throws Error(ParseError).
  static QZ parse(const std::string& text);

  friend QZ operator+(const QZ& a, const QZ& b);
  QZ operator-() const;
  friend bool operator==(const QZ&, const QZ&) = default;
  friend auto operator<=>(const QZ&, const QZ&) = default;

 private:
  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
};

/// A U(1)-valued character stored as one ℚ/ℤ value per orbit.
class RackCharacter {
 public:
  /// Throws Error(ShapeMismatch) unless there is one value per orbit.
  RackCharacter(const FiniteRack& x, std::vector<QZ> values);
  static RackCharacter identity(const FiniteRack& x);

  const FiniteRack& rack() const noexcept { return rack_; }
  const std::vector<QZ>& values() const noexcept { return values_; }
  QZ at(Elem x) const { return values_[rack_.orbit_index(x)]; }

  RackCharacter inverse() const;
  friend bool operator==(const RackCharacter& a, const RackCharacter& b) {
    return a.rack_ == b.rack_ && a.values_ == b.values_;
  }

 private:
  FiniteRack rack_;
  std::vector<QZ> values_;
};

/// Pointwise product. Throws Error(RackMismatch).
RackCharacter operator*(const RackCharacter& a, const RackCharacter& b);

/// Number of orbits.
std::size_t dual_rank(const FiniteRack& x);

struct TraceCharacter {
  std::vector<Cyclo> traces;
  /// Tr π_{x▷y} = Tr π_x for all x, y.
  bool orbit_constant = true;
  /// Present for one-dimensional representations with root-of-unity values.
  std::optional<RackCharacter> character;
};

TraceCharacter trace_character(const RackRep& r);

/// The ℚ/ℤ value of ζ_k^e.
QZ onedim_value(const OneDimRep& r, Elem x);
/// The character of a one-dimensional representation.
RackCharacter onedim_character(const OneDimRep& r);

struct RepDualComparison {
  std::uint32_t conductor = 0;
  std::size_t strong_onedim_count = 0;
  /// |μ_k|^{orbits}.
  std::uint64_t dual_torsion_count = 0;
  /// The trace map is an injective homomorphism into D_qX.
  bool embeds = false;
  bool onto_torsion = false;
};

/// Throws Error(HypothesesFail{0 involutive, 1 connected}).
RepDualComparison repstrong_vs_dual(const FiniteRack& x, std::uint32_t conductor);

struct CoreDualCount {
  std::size_t orbit_count = 0;
  std::uint64_t paper_bound = 0;
  bool match() const noexcept { return orbit_count == paper_bound; }
};

/// Compares dual_rank(Core(G)) with 2^|generators|. Throws Error(NotAbelian | DoNotGenerate).
CoreDualCount core_dual_count_check(const FiniteGroup& g, std::span<const Elem> generators);

}  // namespace rackkit
