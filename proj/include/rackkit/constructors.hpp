#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rackkit/fingroup.hpp"
#include "rackkit/rack.hpp"

namespace rackkit {

/// Default cap on constructed rack sizes.
inline constexpr std::size_t kDefaultRackCap = 4096;

/// A rack whose elements are labelled by integer tuples (pivot tuples,
/// module vectors, cross-product pairs).
struct LabeledRack {
  FiniteRack rack;
  std::vector<std::vector<Elem>> labels;
};

/// (ℤ_m)^d with an invertible d×d matrix gamma acting on row vectors.
class AlexanderModule {
 public:
  /// gamma is row-major d×d with entries reduced mod m. Throws
  /// Error(NotInvertible) when det(gamma) is not a unit mod m.
  AlexanderModule(std::uint32_t modulus, std::uint32_t rank, std::vector<std::int64_t> gamma);

  std::uint32_t modulus() const noexcept { return m_; }
  std::uint32_t rank() const noexcept { return d_; }
  const std::vector<std::uint32_t>& gamma() const noexcept { return gamma_; }
  const std::vector<std::uint32_t>& gamma_inverse() const noexcept { return gamma_inv_; }
  std::uint64_t cardinality() const;

  /// Mixed-radix index: first coordinate most significant.
  std::vector<std::uint32_t> decode(std::size_t index) const;
  std::size_t encode(const std::vector<std::uint32_t>& v) const;

 private:
  std::uint32_t m_;
  std::uint32_t d_;
  std::vector<std::uint32_t> gamma_;
  std::vector<std::uint32_t> gamma_inv_;
};

/// Square matrices mod m, row-major; small helpers shared with the stability code.
namespace modmat {
std::vector<std::uint32_t> identity(std::uint32_t d);
std::vector<std::uint32_t> mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                               std::uint32_t d, std::uint32_t m);
std::vector<std::uint32_t> power(const std::vector<std::uint32_t>& a, std::uint64_t k, std::uint32_t d,
                                 std::uint32_t m);
/// Row vector times matrix.
std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v, const std::vector<std::uint32_t>& a,
                                 std::uint32_t d, std::uint32_t m);
std::int64_t determinant(const std::vector<std::int64_t>& a, std::uint32_t d);
}  // namespace modmat

FiniteRack trivial_rack(std::size_t n);
/// x ▷ y = 2y − x mod m.
FiniteRack dihedral_quandle(std::size_t m);
/// g ▷ h = h g h⁻¹.
FiniteRack conj_quandle(const FiniteGroup& g);
/// g ▷ h = h φ(g) φ(h⁻¹).
FiniteRack conj_phi_quandle(const FiniteGroup& g, const GroupAutomorphism& phi);
/// g ▷ h = h g⁻¹ h.
FiniteRack core_quandle(const FiniteGroup& g);
/// x ▷ y = (x − y)γ + y on (ℤ_m)^d; labels are the coordinate vectors.
LabeledRack alexander_quandle(const AlexanderModule& module, std::size_t cap = kDefaultRackCap);
/// g ▷ h = φ(g) + (id − φ)(h) on an abelian group; throws Error(NotAbelian).
FiniteRack gphi_quandle(const FiniteGroup& g, const GroupAutomorphism& phi);
/// n-tuples with central product, ordered lexicographically, with
/// (x_i) ▷ (y_i) = (y_n⁻¹ x_n y_1, y_1⁻¹ x_1 y_2, ..., y_{n−1}⁻¹ x_{n−1} y_n).
LabeledRack pivot_quandle(const FiniteGroup& g, std::size_t n, std::size_t cap = kDefaultRackCap);

}  // namespace rackkit
