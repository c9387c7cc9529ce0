#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rackkit/error.hpp"
#include "rackkit/permutation.hpp"

namespace rackkit {

/// Constructors refuse groups larger than this.
inline constexpr std::size_t kMaxGroupOrder = 5040;

/// A finite group given by its Cayley table, table[a * order + b] = a·b.
///
/// Identity and inverses are derived from the table during validation; the
/// table is checked for closure, associativity, identity and inverses.
class FiniteGroup {
 public:
  /// Throws Error(OutOfRange | InvalidArgument | SizeCapExceeded).
  static FiniteGroup from_table(std::size_t order, std::vector<Elem> table, std::string name = {});

  std::size_t order() const noexcept { return order_; }
  Elem mul(Elem a, Elem b) const { return table_[a * order_ + b]; }
  Elem identity() const noexcept { return identity_; }
  Elem inverse(Elem a) const { return inverse_[a]; }
  std::span<const Elem> table() const noexcept { return table_; }
  const std::string& name() const noexcept { return name_; }

  bool is_abelian() const;
  /// a^k, k may be negative.
  Elem power(Elem a, std::int64_t k) const;
  std::uint64_t element_order(Elem a) const;
  /// lcm of all element orders.
  std::uint64_t exponent() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  std::size_t order_ = 0;
  std::vector<Elem> table_;
  Elem identity_ = 0;
  std::vector<Elem> inverse_;
  std::string name_;
};

/// An automorphism of a specific group, stored as a permutation of its universe.
class GroupAutomorphism {
 public:
  GroupAutomorphism() = default;

  Elem operator()(Elem a) const { return perm_(a); }
  const Permutation& perm() const noexcept { return perm_; }
  bool is_identity() const noexcept { return perm_.is_identity(); }
  std::uint64_t order() const { return perm_.order(); }
  GroupAutomorphism power(std::int64_t k) const;

  friend bool operator==(const GroupAutomorphism&, const GroupAutomorphism&) = default;

 private:
  friend GroupAutomorphism automorphism_validate(const FiniteGroup&, std::vector<Elem>);
  friend GroupAutomorphism compose(const GroupAutomorphism&, const GroupAutomorphism&);
  explicit GroupAutomorphism(Permutation p) : perm_(std::move(p)) {}
  Permutation perm_;
};

/// (outer ∘ inner)(g) = outer(inner(g)).
GroupAutomorphism compose(const GroupAutomorphism& outer, const GroupAutomorphism& inner);

FiniteGroup group_cyclic(std::size_t m);
FiniteGroup group_product(const FiniteGroup& g, const FiniteGroup& h);
/// S_m, m <= 5, elements are the m! image words in lexicographic order and
/// (a·b)(i) = a(b(i)).
FiniteGroup group_symmetric(std::size_t m);

/// Sorted list of central elements.
std::vector<Elem> group_center(const FiniteGroup& g);

/// Throws Error(NotBijective) or Error(NotHomomorphism, witness {a, b}) with
/// the lexicographically least failing pair.
GroupAutomorphism automorphism_validate(const FiniteGroup& g, std::vector<Elem> perm);

/// g ↦ u·g·u⁻¹.
GroupAutomorphism inner_automorphism(const FiniteGroup& g, Elem u);

/// g ↦ g⁻¹; an automorphism only for abelian groups.
GroupAutomorphism negation_automorphism(const FiniteGroup& g);

/// Sorted closure of `generators` under multiplication (the identity is always included).
std::vector<Elem> generated_subgroup(const FiniteGroup& g, std::span<const Elem> generators);

/// Parses "Z4", "S3", "Z2xZ4xS3" (direct products, left factor most significant).
FiniteGroup group_from_spec(const std::string& spec);

}  // namespace rackkit
