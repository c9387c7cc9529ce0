#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rackkit/constructors.hpp"
#include "rackkit/fingroup.hpp"
#include "rackkit/rack.hpp"
#include "rackkit/stability.hpp"

namespace rackkit {

/// Stabilizing families up to this order are checked for rotation invariance.
inline constexpr std::size_t kDefaultCyclicBound = 4;
/// Largest |X|²·|Q|² accepted for a dense cocycle table.
inline constexpr std::size_t kMaxCocycleEntries = 20'000'000;

/// A right action M × X → M, table[m * |X| + x] = m·x.
class RackAction {
 public:
  /// Throws Error(OutOfRange | NotBijective{x} | CompatibilityFail{m,x,y} |
  /// CyclicAxiomFail{u_1..u_n, s, m}); witnesses are least in index order.
  /// Rotation invariance is checked on every stabilizing family of order
  /// at most `cyclic_bound`.
  static RackAction validate(const FiniteRack& x, std::size_t set_size, std::vector<Elem> table,
                             std::size_t cyclic_bound = kDefaultCyclicBound, const SearchOptions& options = {});

  const FiniteRack& rack() const noexcept { return rack_; }
  std::size_t set_size() const noexcept { return set_size_; }
  Elem act(Elem m, Elem x) const { return table_[m * rack_.size() + x]; }
  /// m ↦ m·x.
  const Permutation& column(Elem x) const { return columns_[x]; }
  std::span<const Elem> table() const noexcept { return table_; }
  /// m·(x_1, ..., x_s) = (⋯(m·x_1)⋯)·x_s.
  Elem act_family(Elem m, std::span<const Elem> family) const;
  std::size_t cyclic_bound() const noexcept { return cyclic_bound_; }

 private:
  FiniteRack rack_;
  std::size_t set_size_ = 0;
  std::vector<Elem> table_;
  std::vector<Permutation> columns_;
  std::size_t cyclic_bound_ = 0;
};

inline RackAction action_validate(const FiniteRack& x, std::size_t set_size, std::vector<Elem> table,
                                  std::size_t cyclic_bound = kDefaultCyclicBound) {
  return RackAction::validate(x, set_size, std::move(table), cyclic_bound);
}

/// m·x = m ▷ x.
RackAction self_action(const FiniteRack& x);
/// Conj(G) acting on G by m·g = m g⁻¹.
RackAction conj_right_action(const FiniteGroup& g);
/// Trivial rack X acting on functions X → ℤ_2 by α·x = α + δ_x; functions
/// are bit masks. Throws Error(InvalidArgument) if X is not trivial.
RackAction delta_function_action(const FiniteRack& x);
/// m·x = m for all m, x.
RackAction trivial_action(const FiniteRack& x, std::size_t set_size);

/// {m·(x_i) : m ∈ M}, sorted.
std::vector<Elem> action_orbit(const RackAction& a, std::span<const Elem> family);
/// {m : m·(x_i) = m}, sorted.
std::vector<Elem> action_fibre(const RackAction& a, std::span<const Elem> family);
/// X[m] = {x : m·x = m}, sorted.
std::vector<Elem> action_stabilizer(const RackAction& a, Elem m);
/// x ↦ m·x is injective for every m.
bool is_faithful(const RackAction& a);

struct ApproximateUnits {
  /// Tuples of the requested length acting as the identity on M.
  WordSearchResult units;
  /// t such that (t, ..., t) of that length is an approximate unit.
  std::vector<Elem> r_units;
  /// Every t is an r-unit.
  bool periodic = false;
};

ApproximateUnits approximate_units(const RackAction& a, std::size_t order, const SearchOptions& options = {});

struct StrongCheck {
  bool strong = true;
  /// Two positive words reaching the same inner element with different images.
  std::vector<Elem> word_a;
  std::vector<Elem> word_b;
  /// A stabilizing family that does not act as the identity.
  std::vector<Elem> failing_family;
  explicit operator bool() const noexcept { return strong; }
};

/// Whether R_x ↦ column(x) extends to the inner group, i.e. every
/// stabilizing family of every order is an approximate unit.
StrongCheck is_strong_action(const RackAction& a, std::size_t closure_cap = kDefaultClosureCap);

/// ∂_{x,y}(p, q) stored densely at ((x * |X| + y) * |Q| + p) * |Q| + q.
class TwistedSystem {
 public:
  /// The action must act on Q's universe by rack automorphisms of Q.
  /// Throws Error(ActionNotByAutomorphisms{x} | NotAutomorphism{x,y,q} |
  /// EquivarianceFail{x,y,p,q,t} | CocycleFail{x,y,z,p,q,r} | SizeCapExceeded).
  static TwistedSystem validate(const FiniteRack& x, const FiniteRack& q, const RackAction& action,
                                std::vector<Elem> table);

  const FiniteRack& base() const noexcept { return x_; }
  const FiniteRack& fiber() const noexcept { return q_; }
  const RackAction& action() const noexcept { return action_; }
  Elem d(Elem x, Elem y, Elem p, Elem q) const {
    return table_[((x * x_.size() + y) * q_.size() + p) * q_.size() + q];
  }
  std::span<const Elem> table() const noexcept { return table_; }

 private:
  TwistedSystem(FiniteRack x, FiniteRack q, RackAction action, std::vector<Elem> table)
      : x_(std::move(x)), q_(std::move(q)), action_(std::move(action)), table_(std::move(table)) {}
  FiniteRack x_;
  FiniteRack q_;
  RackAction action_;
  std::vector<Elem> table_;
};

inline TwistedSystem cocycle_validate(const FiniteRack& x, const FiniteRack& q, const RackAction& action,
                                      std::vector<Elem> table) {
  return TwistedSystem::validate(x, q, action, std::move(table));
}

/// ∂_{x,y}(p, q) = p·y.
TwistedSystem canonical_cocycle(const FiniteRack& q, const RackAction& action);

/// Q ⋊_∂ X; element (p, x) has index p * |X| + x and label {p, x}.
LabeledRack cross_product(const TwistedSystem& t, std::size_t cap = kDefaultRackCap);

struct CrossProductStability {
  /// Families ((ξ_i, t_i)) with (t_i) ∈ S^n(X) whose nested ∂-composite is the identity.
  std::uint64_t count = 0;
  /// First witnesses as cross-product indices ξ * |X| + t.
  std::vector<std::vector<Elem>> witnesses;
  /// search_center on the cross-product rack.
  std::uint64_t direct_count = 0;
  bool stable() const noexcept { return count > 0; }
  bool agrees() const noexcept { return count == direct_count; }
};

/// Folds ∂_{x▷(t)_{<n}, t_n}(⋯ ∂_{x▷t_1, t_2}(∂_{x,t_1}(p, ξ_1), ξ_2) ⋯, ξ_n) left to right.
CrossProductStability crossproduct_stability_check(const TwistedSystem& t, std::size_t n,
                                                   const SearchOptions& options = {});

/// Rack structures ★_x^y on one carrier, indexed by pairs of a base rack.
class BundleOfRacks {
 public:
  /// tables[x * |X| + y] is the carrier × carrier table of ★_x^y.
  /// Throws Error(FiberNotRack{x,y} | BundleCompatFail{x,y,z,a,b,c}).
  static BundleOfRacks validate(const FiniteRack& x, std::size_t carrier, std::vector<std::vector<Elem>> tables);

  const FiniteRack& base() const noexcept { return x_; }
  std::size_t carrier() const noexcept { return carrier_; }
  const FiniteRack& fiber(Elem x, Elem y) const { return fibers_[x * x_.size() + y]; }
  Elem star(Elem x, Elem y, Elem a, Elem b) const { return fiber(x, y).op(a, b); }

 private:
  BundleOfRacks(FiniteRack x, std::size_t carrier, std::vector<FiniteRack> fibers)
      : x_(std::move(x)), carrier_(carrier), fibers_(std::move(fibers)) {}
  FiniteRack x_;
  std::size_t carrier_ = 0;
  std::vector<FiniteRack> fibers_;
};

inline BundleOfRacks bundle_validate(const FiniteRack& x, std::size_t carrier,
                                     std::vector<std::vector<Elem>> tables) {
  return BundleOfRacks::validate(x, carrier, std::move(tables));
}

/// ★_u^v = ★_{f(u)}^{f(v)} over Y. Throws Error(NotHomomorphism{u,v}) if f is not a rack map.
BundleOfRacks bundle_pullback(const BundleOfRacks& b, const FiniteRack& y, std::span<const Elem> f);

/// Quandle structures ▷^g on one carrier indexed by a group.
struct GFamily {
  FiniteGroup group;
  std::size_t carrier = 0;
  std::vector<FiniteRack> ops;
};

/// Checks each ▷^g is a quandle, x ▷^{gh} y = (x ▷^g y) ▷^h y, x ▷^e y = x and
/// (x ▷^g y) ▷^h z = (x ▷^h z) ▷^{h⁻¹gh} (y ▷^h z). Throws Error(GFamilyAxiomFail)
/// with witness {axiom, ...}: 0 {g} not a quandle, 1 {g,h,x,y}, 2 {x,y}, 3 {g,h,x,y,z}.
GFamily gfamily_validate(const FiniteGroup& g, std::size_t carrier, std::vector<std::vector<Elem>> tables);

/// Which index of the family carries ★_g^h over Conj(G).
enum class GFamilyIndex {
  /// ★_g^h = ▷^{h⁻¹}; matches the family axiom under g ▷ h = h g h⁻¹.
  Inverse,
  /// ★_g^h = ▷^h.
  Direct,
};

BundleOfRacks gfamily_to_bundle(const GFamily& family, GFamilyIndex index = GFamilyIndex::Inverse);

/// x ▷^g y = y g⁻¹ y⁻¹ x g on the carrier G.
GFamily group_gfamily(const FiniteGroup& g);

struct FiberDistributivity {
  bool holds = true;
  /// {x, y, p, q, r}
  std::vector<std::size_t> witness;
  explicit operator bool() const noexcept { return holds; }
};

/// ∂_{x,y}(∂_{x,y}(p,q), r) = ∂_{x,y}(∂_{x,y}(p,r), ∂_{x,y}(q,r)) for all arguments.
FiberDistributivity cocycle_self_distributive(const TwistedSystem& t);

/// The candidate bundle ★_x^y = ∂_{x,y}; throws like bundle_validate.
BundleOfRacks cocycle_to_bundle(const TwistedSystem& t);

/// Over the trivial rack on k points with fiber Q and trivial action:
/// ∂_{x,y}(p, q) = p ▷ b_x(b_y⁻¹(q)) for automorphisms b of Q. Always a cocycle.
TwistedSystem twisted_translation_cocycle(const FiniteRack& q, std::span<const Permutation> b);

}  // namespace rackkit
