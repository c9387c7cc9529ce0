#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rackkit/error.hpp"
#include "rackkit/permutation.hpp"

namespace rackkit {

using Partition = std::vector<std::vector<Elem>>;

/// A finite rack on {0, ..., n-1} with table[x * n + y] = x ▷ y.
///
/// Instances only exist in validated form: every right translation
/// R_y = (x ↦ x ▷ y) is a bijection and (x▷y)▷z = (x▷z)▷(y▷z) holds for all
/// triples. The quandle/involutive flags and the orbit partition are
/// computed once at validation time.
class FiniteRack {
 public:
  /// Throws Error(OutOfRange | NotBijectiveColumn{y} | NotSelfDistributive{x,y,z});
  /// witnesses are lexicographically least.
  static FiniteRack validate(std::size_t size, std::vector<Elem> table);

  std::size_t size() const noexcept { return size_; }
  Elem op(Elem x, Elem y) const { return table_[x * size_ + y]; }
  /// R_y⁻¹(x): the unique z with z ▷ y = x.
  Elem inverse_op(Elem x, Elem y) const { return right_inverse_[y](x); }
  std::span<const Elem> table() const noexcept { return table_; }
  const Permutation& right_translation(Elem y) const { return right_[y]; }

  bool is_quandle() const noexcept { return quandle_; }
  bool is_involutive() const noexcept { return involutive_; }
  bool is_trivial() const noexcept { return trivial_; }
  bool is_connected() const noexcept { return orbits_.size() == 1; }

  /// Orbits of the inner group, each sorted, blocks ordered by least element.
  const Partition& orbits() const noexcept { return orbits_; }
  /// Index into orbits() of the block containing x.
  std::size_t orbit_index(Elem x) const { return orbit_of_[x]; }

  friend bool operator==(const FiniteRack& a, const FiniteRack& b) { return a.table_ == b.table_; }

 private:
  std::size_t size_ = 0;
  std::vector<Elem> table_;
  std::vector<Permutation> right_;
  std::vector<Permutation> right_inverse_;
  bool quandle_ = false;
  bool involutive_ = false;
  bool trivial_ = false;
  Partition orbits_;
  std::vector<std::size_t> orbit_of_;
};

inline FiniteRack rack_validate(std::size_t size, std::vector<Elem> table) {
  return FiniteRack::validate(size, std::move(table));
}

inline const Permutation& right_translation(const FiniteRack& x, Elem y) { return x.right_translation(y); }

inline const Partition& orbits(const FiniteRack& x) { return x.orbits(); }

/// Default cap on the order of generated permutation groups.
inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// Breadth-first closure of a list of generator permutations.
///
/// Elements are numbered in discovery order starting from the identity
/// (index 0); generators are tried in index order, so each element carries
/// the first positive word found for it. A word (w_1, ..., w_k) denotes
/// g_{w_k} ∘ ... ∘ g_{w_1}: w_1 acts first.
class GeneratedGroup {
 public:
  /// Throws Error(ClosureCapExceeded) if more than `cap` elements appear.
  GeneratedGroup(std::vector<Permutation> generators, std::size_t cap = kDefaultClosureCap);

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t generator_count() const noexcept { return generators_.size(); }
  const Permutation& generator(std::size_t i) const { return generators_[i]; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Elem>& word(std::size_t i) const { return words_[i]; }
  /// Index of g_x ∘ element(i).
  std::size_t step(std::size_t i, std::size_t x) const { return edges_[i * generators_.size() + x]; }
  std::optional<std::size_t> index_of(const Permutation& p) const;
  /// Element reached by a word, starting at `from` (default identity).
  std::size_t follow(std::span<const Elem> word, std::size_t from = 0) const;
  std::size_t inverse_index(std::size_t i) const;
  /// BFS parent of element i > 0; word(i) = word(parent(i)) + [last letter].
  std::size_t parent(std::size_t i) const { return parents_[i]; }

 private:
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<std::vector<Elem>> words_;
  std::vector<std::size_t> edges_;
  std::vector<std::size_t> parents_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

/// The permutation group generated by all right translations R_x, generator
/// x being R_x. Generator indices coincide with rack element indices.
class InnerGroup : public GeneratedGroup {
 public:
  explicit InnerGroup(const FiniteRack& x, std::size_t cap = kDefaultClosureCap);
  /// Index of R_x in the element list.
  std::size_t generator_index(Elem x) const { return generator_index_[x]; }

 private:
  std::vector<std::size_t> generator_index_;
};

inline InnerGroup inner_group(const FiniteRack& x, std::size_t cap = kDefaultClosureCap) {
  return InnerGroup(x, cap);
}

/// Result of testing whether generator images extend along the group.
struct ExtensionFailure {
  /// Two positive words reaching the same group element with different images.
  std::vector<Elem> word_a;
  std::vector<Elem> word_b;
  /// A positive word equal to the identity in the group whose image is not the identity.
  std::vector<Elem> identity_word;
};

/// Checks that the assignment generator x ↦ images[x] extends consistently over
/// the generated group: every positive word's image depends only on the group
/// element it reaches. `mul(a, b)` must return a∘b (b applied first) and `eq`
/// compare images. On failure, returns two conflicting words and a word equal
/// to the identity in the group whose image differs from `identity`.
template <class T, class Mul, class Eq>
std::optional<ExtensionFailure> find_extension_failure(const GeneratedGroup& group, const std::vector<T>& images,
                                                       const T& identity, Mul mul, Eq eq) {
  const std::size_t gens = group.generator_count();
  std::vector<std::optional<T>> value(group.order());
  value[0] = identity;
  // Values along BFS tree edges; parents precede children.
  for (std::size_t i = 1; i < group.order(); ++i) {
    value[i] = mul(images[group.word(i).back()], *value[group.parent(i)]);
  }
  auto evaluate = [&](const std::vector<Elem>& word) {
    T v = identity;
    for (Elem x : word) v = mul(images[x], v);
    return v;
  };
  for (std::size_t i = 0; i < group.order(); ++i) {
    for (std::size_t x = 0; x < gens; ++x) {
      const std::size_t j = group.step(i, x);
      T via = mul(images[x], *value[i]);
      if (eq(via, *value[j])) continue;
      ExtensionFailure f;
      f.word_a = group.word(j);
      f.word_b = group.word(i);
      f.word_b.push_back(static_cast<Elem>(x));
      // Append a positive word for the inverse of element j to both.
      const auto& back = group.word(group.inverse_index(j));
      std::vector<Elem> a = f.word_a, b = f.word_b;
      a.insert(a.end(), back.begin(), back.end());
      b.insert(b.end(), back.begin(), back.end());
      f.identity_word = eq(evaluate(a), identity) ? b : a;
      return f;
    }
  }
  return std::nullopt;
}

/// Outcome of a rack homomorphism check: ok, or the least failing pair (x, y).
struct HomCheck {
  bool ok = true;
  std::optional<std::pair<Elem, Elem>> witness;
  explicit operator bool() const noexcept { return ok; }
};

/// Tests f(x ▷ y) = f(x) ▷ f(y); f must map X's universe into Y's.
HomCheck rack_hom_check(const FiniteRack& x, const FiniteRack& y, std::span<const Elem> f);

/// Smallest subset containing `seed` closed under ▷ and the inverse operations.
std::vector<Elem> subrack_closure(const FiniteRack& x, std::span<const Elem> seed);

/// The rack transported along sigma: sigma(a) ▷' sigma(b) = sigma(a ▷ b).
FiniteRack relabel(const FiniteRack& x, const Permutation& sigma);

}  // namespace rackkit
