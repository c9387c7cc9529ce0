#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rackkit/error.hpp"

namespace rackkit {

/// A bijection of {0, ..., n-1}, stored as its image array.
class Permutation {
 public:
  Permutation() = default;

  /// Throws Error(NotBijective) if `images` is not a permutation.
  explicit Permutation(std::vector<Elem> images);

  static Permutation identity(std::size_t n);
  static Permutation from_images_unchecked(std::vector<Elem> images);

  std::size_t size() const noexcept { return images_.size(); }
  Elem operator()(Elem x) const { return images_[x]; }
  std::span<const Elem> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Least k >= 1 with p^k = id.
  std::uint64_t order() const;
  Permutation power(std::int64_t k) const;

  /// Cycle lengths, sorted in non-increasing order (a partition of size()).
  std::vector<std::size_t> cycle_type() const;
  /// Cycles in canonical order: each starts at its least point, cycles sorted by that point.
  std::vector<std::vector<Elem>> cycles() const;
  /// e.g. "(0)(1 2)"; fixed points included.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Elem> images_;
};

/// (outer ∘ inner)(x) = outer(inner(x)).
Permutation compose(const Permutation& outer, const Permutation& inner);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// True iff `images` is a bijection of {0, ..., images.size()-1}.
bool is_bijection(std::span<const Elem> images);

}  // namespace rackkit
