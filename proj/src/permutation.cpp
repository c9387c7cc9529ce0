#include "rackkit/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rackkit {

bool is_bijection(std::span<const Elem> images) {
  std::vector<char> seen(images.size(), 0);
  for (Elem v : images) {
    if (v >= images.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Permutation::Permutation(std::vector<Elem> images) : images_(std::move(images)) {
  if (!is_bijection(images_)) {
    throw Error(ErrorKind::NotBijective, "image array is not a permutation");
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Elem> images(n);
  std::iota(images.begin(), images.end(), Elem{0});
  return from_images_unchecked(std::move(images));
}

Permutation Permutation::from_images_unchecked(std::vector<Elem> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<Elem> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Elem>(i);
  return from_images_unchecked(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type()) result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

Permutation Permutation::power(std::int64_t k) const {
  const auto ord = static_cast<std::int64_t>(order());
  k %= ord;
  if (k < 0) k += ord;
  Permutation result = identity(size());
  Permutation base = *this;
  auto e = static_cast<std::uint64_t>(k);
  while (e > 0) {
    if (e & 1U) result = compose(base, result);
    base = compose(base, base);
    e >>= 1U;
  }
  return result;
}

std::vector<std::vector<Elem>> Permutation::cycles() const {
  std::vector<std::vector<Elem>> out;
  std::vector<char> seen(images_.size(), 0);
  for (Elem start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Elem> cycle;
    for (Elem x = start; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  for (const auto& c : cycles()) lengths.push_back(c.size());
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  for (const auto& c : cycles()) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  const auto in = inner.images();
  std::vector<Elem> out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = outer(in[i]);
  return Permutation::from_images_unchecked(std::move(out));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words
  std::uint64_t h = 1469598103934665603ULL;
  for (Elem v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace rackkit
