#pragma once

// Brute-force reference implementations. They work on raw tables and never
// call into the library's search or closure code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Table = std::vector<std::uint32_t>;
using Perm = std::vector<std::uint32_t>;

inline std::uint32_t op(const Table& t, std::size_t n, std::uint32_t x, std::uint32_t y) { return t[x * n + y]; }

inline void for_each_tuple(std::size_t n, std::size_t len, const std::function<void(const std::vector<std::uint32_t>&)>& f) {
  std::vector<std::uint32_t> t(len, 0);
  if (n == 0) return;
  while (true) {
    f(t);
    std::size_t i = len;
    while (i > 0) {
      if (++t[i - 1] < n) break;
      t[--i] = 0;
    }
    if (i == 0) return;
  }
}

inline bool is_rack(const Table& t, std::size_t n) {
  for (std::uint32_t y = 0; y < n; ++y) {
    std::vector<bool> hit(n, false);
    for (std::uint32_t x = 0; x < n; ++x) {
      if (t[x * n + y] >= n || hit[t[x * n + y]]) return false;
      hit[t[x * n + y]] = true;
    }
  }
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z)
        if (op(t, n, op(t, n, x, y), z) != op(t, n, op(t, n, x, z), op(t, n, y, z))) return false;
  return true;
}

inline bool is_quandle(const Table& t, std::size_t n) {
  for (std::uint32_t x = 0; x < n; ++x)
    if (op(t, n, x, x) != x) return false;
  return true;
}

inline bool is_involutive(const Table& t, std::size_t n) {
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if (op(t, n, op(t, n, x, y), y) != x) return false;
  return true;
}

/// (⋯(x ▷ u_1) ⋯) ▷ u_k = x for every x.
inline bool stabilizes(const Table& t, std::size_t n, const std::vector<std::uint32_t>& u) {
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t v = x;
    for (auto e : u) v = op(t, n, v, e);
    if (v != x) return false;
  }
  return true;
}

/// |S^k(X)| by enumerating all |X|^k tuples.
inline std::uint64_t center_count(const Table& t, std::size_t n, std::size_t k) {
  std::uint64_t c = 0;
  for_each_tuple(n, k, [&](const std::vector<std::uint32_t>& u) {
    if (stabilizes(t, n, u)) ++c;
  });
  return c;
}

inline std::vector<std::vector<std::uint32_t>> center(const Table& t, std::size_t n, std::size_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  for_each_tuple(n, k, [&](const std::vector<std::uint32_t>& u) {
    if (stabilizes(t, n, u)) out.push_back(u);
  });
  return out;
}

inline Perm compose(const Perm& outer, const Perm& inner) {
  Perm r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
  return r;
}

/// Closure of a generator set as a set of image vectors.
inline std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t n) {
  Perm id(n);
  std::iota(id.begin(), id.end(), 0u);
  std::set<Perm> seen{id};
  std::vector<Perm> work{id};
  while (!work.empty()) {
    Perm p = work.back();
    work.pop_back();
    for (const auto& g : gens) {
      Perm q = compose(g, p);
      if (seen.insert(q).second) work.push_back(q);
    }
  }
  return seen;
}

inline std::vector<Perm> right_translations(const Table& t, std::size_t n) {
  std::vector<Perm> r(n, Perm(n));
  for (std::uint32_t y = 0; y < n; ++y)
    for (std::uint32_t x = 0; x < n; ++x) r[y][x] = op(t, n, x, y);
  return r;
}

/// Orbits under x ~ x ▷ y, blocks sorted by least element.
inline std::vector<std::vector<std::uint32_t>> orbits(const Table& t, std::size_t n) {
  std::vector<std::uint32_t> label(n);
  std::iota(label.begin(), label.end(), 0u);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y) {
        auto a = label[x], b = label[op(t, n, x, y)];
        if (a != b) {
          const auto lo = std::min(a, b), hi = std::max(a, b);
          for (auto& l : label)
            if (l == hi) l = lo;
          changed = true;
        }
      }
  }
  std::map<std::uint32_t, std::vector<std::uint32_t>> blocks;
  for (std::uint32_t x = 0; x < n; ++x) blocks[label[x]].push_back(x);
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& [k, v] : blocks) out.push_back(v);
  return out;
}

inline std::size_t fixed_points(const Perm& p) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) c += p[i] == i;
  return c;
}

/// Burnside count of orbits of a permutation group on pairs: (1/|G|) Σ fix(g)².
inline std::size_t orbitals(const std::set<Perm>& group) {
  std::size_t s = 0;
  for (const auto& g : group) s += fixed_points(g) * fixed_points(g);
  return s / group.size();
}

/// dim End of the complement of the constants in a transitive permutation
/// representation: (1/|G|) Σ (fix(g) − 1)².
inline std::size_t complement_commutant(const std::set<Perm>& group) {
  long s = 0;
  for (const auto& g : group) {
    const long f = static_cast<long>(fixed_points(g)) - 1;
    s += f * f;
  }
  return static_cast<std::size_t>(s / static_cast<long>(group.size()));
}

/// Whether R_x ↦ ζ^{exps[x]} (exponents mod o) extends to a homomorphism on
/// the group generated by the right translations: the closure of the pairs
/// (R_x, exps[x]) must have exactly as many elements as the group itself.
inline bool cyclic_extension_exists(const Table& t, std::size_t n, const std::vector<std::uint32_t>& exps,
                                    std::uint32_t o) {
  const auto gens = right_translations(t, n);
  Perm id(n);
  std::iota(id.begin(), id.end(), 0u);
  std::set<std::pair<Perm, std::uint32_t>> seen{{id, 0}};
  std::vector<std::pair<Perm, std::uint32_t>> work{{id, 0}};
  while (!work.empty()) {
    auto [p, e] = work.back();
    work.pop_back();
    for (std::size_t x = 0; x < n; ++x) {
      std::pair<Perm, std::uint32_t> q{compose(gens[x], p), (e + exps[x]) % o};
      if (seen.insert(q).second) work.push_back(q);
    }
  }
  return seen.size() == closure(gens, n).size();
}

}  // namespace oracle
