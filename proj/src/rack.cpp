#include "rackkit/rack.hpp"

#include <algorithm>
#include <numeric>

namespace rackkit {

namespace {

/// Union-find over the universe; used for the orbit partition.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

FiniteRack FiniteRack::validate(std::size_t size, std::vector<Elem> table) {
  if (size == 0) throw Error(ErrorKind::InvalidArgument, "rack size must be positive");
  if (table.size() != size * size) throw Error(ErrorKind::ShapeMismatch, "rack table must be size x size");
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= size) throw Error(ErrorKind::OutOfRange, "rack table entry out of range", {i / size, i % size});
  }

  FiniteRack r;
  r.size_ = size;
  r.table_ = std::move(table);

  r.right_.reserve(size);
  r.right_inverse_.reserve(size);
  std::vector<Elem> column(size);
  for (Elem y = 0; y < size; ++y) {
    for (Elem x = 0; x < size; ++x) column[x] = r.op(x, y);
    if (!is_bijection(column)) {
      throw Error(ErrorKind::NotBijectiveColumn, "right translation R_" + std::to_string(y) + " is not a bijection",
                  {y});
    }
    r.right_.push_back(Permutation::from_images_unchecked(column));
    r.right_inverse_.push_back(r.right_.back().inverse());
  }

  for (Elem x = 0; x < size; ++x) {
    for (Elem y = 0; y < size; ++y) {
      const Elem xy = r.op(x, y);
      for (Elem z = 0; z < size; ++z) {
        if (r.op(xy, z) != r.op(r.op(x, z), r.op(y, z))) {
          throw Error(ErrorKind::NotSelfDistributive, "self-distributivity fails", {x, y, z});
        }
      }
    }
  }

  r.quandle_ = true;
  r.involutive_ = true;
  r.trivial_ = true;
  for (Elem x = 0; x < size; ++x) {
    if (r.op(x, x) != x) r.quandle_ = false;
    for (Elem y = 0; y < size; ++y) {
      if (r.op(r.op(x, y), y) != x) r.involutive_ = false;
      if (r.op(x, y) != x) r.trivial_ = false;
    }
  }

  DisjointSets sets(size);
  for (Elem x = 0; x < size; ++x) {
    for (Elem y = 0; y < size; ++y) sets.unite(x, r.op(x, y));
  }
  std::vector<std::size_t> block_of_root(size, SIZE_MAX);
  r.orbit_of_.assign(size, 0);
  for (Elem x = 0; x < size; ++x) {
    const std::size_t root = sets.find(x);
    if (block_of_root[root] == SIZE_MAX) {
      block_of_root[root] = r.orbits_.size();
      r.orbits_.emplace_back();
    }
    r.orbit_of_[x] = block_of_root[root];
    r.orbits_[block_of_root[root]].push_back(x);
  }
  return r;
}

GeneratedGroup::GeneratedGroup(std::vector<Permutation> generators, std::size_t cap)
    : generators_(std::move(generators)) {
  if (generators_.empty()) throw Error(ErrorKind::InvalidArgument, "generated group needs at least one generator");
  const std::size_t degree = generators_.front().size();
  elements_.push_back(Permutation::identity(degree));
  words_.emplace_back();
  parents_.push_back(0);
  index_.emplace(elements_.front(), 0);

  const std::size_t gens = generators_.size();
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t x = 0; x < gens; ++x) {
      Permutation next = compose(generators_[x], elements_[i]);
      auto [it, inserted] = index_.try_emplace(std::move(next), elements_.size());
      if (inserted) {
        if (elements_.size() >= cap) {
          throw Error(ErrorKind::ClosureCapExceeded,
                      "generated group exceeds closure cap " + std::to_string(cap));
        }
        elements_.push_back(it->first);
        std::vector<Elem> w = words_[i];
        w.push_back(static_cast<Elem>(x));
        words_.push_back(std::move(w));
        parents_.push_back(i);
      }
      edges_.push_back(it->second);
    }
  }
}

std::optional<std::size_t> GeneratedGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GeneratedGroup::follow(std::span<const Elem> word, std::size_t from) const {
  std::size_t at = from;
  for (Elem x : word) at = step(at, x);
  return at;
}

std::size_t GeneratedGroup::inverse_index(std::size_t i) const { return index_.at(elements_[i].inverse()); }

namespace {

std::vector<Permutation> translations(const FiniteRack& x) {
  std::vector<Permutation> gens;
  gens.reserve(x.size());
  for (Elem y = 0; y < x.size(); ++y) gens.push_back(x.right_translation(y));
  return gens;
}

}  // namespace

InnerGroup::InnerGroup(const FiniteRack& x, std::size_t cap) : GeneratedGroup(translations(x), cap) {
  generator_index_.resize(x.size());
  for (Elem y = 0; y < x.size(); ++y) generator_index_[y] = step(0, y);
}

HomCheck rack_hom_check(const FiniteRack& x, const FiniteRack& y, std::span<const Elem> f) {
  if (f.size() != x.size()) throw Error(ErrorKind::ShapeMismatch, "map must have one image per source element");
  for (Elem v : f) {
    if (v >= y.size()) throw Error(ErrorKind::OutOfRange, "map image outside target rack");
  }
  for (Elem a = 0; a < x.size(); ++a) {
    for (Elem b = 0; b < x.size(); ++b) {
      if (f[x.op(a, b)] != y.op(f[a], f[b])) return HomCheck{false, std::pair{a, b}};
    }
  }
  return {};
}

std::vector<Elem> subrack_closure(const FiniteRack& x, std::span<const Elem> seed) {
  std::vector<char> in(x.size(), 0);
  std::vector<Elem> members;
  for (Elem s : seed) {
    if (s >= x.size()) throw Error(ErrorKind::OutOfRange, "seed element outside rack");
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
    }
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = members.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        for (Elem c : {x.op(members[i], members[j]), x.inverse_op(members[i], members[j])}) {
          if (!in[c]) {
            in[c] = 1;
            members.push_back(c);
            grew = true;
          }
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

FiniteRack relabel(const FiniteRack& x, const Permutation& sigma) {
  const std::size_t n = x.size();
  if (sigma.size() != n) throw Error(ErrorKind::ShapeMismatch, "relabeling must act on the rack universe");
  std::vector<Elem> table(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) table[sigma(a) * n + sigma(b)] = sigma(x.op(a, b));
  }
  return FiniteRack::validate(n, std::move(table));
}

}  // namespace rackkit
