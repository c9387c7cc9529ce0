#include "rackkit/fingroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rackkit {

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Elem> table, std::string name) {
  if (order == 0) throw Error(ErrorKind::InvalidArgument, "group order must be positive");
  if (order > kMaxGroupOrder) {
    throw Error(ErrorKind::SizeCapExceeded,
                "group order " + std::to_string(order) + " exceeds cap " + std::to_string(kMaxGroupOrder));
  }
  if (table.size() != order * order) throw Error(ErrorKind::ShapeMismatch, "Cayley table must be order x order");
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= order) {
      throw Error(ErrorKind::OutOfRange, "Cayley table entry out of range", {i / order, i % order});
    }
  }

  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.name_ = name.empty() ? "G" + std::to_string(order) : std::move(name);

  bool found = false;
  for (Elem e = 0; e < order && !found; ++e) {
    bool ok = true;
    for (Elem a = 0; a < order && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::InvalidArgument, "Cayley table has no identity element");

  for (Elem a = 0; a < order; ++a) {
    for (Elem b = 0; b < order; ++b) {
      for (Elem c = 0; c < order; ++c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          throw Error(ErrorKind::InvalidArgument, "Cayley table is not associative", {a, b, c});
        }
      }
    }
  }

  g.inverse_.assign(order, 0);
  for (Elem a = 0; a < order; ++a) {
    bool has = false;
    for (Elem b = 0; b < order && !has; ++b) {
      if (g.mul(a, b) == g.identity_ && g.mul(b, a) == g.identity_) {
        g.inverse_[a] = b;
        has = true;
      }
    }
    if (!has) throw Error(ErrorKind::InvalidArgument, "element has no inverse", {a});
  }
  return g;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

Elem FiniteGroup::power(Elem a, std::int64_t k) const {
  Elem base = k < 0 ? inverse(a) : a;
  auto e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Elem result = identity_;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::uint64_t FiniteGroup::element_order(Elem a) const {
  std::uint64_t k = 1;
  for (Elem x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (Elem a = 0; a < order_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

GroupAutomorphism GroupAutomorphism::power(std::int64_t k) const { return GroupAutomorphism(perm_.power(k)); }

GroupAutomorphism compose(const GroupAutomorphism& outer, const GroupAutomorphism& inner) {
  return GroupAutomorphism(compose(outer.perm_, inner.perm_));
}

FiniteGroup group_cyclic(std::size_t m) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "cyclic group order must be positive");
  if (m > kMaxGroupOrder) throw Error(ErrorKind::SizeCapExceeded, "cyclic group order exceeds cap");
  std::vector<Elem> t(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) t[a * m + b] = static_cast<Elem>((a + b) % m);
  }
  return FiniteGroup::from_table(m, std::move(t), "Z" + std::to_string(m));
}

FiniteGroup group_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  if (n > kMaxGroupOrder) throw Error(ErrorKind::SizeCapExceeded, "direct product exceeds group order cap");
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Elem first = g.mul(static_cast<Elem>(a / nh), static_cast<Elem>(b / nh));
      const Elem second = h.mul(static_cast<Elem>(a % nh), static_cast<Elem>(b % nh));
      t[a * n + b] = static_cast<Elem>(first * nh + second);
    }
  }
  return FiniteGroup::from_table(n, std::move(t), g.name() + "x" + h.name());
}

FiniteGroup group_symmetric(std::size_t m) {
  if (m == 0 || m > 5) throw Error(ErrorKind::InvalidArgument, "symmetric group degree must be in 1..5");
  std::vector<std::vector<Elem>> perms;
  std::vector<Elem> p(m);
  std::iota(p.begin(), p.end(), Elem{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const std::size_t n = perms.size();
  auto index_of = [&](const std::vector<Elem>& q) {
    return static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<Elem> t(n * n);
  std::vector<Elem> prod(m);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < m; ++i) prod[i] = perms[a][perms[b][i]];
      t[a * n + b] = index_of(prod);
    }
  }
  return FiniteGroup::from_table(n, std::move(t), "S" + std::to_string(m));
}

std::vector<Elem> group_center(const FiniteGroup& g) {
  std::vector<Elem> center;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) center.push_back(a);
  }
  return center;
}

GroupAutomorphism automorphism_validate(const FiniteGroup& g, std::vector<Elem> perm) {
  if (perm.size() != g.order()) throw Error(ErrorKind::ShapeMismatch, "automorphism must have length |G|");
  if (!is_bijection(perm)) throw Error(ErrorKind::NotBijective, "map is not a bijection of the group");
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) {
      if (perm[g.mul(a, b)] != g.mul(perm[a], perm[b])) {
        throw Error(ErrorKind::NotHomomorphism, "map is not a homomorphism", {a, b});
      }
    }
  }
  return GroupAutomorphism(Permutation::from_images_unchecked(std::move(perm)));
}

GroupAutomorphism inner_automorphism(const FiniteGroup& g, Elem u) {
  std::vector<Elem> images(g.order());
  for (Elem a = 0; a < g.order(); ++a) images[a] = g.mul(g.mul(u, a), g.inverse(u));
  return automorphism_validate(g, std::move(images));
}

GroupAutomorphism negation_automorphism(const FiniteGroup& g) {
  std::vector<Elem> images(g.order());
  for (Elem a = 0; a < g.order(); ++a) images[a] = g.inverse(a);
  return automorphism_validate(g, std::move(images));
}

std::vector<Elem> generated_subgroup(const FiniteGroup& g, std::span<const Elem> generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> frontier{g.identity()};
  in[g.identity()] = 1;
  while (!frontier.empty()) {
    const Elem a = frontier.back();
    frontier.pop_back();
    for (Elem s : generators) {
      const Elem b = g.mul(a, s);
      if (!in[b]) {
        in[b] = 1;
        frontier.push_back(b);
      }
    }
  }
  std::vector<Elem> out;
  for (Elem a = 0; a < g.order(); ++a) {
    if (in[a]) out.push_back(a);
  }
  return out;
}

FiniteGroup group_from_spec(const std::string& spec) {
  std::vector<FiniteGroup> factors;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    if (part.size() < 2 || (part[0] != 'Z' && part[0] != 'S') ||
        !std::all_of(part.begin() + 1, part.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw Error(ErrorKind::ParseError, "bad group spec '" + spec + "' (expected e.g. Z4, S3, Z2xZ2)");
    }
    const std::size_t m = std::stoul(part.substr(1));
    factors.push_back(part[0] == 'Z' ? group_cyclic(m) : group_symmetric(m));
  }
  if (factors.empty()) throw Error(ErrorKind::ParseError, "empty group spec");
  FiniteGroup result = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) result = group_product(result, factors[i]);
  return result;
}

}  // namespace rackkit
