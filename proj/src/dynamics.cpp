#include "rackkit/dynamics.hpp"

#include <algorithm>

namespace rackkit {

namespace {

/// Families enumerated for the rotation check, or collected as witnesses, before giving up.
constexpr std::uint64_t kMaxCyclicFamilies = 2'000'000;

std::vector<Elem> sorted_unique(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool is_rack_automorphism(const FiniteRack& q, const std::vector<Elem>& images) {
  return is_bijection(images) && rack_hom_check(q, q, images).ok;
}

}  // namespace

RackAction RackAction::validate(const FiniteRack& x, std::size_t set_size, std::vector<Elem> table,
                                std::size_t cyclic_bound, const SearchOptions& options) {
  const std::size_t n = x.size();
  if (set_size == 0) throw Error(ErrorKind::InvalidArgument, "action set must be nonempty");
  if (table.size() != set_size * n) throw Error(ErrorKind::ShapeMismatch, "action table must be set_size x |X|");
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= set_size) throw Error(ErrorKind::OutOfRange, "action entry out of range", {i / n, i % n});
  }

  RackAction a;
  a.rack_ = x;
  a.set_size_ = set_size;
  a.table_ = std::move(table);
  a.cyclic_bound_ = cyclic_bound;

  std::vector<Elem> column(set_size);
  for (Elem y = 0; y < n; ++y) {
    for (Elem m = 0; m < set_size; ++m) column[m] = a.act(m, y);
    if (!is_bijection(column)) {
      throw Error(ErrorKind::NotBijective, "m -> m.x is not a bijection for x = " + std::to_string(y), {y});
    }
    a.columns_.push_back(Permutation::from_images_unchecked(column));
  }

  for (Elem m = 0; m < set_size; ++m) {
    for (Elem u = 0; u < n; ++u) {
      for (Elem v = 0; v < n; ++v) {
        if (a.act(a.act(m, u), v) != a.act(a.act(m, v), x.op(u, v))) {
          throw Error(ErrorKind::CompatibilityFail, "(m.x).y != (m.y).(x > y)", {m, u, v});
        }
      }
    }
  }

  // Rotation by one generates all rotations, so it is the only one tested.
  SearchOptions counting = options;
  counting.max_witnesses = 0;
  for (std::size_t order = 2; order <= cyclic_bound; ++order) {
    const auto size = search_center(x, order, counting);
    if (!size.exact || size.overflow || size.count > kMaxCyclicFamilies) {
      throw Error(ErrorKind::BudgetExceeded,
                  "too many stabilizing families of order " + std::to_string(order) + " for the rotation check");
    }
    for (const auto& family : enumerate_center(x, order, options)) {
      std::vector<Elem> rotated(family.begin() + 1, family.end());
      rotated.push_back(family.front());
      for (Elem m = 0; m < set_size; ++m) {
        if (a.act_family(m, family) != a.act_family(m, rotated)) {
          std::vector<std::size_t> witness(family.begin(), family.end());
          witness.push_back(1);
          witness.push_back(m);
          throw Error(ErrorKind::CyclicAxiomFail, "rotated stabilizing family acts differently", std::move(witness));
        }
      }
    }
  }
  return a;
}

Elem RackAction::act_family(Elem m, std::span<const Elem> family) const {
  for (Elem x : family) m = act(m, x);
  return m;
}

RackAction self_action(const FiniteRack& x) {
  return RackAction::validate(x, x.size(), std::vector<Elem>(x.table().begin(), x.table().end()));
}

RackAction conj_right_action(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Elem> t(n * n);
  for (Elem m = 0; m < n; ++m) {
    for (Elem h = 0; h < n; ++h) t[m * n + h] = g.mul(m, g.inverse(h));
  }
  return RackAction::validate(conj_quandle(g), n, std::move(t));
}

RackAction delta_function_action(const FiniteRack& x) {
  if (!x.is_trivial()) throw Error(ErrorKind::InvalidArgument, "delta-function action needs a trivial rack");
  if (x.size() > 12) throw Error(ErrorKind::SizeCapExceeded, "delta-function action limited to 12 points");
  const std::size_t n = x.size();
  const std::size_t set_size = std::size_t{1} << n;
  std::vector<Elem> t(set_size * n);
  for (Elem m = 0; m < set_size; ++m) {
    for (Elem y = 0; y < n; ++y) t[m * n + y] = m ^ (Elem{1} << y);
  }
  return RackAction::validate(x, set_size, std::move(t));
}

RackAction trivial_action(const FiniteRack& x, std::size_t set_size) {
  std::vector<Elem> t(set_size * x.size());
  for (Elem m = 0; m < set_size; ++m) {
    for (Elem y = 0; y < x.size(); ++y) t[m * x.size() + y] = m;
  }
  return RackAction::validate(x, set_size, std::move(t));
}

std::vector<Elem> action_orbit(const RackAction& a, std::span<const Elem> family) {
  std::vector<Elem> out;
  for (Elem m = 0; m < a.set_size(); ++m) out.push_back(a.act_family(m, family));
  return sorted_unique(std::move(out));
}

std::vector<Elem> action_fibre(const RackAction& a, std::span<const Elem> family) {
  std::vector<Elem> out;
  for (Elem m = 0; m < a.set_size(); ++m) {
    if (a.act_family(m, family) == m) out.push_back(m);
  }
  return out;
}

std::vector<Elem> action_stabilizer(const RackAction& a, Elem m) {
  if (m >= a.set_size()) throw Error(ErrorKind::OutOfRange, "point outside action set");
  std::vector<Elem> out;
  for (Elem x = 0; x < a.rack().size(); ++x) {
    if (a.act(m, x) == m) out.push_back(x);
  }
  return out;
}

bool is_faithful(const RackAction& a) {
  std::vector<char> seen(a.set_size());
  for (Elem m = 0; m < a.set_size(); ++m) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem x = 0; x < a.rack().size(); ++x) {
      if (seen[a.act(m, x)]++) return false;
    }
  }
  return true;
}

ApproximateUnits approximate_units(const RackAction& a, std::size_t order, const SearchOptions& options) {
  std::vector<Permutation> letters;
  for (Elem x = 0; x < a.rack().size(); ++x) letters.push_back(a.column(x));
  ApproximateUnits out;
  out.units = search_identity_words(letters, order, options);
  for (Elem x = 0; x < a.rack().size(); ++x) {
    if (a.column(x).power(static_cast<std::int64_t>(order)).is_identity()) out.r_units.push_back(x);
  }
  out.periodic = out.r_units.size() == a.rack().size();
  return out;
}

StrongCheck is_strong_action(const RackAction& a, std::size_t closure_cap) {
  const InnerGroup inner(a.rack(), closure_cap);
  std::vector<Permutation> images;
  for (Elem x = 0; x < a.rack().size(); ++x) images.push_back(a.column(x));
  const auto failure = find_extension_failure(
      inner, images, Permutation::identity(a.set_size()),
      [](const Permutation& p, const Permutation& q) { return compose(p, q); },
      [](const Permutation& p, const Permutation& q) { return p == q; });
  StrongCheck out;
  if (failure) {
    out.strong = false;
    out.word_a = failure->word_a;
    out.word_b = failure->word_b;
    out.failing_family = failure->identity_word;
  }
  return out;
}

TwistedSystem TwistedSystem::validate(const FiniteRack& x, const FiniteRack& q, const RackAction& action,
                                      std::vector<Elem> table) {
  const std::size_t nx = x.size(), nq = q.size();
  if (!(action.rack() == x) || action.set_size() != nq) {
    throw Error(ErrorKind::ShapeMismatch, "action must be an action of X on the universe of Q");
  }
  if (nx * nx > kMaxCocycleEntries / (nq * nq)) {
    throw Error(ErrorKind::SizeCapExceeded, "cocycle table exceeds " + std::to_string(kMaxCocycleEntries) + " entries");
  }
  if (table.size() != nx * nx * nq * nq) throw Error(ErrorKind::ShapeMismatch, "cocycle table must hold |X|^2 |Q|^2 entries");
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= nq) throw Error(ErrorKind::OutOfRange, "cocycle entry out of range", {i});
  }
  for (Elem t = 0; t < nx; ++t) {
    const auto images = action.column(t).images();
    if (!rack_hom_check(q, q, images).ok) {
      throw Error(ErrorKind::ActionNotByAutomorphisms, "p -> p.x is not a rack automorphism of Q", {t});
    }
  }

  TwistedSystem s(x, q, action, std::move(table));
  std::vector<Elem> images(nq);
  for (Elem a = 0; a < nx; ++a) {
    for (Elem b = 0; b < nx; ++b) {
      for (Elem r = 0; r < nq; ++r) {
        for (Elem p = 0; p < nq; ++p) images[p] = s.d(a, b, p, r);
        if (!is_rack_automorphism(q, images)) {
          throw Error(ErrorKind::NotAutomorphism, "p -> d_{x,y}(p,q) is not a rack automorphism", {a, b, r});
        }
      }
    }
  }
  for (Elem a = 0; a < nx; ++a) {
    for (Elem b = 0; b < nx; ++b) {
      for (Elem p = 0; p < nq; ++p) {
        for (Elem r = 0; r < nq; ++r) {
          for (Elem t = 0; t < nx; ++t) {
            if (s.d(a, b, action.act(p, t), r) != action.act(s.d(a, b, p, r), x.op(t, b))) {
              throw Error(ErrorKind::EquivarianceFail, "d_{x,y}(p.t, q) != d_{x,y}(p,q).(t > y)", {a, b, p, r, t});
            }
          }
        }
      }
    }
  }
  for (Elem a = 0; a < nx; ++a) {
    for (Elem b = 0; b < nx; ++b) {
      for (Elem c = 0; c < nx; ++c) {
        const Elem ab = x.op(a, b), ac = x.op(a, c), bc = x.op(b, c);
        for (Elem p = 0; p < nq; ++p) {
          for (Elem r = 0; r < nq; ++r) {
            const Elem dpr = s.d(a, b, p, r);
            for (Elem u = 0; u < nq; ++u) {
              if (s.d(ab, c, dpr, u) != s.d(ac, bc, s.d(a, c, p, u), s.d(b, c, r, u))) {
                throw Error(ErrorKind::CocycleFail, "cocycle condition fails", {a, b, c, p, r, u});
              }
            }
          }
        }
      }
    }
  }
  return s;
}

TwistedSystem canonical_cocycle(const FiniteRack& q, const RackAction& action) {
  const FiniteRack& x = action.rack();
  const std::size_t nx = x.size(), nq = q.size();
  std::vector<Elem> t(nx * nx * nq * nq);
  std::size_t i = 0;
  for (Elem a = 0; a < nx; ++a) {
    for (Elem b = 0; b < nx; ++b) {
      for (Elem p = 0; p < nq; ++p) {
        for (Elem r = 0; r < nq; ++r) t[i++] = action.act(p, b);
      }
    }
  }
  return TwistedSystem::validate(x, q, action, std::move(t));
}

LabeledRack cross_product(const TwistedSystem& t, std::size_t cap) {
  const std::size_t nx = t.base().size(), nq = t.fiber().size(), n = nx * nq;
  if (n > cap) throw Error(ErrorKind::SizeCapExceeded, "cross-product size exceeds cap " + std::to_string(cap));
  std::vector<Elem> table(n * n);
  std::vector<std::vector<Elem>> labels(n);
  for (Elem p = 0; p < nq; ++p) {
    for (Elem a = 0; a < nx; ++a) {
      const std::size_t i = p * nx + a;
      labels[i] = {p, a};
      for (Elem r = 0; r < nq; ++r) {
        for (Elem b = 0; b < nx; ++b) {
          table[i * n + r * nx + b] = static_cast<Elem>(t.d(a, b, p, r) * nx + t.base().op(a, b));
        }
      }
    }
  }
  return {FiniteRack::validate(n, std::move(table)), std::move(labels)};
}

CrossProductStability crossproduct_stability_check(const TwistedSystem& t, std::size_t n,
                                                   const SearchOptions& options) {
  const FiniteRack& x = t.base();
  const std::size_t nx = x.size(), nq = t.fiber().size();
  CrossProductStability out;
  const auto families = enumerate_center(x, n, options);

  std::vector<std::vector<Elem>> found;
  std::vector<Elem> xi(n, 0);
  for (const auto& tt : families) {
    std::fill(xi.begin(), xi.end(), 0);
    while (true) {
      bool identity = true;
      for (Elem base = 0; base < nx && identity; ++base) {
        for (Elem p = 0; p < nq && identity; ++p) {
          Elem cur = p, at = base;
          for (std::size_t i = 0; i < n; ++i) {
            cur = t.d(at, tt[i], cur, xi[i]);
            at = x.op(at, tt[i]);
          }
          identity = cur == p;
        }
      }
      if (identity) {
        ++out.count;
        if (options.max_witnesses > 0 && found.size() < kMaxCyclicFamilies) {
          std::vector<Elem> w(n);
          for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<Elem>(xi[i] * nx + tt[i]);
          found.push_back(std::move(w));
        }
      }
      std::size_t pos = n;
      while (pos > 0 && ++xi[pos - 1] == nq) xi[--pos] = 0;
      if (pos == 0) break;
    }
  }
  std::sort(found.begin(), found.end());
  if (found.size() > options.max_witnesses) found.resize(options.max_witnesses);
  out.witnesses = std::move(found);

  SearchOptions counting = options;
  counting.max_witnesses = 0;
  const auto direct = search_center(cross_product(t, nx * nq).rack, n, counting);
  if (!direct.exact) throw Error(ErrorKind::BudgetExceeded, "cross-product search truncated");
  out.direct_count = direct.count;
  return out;
}

BundleOfRacks BundleOfRacks::validate(const FiniteRack& x, std::size_t carrier,
                                      std::vector<std::vector<Elem>> tables) {
  const std::size_t nx = x.size();
  if (tables.size() != nx * nx) throw Error(ErrorKind::ShapeMismatch, "bundle needs |X|^2 fiber tables");
  std::vector<FiniteRack> fibers;
  fibers.reserve(tables.size());
  for (std::size_t i = 0; i < tables.size(); ++i) {
    try {
      fibers.push_back(FiniteRack::validate(carrier, std::move(tables[i])));
    } catch (const Error& e) {
      if (e.is_resource_limit()) throw;
      throw Error(ErrorKind::FiberNotRack, "fiber (" + std::to_string(i / nx) + "," + std::to_string(i % nx) +
                                               ") is not a rack: " + e.what(),
                  {i / nx, i % nx});
    }
  }
  BundleOfRacks b(x, carrier, std::move(fibers));
  for (Elem u = 0; u < nx; ++u) {
    for (Elem v = 0; v < nx; ++v) {
      for (Elem w = 0; w < nx; ++w) {
        const FiniteRack& uv = b.fiber(u, v);
        const FiniteRack& left = b.fiber(x.op(u, v), w);
        const FiniteRack& uw = b.fiber(u, w);
        const FiniteRack& vw = b.fiber(v, w);
        const FiniteRack& right = b.fiber(x.op(u, w), x.op(v, w));
        for (Elem p = 0; p < carrier; ++p) {
          for (Elem q = 0; q < carrier; ++q) {
            const Elem pq = uv.op(p, q);
            for (Elem r = 0; r < carrier; ++r) {
              if (left.op(pq, r) != right.op(uw.op(p, r), vw.op(q, r))) {
                throw Error(ErrorKind::BundleCompatFail, "bundle compatibility fails", {u, v, w, p, q, r});
              }
            }
          }
        }
      }
    }
  }
  return b;
}

BundleOfRacks bundle_pullback(const BundleOfRacks& b, const FiniteRack& y, std::span<const Elem> f) {
  const auto hom = rack_hom_check(y, b.base(), f);
  if (!hom.ok) {
    throw Error(ErrorKind::NotHomomorphism, "pull-back map is not a rack homomorphism",
                {hom.witness->first, hom.witness->second});
  }
  std::vector<std::vector<Elem>> tables;
  for (Elem u = 0; u < y.size(); ++u) {
    for (Elem v = 0; v < y.size(); ++v) {
      const auto t = b.fiber(f[u], f[v]).table();
      tables.emplace_back(t.begin(), t.end());
    }
  }
  return BundleOfRacks::validate(y, b.carrier(), std::move(tables));
}

GFamily gfamily_validate(const FiniteGroup& g, std::size_t carrier, std::vector<std::vector<Elem>> tables) {
  const std::size_t ng = g.order();
  if (tables.size() != ng) throw Error(ErrorKind::ShapeMismatch, "G-family needs one table per group element");
  GFamily fam{g, carrier, {}};
  for (Elem a = 0; a < ng; ++a) {
    try {
      fam.ops.push_back(FiniteRack::validate(carrier, std::move(tables[a])));
    } catch (const Error& e) {
      if (e.is_resource_limit()) throw;
      throw Error(ErrorKind::GFamilyAxiomFail, std::string("structure is not a quandle: ") + e.what(), {0, a});
    }
    if (!fam.ops.back().is_quandle()) throw Error(ErrorKind::GFamilyAxiomFail, "structure is not a quandle", {0, a});
  }
  const auto& ops = fam.ops;
  for (Elem a = 0; a < ng; ++a) {
    for (Elem b = 0; b < ng; ++b) {
      for (Elem x = 0; x < carrier; ++x) {
        for (Elem y = 0; y < carrier; ++y) {
          if (ops[g.mul(a, b)].op(x, y) != ops[b].op(ops[a].op(x, y), y)) {
            throw Error(ErrorKind::GFamilyAxiomFail, "x >^{gh} y != (x >^g y) >^h y", {1, a, b, x, y});
          }
        }
      }
    }
  }
  for (Elem x = 0; x < carrier; ++x) {
    for (Elem y = 0; y < carrier; ++y) {
      if (ops[g.identity()].op(x, y) != x) throw Error(ErrorKind::GFamilyAxiomFail, "x >^e y != x", {2, x, y});
    }
  }
  for (Elem a = 0; a < ng; ++a) {
    for (Elem b = 0; b < ng; ++b) {
      const FiniteRack& twisted = ops[g.mul(g.mul(g.inverse(b), a), b)];
      for (Elem x = 0; x < carrier; ++x) {
        for (Elem y = 0; y < carrier; ++y) {
          const Elem xy = ops[a].op(x, y);
          for (Elem z = 0; z < carrier; ++z) {
            if (ops[b].op(xy, z) != twisted.op(ops[b].op(x, z), ops[b].op(y, z))) {
              throw Error(ErrorKind::GFamilyAxiomFail, "(x >^g y) >^h z != (x >^h z) >^{h^-1 g h} (y >^h z)",
                          {3, a, b, x, y, z});
            }
          }
        }
      }
    }
  }
  return fam;
}

BundleOfRacks gfamily_to_bundle(const GFamily& family, GFamilyIndex index) {
  const FiniteGroup& g = family.group;
  const std::size_t ng = g.order();
  std::vector<std::vector<Elem>> tables;
  tables.reserve(ng * ng);
  for (Elem a = 0; a < ng; ++a) {
    for (Elem b = 0; b < ng; ++b) {
      const Elem k = index == GFamilyIndex::Inverse ? g.inverse(b) : b;
      const auto t = family.ops[k].table();
      tables.emplace_back(t.begin(), t.end());
    }
  }
  return BundleOfRacks::validate(conj_quandle(g), family.carrier, std::move(tables));
}

GFamily group_gfamily(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Elem>> tables(n, std::vector<Elem>(n * n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        tables[a][x * n + y] = g.mul(g.mul(g.mul(g.mul(y, g.inverse(a)), g.inverse(y)), x), a);
      }
    }
  }
  return gfamily_validate(g, n, std::move(tables));
}

FiberDistributivity cocycle_self_distributive(const TwistedSystem& t) {
  const std::size_t nx = t.base().size(), nq = t.fiber().size();
  for (Elem a = 0; a < nx; ++a) {
    for (Elem b = 0; b < nx; ++b) {
      for (Elem p = 0; p < nq; ++p) {
        for (Elem q = 0; q < nq; ++q) {
          const Elem pq = t.d(a, b, p, q);
          for (Elem r = 0; r < nq; ++r) {
            if (t.d(a, b, pq, r) != t.d(a, b, t.d(a, b, p, r), t.d(a, b, q, r))) {
              return {false, {a, b, p, q, r}};
            }
          }
        }
      }
    }
  }
  return {};
}

BundleOfRacks cocycle_to_bundle(const TwistedSystem& t) {
  const std::size_t nx = t.base().size(), nq = t.fiber().size();
  std::vector<std::vector<Elem>> tables;
  const auto all = t.table();
  for (std::size_t i = 0; i < nx * nx; ++i) {
    tables.emplace_back(all.begin() + static_cast<std::ptrdiff_t>(i * nq * nq),
                        all.begin() + static_cast<std::ptrdiff_t>((i + 1) * nq * nq));
  }
  return BundleOfRacks::validate(t.base(), nq, std::move(tables));
}

TwistedSystem twisted_translation_cocycle(const FiniteRack& q, std::span<const Permutation> b) {
  if (b.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one automorphism");
  const std::size_t k = b.size(), nq = q.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (b[i].size() != nq) throw Error(ErrorKind::ShapeMismatch, "automorphism acts on the wrong set");
    const std::vector<Elem> images(b[i].images().begin(), b[i].images().end());
    if (!rack_hom_check(q, q, images).ok) throw Error(ErrorKind::NotAutomorphism, "map is not a rack automorphism", {i});
  }
  const FiniteRack x = trivial_rack(k);
  std::vector<Elem> t(k * k * nq * nq);
  std::size_t i = 0;
  for (std::size_t u = 0; u < k; ++u) {
    for (std::size_t v = 0; v < k; ++v) {
      const Permutation c = compose(b[u], b[v].inverse());
      for (Elem p = 0; p < nq; ++p) {
        for (Elem r = 0; r < nq; ++r) t[i++] = q.op(p, c(r));
      }
    }
  }
  return TwistedSystem::validate(x, q, trivial_action(x, nq), std::move(t));
}

}  // namespace rackkit
