#include "rackkit/stability.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

namespace rackkit {

namespace {

constexpr std::uint64_t kSaturated = UINT64_MAX;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b, bool& overflow) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    overflow = true;
    return kSaturated;
  }
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::SizeCapExceeded, "count exceeds 64 bits");
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

void check_letters(std::span<const Permutation> letters) {
  if (letters.empty()) throw Error(ErrorKind::InvalidArgument, "word search needs at least one letter");
  for (const auto& p : letters) {
    if (p.size() != letters.front().size()) throw Error(ErrorKind::ShapeMismatch, "letters act on different sets");
  }
}

/// Counting by dynamic programming over the generated group.
WordSearchResult search_in_closure(const GeneratedGroup& group, std::size_t n, const SearchOptions& options) {
  const std::size_t order = group.order();
  const std::size_t k = group.generator_count();
  WordSearchResult result;
  result.length = n;

  // ways[r][g]: words of length r carrying element g to the identity.
  std::vector<std::vector<std::uint64_t>> ways(n + 1, std::vector<std::uint64_t>(order, 0));
  ways[0][0] = 1;
  for (std::size_t r = 1; r <= n; ++r) {
    for (std::size_t g = 0; g < order; ++g) {
      std::uint64_t s = 0;
      for (std::size_t x = 0; x < k; ++x) s = sat_add(s, ways[r - 1][group.step(g, x)], result.overflow);
      ways[r][g] = s;
    }
  }
  result.count = ways[n][0];

  // Lexicographic witnesses, pruned to prefixes that can still close up.
  std::vector<Elem> word;
  auto dfs = [&](auto&& self, std::size_t at, std::size_t depth) -> void {
    if (result.witnesses.size() >= options.max_witnesses) return;
    if (depth == n) {
      result.witnesses.push_back(word);
      return;
    }
    for (std::size_t x = 0; x < k; ++x) {
      const std::size_t next = group.step(at, x);
      if (ways[n - depth - 1][next] == 0) continue;
      word.push_back(static_cast<Elem>(x));
      self(self, next, depth + 1);
      word.pop_back();
      if (result.witnesses.size() >= options.max_witnesses) return;
    }
  };
  if (result.count > 0 && options.max_witnesses > 0) dfs(dfs, 0, 0);

  // Burnside over rotations: a word fixed by rotation s is v^{n/g} with |v| = g = gcd(s, n).
  if (!result.overflow && n > 0) {
    std::vector<std::uint64_t> element_order(order);
    for (std::size_t g = 0; g < order; ++g) element_order[g] = group.element(g).order();
    std::map<std::size_t, std::uint64_t> fixed_by_period;
    bool overflow = false;
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t g = std::gcd(s, n);
      if (fixed_by_period.count(g) == 0) {
        // fwd[h]: words of length g with composite h.
        std::vector<std::uint64_t> fwd(order, 0), next(order, 0);
        fwd[0] = 1;
        for (std::size_t step = 0; step < g; ++step) {
          std::fill(next.begin(), next.end(), 0);
          for (std::size_t h = 0; h < order; ++h) {
            if (fwd[h] == 0) continue;
            for (std::size_t x = 0; x < k; ++x) {
              auto& slot = next[group.step(h, x)];
              slot = sat_add(slot, fwd[h], overflow);
            }
          }
          fwd.swap(next);
        }
        std::uint64_t fix = 0;
        for (std::size_t h = 0; h < order; ++h) {
          if ((n / g) % element_order[h] == 0) fix = sat_add(fix, fwd[h], overflow);
        }
        fixed_by_period[g] = fix;
      }
    }
    unsigned __int128 total = 0;
    for (std::size_t s = 0; s < n; ++s) total += fixed_by_period[std::gcd(s, n)];
    if (!overflow && total % n == 0) result.rotation_classes = static_cast<std::uint64_t>(total / n);
  }
  return result;
}

struct Branch {
  std::uint64_t count = 0;
  bool exact = true;
  bool overflow = false;
  std::vector<std::vector<Elem>> witnesses;
};

/// Backtracking without the closure; the last letter is found by lookup.
WordSearchResult search_direct(std::span<const Permutation> letters, std::size_t n, const SearchOptions& options) {
  const std::size_t k = letters.size();
  WordSearchResult result;
  result.length = n;

  std::unordered_map<Permutation, std::vector<Elem>, PermutationHash> by_perm;
  for (std::size_t x = 0; x < k; ++x) by_perm[letters[x]].push_back(static_cast<Elem>(x));

  if (n == 1) {
    for (std::size_t x = 0; x < k; ++x) {
      if (!letters[x].is_identity()) continue;
      ++result.count;
      if (result.witnesses.size() < options.max_witnesses) result.witnesses.push_back({static_cast<Elem>(x)});
    }
    return result;
  }

  const std::uint64_t branch_budget = std::max<std::uint64_t>(1, options.budget / k);
  std::vector<Branch> branches(k);

  auto run_branch = [&](std::size_t first) {
    Branch& b = branches[first];
    std::uint64_t nodes = 0;
    std::vector<Elem> word{static_cast<Elem>(first)};
    std::vector<Permutation> stack{letters[first]};
    stack.reserve(n);
    auto dfs = [&](auto&& self) -> void {
      if (!b.exact) return;
      if (++nodes > branch_budget) {
        b.exact = false;
        return;
      }
      const Permutation& c = stack.back();
      if (word.size() == n - 1) {
        auto it = by_perm.find(c.inverse());
        if (it == by_perm.end()) return;
        for (Elem last : it->second) {
          b.count = sat_add(b.count, 1, b.overflow);
          if (b.witnesses.size() < options.max_witnesses) {
            b.witnesses.push_back(word);
            b.witnesses.back().push_back(last);
          }
        }
        return;
      }
      for (std::size_t x = 0; x < k && b.exact; ++x) {
        word.push_back(static_cast<Elem>(x));
        stack.push_back(compose(letters[x], c));
        self(self);
        stack.pop_back();
        word.pop_back();
      }
    };
    dfs(dfs);
  };

  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(k)));
  if (jobs == 1) {
    for (std::size_t f = 0; f < k; ++f) run_branch(f);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t f = next++; f < k; f = next++) run_branch(f);
      });
    }
    for (auto& th : pool) th.join();
  }

  for (auto& b : branches) {
    result.count = sat_add(result.count, b.count, result.overflow);
    result.overflow = result.overflow || b.overflow;
    result.exact = result.exact && b.exact;
    for (auto& w : b.witnesses) {
      if (result.witnesses.size() >= options.max_witnesses) break;
      result.witnesses.push_back(std::move(w));
    }
  }
  return result;
}

std::vector<Permutation> translations_of(const FiniteRack& x) {
  std::vector<Permutation> letters;
  letters.reserve(x.size());
  for (Elem y = 0; y < x.size(); ++y) letters.push_back(x.right_translation(y));
  return letters;
}

}  // namespace

WordSearchResult search_identity_words(std::span<const Permutation> letters, std::size_t n,
                                       const SearchOptions& options) {
  check_letters(letters);
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "word length must be positive");
  std::optional<GeneratedGroup> group;
  try {
    group.emplace(std::vector<Permutation>(letters.begin(), letters.end()), options.closure_cap);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ClosureCapExceeded) throw;
  }
  if (group && static_cast<double>(group->order()) * letters.size() * n <= static_cast<double>(options.budget)) {
    return search_in_closure(*group, n, options);
  }
  return search_direct(letters, n, options);
}

bool is_stabilizing(const FiniteRack& x, std::span<const Elem> family) {
  for (Elem u : family) {
    if (u >= x.size()) throw Error(ErrorKind::OutOfRange, "family member outside rack");
  }
  for (Elem e = 0; e < x.size(); ++e) {
    Elem v = e;
    for (Elem u : family) v = x.op(v, u);
    if (v != e) return false;
  }
  return true;
}

CenterResult search_center(const FiniteRack& x, std::size_t n, const SearchOptions& options) {
  const auto letters = translations_of(x);
  return search_identity_words(letters, n, options);
}

std::vector<std::vector<Elem>> enumerate_center(const FiniteRack& x, std::size_t n, const SearchOptions& options) {
  SearchOptions all = options;
  all.max_witnesses = kAllWitnesses;
  auto r = search_center(x, n, all);
  if (!r.exact || r.overflow) throw Error(ErrorKind::BudgetExceeded, "center enumeration did not complete");
  return std::move(r.witnesses);
}

StabilityReport stability_report(const FiniteRack& x, std::size_t min_order, std::size_t max_order,
                                 const SearchOptions& options) {
  if (min_order == 0 || min_order > max_order) throw Error(ErrorKind::InvalidArgument, "bad order range");
  StabilityReport report;
  for (std::size_t n = min_order; n <= max_order; ++n) {
    report.orders.push_back(search_center(x, n, options));
    if (!report.least_stable_order && report.orders.back().count > 0) report.least_stable_order = n;
  }
  return report;
}

bool cyclic_invariance_check(const FiniteRack& x, std::span<const Elem> family) {
  if (!is_stabilizing(x, family)) throw Error(ErrorKind::InvalidArgument, "family is not stabilizing");
  std::vector<Elem> rotated(family.begin(), family.end());
  for (std::size_t s = 1; s < rotated.size(); ++s) {
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    if (!is_stabilizing(x, rotated)) return false;
  }
  return true;
}

AlexanderCenter alexander_center_solver(const AlexanderModule& module, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "order must be positive");
  const std::uint32_t m = module.modulus(), d = module.rank();
  AlexanderCenter out;
  const auto id = modmat::power(module.gamma(), 0, d, m);
  out.stable = modmat::power(module.gamma(), n, d, m) == id;

  std::vector<std::uint32_t> one_minus(d * d);
  std::vector<std::int64_t> signed_one_minus(d * d);
  for (std::size_t i = 0; i < one_minus.size(); ++i) {
    one_minus[i] = (id[i] + m - module.gamma()[i]) % m;
    signed_one_minus[i] = one_minus[i];
  }
  std::int64_t det = modmat::determinant(signed_one_minus, d) % static_cast<std::int64_t>(m);
  if (det < 0) det += m;
  out.one_minus_gamma_invertible = std::gcd<std::int64_t, std::int64_t>(det, m) == 1;

  for (std::size_t v = 0; v < module.cardinality(); ++v) {
    const auto image = modmat::apply(module.decode(v), one_minus, d, m);
    if (std::all_of(image.begin(), image.end(), [](std::uint32_t c) { return c == 0; })) ++out.fixed_kernel_size;
  }

  // u ↦ F_γ(u) is onto with fibres of size m^{d(n−1)}: u_n enters with γ^0.
  out.f_kernel_count = checked_pow(m, std::uint64_t{d} * (n - 1));
  out.f_solution_count = out.stable ? out.f_kernel_count : 0;
  out.true_center_count = out.stable ? checked_mul(out.f_kernel_count, out.fixed_kernel_size) : 0;
  return out;
}

CoreOddCheck core_odd_stability_check(const FiniteGroup& g, std::size_t k, const SearchOptions& options) {
  CoreOddCheck out;
  out.paper_predicts = true;
  for (Elem a = 0; a < g.order(); ++a) {
    if (g.mul(a, a) != g.identity()) out.paper_predicts = false;
  }
  SearchOptions counting = options;
  counting.max_witnesses = 0;
  const auto r = search_center(core_quandle(g), 2 * k + 1, counting);
  if (r.count == 0 && !r.exact) throw Error(ErrorKind::BudgetExceeded, "core search truncated before a witness");
  out.oracle = r.count > 0;
  return out;
}

ConjPhiCriterion conj_phi_criterion_check(const FiniteGroup& g, const GroupAutomorphism& phi,
                                          std::span<const Elem> family) {
  const std::size_t n = family.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "family must be nonempty");
  for (Elem u : family) {
    if (u >= g.order()) throw Error(ErrorKind::OutOfRange, "family member outside group");
  }
  // w = u_n φ(u_{n−1}) ⋯ φ^{n−1}(u_1)
  Elem w = g.identity();
  for (std::size_t i = 0; i < n; ++i) {
    const Elem u = family[n - 1 - i];
    w = g.mul(w, phi.power(static_cast<std::int64_t>(i))(u));
  }
  const auto phi_n = phi.power(static_cast<std::int64_t>(n));
  const auto ad_w = inner_automorphism(g, w);
  const auto ad_w_inv = inner_automorphism(g, g.inverse(w));
  ConjPhiCriterion out;
  out.printed_criterion = phi_n == ad_w;
  out.corrected_criterion = phi(w) == w && phi_n == ad_w_inv;
  out.direct = is_stabilizing(conj_phi_quandle(g, phi), family);
  return out;
}

GphiTorsion gphi_torsion_check(const FiniteGroup& g, const GroupAutomorphism& phi, std::size_t maxorder,
                               const SearchOptions& options) {
  const FiniteRack x = gphi_quandle(g, phi);
  GphiTorsion out;
  SearchOptions counting = options;
  counting.max_witnesses = 0;
  for (std::size_t n = 1; n <= maxorder; ++n) {
    if (phi.power(static_cast<std::int64_t>(n)).is_identity()) {
      if (!out.torsion_order) out.torsion_order = n;
      out.predicted_orders.push_back(n);
    }
    const auto r = search_center(x, n, counting);
    if (r.count == 0 && !r.exact) throw Error(ErrorKind::BudgetExceeded, "G_phi search truncated");
    if (r.count > 0) out.stable_orders.push_back(n);
  }
  return out;
}

PivotBijection pivot_bijection_check(const FiniteGroup& g, std::size_t n, const SearchOptions& options) {
  const auto center = enumerate_center(conj_quandle(g), n, options);
  const auto pivot = pivot_quandle(g, n, kMaxGroupOrder * kMaxGroupOrder);
  PivotBijection out;
  out.center_count = center.size();
  out.pivot_count = pivot.labels.size();

  // u ∈ S^n(Conj(G)) iff u_n ⋯ u_1 is central, so reversal lands in P^n(G).
  std::set<std::vector<Elem>> images;
  for (const auto& u : center) images.emplace(u.rbegin(), u.rend());
  const std::set<std::vector<Elem>> targets(pivot.labels.begin(), pivot.labels.end());
  out.match = images.size() == center.size() && images == targets;
  const std::set<std::vector<Elem>> unreversed(center.begin(), center.end());
  out.identity_map_matches = unreversed == targets;
  return out;
}

}  // namespace rackkit
