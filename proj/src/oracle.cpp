#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "rackkit/cli.hpp"
#include "rackkit/constructors.hpp"
#include "rackkit/duality.hpp"
#include "rackkit/dynamics.hpp"
#include "rackkit/io.hpp"
#include "rackkit/repr.hpp"
#include "rackkit/stability.hpp"

namespace rackkit {

namespace {

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

template <class T>
std::string str(const T& v) {
  std::ostringstream o;
  o << v;
  return o.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string witness_text(const Error& e) {
  return std::string(kind_name(e.kind())) + " " +
         format_tuple(std::vector<Elem>(e.witness().begin(), e.witness().end()));
}

/// Every tuple in {0..n-1}^len, lexicographic.
void for_each_tuple(std::size_t n, std::size_t len, const std::function<void(const std::vector<Elem>&)>& f) {
  std::vector<Elem> t(len, 0);
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

const std::vector<std::string> kCoreGroups = {"Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "Z2xZ2xZ2"};

void suite_core_odd(const SearchOptions& opts, std::ostream& out) {
  out << "core-odd: odd-order stability of Core(G) against the exponent-2 test\n";
  out << pad("group", 10) << pad("k", 3) << pad("order", 6) << pad("predicts", 10) << pad("oracle", 10) << "verdict\n";
  std::size_t agree = 0, total = 0;
  for (const auto& spec : kCoreGroups) {
    const auto g = parse_group(spec);
    for (std::size_t k = 0; k <= 2; ++k) {
      const auto r = core_odd_stability_check(g, k, opts);
      ++total;
      if (r.agree()) ++agree;
      out << pad(spec, 10) << pad(str(k), 3) << pad(str(2 * k + 1), 6)
          << pad(r.paper_predicts ? "stable" : "unstable", 10) << pad(r.oracle ? "stable" : "unstable", 10)
          << (r.agree() ? "agree" : "DISAGREE") << '\n';
    }
  }
  out << "summary: " << agree << "/" << total << " agree\n";
}

void suite_core_even(const SearchOptions&, std::ostream& out) {
  out << "core-even: duplicated families (x1,x1,...,xk,xk) in Core(G), k <= 3\n";
  out << pad("group", 10) << pad("families", 10) << "stabilizing\n";
  std::size_t pass = 0, total = 0;
  for (const auto& spec : kCoreGroups) {
    const auto g = parse_group(spec);
    const auto x = core_quandle(g);
    std::size_t fam = 0, ok = 0;
    for (std::size_t k = 1; k <= 3; ++k) {
      for_each_tuple(g.order(), k, [&](const std::vector<Elem>& t) {
        std::vector<Elem> dup;
        for (Elem e : t) dup.insert(dup.end(), {e, e});
        ++fam;
        if (is_stabilizing(x, dup)) ++ok;
      });
    }
    pass += ok;
    total += fam;
    out << pad(spec, 10) << pad(str(fam), 10) << ok << '\n';
  }
  out << "summary: " << pass << "/" << total << " stabilizing\n";
}

struct AlexanderTally {
  std::size_t rows = 0, failures = 0, discrepancies = 0;
};

/// One (module, n) instance against a direct search on the quandle.
bool alexander_instance(const AlexanderModule& mod, const FiniteRack& x, std::size_t n, const SearchOptions& opts,
                        AlexanderCenter& c, std::uint64_t& searched) {
  c = alexander_center_solver(mod, n);
  SearchOptions counting = opts;
  counting.max_witnesses = 0;
  const auto r = search_center(x, n, counting);
  if (!r.exact) throw Error(ErrorKind::BudgetExceeded, "Alexander search truncated");
  searched = r.count;
  const bool gamma_n_identity =
      modmat::power(mod.gamma(), n, mod.rank(), mod.modulus()) == modmat::identity(mod.rank());
  return c.stable == gamma_n_identity && c.stable == (searched > 0) && c.true_center_count == searched &&
         (!c.one_minus_gamma_invertible || c.f_solution_count == c.true_center_count);
}

void suite_alexander(const SearchOptions& opts, std::ostream& out) {
  out << "alexander: centers of (Z_m)^d with x > y = (x-y)g + y, against direct search\n";
  out << pad("m", 3) << pad("g", 4) << pad("n", 3) << pad("stable", 7) << pad("F", 8) << pad("true", 8)
      << pad("search", 8) << "verdict\n";
  AlexanderTally tally;
  for (std::uint32_t m = 2; m <= 7; ++m) {
    for (std::uint32_t g = 1; g < m; ++g) {
      if (std::gcd(g, m) != 1) continue;
      const AlexanderModule mod(m, 1, {g});
      const auto x = alexander_quandle(mod).rack;
      for (std::size_t n = 1; n <= 6; ++n) {
        AlexanderCenter c;
        std::uint64_t searched = 0;
        const bool ok = alexander_instance(mod, x, n, opts, c, searched);
        const bool diverges = c.f_solution_count != c.true_center_count;
        ++tally.rows;
        if (!ok) ++tally.failures;
        if (diverges) ++tally.discrepancies;
        out << pad(str(m), 3) << pad(str(g), 4) << pad(str(n), 3) << pad(yes_no(c.stable), 7)
            << pad(str(c.f_solution_count), 8) << pad(str(c.true_center_count), 8) << pad(str(searched), 8)
            << (!ok ? "FAIL" : diverges ? "discrepancy: F-count differs from the center" : "ok") << '\n';
      }
    }
  }
  out << "rank 2 (exhaustive for m <= 4, every s-th invertible matrix otherwise):\n";
  for (std::uint32_t m = 2; m <= 7; ++m) {
    std::vector<std::vector<std::int64_t>> gammas;
    for_each_tuple(m, 4, [&](const std::vector<Elem>& t) {
      const std::vector<std::int64_t> gamma(t.begin(), t.end());
      std::int64_t det = (gamma[0] * gamma[3] - gamma[1] * gamma[2]) % m;
      if (det < 0) det += m;
      if (std::gcd<std::int64_t, std::int64_t>(det, m) == 1) gammas.push_back(gamma);
    });
    const std::size_t stride = m <= 4 ? 1 : std::max<std::size_t>(1, gammas.size() / 24);
    AlexanderTally t;
    std::size_t sampled = 0;
    for (std::size_t i = 0; i < gammas.size(); i += stride) {
      ++sampled;
      const AlexanderModule mod(m, 2, gammas[i]);
      const auto x = alexander_quandle(mod).rack;
      for (std::size_t n = 1; n <= 6; ++n) {
        AlexanderCenter c;
        std::uint64_t searched = 0;
        const bool ok = alexander_instance(mod, x, n, opts, c, searched);
        ++t.rows;
        if (!ok) ++t.failures;
        if (c.f_solution_count != c.true_center_count) ++t.discrepancies;
      }
    }
    tally.rows += t.rows;
    tally.failures += t.failures;
    tally.discrepancies += t.discrepancies;
    out << "m=" << m << " d=2: " << gammas.size() << " invertible, " << sampled << " checked (s=" << stride
        << "), " << t.rows << " instances, " << t.failures << " failures, " << t.discrepancies
        << " F-count discrepancies\n";
  }
  out << "summary: " << tally.rows << " instances, " << tally.failures << " failures, " << tally.discrepancies
      << " discrepancies\n";
}

void suite_conjphi(const SearchOptions&, std::ostream& out) {
  out << "conjphi: stabilizing families of Conj_phi(G), criterion phi^n = Ad_w against direct evaluation\n";
  out << "w = u_n phi(u_{n-1}) ... phi^{n-1}(u_1); corrected test: phi(w) = w and phi^n = Ad_{w^-1}\n";
  out << pad("group", 7) << pad("phi", 9) << pad("n", 3) << pad("families", 9) << pad("direct", 7)
      << pad("Ad_w", 9) << pad("corrected", 10) << "first Ad_w disagreement\n";
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"Z4", "id"}, {"Z4", "neg"}, {"Z5", "neg"}, {"Z5", "mul:2"}, {"Z2xZ2", "swap"}, {"S3", "id"}, {"S3", "inner:3"}};
  std::size_t printed_bad = 0, corrected_bad = 0;
  for (const auto& [gs, ps] : cases) {
    const auto g = parse_group(gs);
    const auto phi = parse_automorphism(g, ps);
    for (std::size_t n = 1; n <= 3; ++n) {
      std::size_t fam = 0, direct = 0, printed = 0, corrected = 0;
      std::optional<std::vector<Elem>> first;
      for_each_tuple(g.order(), n, [&](const std::vector<Elem>& u) {
        const auto c = conj_phi_criterion_check(g, phi, u);
        ++fam;
        if (c.direct) ++direct;
        if (c.printed_criterion == c.direct) ++printed;
        else if (!first) first = u;
        if (c.corrected_criterion == c.direct) ++corrected;
      });
      printed_bad += fam - printed;
      corrected_bad += fam - corrected;
      out << pad(gs, 7) << pad(ps, 9) << pad(str(n), 3) << pad(str(fam), 9) << pad(str(direct), 7)
          << pad(str(printed) + "/" + str(fam), 9) << pad(str(corrected) + "/" + str(fam), 10)
          << (first ? format_tuple(*first) : "-") << '\n';
    }
  }
  out << "summary: Ad_w test disagrees with direct evaluation on " << printed_bad << " families; corrected test on "
      << corrected_bad << "\n";
}

void suite_pivot(const SearchOptions& opts, std::ostream& out) {
  out << "pivot: S^n(Conj(G)) against the n-pivot P^n(G)\n";
  out << pad("group", 7) << pad("n", 3) << pad("center", 8) << pad("pivot", 7) << pad("reversal", 10)
      << "identity map\n";
  std::size_t ok = 0, total = 0;
  for (const std::string gs : {"Z4", "Z2xZ2", "S3"}) {
    const auto g = parse_group(gs);
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto r = pivot_bijection_check(g, n, opts);
      ++total;
      if (r.match && r.center_count == r.pivot_count) ++ok;
      out << pad(gs, 7) << pad(str(n), 3) << pad(str(r.center_count), 8) << pad(str(r.pivot_count), 7)
          << pad(r.match ? "bijection" : "FAIL", 10) << (r.identity_map_matches ? "bijection" : "not a bijection")
          << '\n';
    }
  }
  out << "summary: " << ok << "/" << total << " counts match with a verified bijection\n";
}

void suite_gphi(const SearchOptions& opts, std::ostream& out) {
  out << "gphi: stable orders of G_phi against orders with phi^n = id, n <= 6\n";
  out << pad("group", 7) << pad("phi", 7) << pad("torsion", 8) << pad("searched", 14) << pad("predicted", 14)
      << "verdict\n";
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"Z5", "mul:2"}, {"Z7", "mul:2"}, {"Z6", "neg"}, {"Z2xZ2", "swap"}, {"Z8", "mul:3"}, {"Z3xZ3", "swap"}};
  std::size_t ok = 0;
  auto list = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s.empty() ? std::string("-") : s;
  };
  for (const auto& [gs, ps] : cases) {
    const auto g = parse_group(gs);
    const auto r = gphi_torsion_check(g, parse_automorphism(g, ps), 6, opts);
    const bool agree = r.stable_orders == r.predicted_orders;
    if (agree) ++ok;
    out << pad(gs, 7) << pad(ps, 7) << pad(r.torsion_order ? str(*r.torsion_order) : "-", 8)
        << pad(list(r.stable_orders), 14) << pad(list(r.predicted_orders), 14) << (agree ? "agree" : "DISAGREE")
        << '\n';
  }
  out << "summary: " << ok << "/" << cases.size() << " agree\n";
}

void suite_bundle(const SearchOptions&, std::ostream& out) {
  out << "bundle: group families x >^g y = y g^-1 y^-1 x g as bundles over Conj(G)\n";
  out << pad("group", 7) << pad("family", 8) << pad("index h^-1", 30) << "index h\n";
  for (const std::string gs : {"Z3", "Z4", "Z2xZ2", "S3"}) {
    const auto g = parse_group(gs);
    const auto fam = group_gfamily(g);
    std::vector<std::vector<Elem>> tables;
    for (const auto& op : fam.ops) tables.emplace_back(op.table().begin(), op.table().end());
    std::string family = "valid";
    try {
      gfamily_validate(g, fam.carrier, tables);
    } catch (const Error& e) {
      if (e.is_resource_limit()) throw;
      family = witness_text(e);
    }
    auto attempt = [&](GFamilyIndex idx) -> std::string {
      try {
        gfamily_to_bundle(fam, idx);
        return "valid";
      } catch (const Error& e) {
        if (e.is_resource_limit()) throw;
        return witness_text(e);
      }
    };
    out << pad(gs, 7) << pad(family, 8) << pad(attempt(GFamilyIndex::Inverse), 30) << attempt(GFamilyIndex::Direct)
        << '\n';
  }
}

std::vector<std::pair<std::string, FiniteRack>> small_racks() {
  std::vector<std::pair<std::string, FiniteRack>> out;
  for (std::size_t n = 1; n <= 3; ++n) out.emplace_back("trivial " + str(n), trivial_rack(n));
  for (std::size_t m = 3; m <= 6; ++m) out.emplace_back("dihedral " + str(m), dihedral_quandle(m));
  out.emplace_back("conj S3", conj_quandle(group_symmetric(3)));
  out.emplace_back("alexander 5 2", alexander_quandle(AlexanderModule(5, 1, {2})).rack);
  out.emplace_back("core Z2xZ2", core_quandle(parse_group("Z2xZ2")));
  return out;
}

void suite_crossprod(const SearchOptions& opts, std::ostream& out) {
  out << "crossprod: canonical cocycle p.y over self-actions; fold count against search on the cross-product\n";
  out << pad("rack", 15) << pad("size", 5) << pad("n=1", 10) << pad("n=2", 10) << pad("n=3", 10) << "verdict\n";
  std::size_t ok = 0, total = 0;
  for (const auto& [name, x] : small_racks()) {
    const auto t = canonical_cocycle(x, self_action(x));
    const auto cp = cross_product(t, x.size() * x.size());
    bool agree = true;
    out << pad(name, 15) << pad(str(cp.rack.size()), 5);
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto r = crossproduct_stability_check(t, n, opts);
      agree = agree && r.agrees();
      out << pad(str(r.count) + "/" + str(r.direct_count), 10);
    }
    ++total;
    if (agree) ++ok;
    out << (agree ? "agree" : "DISAGREE") << '\n';
  }
  out << "summary: " << ok << "/" << total << " racks agree\n";
}

Permutation affine_map(std::size_t m, std::size_t u, std::size_t c) {
  std::vector<Elem> img(m);
  for (std::size_t x = 0; x < m; ++x) img[x] = static_cast<Elem>((u * x + c) % m);
  return Permutation(std::move(img));
}

void suite_cocycle_bundle(const SearchOptions&, std::ostream& out) {
  out << "cocycle-bundle: fiberwise self-distributivity of d_{x,y} against validity of the bundle *_x^y = d_{x,y}\n";
  out << pad("instance", 40) << pad("distributive", 16) << pad("bundle", 36) << "verdict\n";
  std::size_t ok = 0, total = 0;
  auto row = [&](const std::string& name, const TwistedSystem& t) {
    const auto dist = cocycle_self_distributive(t);
    std::string bundle = "valid";
    bool valid = true;
    try {
      cocycle_to_bundle(t);
    } catch (const Error& e) {
      if (e.is_resource_limit()) throw;
      valid = false;
      bundle = witness_text(e);
    }
    ++total;
    const bool agree = dist.holds == valid;
    if (agree) ++ok;
    out << pad(name, 40)
        << pad(dist.holds ? "yes" : "no " + format_tuple(std::vector<Elem>(dist.witness.begin(), dist.witness.end())),
               16)
        << pad(bundle, 36) << (agree ? "agree" : "DISAGREE") << '\n';
  };
  for (const auto& [name, x] : small_racks()) row("canonical " + name, canonical_cocycle(x, self_action(x)));
  for (std::size_t m : {3u, 5u}) {
    const auto q = dihedral_quandle(m);
    for (std::size_t k : {2u, 3u}) {
      const std::vector<std::pair<std::string, std::vector<Permutation>>> families = {
          {"identity", std::vector<Permutation>(k, Permutation::identity(m))},
          {"constant x+1", std::vector<Permutation>(k, affine_map(m, 1, 1))},
          {"varying x+i", [&] {
             std::vector<Permutation> b;
             for (std::size_t i = 0; i < k; ++i) b.push_back(affine_map(m, 1, i));
             return b;
           }()},
          {"varying (-1)^i x", [&] {
             std::vector<Permutation> b;
             for (std::size_t i = 0; i < k; ++i) b.push_back(affine_map(m, i % 2 ? m - 1 : 1, 0));
             return b;
           }()},
      };
      for (const auto& [bn, b] : families) {
        row("translation D" + str(m) + " over T" + str(k) + " " + bn, twisted_translation_cocycle(q, b));
      }
    }
  }
  out << "summary: " << ok << "/" << total << " agree\n";
}

void suite_irreps(const SearchOptions&, std::ostream& out) {
  out << "irreps: constituents of regular representations of involutive connected racks\n";
  out << "claim checked: every strong irreducible representation is one-dimensional\n";
  for (std::size_t m : {3u, 5u, 7u}) {
    const auto report = irreps_check(dihedral_quandle(m), "dihedral " + str(m));
    out << report.verdict_line() << '\n';
    for (const auto& c : report.constituents) {
      out << "  dim " << c.rep.dimension() << ": strong=" << yes_no(c.strong)
          << " commutant=" << c.commutant_dimension << '\n';
    }
  }
}

void suite_core_dual(const SearchOptions&, std::ostream& out) {
  out << "core-dual: orbit count of Core(G) against 2^n for n generators\n";
  out << pad("group", 10) << pad("generators", 12) << pad("orbits", 8) << pad("bound", 7) << "verdict\n";
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"Z4", "1"}, {"Z2", "1"}, {"Z2xZ2", "1,2"}, {"Z2xZ2xZ2", "1,2,4"}, {"Z3", "1"}, {"Z6", "1"}};
  for (const auto& [gs, gens] : cases) {
    const auto g = parse_group(gs);
    const auto r = core_dual_count_check(g, parse_list(gens));
    out << pad(gs, 10) << pad(gens, 12) << pad(str(r.orbit_count), 8) << pad(str(r.paper_bound), 7)
        << (r.match() ? "match" : "discrepancy: orbit count " + str(r.orbit_count) + " vs bound " + str(r.paper_bound))
        << '\n';
  }
}

void suite_repdual(const SearchOptions&, std::ostream& out) {
  out << "repdual: strong one-dimensional representations with values in mu_k against k-torsion of the dual\n";
  out << pad("rack", 12) << pad("k", 3) << pad("strong", 8) << pad("torsion", 9) << pad("embeds", 8) << "onto\n";
  for (std::size_t m : {3u, 5u, 7u}) {
    for (std::uint32_t k : {2u, 3u, 4u, 6u}) {
      const auto r = repstrong_vs_dual(dihedral_quandle(m), k);
      out << pad("dihedral " + str(m), 12) << pad(str(k), 3) << pad(str(r.strong_onedim_count), 8)
          << pad(str(r.dual_torsion_count), 9) << pad(yes_no(r.embeds), 8) << yes_no(r.onto_torsion) << '\n';
    }
  }
}

using Suite = void (*)(const SearchOptions&, std::ostream&);

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> suites = {
      {"core-odd", suite_core_odd},   {"core-even", suite_core_even},   {"alexander", suite_alexander},
      {"conjphi", suite_conjphi},     {"pivot", suite_pivot},           {"gphi", suite_gphi},
      {"bundle", suite_bundle},       {"crossprod", suite_crossprod},   {"cocycle-bundle", suite_cocycle_bundle},
      {"irreps", suite_irreps},       {"core-dual", suite_core_dual},   {"repdual", suite_repdual},
  };
  return suites;
}

}  // namespace

std::vector<std::string> oracle_suites() {
  std::vector<std::string> out;
  for (const auto& [name, f] : registry()) out.push_back(name);
  return out;
}

void run_oracle(const std::string& suite, const SearchOptions& options, std::ostream& out) {
  const auto it = registry().find(suite);
  if (it == registry().end()) throw Error(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
  it->second(options, out);
}

}  // namespace rackkit
