#include "rackkit/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "rackkit/constructors.hpp"
#include "rackkit/duality.hpp"
#include "rackkit/dynamics.hpp"
#include "rackkit/io.hpp"
#include "rackkit/repr.hpp"

namespace rackkit {

namespace {

/// Bad verb arguments that CLI11 cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t parse_size(const std::string& s, const char* what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError(std::string("expected a non-negative integer for ") + what + ", got '" + s + "'");
  }
  return v;
}

std::int64_t parse_int(const std::string& s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::ParseError, "expected an integer, got '" + s + "'");
  }
  return v;
}

FiniteRack load_rack(const std::string& path) {
  auto in = TokenReader::from_file(path);
  return read_rack(in);
}

std::string vector_text(const std::vector<Cyclo>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

std::string words_text(const std::vector<Elem>& a) { return a.empty() ? "()" : format_tuple(a); }

void print_search(std::ostream& out, const WordSearchResult& r) {
  out << "order " << r.length << ": count" << (r.exact && !r.overflow ? "=" : ">=") << r.count;
  if (!r.exact) out << " (search truncated)";
  if (r.overflow) out << " (saturated)";
  out << '\n';
  for (const auto& w : r.witnesses) out << format_tuple(w) << '\n';
  if (r.rotation_classes) out << "rotation classes: " << *r.rotation_classes << '\n';
}

/// Writes to -o if given, else to the report stream.
template <class F>
void emit(const std::string& path, std::ostream& out, F&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  write(file);
}

}  // namespace

FiniteGroup parse_group(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) {
    auto in = TokenReader::from_file(spec.substr(5));
    return read_group(in);
  }
  return group_from_spec(spec);
}

std::vector<Elem> parse_list(const std::string& text) {
  std::vector<Elem> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto v = parse_int(part);
    if (v < 0) throw Error(ErrorKind::ParseError, "negative entry in '" + text + "'");
    out.push_back(static_cast<Elem>(v));
  }
  return out;
}

GroupAutomorphism parse_automorphism(const FiniteGroup& g, const std::string& spec) {
  const std::size_t n = g.order();
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  std::vector<Elem> images(n);
  if (head == "id") {
    for (Elem a = 0; a < n; ++a) images[a] = a;
  } else if (head == "neg") {
    for (Elem a = 0; a < n; ++a) images[a] = g.inverse(a);
  } else if (head == "mul") {
    const auto k = parse_int(arg);
    for (Elem a = 0; a < n; ++a) images[a] = g.power(a, k);
  } else if (head == "inner") {
    const auto u = parse_int(arg);
    if (u < 0 || static_cast<std::size_t>(u) >= n) throw Error(ErrorKind::OutOfRange, "inner element out of range");
    return inner_automorphism(g, static_cast<Elem>(u));
  } else if (head == "swap") {
    std::size_t h = 1;
    while (h * h < n) ++h;
    if (h * h != n) throw Error(ErrorKind::InvalidArgument, "swap needs a group of the form HxH");
    for (Elem a = 0; a < n; ++a) images[a] = static_cast<Elem>((a % h) * h + a / h);
  } else if (head == "perm") {
    images = parse_list(arg);
    if (images.size() != n) throw Error(ErrorKind::ShapeMismatch, "perm needs one image per element");
  } else {
    throw Error(ErrorKind::ParseError, "bad automorphism '" + spec + "' (id, neg, mul:k, inner:u, swap, perm:...)");
  }
  return automorphism_validate(g, std::move(images));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite racks and quandles: constructions, stabilizing families, dynamics, representations.",
               "rackkit"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::size_t cap = kDefaultRackCap;
  std::uint64_t budget = kDefaultSearchBudget;
  std::uint32_t conductor = kDefaultConductor;
  unsigned jobs = 1;
  std::string output;
  app.add_option("--cap", cap, "size cap for constructed racks")->capture_default_str();
  app.add_option("--budget", budget, "node budget for direct searches")->capture_default_str();
  app.add_option("--conductor", conductor, "roots of unity available to representations")
      ->capture_default_str()
      ->check(CLI::Range(1u, kMaxConductor));
  app.add_option("--jobs", jobs, "worker threads for searches")->capture_default_str()->check(CLI::Range(1u, 256u));
  app.add_option("-o,--output", output, "write the constructed object to this file");

  auto* c_new = app.add_subcommand("new", "construct a rack: dihedral M | trivial N | conj G | core G | "
                                          "conjphi G PHI | gphi G PHI | alexander M D GAMMA | pivot G N");
  std::vector<std::string> new_args;
  bool labels = false;
  c_new->add_option("args", new_args, "kind and parameters")->required();
  c_new->add_flag("--labels", labels, "list element labels as comments");

  auto* c_check = app.add_subcommand("check", "validate a rack file and report its properties");
  std::string rack_path;
  c_check->add_option("rack", rack_path)->required();

  auto* c_stab = app.add_subcommand("stab", "search stabilizing families");
  std::size_t order = 0, max_witnesses = 16;
  std::string range, family;
  c_stab->add_option("rack", rack_path)->required();
  c_stab->add_option("--order", order, "family order");
  c_stab->add_option("--range", range, "orders A-B, reporting the least stable one");
  c_stab->add_option("--witnesses", max_witnesses, "witnesses to print")->capture_default_str();
  c_stab->add_option("--family", family, "test one family, e.g. 0,1,1,0");

  auto* c_orbits = app.add_subcommand("orbits", "orbits of the inner group");
  c_orbits->add_option("rack", rack_path)->required();

  auto* c_pivot = app.add_subcommand("pivot", "compare S^n(Conj(G)) with the n-pivot of G");
  std::string group_spec;
  c_pivot->add_option("group", group_spec)->required();
  c_pivot->add_option("--order", order, "n")->required();

  auto* c_action = app.add_subcommand("action", "validate a rack action");
  std::string action_path, builtin;
  std::size_t units = 0;
  c_action->add_option("rack", rack_path)->required();
  c_action->add_option("action", action_path, "action file");
  c_action->add_option("--builtin", builtin, "self | delta | trivial:M");
  c_action->add_option("--units", units, "report approximate units of this order");

  auto* c_cocycle = app.add_subcommand("cocycle", "validate a rack cocycle (canonical p.y if no file)");
  std::string fiber_path, cocycle_path;
  c_cocycle->add_option("base", rack_path)->required();
  c_cocycle->add_option("fiber", fiber_path)->required();
  c_cocycle->add_option("action", action_path)->required();
  c_cocycle->add_option("cocycle", cocycle_path);

  auto* c_cross = app.add_subcommand("cross", "build the cross-product of a cocycle");
  c_cross->add_option("base", rack_path)->required();
  c_cross->add_option("fiber", fiber_path)->required();
  c_cross->add_option("action", action_path)->required();
  c_cross->add_option("cocycle", cocycle_path);
  c_cross->add_option("--order", order, "compare stabilizing families up to this order");

  auto* c_bundle = app.add_subcommand("bundle", "validate a bundle of racks");
  std::string bundle_path, index = "inverse";
  c_bundle->add_option("base", rack_path);
  c_bundle->add_option("bundle", bundle_path);
  c_bundle->add_option("--gfamily", group_spec, "use the group family of G over Conj(G)");
  c_bundle->add_option("--index", index, "inverse | direct")->check(CLI::IsMember({"inverse", "direct"}));

  auto* c_rep = app.add_subcommand("rep", "analyse a representation (regular if no file)");
  std::string rep_path, name;
  bool onedim = false, irreps = false;
  c_rep->add_option("rack", rack_path)->required();
  c_rep->add_option("rep", rep_path);
  c_rep->add_flag("--onedim", onedim, "list strong one-dimensional representations");
  c_rep->add_flag("--irreps", irreps, "decompose the regular representation");
  c_rep->add_option("--name", name, "label for reports");

  auto* c_dual = app.add_subcommand("dual", "characters and the dual");
  std::string character_path, gens;
  c_dual->add_option("rack", rack_path);
  c_dual->add_option("--character", character_path, "character file");
  c_dual->add_option("--core", group_spec, "compare Core(G) orbits with 2^n");
  c_dual->add_option("--gens", gens, "generators for --core, e.g. 1,2");

  auto* c_oracle = app.add_subcommand("oracle", "run a theorem-check suite (or 'list')");
  std::string suite;
  c_oracle->add_option("suite", suite)->required();

  // CLI11 reports a stray word as a missing subcommand; name it instead.
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--cap" || a == "--budget" || a == "--conductor" || a == "--jobs" || a == "-o" || a == "--output") {
      ++i;
      continue;
    }
    if (a.starts_with('-')) continue;
    if (!app.get_subcommand_no_throw(a)) {
      err << "usage error: unknown verb '" << a << "'\nRun with --help for more information.\n";
      return 2;
    }
    break;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  SearchOptions search;
  search.budget = budget;
  search.jobs = jobs;

  try {
    if (*c_new) {
      const std::string& kind = new_args[0];
      auto need = [&](std::size_t count) {
        if (new_args.size() != count + 1) {
          throw UsageError("'" + kind + "' takes " + std::to_string(count) + " argument(s)");
        }
      };
      std::optional<LabeledRack> made;
      if (kind == "dihedral") {
        need(1);
        made = LabeledRack{dihedral_quandle(parse_size(new_args[1], "M")), {}};
      } else if (kind == "trivial") {
        need(1);
        made = LabeledRack{trivial_rack(parse_size(new_args[1], "N")), {}};
      } else if (kind == "conj") {
        need(1);
        made = LabeledRack{conj_quandle(parse_group(new_args[1])), {}};
      } else if (kind == "core") {
        need(1);
        made = LabeledRack{core_quandle(parse_group(new_args[1])), {}};
      } else if (kind == "conjphi" || kind == "gphi") {
        need(2);
        const auto g = parse_group(new_args[1]);
        const auto phi = parse_automorphism(g, new_args[2]);
        made = LabeledRack{kind == "conjphi" ? conj_phi_quandle(g, phi) : gphi_quandle(g, phi), {}};
      } else if (kind == "alexander") {
        need(3);
        std::vector<std::int64_t> gamma;
        std::stringstream ss(new_args[3]);
        for (std::string part; std::getline(ss, part, ',');) gamma.push_back(parse_int(part));
        const auto m = parse_size(new_args[1], "M"), d = parse_size(new_args[2], "D");
        if (m < 1 || d < 1 || gamma.size() != d * d) throw UsageError("GAMMA needs D*D comma-separated entries");
        made = alexander_quandle(AlexanderModule(static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(d), gamma),
                                 cap);
      } else if (kind == "pivot") {
        need(2);
        made = pivot_quandle(parse_group(new_args[1]), parse_size(new_args[2], "N"), cap);
      } else {
        throw UsageError("unknown rack kind '" + kind + "'");
      }
      if (made->rack.size() > cap) throw Error(ErrorKind::SizeCapExceeded, "rack exceeds --cap", {made->rack.size()});
      emit(output, out, [&](std::ostream& o) {
        if (labels) {
          for (std::size_t i = 0; i < made->labels.size(); ++i) {
            o << "# " << i << " = " << format_tuple(made->labels[i]) << '\n';
          }
        }
        write_rack(o, made->rack);
      });
      return 0;
    }

    if (*c_check) {
      const auto x = load_rack(rack_path);
      out << "valid rack of size " << x.size() << '\n';
      out << "quandle: " << (x.is_quandle() ? "yes" : "no") << '\n';
      out << "involutive: " << (x.is_involutive() ? "yes" : "no") << '\n';
      out << "trivial: " << (x.is_trivial() ? "yes" : "no") << '\n';
      out << "connected: " << (x.is_connected() ? "yes" : "no") << '\n';
      out << "orbits: " << format_partition(x.orbits()) << '\n';
      out << "inner group order: " << InnerGroup(x).order() << '\n';
      return 0;
    }

    if (*c_stab) {
      const auto x = load_rack(rack_path);
      search.max_witnesses = max_witnesses;
      if (!family.empty()) {
        const auto f = parse_list(family);
        for (Elem e : f) {
          if (e >= x.size()) throw Error(ErrorKind::OutOfRange, "family member out of range", {e});
        }
        const bool s = !f.empty() && is_stabilizing(x, f);
        out << "family " << format_tuple(f) << ": stabilizing " << (s ? "yes" : "no") << '\n';
        if (s) out << "all rotations stabilizing: " << (cyclic_invariance_check(x, f) ? "yes" : "no") << '\n';
        return 0;
      }
      if (!range.empty()) {
        const auto dash = range.find('-');
        if (dash == std::string::npos) throw UsageError("--range expects A-B");
        const auto lo = parse_size(range.substr(0, dash), "A"), hi = parse_size(range.substr(dash + 1), "B");
        if (lo < 1 || hi < lo) throw UsageError("--range expects 1 <= A <= B");
        search.max_witnesses = 0;
        const auto report = stability_report(x, lo, hi, search);
        for (const auto& r : report.orders) print_search(out, r);
        out << "least stable order: " << (report.least_stable_order ? std::to_string(*report.least_stable_order) : "none")
            << '\n';
        return 0;
      }
      if (order < 1) throw UsageError("stab needs --order, --range or --family");
      print_search(out, search_center(x, order, search));
      return 0;
    }

    if (*c_orbits) {
      const auto x = load_rack(rack_path);
      for (std::size_t i = 0; i < x.orbits().size(); ++i) {
        out << "orbit " << i << ": " << format_partition({x.orbits()[i]}) << '\n';
      }
      out << "dual rank: " << dual_rank(x) << '\n';
      return 0;
    }

    if (*c_pivot) {
      const auto g = parse_group(group_spec);
      if (order < 1) throw UsageError("--order must be positive");
      const auto r = pivot_bijection_check(g, order, search);
      out << "center=" << r.center_count << " pivot=" << r.pivot_count << '\n';
      out << "reversal bijection: " << (r.match ? "yes" : "no") << '\n';
      out << "identity map bijection: " << (r.identity_map_matches ? "yes" : "no") << '\n';
      if (!output.empty()) {
        const auto p = pivot_quandle(g, order, cap);
        emit(output, out, [&](std::ostream& o) {
          for (std::size_t i = 0; i < p.labels.size(); ++i) o << "# " << i << " = " << format_tuple(p.labels[i]) << '\n';
          write_rack(o, p.rack);
        });
      }
      return r.match ? 0 : 1;
    }

    if (*c_action) {
      const auto x = load_rack(rack_path);
      std::optional<RackAction> a;
      if (!action_path.empty()) {
        auto in = TokenReader::from_file(action_path);
        a = read_action(in, x);
      } else if (builtin == "self") {
        a = self_action(x);
      } else if (builtin == "delta") {
        a = delta_function_action(x);
      } else if (builtin.rfind("trivial:", 0) == 0) {
        a = trivial_action(x, parse_size(builtin.substr(8), "M"));
      } else {
        throw UsageError("action needs a file or --builtin self|delta|trivial:M");
      }
      out << "valid action of a rack of size " << x.size() << " on " << a->set_size() << " points\n";
      out << "faithful: " << (is_faithful(*a) ? "yes" : "no") << '\n';
      const auto s = is_strong_action(*a);
      out << "strong: " << (s.strong ? "yes" : "no");
      if (!s.strong) out << ", family " << format_tuple(s.failing_family) << " is stabilizing but moves a point";
      out << '\n';
      if (units > 0) {
        const auto u = approximate_units(*a, units, search);
        out << "approximate units of order " << units << ": " << u.units.count << '\n';
        out << "r-units: " << format_tuple(u.r_units) << '\n';
        out << "periodic: " << (u.periodic ? "yes" : "no") << '\n';
      }
      if (!output.empty()) emit(output, out, [&](std::ostream& o) { write_action(o, *a); });
      return 0;
    }

    if (*c_cocycle || *c_cross) {
      const auto x = load_rack(rack_path);
      const auto q = load_rack(fiber_path);
      auto ain = TokenReader::from_file(action_path);
      const auto a = read_action(ain, x);
      std::optional<TwistedSystem> t;
      if (cocycle_path.empty()) {
        t = canonical_cocycle(q, a);
      } else {
        auto cin = TokenReader::from_file(cocycle_path);
        t = read_cocycle(cin, x, q, a);
      }
      if (*c_cocycle) {
        out << "valid cocycle over a base of size " << x.size() << " with fiber of size " << q.size() << '\n';
        const auto dist = cocycle_self_distributive(*t);
        out << "fiberwise self-distributive: " << (dist.holds ? "yes" : "no");
        if (!dist.holds) {
          out << ", witness (x,y,p,q,r) = " << format_tuple(std::vector<Elem>(dist.witness.begin(), dist.witness.end()));
        }
        out << '\n';
        try {
          cocycle_to_bundle(*t);
          out << "bundle of racks: valid\n";
        } catch (const Error& e) {
          if (e.is_resource_limit()) throw;
          out << "bundle of racks: invalid, " << kind_name(e.kind()) << " "
              << format_tuple(std::vector<Elem>(e.witness().begin(), e.witness().end())) << '\n';
        }
        if (!output.empty()) emit(output, out, [&](std::ostream& o) { write_cocycle(o, *t); });
        return 0;
      }
      const auto cp = cross_product(*t, cap);
      out << "cross-product of size " << cp.rack.size() << ": valid rack\n";
      for (std::size_t n = 1; n <= order; ++n) {
        const auto r = crossproduct_stability_check(*t, n, search);
        out << "order " << n << ": folded count=" << r.count << " direct count=" << r.direct_count << " "
            << (r.agrees() ? "agree" : "DISAGREE") << '\n';
      }
      if (!output.empty()) {
        emit(output, out, [&](std::ostream& o) {
          for (std::size_t i = 0; i < cp.labels.size(); ++i) o << "# " << i << " = " << format_tuple(cp.labels[i]) << '\n';
          write_rack(o, cp.rack);
        });
      }
      return 0;
    }

    if (*c_bundle) {
      std::optional<BundleOfRacks> b;
      if (!group_spec.empty()) {
        const auto g = parse_group(group_spec);
        b = gfamily_to_bundle(group_gfamily(g), index == "direct" ? GFamilyIndex::Direct : GFamilyIndex::Inverse);
      } else {
        if (rack_path.empty() || bundle_path.empty()) throw UsageError("bundle needs BASE BUNDLE or --gfamily G");
        const auto x = load_rack(rack_path);
        auto in = TokenReader::from_file(bundle_path);
        b = read_bundle(in, x);
      }
      out << "valid bundle over a base of size " << b->base().size() << " with carrier " << b->carrier() << '\n';
      if (!output.empty()) emit(output, out, [&](std::ostream& o) { write_bundle(o, *b); });
      return 0;
    }

    if (*c_rep) {
      const auto x = load_rack(rack_path);
      if (onedim) {
        const auto reps = enumerate_strong_onedim(x, conductor);
        out << "strong one-dimensional representations with values in mu_" << conductor << ": " << reps.size() << '\n';
        for (const auto& r : reps) {
          out << "(";
          for (Elem e = 0; e < x.size(); ++e) out << (e ? "," : "") << onedim_value(r, e).to_string();
          out << ")\n";
        }
        return 0;
      }
      if (irreps) {
        const auto report = irreps_check(x, name.empty() ? rack_path : name);
        out << report.verdict_line() << '\n';
        for (const auto& c : report.constituents) {
          out << "  dim " << c.rep.dimension() << ": strong=" << (c.strong ? "yes" : "no")
              << " commutant=" << c.commutant_dimension << '\n';
        }
        return 0;
      }
      std::optional<RackRep> r;
      if (rep_path.empty()) {
        r = regular_rep(x, conductor);
      } else {
        auto in = TokenReader::from_file(rep_path);
        r = read_rep(in, x);
      }
      out << "valid representation of dimension " << r->dimension() << " over Q(z_" << r->field().conductor()
          << ")\n";
      const auto s = is_strong_rep(*r);
      out << "strong: " << (s.strong ? "yes" : "no");
      if (!s.strong) out << ", word " << words_text(s.identity_word) << " is trivial in Inn(X) but not in GL";
      out << '\n';
      const auto inv = invariant_subspace_search(*r);
      if (inv.proper_invariant) {
        out << "invariant subspace: span{";
        for (std::size_t c = 0; c < inv.proper_invariant->cols(); ++c) {
          out << (c ? "," : "") << vector_text(inv.proper_invariant->column(c));
        }
        out << "}\n";
      } else {
        out << "irreducible: commutant dimension " << inv.commutant_dimension << '\n';
      }
      const auto tr = trace_character(*r);
      out << "traces:";
      for (const auto& t : tr.traces) out << ' ' << t.to_string();
      out << (tr.orbit_constant ? " (constant on orbits)" : " (NOT constant on orbits)") << '\n';
      if (!output.empty()) emit(output, out, [&](std::ostream& o) { write_rep(o, *r); });
      return 0;
    }

    if (*c_dual) {
      if (!group_spec.empty()) {
        const auto g = parse_group(group_spec);
        const auto r = core_dual_count_check(g, parse_list(gens));
        out << "core orbits=" << r.orbit_count << " bound=" << r.paper_bound << " "
            << (r.match() ? "match" : "discrepancy") << '\n';
        return 0;
      }
      std::optional<CharacterFile> chr;
      if (!character_path.empty()) {
        auto in = TokenReader::from_file(character_path);
        chr = read_character(in);
        if (rack_path.empty()) rack_path = chr->rack_path;
      }
      if (rack_path.empty()) throw UsageError("dual needs a rack, --character or --core");
      const auto x = load_rack(rack_path);
      out << "dual rank: " << dual_rank(x) << '\n';
      out << "orbits: " << format_partition(x.orbits()) << '\n';
      if (chr) {
        const RackCharacter c(x, chr->values);
        auto text = [](const RackCharacter& v) {
          std::string s;
          for (std::size_t i = 0; i < v.values().size(); ++i) s += (i ? " " : "") + v.values()[i].to_string();
          return s;
        };
        out << "character: " << text(c) << '\n';
        out << "inverse: " << text(c.inverse()) << '\n';
      }
      if (x.is_involutive() && x.is_connected()) {
        const auto r = repstrong_vs_dual(x, conductor);
        out << "strong one-dimensional (k=" << conductor << "): " << r.strong_onedim_count << " of "
            << r.dual_torsion_count << " torsion characters; embeds: " << (r.embeds ? "yes" : "no")
            << "; onto: " << (r.onto_torsion ? "yes" : "no") << '\n';
      } else {
        out << "representation comparison skipped: rack is not "
            << (x.is_involutive() ? "connected" : "involutive") << '\n';
      }
      return 0;
    }

    if (*c_oracle) {
      if (suite == "list") {
        for (const auto& s : oracle_suites()) out << s << '\n';
        return 0;
      }
      const auto names = oracle_suites();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        throw UsageError("unknown suite '" + suite + "'");
      }
      run_oracle(suite, search, out);
      return 0;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << kind_name(e.kind());
    if (!e.witness().empty()) {
      err << " witness " << format_tuple(std::vector<Elem>(e.witness().begin(), e.witness().end()));
    }
    err << ": " << e.what() << '\n';
    const bool limit = e.is_resource_limit() || e.kind() == ErrorKind::ConductorTooSmall ||
                       e.kind() == ErrorKind::Inconclusive;
    return limit ? 3 : 1;
  }
  return 2;
}

}  // namespace rackkit
