#include "rackkit/duality.hpp"

#include <charconv>
#include <numeric>
#include <set>

#include "rackkit/constructors.hpp"

namespace rackkit {

QZ::QZ(std::int64_t p, std::int64_t q) {
  if (q == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  p %= q;
  if (p < 0) p += q;
  const std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

std::string QZ::to_string() const {
  if (p_ == 0) return "0";
  return std::to_string(p_) + "/" + std::to_string(q_);
}

QZ QZ::parse(const std::string& text) {
  auto read = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw Error(ErrorKind::ParseError, "bad fraction '" + text + "'");
    }
    return v;
  };
  const std::string_view s(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return QZ(read(s), 1);
  const std::int64_t q = read(s.substr(slash + 1));
  if (q == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
  return QZ(read(s.substr(0, slash)), q);
}

QZ operator+(const QZ& a, const QZ& b) {
  const std::int64_t l = std::lcm(a.q_, b.q_);
  return QZ(a.p_ * (l / a.q_) + b.p_ * (l / b.q_), l);
}

QZ QZ::operator-() const { return QZ(-p_, q_); }

RackCharacter::RackCharacter(const FiniteRack& x, std::vector<QZ> values) : rack_(x), values_(std::move(values)) {
  if (values_.size() != rack_.orbits().size()) {
    throw Error(ErrorKind::ShapeMismatch, "need one value per orbit", {values_.size(), rack_.orbits().size()});
  }
}

RackCharacter RackCharacter::identity(const FiniteRack& x) {
  return RackCharacter(x, std::vector<QZ>(x.orbits().size()));
}

RackCharacter RackCharacter::inverse() const {
  std::vector<QZ> v;
  for (const auto& q : values_) v.push_back(-q);
  return RackCharacter(rack_, std::move(v));
}

RackCharacter operator*(const RackCharacter& a, const RackCharacter& b) {
  if (!(a.rack() == b.rack())) throw Error(ErrorKind::RackMismatch, "characters of different racks");
  std::vector<QZ> v;
  for (std::size_t i = 0; i < a.values().size(); ++i) v.push_back(a.values()[i] + b.values()[i]);
  return RackCharacter(a.rack(), std::move(v));
}

std::size_t dual_rank(const FiniteRack& x) { return x.orbits().size(); }

TraceCharacter trace_character(const RackRep& r) {
  TraceCharacter out;
  const std::size_t n = r.rack().size();
  for (Elem x = 0; x < n; ++x) {
    Cyclo t(r.field());
    for (std::size_t i = 0; i < r.dimension(); ++i) t += r.matrix(x).at(i, i);
    out.traces.push_back(std::move(t));
  }
  for (Elem x = 0; x < n && out.orbit_constant; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (!(out.traces[r.rack().op(x, y)] == out.traces[x])) {
        out.orbit_constant = false;
        break;
      }
    }
  }
  if (r.dimension() == 1 && out.orbit_constant) {
    const std::uint32_t k = r.field().conductor();
    std::vector<QZ> values;
    bool roots = true;
    for (const auto& orbit : r.rack().orbits()) {
      const Cyclo& t = out.traces[orbit.front()];
      std::optional<QZ> found;
      for (std::uint32_t j = 0; j < k && !found; ++j) {
        if (t == Cyclo::root_of_unity(r.field(), j)) found = QZ(j, k);
      }
      if (!found) {
        roots = false;
        break;
      }
      values.push_back(*found);
    }
    if (roots) out.character = RackCharacter(r.rack(), std::move(values));
  }
  return out;
}

QZ onedim_value(const OneDimRep& r, Elem x) { return QZ(r.exponents[x], r.conductor); }

RackCharacter onedim_character(const OneDimRep& r) {
  std::vector<QZ> values;
  for (const auto& orbit : r.rack.orbits()) values.push_back(onedim_value(r, orbit.front()));
  return RackCharacter(r.rack, std::move(values));
}

RepDualComparison repstrong_vs_dual(const FiniteRack& x, std::uint32_t conductor) {
  if (!x.is_involutive()) throw Error(ErrorKind::HypothesesFail, "rack is not involutive", {0});
  if (!x.is_connected()) throw Error(ErrorKind::HypothesesFail, "rack is not connected", {1});
  RepDualComparison out;
  out.conductor = conductor;
  const auto reps = enumerate_strong_onedim(x, conductor);
  out.strong_onedim_count = reps.size();
  out.dual_torsion_count = 1;
  for (std::size_t i = 0; i < dual_rank(x); ++i) out.dual_torsion_count *= conductor;
  // Injective homomorphism: distinct reps give distinct characters and the
  // character of a tensor product is the product of characters.
  std::set<std::vector<QZ>> images;
  bool hom = true;
  for (const auto& a : reps) {
    images.insert(onedim_character(a).values());
    for (const auto& b : reps) {
      if (!(onedim_character(tensor_onedim(a, b)) == onedim_character(a) * onedim_character(b))) hom = false;
    }
  }
  out.embeds = hom && images.size() == reps.size();
  out.onto_torsion = out.embeds && images.size() == out.dual_torsion_count;
  return out;
}

CoreDualCount core_dual_count_check(const FiniteGroup& g, std::span<const Elem> generators) {
  if (!g.is_abelian()) throw Error(ErrorKind::NotAbelian, "group is not abelian");
  for (Elem e : generators) {
    if (e >= g.order()) throw Error(ErrorKind::OutOfRange, "generator out of range", {e});
  }
  if (generated_subgroup(g, generators).size() != g.order()) {
    throw Error(ErrorKind::DoNotGenerate, "elements do not generate the group");
  }
  if (generators.size() >= 63) throw Error(ErrorKind::SizeCapExceeded, "too many generators");
  CoreDualCount out;
  out.orbit_count = dual_rank(core_quandle(g));
  out.paper_bound = std::uint64_t{1} << generators.size();
  return out;
}

}  // namespace rackkit
