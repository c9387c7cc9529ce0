#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rackkit/constructors.hpp"
#include "rackkit/duality.hpp"

using namespace rackkit;

namespace {

oracle::Table raw(const FiniteRack& x) { return {x.table().begin(), x.table().end()}; }

std::vector<FiniteRack> racks() {
  return {dihedral_quandle(3), dihedral_quandle(4), dihedral_quandle(6), trivial_rack(3),
          conj_quandle(group_from_spec("S3")), core_quandle(group_from_spec("Z2xZ2"))};
}

RackCharacter random_character(const FiniteRack& x, std::mt19937& rng) {
  std::vector<QZ> v;
  for (std::size_t i = 0; i < x.orbits().size(); ++i) {
    const std::int64_t den = 1 + rng() % 12;
    v.emplace_back(static_cast<std::int64_t>(rng() % 50) - 25, den);
  }
  return RackCharacter(x, v);
}

}  // namespace

TEST_CASE("Q/Z arithmetic") {
  CHECK(QZ(3, 4) + QZ(1, 2) == QZ(1, 4));
  CHECK(QZ(-1, 3) == QZ(2, 3));
  CHECK(QZ(5, 5) == QZ());
  CHECK(QZ(2, 6).to_string() == "1/3");
  CHECK(QZ().to_string() == "0");
  CHECK(QZ::parse("4/6") == QZ(2, 3));
  CHECK(QZ::parse("7") == QZ());
  CHECK(-QZ(1, 3) == QZ(2, 3));
  CHECK_THROWS_AS(QZ(1, 0), Error);
  CHECK_THROWS_AS(QZ::parse("x/2"), Error);
  CHECK_THROWS_AS(QZ::parse("1/0"), Error);
}

TEST_CASE("characters form an abelian group") {
  std::mt19937 rng(2024);
  const auto all = racks();
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& x = all[trial % all.size()];
    const auto a = random_character(x, rng), b = random_character(x, rng), c = random_character(x, rng);
    const auto e = RackCharacter::identity(x);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * e == a);
    CHECK(a * a.inverse() == e);
    for (Elem t = 0; t < x.size(); ++t) CHECK((a * b).at(t) == a.at(t) + b.at(t));
  }
  CHECK_THROWS_AS(RackCharacter(dihedral_quandle(3), {QZ(), QZ()}), Error);
  CHECK_THROWS_AS(RackCharacter::identity(dihedral_quandle(3)) * RackCharacter::identity(dihedral_quandle(5)), Error);
}

TEST_CASE("dual rank counts orbits and ignores labels") {
  std::mt19937 rng(9);
  for (const auto& x : racks()) {
    CHECK(dual_rank(x) == oracle::orbits(raw(x), x.size()).size());
    for (int i = 0; i < 5; ++i) {
      std::vector<Elem> img(x.size());
      std::iota(img.begin(), img.end(), 0u);
      std::shuffle(img.begin(), img.end(), rng);
      CHECK(dual_rank(relabel(x, Permutation(img))) == dual_rank(x));
    }
  }
}

TEST_CASE("traces") {
  const auto x = dihedral_quandle(3);
  const auto r = regular_rep(x, 6);
  const auto t = trace_character(r);
  CHECK(t.orbit_constant);
  CHECK_FALSE(t.character.has_value());
  // A permutation matrix has trace equal to its number of fixed points.
  for (Elem e = 0; e < 3; ++e) CHECK(t.traces[e] == Cyclo(r.field(), mpq_class(1)));
  const auto s = trace_character(direct_sum(r, r));
  for (Elem e = 0; e < 3; ++e) CHECK(s.traces[e] == t.traces[e] + t.traces[e]);
  for (const auto& a : enumerate_strong_onedim(dihedral_quandle(4), 4))
    for (const auto& b : enumerate_strong_onedim(dihedral_quandle(4), 4)) {
      const auto ab = trace_character(tensor_onedim(a, b).to_rep());
      REQUIRE(ab.character.has_value());
      CHECK(*ab.character == onedim_character(a) * onedim_character(b));
      CHECK(*trace_character(a.to_rep()).character == onedim_character(a));
      const auto sum = trace_character(direct_sum(a.to_rep(), b.to_rep()));
      for (Elem e = 0; e < 4; ++e)
        CHECK(sum.traces[e] == trace_character(a.to_rep()).traces[e] + trace_character(b.to_rep()).traces[e]);
    }
  const OneDimRep w{dihedral_quandle(4), 4, {1, 3, 1, 3}};
  CHECK(onedim_value(w, 1) == QZ(3, 4));
}

TEST_CASE("strong one-dimensional representations against the dual") {
  for (std::size_t m : {3u, 5u, 7u}) {
    const auto x = dihedral_quandle(m);
    for (std::uint32_t k : {1u, 2u, 3u, 4u, 6u}) {
      const auto c = repstrong_vs_dual(x, k);
      // Oracle: one orbit, so count the values ζ^e whose constant assignment extends.
      std::size_t brute = 0;
      for (std::uint32_t e = 0; e < k; ++e)
        brute += oracle::cyclic_extension_exists(raw(x), m, std::vector<std::uint32_t>(m, e), k);
      CHECK(c.strong_onedim_count == brute);
      CHECK(c.dual_torsion_count == k);
      CHECK(c.embeds);
      CHECK(c.onto_torsion == (brute == k));
    }
  }
  CHECK_THROWS_AS(repstrong_vs_dual(dihedral_quandle(4), 2), Error);
  CHECK_THROWS_AS(repstrong_vs_dual(conj_quandle(group_from_spec("S3")), 2), Error);
}

TEST_CASE("orbits of cores of abelian groups against the power-of-two count") {
  struct Case {
    const char* group;
    std::vector<Elem> gens;
  };
  for (const auto& c : std::vector<Case>{{"Z3", {1}}, {"Z6", {1}}, {"Z4", {1}}, {"Z2xZ2", {1, 2}}, {"Z2xZ4", {1, 4}},
                                         {"Z5", {1}}}) {
    CAPTURE(c.group);
    const auto g = group_from_spec(c.group);
    const auto r = core_dual_count_check(g, c.gens);
    CHECK(r.orbit_count == oracle::orbits(raw(core_quandle(g)), g.order()).size());
    CHECK(r.paper_bound == (std::uint64_t{1} << c.gens.size()));
  }
  CHECK_THROWS_AS(core_dual_count_check(group_from_spec("S3"), std::vector<Elem>{1}), Error);
  CHECK_THROWS_AS(core_dual_count_check(group_from_spec("Z6"), std::vector<Elem>{2}), Error);
}
