#include <doctest.h>

#include "oracles.hpp"
#include "rackkit/constructors.hpp"
#include "rackkit/stability.hpp"

using namespace rackkit;

namespace {

oracle::Table raw(const FiniteRack& x) { return {x.table().begin(), x.table().end()}; }

}  // namespace

TEST_CASE("dihedral quandle formula") {
  for (std::size_t m = 1; m <= 9; ++m) {
    const auto x = dihedral_quandle(m);
    for (Elem a = 0; a < m; ++a)
      for (Elem b = 0; b < m; ++b) CHECK(x.op(a, b) == (2 * b + 2 * m - a) % m);
    CHECK(x.is_involutive());
    CHECK(x.is_quandle());
    // Connected exactly for odd m.
    CHECK(x.is_connected() == (m % 2 == 1));
  }
}

TEST_CASE("group quandles follow their formulas") {
  for (const char* spec : {"Z4", "S3", "Z2xZ2", "Z2xS3"}) {
    CAPTURE(spec);
    const auto g = group_from_spec(spec);
    const auto conj = conj_quandle(g);
    const auto core = core_quandle(g);
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b) {
        CHECK(conj.op(a, b) == g.mul(g.mul(b, a), g.inverse(b)));
        CHECK(core.op(a, b) == g.mul(g.mul(b, g.inverse(a)), b));
      }
    CHECK(core.is_involutive());
    CHECK(oracle::is_rack(raw(conj), g.order()));
    CHECK(conj.is_trivial() == g.is_abelian());
  }
}

TEST_CASE("Conj_phi is a quandle for every automorphism tried") {
  const auto s3 = group_from_spec("S3");
  for (Elem u = 0; u < s3.order(); ++u) {
    const auto phi = inner_automorphism(s3, u);
    const auto x = conj_phi_quandle(s3, phi);
    CHECK(oracle::is_rack(raw(x), 6));
    CHECK(x.is_quandle());
    for (Elem a = 0; a < 6; ++a)
      for (Elem b = 0; b < 6; ++b) CHECK(x.op(a, b) == s3.mul(s3.mul(b, phi(a)), phi(s3.inverse(b))));
  }
  const auto z5 = group_from_spec("Z5");
  const auto x = conj_phi_quandle(z5, negation_automorphism(z5));
  CHECK(x.is_quandle());
  CHECK(oracle::is_rack(raw(x), 5));
}

TEST_CASE("gphi quandle") {
  const auto z7 = group_from_spec("Z7");
  const auto phi = automorphism_validate(z7, {0, 3, 6, 2, 5, 1, 4});
  const auto x = gphi_quandle(z7, phi);
  for (Elem a = 0; a < 7; ++a)
    for (Elem b = 0; b < 7; ++b) CHECK(x.op(a, b) == (3 * a + 5 * b) % 7);
  CHECK_THROWS_AS(gphi_quandle(group_from_spec("S3"), inner_automorphism(group_from_spec("S3"), 1)), Error);
}

TEST_CASE("Alexander quandles") {
  const AlexanderModule mod(5, 1, {2});
  CHECK(mod.cardinality() == 5);
  CHECK(mod.gamma_inverse() == std::vector<std::uint32_t>{3});
  const auto x = alexander_quandle(mod);
  for (Elem a = 0; a < 5; ++a)
    for (Elem b = 0; b < 5; ++b) CHECK(x.rack.op(a, b) == ((a + 5 - b) * 2 + b) % 5);
  CHECK_THROWS_AS(AlexanderModule(4, 1, {2}), Error);
  const AlexanderModule m2(3, 2, {0, 1, 1, 1});
  const auto y = alexander_quandle(m2);
  CHECK(y.rack.size() == 9);
  CHECK(oracle::is_rack(raw(y.rack), 9));
  CHECK(y.labels[m2.encode({1, 2})] == std::vector<Elem>{1, 2});
  CHECK(m2.decode(5) == std::vector<std::uint32_t>{1, 2});
}

TEST_CASE("pivot quandle") {
  const auto s3 = group_from_spec("S3");
  for (std::size_t n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const auto p = pivot_quandle(s3, n);
    const auto& x = p.rack;
    CHECK(oracle::is_rack(raw(x), x.size()));
    // Brute-force the central product condition on labels.
    std::size_t count = 0;
    oracle::for_each_tuple(6, n, [&](const std::vector<std::uint32_t>& t) {
      Elem prod = s3.identity();
      for (auto e : t) prod = s3.mul(prod, e);
      const auto centre = group_center(s3);
      if (std::find(centre.begin(), centre.end(), prod) != centre.end()) ++count;
    });
    CHECK(x.size() == count);
    for (Elem a = 0; a < x.size(); ++a)
      for (Elem b = 0; b < x.size(); ++b) {
        const auto& xa = p.labels[a];
        const auto& yb = p.labels[b];
        const auto& z = p.labels[x.op(a, b)];
        for (std::size_t i = 0; i < n; ++i) {
          const std::size_t prev = (i + n - 1) % n;
          CHECK(z[i] == s3.mul(s3.mul(s3.inverse(yb[prev]), xa[prev]), yb[i]));
        }
      }
  }
  CHECK_THROWS_AS(pivot_quandle(s3, 0), Error);
}
