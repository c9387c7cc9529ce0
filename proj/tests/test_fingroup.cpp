#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rackkit/fingroup.hpp"
#include "rackkit/permutation.hpp"

using namespace rackkit;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

bool table_is_group(const FiniteGroup& g) {
  const auto n = g.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  for (Elem a = 0; a < n; ++a) {
    if (g.mul(a, g.identity()) != a || g.mul(g.identity(), a) != a) return false;
    if (g.mul(a, g.inverse(a)) != g.identity()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation p({1, 2, 0, 4, 3});
  CHECK(p.order() == 6);
  CHECK(p.cycle_type() == std::vector<std::size_t>{3, 2});
  CHECK(p.to_cycle_string() == "(0 1 2)(3 4)");
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(p.power(6).is_identity());
  CHECK(p.power(-1) == p.inverse());
  CHECK(compose(Permutation({1, 0, 2}), Permutation({0, 2, 1})) == Permutation({1, 2, 0}));
  CHECK(kind_of([] { Permutation({0, 0}); }) == ErrorKind::NotBijective);
}

TEST_CASE("named groups satisfy the group axioms") {
  for (const char* spec : {"Z1", "Z2", "Z5", "Z6", "S3", "S4", "Z2xZ2", "Z2xS3", "Z3xZ3"}) {
    CAPTURE(spec);
    const auto g = group_from_spec(spec);
    CHECK(table_is_group(g));
  }
  CHECK(group_from_spec("S4").order() == 24);
  CHECK(group_from_spec("Z2xZ4").order() == 8);
  CHECK(group_from_spec("S3").is_abelian() == false);
  CHECK(group_from_spec("Z2xZ4").exponent() == 4);
  CHECK(group_from_spec("S3").exponent() == 6);
}

TEST_CASE("Cayley table validation") {
  CHECK(kind_of([] { FiniteGroup::from_table(2, {0, 1, 1, 2}); }) == ErrorKind::OutOfRange);
  // No identity.
  CHECK(kind_of([] { FiniteGroup::from_table(2, {1, 1, 0, 0}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { FiniteGroup::from_table(2, {0, 1}); }) == ErrorKind::ShapeMismatch);
  CHECK(kind_of([] { group_from_spec("Q8"); }) == ErrorKind::ParseError);
}

TEST_CASE("center and generated subgroups") {
  const auto s3 = group_from_spec("S3");
  CHECK(group_center(s3) == std::vector<Elem>{s3.identity()});
  const auto z = group_from_spec("Z2xS3");
  CHECK(group_center(z).size() == 2);
  const auto z6 = group_from_spec("Z6");
  CHECK(generated_subgroup(z6, std::vector<Elem>{2}).size() == 3);
  CHECK(generated_subgroup(z6, std::vector<Elem>{1}).size() == 6);
  // Oracle: center = elements commuting with everything.
  std::vector<Elem> brute;
  for (Elem a = 0; a < z.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < z.order(); ++b) central = central && z.mul(a, b) == z.mul(b, a);
    if (central) brute.push_back(a);
  }
  CHECK(group_center(z) == brute);
}

TEST_CASE("automorphisms") {
  const auto z5 = group_from_spec("Z5");
  const auto neg = negation_automorphism(z5);
  CHECK(neg.order() == 2);
  const auto s3 = group_from_spec("S3");
  for (Elem u = 0; u < s3.order(); ++u) {
    const auto ad = inner_automorphism(s3, u);
    for (Elem g = 0; g < s3.order(); ++g) CHECK(ad(g) == s3.mul(s3.mul(u, g), s3.inverse(u)));
  }
  // Swapping two elements of Z3 is not a homomorphism... unless it is negation.
  CHECK_NOTHROW(automorphism_validate(group_from_spec("Z3"), {0, 2, 1}));
  CHECK(kind_of([] { automorphism_validate(group_from_spec("Z4"), {0, 2, 1, 3}); }) == ErrorKind::NotHomomorphism);
  CHECK(kind_of([] { automorphism_validate(group_from_spec("Z4"), {0, 1, 1, 3}); }) == ErrorKind::NotBijective);
}

TEST_CASE("power and element order agree with repeated multiplication") {
  const auto g = group_from_spec("Z2xS3");
  for (Elem a = 0; a < g.order(); ++a) {
    Elem p = g.identity();
    std::uint64_t k = 0;
    do {
      p = g.mul(p, a);
      ++k;
    } while (p != g.identity());
    CHECK(g.element_order(a) == k);
    CHECK(g.power(a, -1) == g.inverse(a));
    CHECK(g.power(a, 3) == g.mul(a, g.mul(a, a)));
  }
}
