#include "rackkit/repr.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace rackkit {

namespace {

std::vector<Cyclo> unit_vector(const CycloField& f, std::size_t d, std::size_t i) {
  std::vector<Cyclo> v(d, Cyclo(f));
  v[i] = Cyclo(f, 1);
  return v;
}

/// Distinct matrices among the π_x, in order of first appearance.
std::vector<CMatrix> distinct_matrices(const std::vector<CMatrix>& mats) {
  std::vector<CMatrix> out;
  for (const auto& m : mats) {
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

/// Smallest subspace containing v and closed under every matrix.
Span spin(const CycloField& f, std::size_t d, const std::vector<Cyclo>& v, const std::vector<CMatrix>& mats) {
  Span span(f, d);
  if (!span.insert(v)) return span;
  std::vector<std::vector<Cyclo>> work{v};
  while (!work.empty() && span.dimension() < d) {
    const auto w = std::move(work.back());
    work.pop_back();
    for (const auto& m : mats) {
      auto image = m.apply(w);
      if (span.insert(image)) work.push_back(std::move(image));
    }
  }
  return span;
}

std::vector<std::vector<Cyclo>> spin_candidates(const CycloField& f, std::size_t d, const std::vector<CMatrix>& mats) {
  std::vector<std::vector<Cyclo>> out;
  for (std::size_t i = 0; i < d; ++i) out.push_back(unit_vector(f, d, i));
  out.emplace_back(d, Cyclo(f, 1));
  if (d <= 8) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        auto plus = unit_vector(f, d, i);
        plus[j] = Cyclo(f, 1);
        auto minus = unit_vector(f, d, i);
        minus[j] = Cyclo(f, -1);
        out.push_back(std::move(plus));
        out.push_back(std::move(minus));
      }
    }
  }
  // Eigenvectors of single matrices and of pairwise products.
  std::vector<CMatrix> probes = mats;
  const std::size_t limit = std::min<std::size_t>(mats.size(), 8);
  for (std::size_t a = 0; a < limit; ++a) {
    for (std::size_t b = a + 1; b < limit; ++b) probes.push_back(mats[a] * mats[b]);
  }
  const CMatrix id = CMatrix::identity(f, d);
  for (const auto& p : probes) {
    for (std::uint32_t j = 0; j < f.conductor(); ++j) {
      const CMatrix kernel = (p - id.scaled(Cyclo::root_of_unity(f, j))).nullspace();
      if (kernel.cols() == 0 || kernel.cols() == d) continue;
      for (std::size_t c = 0; c < kernel.cols(); ++c) out.push_back(kernel.column(c));
    }
  }
  return out;
}

std::optional<CMatrix> search_by_spinning(const CycloField& f, std::size_t d, const std::vector<CMatrix>& mats) {
  for (const auto& v : spin_candidates(f, d, mats)) {
    const Span s = spin(f, d, v, mats);
    if (s.dimension() > 0 && s.dimension() < d) return s.basis();
  }
  return std::nullopt;
}

/// Solves φ A_x = B_x φ for d2×d1 unknowns φ.
std::vector<CMatrix> solve_intertwiners(const CycloField& f, const std::vector<CMatrix>& a, const std::vector<CMatrix>& b,
                                        std::size_t d1, std::size_t d2) {
  if (d1 * d2 > kMaxCommutantDim * kMaxCommutantDim) {
    throw Error(ErrorKind::SizeCapExceeded, "intertwiner system too large", {d1 * d2});
  }
  const std::size_t unknowns = d1 * d2;
  Span rows(f, unknowns);
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t r = 0; r < d2; ++r) {
      for (std::size_t c = 0; c < d1; ++c) {
        std::vector<Cyclo> eq(unknowns, Cyclo(f));
        for (std::size_t j = 0; j < d1; ++j) eq[r * d1 + j] += a[x].at(j, c);
        for (std::size_t i = 0; i < d2; ++i) eq[i * d1 + c] -= b[x].at(r, i);
        rows.insert(std::move(eq));
      }
    }
  }
  const CMatrix echelon = rows.basis().transpose();
  const CMatrix null = rows.dimension() == 0 ? CMatrix::identity(f, unknowns) : echelon.nullspace();
  std::vector<CMatrix> out;
  for (std::size_t c = 0; c < null.cols(); ++c) {
    CMatrix phi(f, d2, d1);
    for (std::size_t i = 0; i < unknowns; ++i) phi.at(i / d1, i % d1) = null.at(i, c);
    out.push_back(std::move(phi));
  }
  return out;
}

std::vector<CMatrix> orbital_matrices(const CycloField& f, const std::vector<Permutation>& perms, std::size_t d) {
  std::vector<std::size_t> parent(d * d);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const auto& p : perms) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        std::size_t u = find(i * d + j), v = find(p(i) * d + p(j));
        if (u != v) parent[std::max(u, v)] = std::min(u, v);
      }
    }
  }
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < d * d; ++i) {
    if (find(i) == i) roots.push_back(i);
  }
  std::vector<CMatrix> out;
  for (std::size_t r : roots) {
    CMatrix m(f, d, d);
    for (std::size_t i = 0; i < d * d; ++i) {
      if (find(i) == r) m.at(i / d, i % d) = Cyclo(f, 1);
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Cyclo> eigenvalue_candidates(const CycloField& f, const CMatrix& c) {
  std::vector<Cyclo> out;
  const auto d = static_cast<std::int64_t>(c.rows());
  for (std::int64_t i = -d; i <= d; ++i) out.emplace_back(f, mpq_class(i));
  for (std::uint32_t j = 0; j < f.conductor(); ++j) {
    out.push_back(Cyclo::root_of_unity(f, j));
    out.push_back(Cyclo::root_of_unity(f, j) + Cyclo::root_of_unity(f, -static_cast<std::int64_t>(j)));
  }
  for (std::size_t i = 0; i < c.rows(); ++i) out.push_back(c.at(i, i));
  return out;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

RackRep RackRep::validate(const FiniteRack& x, std::vector<CMatrix> matrices) {
  const std::size_t n = x.size();
  if (matrices.size() != n || n == 0) {
    throw Error(ErrorKind::ShapeMismatch, "need one matrix per rack element", {matrices.size(), n});
  }
  const CycloField& f = matrices[0].field();
  const std::size_t d = matrices[0].rows();
  if (d == 0) throw Error(ErrorKind::ShapeMismatch, "dimension must be positive");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& m = matrices[i];
    if (&m.field() != &f || m.rows() != d || m.cols() != d) {
      throw Error(ErrorKind::ShapeMismatch, "matrices must be square of one size over one field", {i});
    }
  }
  std::vector<Permutation> perms;
  for (const auto& m : matrices) {
    auto p = m.as_permutation();
    if (!p) break;
    perms.push_back(Permutation::from_images_unchecked(std::move(*p)));
  }
  const bool permutation = perms.size() == n;
  if (!permutation) {
    for (std::size_t i = 0; i < n; ++i) {
      if (matrices[i].determinant().is_zero()) {
        throw Error(ErrorKind::NotInvertible, "matrix of element " + std::to_string(i) + " is singular", {i});
      }
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = x.op(a, b);
      const bool ok = permutation ? compose(perms[ab], perms[b]) == compose(perms[b], perms[a])
                                  : matrices[ab] * matrices[b] == matrices[b] * matrices[a];
      if (!ok) {
        throw Error(ErrorKind::ConjugationFail,
                    "pi(" + std::to_string(a) + " > " + std::to_string(b) + ") != pi(" + std::to_string(b) + ") pi(" +
                        std::to_string(a) + ") pi(" + std::to_string(b) + ")^-1",
                    {a, b});
      }
    }
  }
  RackRep r(x, f, d, std::move(matrices));
  if (permutation) r.perms_ = std::move(perms);
  return r;
}

RackRep regular_rep(const FiniteRack& x, std::uint32_t conductor) {
  const CycloField& f = CycloField::get(conductor);
  std::vector<CMatrix> mats;
  for (Elem t = 0; t < x.size(); ++t) mats.push_back(CMatrix::permutation(f, x.right_translation(t).images()));
  return RackRep::validate(x, std::move(mats));
}

RackRep constant_rep(const FiniteRack& x, const CMatrix& tau) {
  return RackRep::validate(x, std::vector<CMatrix>(x.size(), tau));
}

RackRep direct_sum(const RackRep& a, const RackRep& b) {
  if (!(a.rack() == b.rack())) throw Error(ErrorKind::RackMismatch, "direct sum over different racks");
  if (&a.field() != &b.field()) throw Error(ErrorKind::ShapeMismatch, "direct sum over different fields");
  const std::size_t da = a.dimension(), db = b.dimension();
  std::vector<CMatrix> mats;
  for (Elem x = 0; x < a.rack().size(); ++x) {
    CMatrix m(a.field(), da + db, da + db);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) m.at(i, j) = a.matrix(x).at(i, j);
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < db; ++j) m.at(da + i, da + j) = b.matrix(x).at(i, j);
    mats.push_back(std::move(m));
  }
  return RackRep::validate(a.rack(), std::move(mats));
}

RackRep conjugate_rep(const RackRep& r, const CMatrix& m) {
  const CMatrix inv = m.inverse();
  std::vector<CMatrix> mats;
  for (const auto& p : r.matrices()) mats.push_back(m * p * inv);
  return RackRep::validate(r.rack(), std::move(mats));
}

StrongRepCheck is_strong_rep(const RackRep& r, std::size_t closure_cap) {
  const InnerGroup g(r.rack(), closure_cap);
  std::optional<ExtensionFailure> failure;
  if (const auto& perms = r.permutations()) {
    failure = find_extension_failure(
        g, *perms, Permutation::identity(r.dimension()),
        [](const Permutation& a, const Permutation& b) { return compose(a, b); },
        [](const Permutation& a, const Permutation& b) { return a == b; });
  } else {
    failure = find_extension_failure(
        g, r.matrices(), CMatrix::identity(r.field(), r.dimension()),
        [](const CMatrix& a, const CMatrix& b) { return a * b; },
        [](const CMatrix& a, const CMatrix& b) { return a == b; });
  }
  StrongRepCheck out;
  if (failure) {
    out.strong = false;
    out.word_a = std::move(failure->word_a);
    out.word_b = std::move(failure->word_b);
    out.identity_word = std::move(failure->identity_word);
  }
  return out;
}

XLinearCheck xlinear_check(const RackRep& r1, const RackRep& r2, const CMatrix& phi) {
  if (!(r1.rack() == r2.rack())) throw Error(ErrorKind::RackMismatch, "representations of different racks");
  if (phi.rows() != r2.dimension() || phi.cols() != r1.dimension()) {
    throw Error(ErrorKind::ShapeMismatch, "map has the wrong shape", {phi.rows(), phi.cols()});
  }
  XLinearCheck out;
  for (Elem x = 0; x < r1.rack().size(); ++x) {
    if (!(phi * r1.matrix(x) == r2.matrix(x) * phi)) {
      out.linear = false;
      out.witness = x;
      return out;
    }
  }
  out.kernel = phi.nullspace();
  Span image(phi.field(), phi.rows());
  for (std::size_t c = 0; c < phi.cols(); ++c) image.insert(phi.column(c));
  out.image = image.basis();
  return out;
}

bool is_invariant(const RackRep& r, const CMatrix& basis) {
  Span s(r.field(), r.dimension());
  for (std::size_t c = 0; c < basis.cols(); ++c) s.insert(basis.column(c));
  for (const auto& m : r.matrices()) {
    for (std::size_t c = 0; c < basis.cols(); ++c) {
      if (!s.contains(m.apply(basis.column(c)))) return false;
    }
  }
  return true;
}

std::vector<CMatrix> commutant_basis(const RackRep& r) {
  if (const auto& perms = r.permutations()) return orbital_matrices(r.field(), *perms, r.dimension());
  const auto mats = distinct_matrices(r.matrices());
  return solve_intertwiners(r.field(), mats, mats, r.dimension(), r.dimension());
}

std::size_t commutant_dimension(const RackRep& r) { return commutant_basis(r).size(); }

std::vector<CMatrix> intertwiner_basis(const RackRep& r1, const RackRep& r2) {
  if (!(r1.rack() == r2.rack())) throw Error(ErrorKind::RackMismatch, "representations of different racks");
  if (&r1.field() != &r2.field()) throw Error(ErrorKind::ShapeMismatch, "representations over different fields");
  return solve_intertwiners(r1.field(), r1.matrices(), r2.matrices(), r1.dimension(), r2.dimension());
}

InvariantSearch invariant_subspace_search(const RackRep& r) {
  const CycloField& f = r.field();
  const std::size_t d = r.dimension();
  InvariantSearch out;
  if (d == 1) {
    out.commutant_dimension = 1;
    return out;
  }
  const auto mats = distinct_matrices(r.matrices());
  if (auto found = search_by_spinning(f, d, mats)) {
    out.proper_invariant = std::move(found);
    return out;
  }
  // An invariant subspace of the transposes has an invariant annihilator.
  std::vector<CMatrix> dual;
  for (const auto& m : mats) dual.push_back(m.transpose());
  if (auto found = search_by_spinning(f, d, dual)) {
    out.proper_invariant = found->transpose().nullspace();
    return out;
  }
  const auto commutant = commutant_basis(r);
  out.commutant_dimension = commutant.size();
  if (commutant.size() == 1) return out;
  const CMatrix id = CMatrix::identity(f, d);
  for (const auto& c : commutant) {
    for (const auto& lambda : eigenvalue_candidates(f, c)) {
      CMatrix kernel = (c - id.scaled(lambda)).nullspace();
      if (kernel.cols() > 0 && kernel.cols() < d) {
        out.proper_invariant = std::move(kernel);
        return out;
      }
    }
  }
  throw Error(ErrorKind::ConductorTooSmall,
              "commutant has dimension " + std::to_string(commutant.size()) + " but no eigenspace over conductor " +
                  std::to_string(f.conductor()),
              {commutant.size(), f.conductor()});
}

Equivalence rep_equivalence_check(const RackRep& r1, const RackRep& r2, std::uint64_t seed) {
  if (r1.dimension() != r2.dimension()) {
    throw Error(ErrorKind::ShapeMismatch, "dimensions differ", {r1.dimension(), r2.dimension()});
  }
  const auto basis = intertwiner_basis(r1, r2);
  Equivalence out;
  if (basis.empty()) return out;
  const CycloField& f = r1.field();
  const std::size_t d = r1.dimension();
  auto combine = [&](const std::vector<std::int64_t>& coeffs) {
    CMatrix m(f, d, d);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (coeffs[i] != 0) m = m + basis[i].scaled(Cyclo(f, mpq_class(coeffs[i])));
    }
    return m;
  };
  auto accept = [&](CMatrix m) {
    if (m.determinant().is_zero()) return false;
    out.equivalent = true;
    out.intertwiner = std::move(m);
    return true;
  };
  for (const auto& b : basis) {
    if (accept(b)) return out;
  }
  // det(Σ c_i B_i) has degree d, so if it is not identically zero it is
  // nonzero somewhere on {0..d}^r.
  const std::size_t r = basis.size();
  std::uint64_t grid = 1;
  bool small = true;
  for (std::size_t i = 0; i < r && small; ++i) {
    grid *= d + 1;
    small = grid <= kMaxIntertwinerGrid;
  }
  if (small) {
    std::vector<std::int64_t> c(r, 0);
    for (std::uint64_t step = 1; step < grid; ++step) {
      for (std::size_t i = r; i-- > 0;) {
        if (++c[i] <= static_cast<std::int64_t>(d)) break;
        c[i] = 0;
      }
      if (accept(combine(c))) return out;
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coeff(-1000, 1000);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::int64_t> c(r);
    for (auto& v : c) v = coeff(rng);
    if (accept(combine(c))) return out;
  }
  throw Error(ErrorKind::Inconclusive, "no invertible intertwiner found among random combinations", {r});
}

RackRep restrict_rep(const RackRep& r, const CMatrix& basis) {
  const CycloField& f = r.field();
  const std::size_t d = r.dimension(), m = basis.cols();
  if (basis.rows() != d || m == 0) throw Error(ErrorKind::ShapeMismatch, "basis has the wrong shape");
  // Rows of the basis that form an invertible m×m block.
  Span picked(f, m);
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < d && rows.size() < m; ++i) {
    std::vector<Cyclo> row;
    for (std::size_t j = 0; j < m; ++j) row.push_back(basis.at(i, j));
    if (picked.insert(std::move(row))) rows.push_back(i);
  }
  if (rows.size() < m) throw Error(ErrorKind::InvalidArgument, "basis vectors are dependent");
  CMatrix block(f, m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) block.at(i, j) = basis.at(rows[i], j);
  const CMatrix block_inv = block.inverse();
  std::vector<CMatrix> mats;
  for (Elem x = 0; x < r.rack().size(); ++x) {
    const CMatrix image = r.matrix(x) * basis;
    CMatrix picked_rows(f, m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) picked_rows.at(i, j) = image.at(rows[i], j);
    CMatrix coords = block_inv * picked_rows;
    if (!(basis * coords == image)) {
      throw Error(ErrorKind::InvalidArgument, "subspace is not invariant under element " + std::to_string(x), {x});
    }
    mats.push_back(std::move(coords));
  }
  return RackRep::validate(r.rack(), std::move(mats));
}

RackRep quotient_rep(const RackRep& r, const CMatrix& basis) {
  const CycloField& f = r.field();
  const std::size_t d = r.dimension(), m = basis.cols();
  if (!is_invariant(r, basis)) throw Error(ErrorKind::InvalidArgument, "subspace is not invariant");
  Span s(f, d);
  std::vector<std::vector<Cyclo>> cols;
  for (std::size_t c = 0; c < m; ++c) {
    if (!s.insert(basis.column(c))) throw Error(ErrorKind::InvalidArgument, "basis vectors are dependent");
    cols.push_back(basis.column(c));
  }
  for (std::size_t i = 0; i < d && cols.size() < d; ++i) {
    auto e = unit_vector(f, d, i);
    if (s.insert(e)) cols.push_back(std::move(e));
  }
  if (m == d) throw Error(ErrorKind::InvalidArgument, "quotient by the whole space");
  const CMatrix t = CMatrix::from_columns(f, d, cols);
  const CMatrix t_inv = t.inverse();
  std::vector<CMatrix> mats;
  for (Elem x = 0; x < r.rack().size(); ++x) {
    const CMatrix full = t_inv * r.matrix(x) * t;
    CMatrix q(f, d - m, d - m);
    for (std::size_t i = m; i < d; ++i)
      for (std::size_t j = m; j < d; ++j) q.at(i - m, j - m) = full.at(i, j);
    mats.push_back(std::move(q));
  }
  return RackRep::validate(r.rack(), std::move(mats));
}

RackRep OneDimRep::to_rep() const {
  const CycloField& f = CycloField::get(conductor);
  std::vector<CMatrix> mats;
  for (auto e : exponents) {
    CMatrix m(f, 1, 1);
    m.at(0, 0) = Cyclo::root_of_unity(f, e);
    mats.push_back(std::move(m));
  }
  return RackRep::validate(rack, std::move(mats));
}

std::vector<OneDimRep> enumerate_strong_onedim(const FiniteRack& x, std::uint32_t conductor) {
  if (conductor == 0) throw Error(ErrorKind::InvalidArgument, "conductor must be positive");
  const std::size_t orbits = x.orbits().size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < orbits; ++i) {
    total *= conductor;
    if (total > kMaxOneDimAssignments) {
      throw Error(ErrorKind::SizeCapExceeded, "too many exponent assignments", {orbits, conductor});
    }
  }
  const InnerGroup g(x);
  std::vector<OneDimRep> out;
  std::vector<std::uint32_t> per_orbit(orbits, 0);
  std::vector<std::uint32_t> images(x.size());
  for (std::uint64_t step = 0; step < total; ++step) {
    if (step > 0) {
      for (std::size_t i = orbits; i-- > 0;) {
        if (++per_orbit[i] < conductor) break;
        per_orbit[i] = 0;
      }
    }
    for (Elem e = 0; e < x.size(); ++e) images[e] = per_orbit[x.orbit_index(e)];
    const auto failure = find_extension_failure(
        g, images, std::uint32_t{0}, [&](std::uint32_t a, std::uint32_t b) { return (a + b) % conductor; },
        [](std::uint32_t a, std::uint32_t b) { return a == b; });
    if (!failure) out.push_back(OneDimRep{x, conductor, images});
  }
  return out;
}

OneDimRep tensor_onedim(const OneDimRep& a, const OneDimRep& b) {
  if (!(a.rack == b.rack)) throw Error(ErrorKind::RackMismatch, "characters of different racks");
  if (a.conductor != b.conductor) throw Error(ErrorKind::ShapeMismatch, "conductors differ", {a.conductor, b.conductor});
  OneDimRep out{a.rack, a.conductor, a.exponents};
  for (std::size_t i = 0; i < out.exponents.size(); ++i) {
    out.exponents[i] = (a.exponents[i] + b.exponents[i]) % a.conductor;
  }
  return out;
}

OneDimRep inverse_onedim(const OneDimRep& a) {
  OneDimRep out = a;
  for (auto& e : out.exponents) e = (a.conductor - e) % a.conductor;
  return out;
}

OneDimRep trivial_onedim(const FiniteRack& x, std::uint32_t conductor) {
  return OneDimRep{x, conductor, std::vector<std::uint32_t>(x.size(), 0)};
}

std::vector<Constituent> decompose(const RackRep& r) {
  const auto search = invariant_subspace_search(r);
  if (search.irreducible()) {
    return {Constituent{r, is_strong_rep(r).strong, search.commutant_dimension}};
  }
  auto out = decompose(restrict_rep(r, *search.proper_invariant));
  auto rest = decompose(quotient_rep(r, *search.proper_invariant));
  out.insert(out.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
  return out;
}

std::string IrrepsReport::verdict_line() const {
  std::ostringstream out;
  out << name << ": constituents ";
  for (std::size_t i = 0; i < constituents.size(); ++i) {
    if (i > 0) out << '+';
    out << constituents[i].rep.dimension();
  }
  out << " over Q(z_" << conductor << "); ";
  const Constituent* hit = nullptr;
  for (const auto& c : constituents) {
    if (c.strong && c.rep.dimension() >= 2 && c.commutant_dimension == 1) {
      hit = &c;
      break;
    }
  }
  if (hit) {
    out << "strong irreducible constituent of dimension " << hit->rep.dimension()
        << " with commutant dimension 1: counterexample candidate";
  } else {
    out << "no strong irreducible constituent of dimension >= 2";
  }
  return out.str();
}

IrrepsReport irreps_check(const FiniteRack& x, const std::string& name, std::uint32_t conductor) {
  if (!x.is_involutive()) throw Error(ErrorKind::HypothesesFail, "rack is not involutive", {0});
  if (!x.is_connected()) throw Error(ErrorKind::HypothesesFail, "rack is not connected", {1});
  if (conductor == 0) {
    const InnerGroup g(x);
    std::uint64_t e = 1;
    for (std::size_t i = 0; i < g.order(); ++i) e = lcm_u64(e, g.element(i).order());
    if (e > kMaxConductor) throw Error(ErrorKind::SizeCapExceeded, "inner group exponent too large", {e});
    conductor = static_cast<std::uint32_t>(e);
  }
  IrrepsReport report;
  report.name = name;
  report.conductor = conductor;
  report.constituents = decompose(regular_rep(x, conductor));
  for (const auto& c : report.constituents) {
    if (c.strong && c.rep.dimension() >= 2 && c.commutant_dimension == 1) report.counterexample_candidate = true;
  }
  return report;
}

}  // namespace rackkit
