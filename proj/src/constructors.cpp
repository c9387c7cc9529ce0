#include "rackkit/constructors.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace rackkit {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

/// Inverse of a mod m, or 0 if none.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, r = mod(a, m), y = 1;
  while (r != 0) {
    const std::int64_t q = g / r;
    std::tie(g, r) = std::pair{r, g - q * r};
    std::tie(x, y) = std::pair{y, x - q * y};
  }
  if (g != 1) return 0;
  return mod(x, m);
}

void require_size(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw Error(ErrorKind::SizeCapExceeded,
                "rack size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

namespace modmat {

std::vector<std::uint32_t> identity(std::uint32_t d) {
  std::vector<std::uint32_t> a(d * d, 0);
  for (std::uint32_t i = 0; i < d; ++i) a[i * d + i] = 1;
  return a;
}

std::vector<std::uint32_t> mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                               std::uint32_t d, std::uint32_t m) {
  std::vector<std::uint32_t> c(d * d, 0);
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      std::uint64_t s = 0;
      for (std::uint32_t k = 0; k < d; ++k) s += std::uint64_t{a[i * d + k]} * b[k * d + j];
      c[i * d + j] = static_cast<std::uint32_t>(s % m);
    }
  }
  return c;
}

std::vector<std::uint32_t> power(const std::vector<std::uint32_t>& a, std::uint64_t k, std::uint32_t d,
                                 std::uint32_t m) {
  std::vector<std::uint32_t> result = identity(d);
  for (auto& v : result) v %= m;
  std::vector<std::uint32_t> base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base, d, m);
    base = mul(base, base, d, m);
    k >>= 1U;
  }
  return result;
}

std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v, const std::vector<std::uint32_t>& a,
                                 std::uint32_t d, std::uint32_t m) {
  std::vector<std::uint32_t> out(d, 0);
  for (std::uint32_t j = 0; j < d; ++j) {
    std::uint64_t s = 0;
    for (std::uint32_t i = 0; i < d; ++i) s += std::uint64_t{v[i]} * a[i * d + j];
    out[j] = static_cast<std::uint32_t>(s % m);
  }
  return out;
}

std::int64_t determinant(const std::vector<std::int64_t>& a, std::uint32_t d) {
  if (d == 0) return 1;
  if (d == 1) return a[0];
  std::int64_t det = 0;
  std::vector<std::int64_t> minor((d - 1) * (d - 1));
  for (std::uint32_t col = 0; col < d; ++col) {
    std::size_t k = 0;
    for (std::uint32_t i = 1; i < d; ++i) {
      for (std::uint32_t j = 0; j < d; ++j) {
        if (j != col) minor[k++] = a[i * d + j];
      }
    }
    const std::int64_t term = a[col] * determinant(minor, d - 1);
    det += (col % 2 == 0) ? term : -term;
  }
  return det;
}

}  // namespace modmat

AlexanderModule::AlexanderModule(std::uint32_t modulus, std::uint32_t rank, std::vector<std::int64_t> gamma)
    : m_(modulus), d_(rank) {
  if (m_ == 0 || d_ == 0) throw Error(ErrorKind::InvalidArgument, "modulus and rank must be positive");
  if (d_ > 6) throw Error(ErrorKind::InvalidArgument, "rank above 6 is not supported");
  if (gamma.size() != std::size_t{d_} * d_) throw Error(ErrorKind::ShapeMismatch, "gamma must be d x d");
  std::vector<std::int64_t> reduced(gamma.size());
  gamma_.resize(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    reduced[i] = mod(gamma[i], m_);
    gamma_[i] = static_cast<std::uint32_t>(reduced[i]);
  }
  const std::int64_t det = mod(modmat::determinant(reduced, d_), m_);
  const std::int64_t det_inv = m_ == 1 ? 0 : mod_inverse(det, m_);
  if (m_ != 1 && det_inv == 0) {
    throw Error(ErrorKind::NotInvertible, "gamma is not invertible mod " + std::to_string(m_));
  }
  // inverse = det⁻¹ · adjugate
  gamma_inv_.assign(gamma_.size(), 0);
  std::vector<std::int64_t> minor((d_ - 1) * (d_ - 1));
  for (std::uint32_t i = 0; i < d_; ++i) {
    for (std::uint32_t j = 0; j < d_; ++j) {
      std::size_t k = 0;
      for (std::uint32_t r = 0; r < d_; ++r) {
        for (std::uint32_t c = 0; c < d_; ++c) {
          if (r != i && c != j) minor[k++] = reduced[r * d_ + c];
        }
      }
      std::int64_t cof = d_ == 1 ? 1 : modmat::determinant(minor, d_ - 1);
      if ((i + j) % 2 == 1) cof = -cof;
      gamma_inv_[j * d_ + i] = static_cast<std::uint32_t>(mod(mod(cof, m_) * det_inv, m_));
    }
  }
  if (modmat::mul(gamma_, gamma_inv_, d_, m_) != modmat::power(gamma_, 0, d_, m_)) {
    throw Error(ErrorKind::NotInvertible, "gamma inverse check failed");
  }
}

std::uint64_t AlexanderModule::cardinality() const {
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < d_; ++i) n *= m_;
  return n;
}

std::vector<std::uint32_t> AlexanderModule::decode(std::size_t index) const {
  std::vector<std::uint32_t> v(d_);
  for (std::uint32_t i = d_; i-- > 0;) {
    v[i] = static_cast<std::uint32_t>(index % m_);
    index /= m_;
  }
  return v;
}

std::size_t AlexanderModule::encode(const std::vector<std::uint32_t>& v) const {
  std::size_t index = 0;
  for (std::uint32_t c : v) index = index * m_ + c;
  return index;
}

FiniteRack trivial_rack(std::size_t n) {
  std::vector<Elem> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = static_cast<Elem>(x);
  }
  return FiniteRack::validate(n, std::move(t));
}

FiniteRack dihedral_quandle(std::size_t m) {
  require_size(m, kDefaultRackCap);
  std::vector<Elem> t(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) t[x * m + y] = static_cast<Elem>((2 * y + m - x) % m);
  }
  return FiniteRack::validate(m, std::move(t));
}

FiniteRack conj_quandle(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem h = 0; h < n; ++h) t[a * n + h] = g.mul(g.mul(h, a), g.inverse(h));
  }
  return FiniteRack::validate(n, std::move(t));
}

FiniteRack conj_phi_quandle(const FiniteGroup& g, const GroupAutomorphism& phi) {
  const std::size_t n = g.order();
  if (phi.perm().size() != n) throw Error(ErrorKind::ShapeMismatch, "automorphism belongs to another group");
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem h = 0; h < n; ++h) t[a * n + h] = g.mul(g.mul(h, phi(a)), phi(g.inverse(h)));
  }
  return FiniteRack::validate(n, std::move(t));
}

FiniteRack core_quandle(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem h = 0; h < n; ++h) t[a * n + h] = g.mul(g.mul(h, g.inverse(a)), h);
  }
  return FiniteRack::validate(n, std::move(t));
}

LabeledRack alexander_quandle(const AlexanderModule& module, std::size_t cap) {
  const std::uint64_t n64 = module.cardinality();
  require_size(n64, cap);
  const auto n = static_cast<std::size_t>(n64);
  const std::uint32_t m = module.modulus(), d = module.rank();
  std::vector<std::vector<Elem>> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto v = module.decode(i);
    labels[i].assign(v.begin(), v.end());
  }
  std::vector<Elem> t(n * n);
  std::vector<std::uint32_t> diff(d);
  for (std::size_t x = 0; x < n; ++x) {
    const auto vx = module.decode(x);
    for (std::size_t y = 0; y < n; ++y) {
      const auto vy = module.decode(y);
      for (std::uint32_t i = 0; i < d; ++i) diff[i] = (vx[i] + m - vy[i]) % m;
      auto r = modmat::apply(diff, module.gamma(), d, m);
      for (std::uint32_t i = 0; i < d; ++i) r[i] = (r[i] + vy[i]) % m;
      t[x * n + y] = static_cast<Elem>(module.encode(r));
    }
  }
  return {FiniteRack::validate(n, std::move(t)), std::move(labels)};
}

FiniteRack gphi_quandle(const FiniteGroup& g, const GroupAutomorphism& phi) {
  if (!g.is_abelian()) throw Error(ErrorKind::NotAbelian, "G_phi requires an abelian group");
  const std::size_t n = g.order();
  if (phi.perm().size() != n) throw Error(ErrorKind::ShapeMismatch, "automorphism belongs to another group");
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem h = 0; h < n; ++h) t[a * n + h] = g.mul(phi(a), g.mul(h, g.inverse(phi(h))));
  }
  return FiniteRack::validate(n, std::move(t));
}

LabeledRack pivot_quandle(const FiniteGroup& g, std::size_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "pivot length must be positive");
  const std::size_t order = g.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= order;
    if (total > (std::uint64_t{1} << 24)) {
      throw Error(ErrorKind::SizeCapExceeded, "|G|^n too large to enumerate pivot tuples");
    }
  }
  std::vector<char> central(order, 0);
  for (Elem c : group_center(g)) central[c] = 1;

  std::vector<std::vector<Elem>> labels;
  std::vector<Elem> tuple(n, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (std::size_t i = n; i-- > 0;) {
      tuple[i] = static_cast<Elem>(rest % order);
      rest /= order;
    }
    Elem prod = g.identity();
    for (Elem e : tuple) prod = g.mul(prod, e);
    if (central[prod]) {
      labels.push_back(tuple);
      require_size(labels.size(), cap);
    }
  }

  const std::size_t size = labels.size();
  auto index_of = [&](const std::vector<Elem>& v) -> Elem {
    auto it = std::lower_bound(labels.begin(), labels.end(), v);
    if (it == labels.end() || *it != v) {
      throw Error(ErrorKind::InvalidArgument, "pivot universe is not closed under the operation");
    }
    return static_cast<Elem>(it - labels.begin());
  };
  std::vector<Elem> t(size * size);
  std::vector<Elem> r(n);
  for (std::size_t a = 0; a < size; ++a) {
    const auto& x = labels[a];
    for (std::size_t b = 0; b < size; ++b) {
      const auto& y = labels[b];
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t prev = (i + n - 1) % n;
        r[i] = g.mul(g.mul(g.inverse(y[prev]), x[prev]), y[i]);
      }
      t[a * size + b] = index_of(r);
    }
  }
  return {FiniteRack::validate(size, std::move(t)), std::move(labels)};
}

}  // namespace rackkit
