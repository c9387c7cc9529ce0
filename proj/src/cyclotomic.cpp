#include "rackkit/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace rackkit {

namespace {

using Poly = std::vector<std::int64_t>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

/// Exact division of integer polynomials by a monic divisor.
Poly divide_monic(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {0};
  Poly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  trim(q);
  return q;
}

Poly cyclotomic_polynomial(std::uint32_t k) {
  static std::map<std::uint32_t, Poly> cache;
  if (auto it = cache.find(k); it != cache.end()) return it->second;
  Poly p(k + 1, 0);
  p[0] = -1;
  p[k] = 1;
  for (std::uint32_t d = 1; d < k; ++d) {
    if (k % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  }
  cache[k] = p;
  return p;
}

std::mutex registry_mutex;

/// Row reduction to reduced echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Cyclo>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Cyclo inv = rows[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Cyclo f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

const CycloField& CycloField::get(std::uint32_t k) {
  if (k == 0 || k > kMaxConductor) {
    throw Error(ErrorKind::InvalidArgument, "conductor must be in 1.." + std::to_string(kMaxConductor));
  }
  static std::map<std::uint32_t, std::unique_ptr<CycloField>> fields;
  std::lock_guard lock(registry_mutex);
  auto& slot = fields[k];
  if (!slot) slot.reset(new CycloField(k));
  return *slot;
}

CycloField::CycloField(std::uint32_t k) : k_(k), phi_(cyclotomic_polynomial(k)) {
  deg_ = phi_.size() - 1;
  powers_.reserve(k);
  Poly cur(deg_, 0);
  cur[0] = 1;
  if (deg_ == 1) cur[0] = 1;
  for (std::uint32_t j = 0; j < k; ++j) {
    powers_.push_back(cur);
    // multiply by ζ and reduce with ζ^deg = −Σ phi_i ζ^i
    const std::int64_t top = cur[deg_ - 1];
    for (std::size_t i = deg_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (deg_ == 1) cur[0] = top * -phi_[0];
    else
      for (std::size_t i = 0; i < deg_; ++i) cur[i] -= top * phi_[i];
  }
}

const std::vector<std::int64_t>& CycloField::power(std::int64_t j) const {
  std::int64_t r = j % static_cast<std::int64_t>(k_);
  if (r < 0) r += k_;
  return powers_[static_cast<std::size_t>(r)];
}

Cyclo::Cyclo(const CycloField& f) : f_(&f), c_(f.degree()) {}

Cyclo::Cyclo(const CycloField& f, const mpq_class& q) : f_(&f), c_(f.degree()) {
  c_[0] = q;
  c_[0].canonicalize();
}

Cyclo::Cyclo(const CycloField& f, std::vector<mpq_class> coeffs) : f_(&f), c_(f.degree()) {
  // Accept any length; higher powers are reduced.
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    coeffs[i].canonicalize();
    if (coeffs[i] == 0) continue;
    const auto& p = f.power(static_cast<std::int64_t>(i));
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (p[j] != 0) c_[j] += coeffs[i] * p[j];
    }
  }
}

Cyclo Cyclo::root_of_unity(const CycloField& f, std::int64_t j) {
  Cyclo z(f);
  const auto& p = f.power(j);
  for (std::size_t i = 0; i < z.c_.size(); ++i) z.c_[i] = p[i];
  return z;
}

bool Cyclo::is_zero() const {
  for (const auto& c : c_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclo::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

bool Cyclo::is_one() const { return is_rational() && c_[0] == 1; }

void Cyclo::check_same(const Cyclo& o) const {
  if (f_ != o.f_) throw Error(ErrorKind::ShapeMismatch, "scalars from different cyclotomic fields");
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  check_same(o);
  const std::size_t n = c_.size();
  if (o.is_rational()) {
    for (auto& c : c_) c *= o.c_[0];
    return *this;
  }
  if (is_rational()) {
    const mpq_class s = c_[0];
    c_ = o.c_;
    for (auto& c : c_) c *= s;
    return *this;
  }
  std::vector<mpq_class> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) c_[i] = prod[i];
  for (std::size_t t = n; t < prod.size(); ++t) {
    if (prod[t] == 0) continue;
    const auto& p = f_->power(static_cast<std::int64_t>(t));
    for (std::size_t j = 0; j < n; ++j) {
      if (p[j] != 0) c_[j] += prod[t] * p[j];
    }
  }
  return *this;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw Error(ErrorKind::NotInvertible, "division by zero");
  if (is_rational()) return Cyclo(*f_, mpq_class(1 / c_[0]));
  // Solve (this · x) = 1 as a linear system over ℚ in the power basis.
  const std::size_t n = c_.size();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    const Cyclo col = *this * root_of_unity(*f_, static_cast<std::int64_t>(j));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.c_[i];
  }
  m[0][n] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    const mpq_class inv = 1 / m[c][c];
    for (std::size_t j = c; j <= n; ++j) m[c][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const mpq_class f = m[i][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  Cyclo r(*f_);
  for (std::size_t i = 0; i < n; ++i) r.c_[i] = m[i][n];
  return r;
}

Cyclo Cyclo::conj() const {
  Cyclo r(*f_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& p = f_->power(-static_cast<std::int64_t>(i));
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (p[j] != 0) r.c_[j] += c_[i] * p[j];
    }
  }
  return r;
}

std::string Cyclo::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpq_class c = c_[i];
    if (c < 0) {
      out << '-';
      c = -c;
    } else if (!first) {
      out << '+';
    }
    if (i == 0) {
      out << c.get_str();
    } else {
      if (c != 1) out << c.get_str() << '*';
      out << 'z';
      if (i > 1) out << '^' << i;
    }
    first = false;
  }
  return out.str();
}

CMatrix::CMatrix(const CycloField& f, std::size_t rows, std::size_t cols)
    : f_(&f), rows_(rows), cols_(cols), data_(rows * cols, Cyclo(f)) {}

CMatrix CMatrix::identity(const CycloField& f, std::size_t n) {
  CMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Cyclo(f, 1);
  return m;
}

CMatrix CMatrix::permutation(const CycloField& f, std::span<const Elem> perm) {
  CMatrix m(f, perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) m.at(perm[j], j) = Cyclo(f, 1);
  return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols_ != b.rows_ || a.f_ != b.f_) throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
  CMatrix r(*a.f_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Cyclo& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b.at(k, j).is_zero()) r.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return r;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix sum shape mismatch");
  CMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix difference shape mismatch");
  CMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

bool operator==(const CMatrix& a, const CMatrix& b) {
  return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

CMatrix CMatrix::scaled(const Cyclo& s) const {
  CMatrix r = *this;
  for (auto& v : r.data_) v *= s;
  return r;
}

std::vector<Cyclo> CMatrix::apply(const std::vector<Cyclo>& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "vector length mismatch");
  std::vector<Cyclo> r(rows_, Cyclo(*f_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    }
  }
  return r;
}

CMatrix CMatrix::transpose() const {
  CMatrix r(*f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  }
  return r;
}

bool CMatrix::is_identity() const { return rows_ == cols_ && *this == identity(*f_, rows_); }

bool CMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

std::size_t CMatrix::rank() const {
  std::vector<std::vector<Cyclo>> rows;
  for (std::size_t i = 0; i < rows_; ++i) rows.emplace_back(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  return rref(rows, cols_).size();
}

Cyclo CMatrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
  std::vector<std::vector<Cyclo>> m;
  for (std::size_t i = 0; i < rows_; ++i) m.emplace_back(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  Cyclo det(*f_, 1);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t p = c;
    while (p < rows_ && m[p][c].is_zero()) ++p;
    if (p == rows_) return Cyclo(*f_);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const Cyclo inv = m[c][c].inverse();
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (m[i][c].is_zero()) continue;
      const Cyclo f = m[i][c] * inv;
      for (std::size_t j = c; j < cols_; ++j) {
        if (!m[c][j].is_zero()) m[i][j] -= f * m[c][j];
      }
    }
  }
  return det;
}

CMatrix CMatrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorKind::ShapeMismatch, "inverse of a non-square matrix");
  if (auto perm = as_permutation()) {
    std::vector<Elem> inv(perm->size());
    for (std::size_t j = 0; j < perm->size(); ++j) inv[(*perm)[j]] = static_cast<Elem>(j);
    return permutation(*f_, inv);
  }
  const std::size_t n = rows_;
  std::vector<std::vector<Cyclo>> m;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Cyclo> row(data_.begin() + i * n, data_.begin() + (i + 1) * n);
    for (std::size_t j = 0; j < n; ++j) row.push_back(Cyclo(*f_, i == j ? 1 : 0));
    m.push_back(std::move(row));
  }
  const auto pivots = rref(m, 2 * n);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(ErrorKind::NotInvertible, "matrix is singular");
  CMatrix r(*f_, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r.at(i, j) = m[i][n + j];
  }
  return r;
}

CMatrix CMatrix::nullspace() const {
  std::vector<std::vector<Cyclo>> rows;
  for (std::size_t i = 0; i < rows_; ++i) rows.emplace_back(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  const auto pivots = rref(rows, cols_);
  std::vector<char> is_pivot(cols_, 0);
  for (std::size_t p : pivots) is_pivot[p] = 1;
  std::vector<std::vector<Cyclo>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Cyclo> v(cols_, Cyclo(*f_));
    v[free] = Cyclo(*f_, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return from_columns(*f_, cols_, basis);
}

std::vector<Cyclo> CMatrix::column(std::size_t j) const {
  std::vector<Cyclo> v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

CMatrix CMatrix::from_columns(const CycloField& f, std::size_t rows, const std::vector<std::vector<Cyclo>>& cols) {
  CMatrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error(ErrorKind::ShapeMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

std::optional<std::vector<Elem>> CMatrix::as_permutation() const {
  if (rows_ != cols_) return std::nullopt;
  std::vector<Elem> images(cols_);
  std::vector<char> hit(rows_, 0);
  for (std::size_t j = 0; j < cols_; ++j) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Cyclo& v = at(i, j);
      if (v.is_zero()) continue;
      if (!v.is_one() || ones++ > 0 || hit[i]) return std::nullopt;
      hit[i] = 1;
      images[j] = static_cast<Elem>(i);
    }
    if (ones != 1) return std::nullopt;
  }
  return images;
}

Span::Span(const CycloField& f, std::size_t dim) : f_(&f), dim_(dim) {}

std::size_t Span::reduce(std::vector<Cyclo>& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p].is_zero()) continue;
    const Cyclo f = v[p];
    for (std::size_t j = p; j < dim_; ++j) {
      if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
    }
  }
  for (std::size_t j = 0; j < dim_; ++j) {
    if (!v[j].is_zero()) return j;
  }
  return dim_;
}

bool Span::insert(std::vector<Cyclo> v) {
  if (v.size() != dim_) throw Error(ErrorKind::ShapeMismatch, "vector length mismatch");
  const std::size_t p = reduce(v);
  if (p == dim_) return false;
  const Cyclo inv = v[p].inverse();
  for (std::size_t j = p; j < dim_; ++j) v[j] *= inv;
  // Keep the basis fully reduced: clear column p in the other rows.
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const Cyclo f = row[p];
    for (std::size_t j = p; j < dim_; ++j) {
      if (!v[j].is_zero()) row[j] -= f * v[j];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool Span::contains(std::vector<Cyclo> v) const {
  if (v.size() != dim_) throw Error(ErrorKind::ShapeMismatch, "vector length mismatch");
  return reduce(v) == dim_;
}

CMatrix Span::basis() const { return CMatrix::from_columns(*f_, dim_, rows_); }

}  // namespace rackkit
