#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rackkit/error.hpp"

namespace rackkit {

inline constexpr std::uint32_t kDefaultConductor = 24;
inline constexpr std::uint32_t kMaxConductor = 840;

/// ℚ(ζ_k) with basis 1, ζ, ..., ζ^{φ(k)−1}. Fields are interned per conductor
/// and live for the whole program, so references stay valid.
class CycloField {
 public:
  /// Throws Error(InvalidArgument) for k = 0 or k > kMaxConductor.
  static const CycloField& get(std::uint32_t k);

  std::uint32_t conductor() const noexcept { return k_; }
  std::size_t degree() const noexcept { return deg_; }
  /// Coefficients of the k-th cyclotomic polynomial, constant term first.
  const std::vector<std::int64_t>& polynomial() const noexcept { return phi_; }
  /// ζ^j reduced to the basis; j is taken mod k.
  const std::vector<std::int64_t>& power(std::int64_t j) const;

 private:
  explicit CycloField(std::uint32_t k);
  std::uint32_t k_;
  std::size_t deg_;
  std::vector<std::int64_t> phi_;
  std::vector<std::vector<std::int64_t>> powers_;
};

/// An element of ℚ(ζ_k) in canonical reduced form.
class Cyclo {
 public:
  explicit Cyclo(const CycloField& f);
  Cyclo(const CycloField& f, const mpq_class& q);
  Cyclo(const CycloField& f, std::vector<mpq_class> coeffs);

  static Cyclo root_of_unity(const CycloField& f, std::int64_t j);

  const CycloField& field() const noexcept { return *f_; }
  const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  bool is_one() const;

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo operator-() const;
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend bool operator==(const Cyclo& a, const Cyclo& b);

  /// Throws Error(NotInvertible) for zero.
  Cyclo inverse() const;
  /// ζ ↦ ζ⁻¹.
  Cyclo conj() const;

  /// e.g. "1/2-z^3"; "0" for zero.
  std::string to_string() const;

 private:
  void check_same(const Cyclo& o) const;
  const CycloField* f_;
  std::vector<mpq_class> c_;
};

/// Dense matrix over ℚ(ζ_k).
class CMatrix {
 public:
  CMatrix(const CycloField& f, std::size_t rows, std::size_t cols);
  static CMatrix identity(const CycloField& f, std::size_t n);
  /// Column j has a one in row perm[j].
  static CMatrix permutation(const CycloField& f, std::span<const Elem> perm);

  const CycloField& field() const noexcept { return *f_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Cyclo& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Cyclo& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
  friend bool operator==(const CMatrix& a, const CMatrix& b);
  CMatrix scaled(const Cyclo& s) const;
  std::vector<Cyclo> apply(const std::vector<Cyclo>& v) const;

  CMatrix transpose() const;
  bool is_identity() const;
  bool is_zero() const;
  std::size_t rank() const;
  Cyclo determinant() const;
  /// Throws Error(NotInvertible).
  CMatrix inverse() const;
  /// Columns form a basis of {v : A v = 0}.
  CMatrix nullspace() const;
  std::vector<Cyclo> column(std::size_t j) const;
  static CMatrix from_columns(const CycloField& f, std::size_t rows, const std::vector<std::vector<Cyclo>>& cols);
  /// Images of basis vectors if this is a permutation matrix.
  std::optional<std::vector<Elem>> as_permutation() const;

 private:
  const CycloField* f_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Cyclo> data_;
};

/// Incrementally maintained span of vectors, kept in reduced echelon form.
class Span {
 public:
  Span(const CycloField& f, std::size_t dim);
  /// Adds v; returns false if v was already in the span.
  bool insert(std::vector<Cyclo> v);
  bool contains(std::vector<Cyclo> v) const;
  std::size_t dimension() const noexcept { return rows_.size(); }
  std::size_t ambient() const noexcept { return dim_; }
  /// Echelon basis as matrix columns.
  CMatrix basis() const;

 private:
  /// Reduces v against the basis in place; returns the first nonzero index or dim_.
  std::size_t reduce(std::vector<Cyclo>& v) const;
  const CycloField* f_;
  std::size_t dim_;
  std::vector<std::vector<Cyclo>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace rackkit
