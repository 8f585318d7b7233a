#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "evoalg/scalar.hpp"

namespace evoalg {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a single field.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  /// Zero matrix.
  FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols);
  /// Throws InputError on ragged rows or entries from different fields.
  FieldMatrix(FieldSpec field, const std::vector<Vector>& rows);

  static FieldMatrix identity(FieldSpec field, std::size_t n);
  static FieldMatrix from_ints(FieldSpec field, std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  bool is_zero() const;
  bool is_diagonal() const;

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

  /// M * v.
  Vector apply(const Vector& v) const;

  /// "[[1, 0], [0, 2]]"
  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RankNullspace {
  std::size_t rank = 0;
  /// Linearly independent vectors v with M v = 0; rank + basis.size() = cols.
  std::vector<Vector> basis;
};

/// Gaussian elimination. Nullspace vectors come from the reduced row
/// echelon form with one free variable set to 1 and the others to 0.
RankNullspace mat_rank_nullspace(const FieldMatrix& m);

struct EchelonForm {
  FieldMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

EchelonForm reduced_row_echelon(const FieldMatrix& m);

/// Throws InputError for non-square input.
Scalar determinant(const FieldMatrix& m);

/// Basis of span(vectors) in reduced row echelon form (unique per subspace).
std::vector<Vector> canonical_span_basis(const FieldSpec& field, std::size_t dim,
                                         const std::vector<Vector>& vectors);

// ---------------------------------------------------------------------------

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

struct SmithForm {
  /// Diagonal, with U * A * V = D for unimodular U, V.
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;
  /// Nonzero diagonal entries d_1 | d_2 | ... | d_t, all >= 1.
  std::vector<mpz_class> divisors;
  /// cols - rank(A): rank of the free part of Z^cols / rowspace(A).
  std::size_t free_rank_of_cokernel = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Determinant of a square integer matrix (fraction-free elimination).
mpz_class int_determinant(const IntMatrix& a);

}  // namespace evoalg
