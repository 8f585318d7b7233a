#include "evoalg/matrix.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "evoalg/error.hpp"

namespace evoalg {

FieldMatrix::FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

FieldMatrix::FieldMatrix(FieldSpec field, const std::vector<Vector>& rows)
    : field_(field), rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const Vector& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix rows");
    for (const Scalar& x : r) {
      if (x.field() != field_) {
        throw InputError("matrix entry " + x.to_string() + " of " + x.field().name() +
                         " in a matrix over " + field_.name());
      }
      data_.push_back(x);
    }
  }
}

FieldMatrix FieldMatrix::identity(FieldSpec field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

FieldMatrix FieldMatrix::from_ints(FieldSpec field,
                                   std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> out;
  for (const auto& r : rows) {
    Vector v;
    for (long x : r) v.push_back(field.from_int(x));
    out.push_back(std::move(v));
  }
  return FieldMatrix(field, out);
}

Vector FieldMatrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

bool FieldMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool FieldMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
  if (a.field_ != b.field_) throw InputError("matrix product over different fields");
  FieldMatrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum shape mismatch");
  FieldMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference shape mismatch");
  FieldMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

Vector FieldMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector shape mismatch");
  Vector out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

std::string FieldMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) s += ", ";
      s += (*this)(i, j).to_string();
    }
    s += "]";
  }
  return s + "]";
}

EchelonForm reduced_row_echelon(const FieldMatrix& m) {
  FieldMatrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = row; i < r.rows(); ++i) {
      if (!r(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (!pivot) continue;
    if (*pivot != row) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(row, j), r(*pivot, j));
    }
    const Scalar inv = r(row, col).inverse();
    for (std::size_t j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      const Scalar factor = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) r(i, j) -= factor * r(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

RankNullspace mat_rank_nullspace(const FieldMatrix& m) {
  EchelonForm e = reduced_row_echelon(m);
  RankNullspace out;
  out.rank = e.pivot_columns.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;
  const FieldSpec& f = m.field();
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t k = 0; k < e.pivot_columns.size(); ++k) {
      v[e.pivot_columns[k]] = -e.reduced(k, free);
    }
    out.basis.push_back(std::move(v));
  }
  return out;
}

Scalar determinant(const FieldMatrix& m) {
  if (!m.is_square()) throw InputError("determinant of a non-square matrix");
  FieldMatrix r = m;
  const std::size_t n = r.rows();
  Scalar det = m.field().one();
  for (std::size_t col = 0; col < n; ++col) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = col; i < n; ++i) {
      if (!r(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (!pivot) return m.field().zero();
    if (*pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(r(col, j), r(*pivot, j));
      det = -det;
    }
    det *= r(col, col);
    const Scalar inv = r(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (r(i, col).is_zero()) continue;
      const Scalar factor = r(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) r(i, j) -= factor * r(col, j);
    }
  }
  return det;
}

std::vector<Vector> canonical_span_basis(const FieldSpec& field, std::size_t dim,
                                         const std::vector<Vector>& vectors) {
  if (vectors.empty()) return {};
  for (const Vector& v : vectors) {
    if (v.size() != dim) throw InputError("span vector of wrong length");
  }
  EchelonForm e = reduced_row_echelon(FieldMatrix(field, vectors));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) out.push_back(e.reduced.row(i));
  return out;
}

// ---------------------------------------------------------------------------
// Integer matrices

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, mpz_class(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged integer matrix rows");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("integer matrix product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) s += ", ";
      s += (*this)(i, j).get_str();
    }
    s += "]";
  }
  return s + "]";
}

namespace {

int cmpabs(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Elimination state: D = U * A * V is maintained throughout.
class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& a)
      : d_(a), u_(IntMatrix::identity(a.rows())), v_(IntMatrix::identity(a.cols())) {}

  SmithForm run() {
    const std::size_t m = d_.rows();
    const std::size_t n = d_.cols();
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
      auto pivot = least_in_submatrix(t);
      if (!pivot) break;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);
      reduce_pivot(t);
      if (d_(t, t) < 0) negate_row(t);
    }
    SmithForm out;
    for (std::size_t i = 0; i < t; ++i) out.divisors.push_back(d_(i, i));
    out.free_rank_of_cokernel = n - t;
    out.diagonal = std::move(d_);
    out.left = std::move(u_);
    out.right = std::move(v_);
    return out;
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> least_in_submatrix(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < d_.rows(); ++i) {
      for (std::size_t j = t; j < d_.cols(); ++j) {
        if (d_(i, j) == 0) continue;
        if (!best || cmpabs(d_(i, j), d_(best->first, best->second)) < 0) best = {i, j};
      }
    }
    return best;
  }

  void reduce_pivot(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < d_.rows(); ++i) {
        if (d_(i, t) == 0) continue;
        add_row_multiple(i, t, -quotient(d_(i, t), d_(t, t)));
        if (d_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d_.cols(); ++j) {
        if (d_(t, j) == 0) continue;
        add_col_multiple(j, t, -quotient(d_(t, j), d_(t, t)));
        if (d_(t, j) != 0) clean = false;
      }
      if (!clean) {
        move_least_of_cross_to_pivot(t);
        continue;
      }
      // Row and column t are clear; enforce d_t | every remaining entry.
      auto offender = non_multiple(t);
      if (!offender) return;
      add_row_multiple(t, *offender, mpz_class(1));
    }
  }

  static mpz_class quotient(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }

  void move_least_of_cross_to_pivot(std::size_t t) {
    std::size_t best_row = t;
    std::size_t best_col = t;
    for (std::size_t i = t + 1; i < d_.rows(); ++i) {
      if (d_(i, t) != 0 && cmpabs(d_(i, t), d_(best_row, best_col)) < 0) {
        best_row = i;
        best_col = t;
      }
    }
    for (std::size_t j = t + 1; j < d_.cols(); ++j) {
      if (d_(t, j) != 0 && cmpabs(d_(t, j), d_(best_row, best_col)) < 0) {
        best_row = t;
        best_col = j;
      }
    }
    swap_rows(t, best_row);
    swap_cols(t, best_col);
  }

  std::optional<std::size_t> non_multiple(std::size_t t) const {
    for (std::size_t i = t + 1; i < d_.rows(); ++i) {
      for (std::size_t j = t + 1; j < d_.cols(); ++j) {
        if (!mpz_divisible_p(d_(i, j).get_mpz_t(), d_(t, t).get_mpz_t())) return i;
      }
    }
    return std::nullopt;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d_.cols(); ++j) std::swap(d_(a, j), d_(b, j));
    for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(a, j), u_(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d_.rows(); ++i) std::swap(d_(i, a), d_(i, b));
    for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, a), v_(i, b));
  }

  // row_dst += k * row_src
  void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(dst, j) += k * d_(src, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(dst, j) += k * u_(src, j);
  }

  // col_dst += k * col_src
  void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t i = 0; i < d_.rows(); ++i) d_(i, dst) += k * d_(i, src);
    for (std::size_t i = 0; i < v_.rows(); ++i) v_(i, dst) += k * v_(i, src);
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(r, j) = -d_(r, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(r, j) = -u_(r, j);
  }

  IntMatrix d_;
  IntMatrix u_;
  IntMatrix v_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) { return SmithReducer(a).run(); }

mpz_class int_determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("determinant of a non-square integer matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace evoalg
