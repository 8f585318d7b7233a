#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "evoalg/matrix.hpp"
#include "evoalg/scalar.hpp"

namespace evoalg {

/// Coordinates of an element in the natural basis.
using AlgebraElement = Vector;

/// Evolution algebra with a fixed natural basis v_1..v_n: v_i v_j = 0 for
/// i != j and v_i^2 = sum_j M(i, j) v_j.
class EvolutionAlgebra {
 public:
  /// Throws InputError if the matrix is not square or the label count is off.
  EvolutionAlgebra(std::vector<std::string> labels, FieldMatrix structure);
  /// Labels default to v1..vn.
  explicit EvolutionAlgebra(FieldMatrix structure);

  std::size_t dimension() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const FieldMatrix& structure() const { return structure_; }
  const FieldSpec& field() const { return structure_.field(); }
  const Scalar& coefficient(std::size_t i, std::size_t j) const { return structure_(i, j); }

  AlgebraElement basis_vector(std::size_t i) const;
  AlgebraElement zero() const;

  /// Same labels, entries mapped into another field (used to read a rational
  /// structure matrix over GF(p)).
  EvolutionAlgebra reinterpret(const FieldSpec& target) const;

 private:
  std::vector<std::string> labels_;
  FieldMatrix structure_;
};

/// (sum x_i v_i)(sum y_j v_j) = sum_i x_i y_i v_i^2.
AlgebraElement multiply(const EvolutionAlgebra& a, const AlgebraElement& x, const AlgebraElement& y);

/// E^2 = E, i.e. the structure matrix is regular.
bool is_full(const EvolutionAlgebra& a);

}  // namespace evoalg
