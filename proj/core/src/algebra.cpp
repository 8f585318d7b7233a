#include "evoalg/algebra.hpp"

#include "evoalg/error.hpp"

namespace evoalg {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i + 1));
  return out;
}

}  // namespace

EvolutionAlgebra::EvolutionAlgebra(std::vector<std::string> labels, FieldMatrix structure)
    : labels_(std::move(labels)), structure_(std::move(structure)) {
  if (!structure_.is_square()) throw InputError("structure matrix must be square");
  if (structure_.rows() != labels_.size()) {
    throw InputError("dimension mismatch: " + std::to_string(labels_.size()) +
                     " basis labels but a " + std::to_string(structure_.rows()) + "x" +
                     std::to_string(structure_.cols()) + " matrix");
  }
}

EvolutionAlgebra::EvolutionAlgebra(FieldMatrix structure)
    : EvolutionAlgebra(default_labels(structure.rows()), std::move(structure)) {}

AlgebraElement EvolutionAlgebra::basis_vector(std::size_t i) const {
  AlgebraElement e = zero();
  e.at(i) = field().one();
  return e;
}

AlgebraElement EvolutionAlgebra::zero() const { return AlgebraElement(dimension(), field().zero()); }

EvolutionAlgebra EvolutionAlgebra::reinterpret(const FieldSpec& target) const {
  if (target == field()) return *this;
  if (!field().is_rational()) {
    throw InputError("only rational structure matrices can be read in another field");
  }
  FieldMatrix m(target, dimension(), dimension());
  for (std::size_t i = 0; i < dimension(); ++i) {
    for (std::size_t j = 0; j < dimension(); ++j) {
      const mpq_class& q = structure_(i, j).rational_value();
      Scalar den = target.from_integer(q.get_den());
      if (den.is_zero()) {
        throw InputError("entry " + q.get_str() + " has no image in " + target.name());
      }
      m(i, j) = target.from_integer(q.get_num()) / den;
    }
  }
  return EvolutionAlgebra(labels_, std::move(m));
}

AlgebraElement multiply(const EvolutionAlgebra& a, const AlgebraElement& x, const AlgebraElement& y) {
  const std::size_t n = a.dimension();
  if (x.size() != n || y.size() != n) {
    throw InputError("element has " + std::to_string(x.size() == n ? y.size() : x.size()) +
                     " coordinates, algebra has dimension " + std::to_string(n));
  }
  AlgebraElement out = a.zero();
  for (std::size_t i = 0; i < n; ++i) {
    Scalar w = x[i] * y[i];
    if (w.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] += w * a.coefficient(i, j);
  }
  return out;
}

bool is_full(const EvolutionAlgebra& a) { return !determinant(a.structure()).is_zero(); }

}  // namespace evoalg
