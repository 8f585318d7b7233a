#include "evoalg/deriv.hpp"

#include "evoalg/diag.hpp"
#include "evoalg/error.hpp"

namespace evoalg {

DerivationSpace derivations_nullspace(const EvolutionAlgebra& a) {
  const std::size_t n = a.dimension();
  const FieldSpec& f = a.field();
  auto unknown = [n](std::size_t i, std::size_t j) { return i * n + j; };
  std::vector<Vector> rows;

  // i != j:  delta(v_i) v_j + v_i delta(v_j) = d_ij v_j^2 + d_ji v_i^2 = 0
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector row(n * n, f.zero());
        row[unknown(i, j)] += a.coefficient(j, k);
        row[unknown(j, i)] += a.coefficient(i, k);
        rows.push_back(std::move(row));
      }
    }
  }
  // i == j:  delta(v_i^2) = sum_j alpha_ij delta(v_j) must equal 2 d_ii v_i^2
  const Scalar two = f.from_int(2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      Vector row(n * n, f.zero());
      for (std::size_t j = 0; j < n; ++j) row[unknown(j, k)] += a.coefficient(i, j);
      row[unknown(i, i)] -= two * a.coefficient(i, k);
      rows.push_back(std::move(row));
    }
  }

  DerivationSpace out;
  if (n == 0) return out;
  const RankNullspace rn = mat_rank_nullspace(FieldMatrix(f, rows));
  for (const Vector& v : canonical_span_basis(f, n * n, rn.basis)) {
    FieldMatrix d(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d(i, j) = v[unknown(i, j)];
    }
    out.basis.push_back(std::move(d));
  }
  out.dimension = out.basis.size();
  return out;
}

bool is_derivation(const EvolutionAlgebra& a, const FieldMatrix& d) {
  const std::size_t n = a.dimension();
  if (d.rows() != n || d.cols() != n || d.field() != a.field()) return false;
  auto apply = [&](const AlgebraElement& x) {
    AlgebraElement out = a.zero();
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out[j] += x[i] * d(i, j);
    }
    return out;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const AlgebraElement vi = a.basis_vector(i);
      const AlgebraElement vj = a.basis_vector(j);
      const AlgebraElement lhs = apply(multiply(a, vi, vj));
      AlgebraElement rhs = multiply(a, apply(vi), vj);
      const AlgebraElement second = multiply(a, vi, apply(vj));
      for (std::size_t k = 0; k < n; ++k) rhs[k] += second[k];
      if (lhs != rhs) return false;
    }
  }
  return true;
}

GraphDerivationCount derivation_dimension_theorem(const Digraph& g, std::uint64_t characteristic) {
  GraphDerivationCount out;
  std::optional<std::uint64_t> order_of_two;
  if (characteristic != 0 && characteristic != 2) {
    order_of_two = mult_order(FieldSpec::prime(characteristic).from_int(2));
  }
  for (const Component& c : components(g)) {
    ComponentDerivationRecord rec{c, graph_balance(g, c), false};
    if (order_of_two) rec.contributes = rec.balance % *order_of_two == 0;
    if (rec.contributes) ++out.total;
    out.components.push_back(std::move(rec));
  }
  return out;
}

DerivationSpace derivation_basis_theorem(const Digraph& g, const FieldSpec& field) {
  DerivationSpace out;
  const std::uint64_t p = field.characteristic();
  const GraphDerivationCount count = derivation_dimension_theorem(g, p);
  const std::size_t n = g.vertex_count();
  const Scalar two = field.from_int(2);
  for (const ComponentDerivationRecord& rec : count.components) {
    if (!rec.contributes) continue;
    const auto pot = walk_potentials(g, rec.component, rec.component.front());
    FieldMatrix d(field, n, n);
    for (std::size_t w : rec.component) d(w, w) = two.pow(*pot[w]);
    out.basis.push_back(std::move(d));
  }
  out.dimension = out.basis.size();
  return out;
}

namespace {

FieldMatrix relation_matrix_in(const Digraph& g, const FieldSpec& field) {
  const IntMatrix rel = relation_matrix(g);
  FieldMatrix m(field, rel.rows(), rel.cols());
  for (std::size_t i = 0; i < rel.rows(); ++i) {
    for (std::size_t j = 0; j < rel.cols(); ++j) m(i, j) = field.from_integer(rel(i, j));
  }
  return m;
}

}  // namespace

std::size_t lie_diag_dual_numbers(const Digraph& g, const FieldSpec& field) {
  if (g.edges().empty()) return g.vertex_count();
  return g.vertex_count() - mat_rank_nullspace(relation_matrix_in(g, field)).rank;
}

std::vector<Vector> lie_diag_basis(const Digraph& g, const FieldSpec& field) {
  if (g.edges().empty()) {
    std::vector<Vector> out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      Vector e(g.vertex_count(), field.zero());
      e[v] = field.one();
      out.push_back(std::move(e));
    }
    return out;
  }
  return mat_rank_nullspace(relation_matrix_in(g, field)).basis;
}

std::vector<DualNumber> dual_point(const Vector& delta) {
  std::vector<DualNumber> out;
  out.reserve(delta.size());
  for (const Scalar& d : delta) out.emplace_back(d.field().one(), d);
  return out;
}

}  // namespace evoalg
