#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "evoalg/algebra.hpp"
#include "evoalg/graph.hpp"
#include "evoalg/matrix.hpp"
#include "evoalg/rings.hpp"

namespace evoalg {

/// A subspace of End(E). Each basis matrix D acts on the natural basis by
/// delta(v_i) = sum_j D(i, j) v_j.
struct DerivationSpace {
  std::size_t dimension = 0;
  std::vector<FieldMatrix> basis;
};

/// Der(E) as the nullspace of the linearised derivation identity in the n^2
/// unknowns D(i, j). Works for any evolution algebra; the basis is returned
/// in reduced row echelon form, so it is unique for a given algebra.
DerivationSpace derivations_nullspace(const EvolutionAlgebra& a);

/// delta(xy) = delta(x) y + x delta(y) on every pair of basis vectors.
bool is_derivation(const EvolutionAlgebra& a, const FieldMatrix& d);

struct ComponentDerivationRecord {
  Component component;
  std::uint64_t balance = 0;
  /// Multiplicative order of 2 mod p divides the balance (p | 2^b - 1).
  bool contributes = false;
};

struct GraphDerivationCount {
  std::vector<ComponentDerivationRecord> components;
  std::size_t total = 0;
};

/// dim Der(E) predicted from the graph alone: 0 in characteristic 0 or 2,
/// otherwise the number of components whose balance is a multiple of the
/// order of 2 mod p.
GraphDerivationCount derivation_dimension_theorem(const Digraph& g, std::uint64_t characteristic);

/// One diagonal derivation per contributing component: 1 at the component's
/// first vertex, 2^{b(gamma)} mod p at a vertex w reached by a walk gamma
/// from it, 0 off the component. Requires p odd prime.
DerivationSpace derivation_basis_theorem(const Digraph& g, const FieldSpec& field);

/// dim ker(Diag(G)(F[eps]) -> Diag(G)(F)): the solutions of
/// delta(w) = 2 delta(v) over the edges, i.e. |V| - rank of the relation
/// matrix read in F.
std::size_t lie_diag_dual_numbers(const Digraph& g, const FieldSpec& field);

/// Basis of the same solution space (vectors indexed by vertex).
std::vector<Vector> lie_diag_basis(const Digraph& g, const FieldSpec& field);

/// v -> 1 + delta(v) eps.
std::vector<DualNumber> dual_point(const Vector& delta);

}  // namespace evoalg
