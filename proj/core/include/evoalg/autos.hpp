#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evoalg/algebra.hpp"
#include "evoalg/diag.hpp"
#include "evoalg/graph.hpp"
#include "evoalg/monomial.hpp"
#include "evoalg/rings.hpp"

namespace evoalg {

/// All sigma in S_n with (v_i, v_j) in E => (v_sigma(i), v_sigma(j)) in E,
/// sorted lexicographically by image vector. Backtracking with (indegree,
/// outdegree, loop) pruning.
std::vector<Permutation> graph_automorphisms(const Digraph& g);

/// Aut(E)(GF(p)) for a full algebra over GF(p), as monomial maps sorted by
/// (sigma, scalars). For each sigma in Aut(G) the scalars solve
/// alpha_ij c_j = c_i^2 alpha_{sigma(i) sigma(j)}: the root of each component
/// runs over GF(p)^x and the other values are propagated along edges.
/// Throws UnsupportedError for a non-full algebra or an infinite field.
std::vector<MonomialAutomorphism> algebra_automorphisms(const EvolutionAlgebra& a);

/// The permutation part of a monomial automorphism.
inline Permutation rho(const MonomialAutomorphism& phi) { return phi.sigma; }

/// Exactness of 1 -> Diag(G) -> Aut(E) -> Aut(G) on GF(p)-points.
struct ExactSequenceReport {
  std::vector<DiagPoint> diag_points;
  std::vector<MonomialAutomorphism> automorphisms;
  std::vector<Permutation> graph_automorphisms;
  /// Image of rho, sorted.
  std::vector<Permutation> image;
  std::size_t kernel_order = 0;

  bool iota_lands_in_aut = false;
  bool iota_injective = false;
  bool iota_homomorphism = false;
  bool kernel_equals_image = false;
  bool rho_homomorphism = false;
  bool image_is_subgroup = false;
  bool order_identity = false;  // |Aut(E)| = |Diag(G)| * |H|

  bool exact() const {
    return iota_lands_in_aut && iota_injective && iota_homomorphism && kernel_equals_image && rho_homomorphism &&
           image_is_subgroup && order_identity;
  }
};

/// Throws UnsupportedError for a non-full algebra or an infinite field.
ExactSequenceReport check_exact_sequence(const EvolutionAlgebra& a);

/// A subgroup of `group` mapped bijectively onto `image` by rho, if one
/// exists. Exhaustive search: the identity lifts to the identity and each
/// further choice of lift is closed under products before branching again.
std::optional<std::vector<MonomialAutomorphism>> find_section(const std::vector<MonomialAutomorphism>& group,
                                                              const std::vector<Permutation>& image);

inline bool section_exists(const std::vector<MonomialAutomorphism>& group, const std::vector<Permutation>& image) {
  return find_section(group, image).has_value();
}

/// For v1^2 = v2, v2^2 = alpha v1 (alpha != 0): whether the short exact
/// sequence splits as group schemes, i.e. alpha is a cube. std::nullopt if
/// the algebra is not of that shape.
std::optional<bool> scheme_split_test_two_cycle(const EvolutionAlgebra& a);

/// Matrix over F^k; row i holds the coordinates of phi(v_i).
using SplitMatrix = std::vector<std::vector<SplitElement>>;

/// Decomposition of an automorphism of E (x) F^k along the orthogonal
/// idempotents e_sigma = sign(sigma) r^-1 prod_i r_{i, sigma(i)}, r = det.
/// Indexing follows rho: on the block e_sigma F^k the map sends v_i into
/// the span of v_sigma(i).
struct IdempotentDecomposition {
  /// Every sigma in S_n, in lexicographic order.
  std::vector<std::pair<Permutation, SplitElement>> idempotents;
  /// The sigma with e_sigma != 0.
  std::vector<Permutation> support;

  bool idempotent = false;         // every e_sigma^2 = e_sigma
  bool orthogonal = false;         // e_sigma e_tau = 0 for sigma != tau
  bool complete = false;           // sum e_sigma = 1
  bool support_in_aut = false;     // e_sigma != 0 only for sigma in Aut(G)
  bool monomial_blocks = false;    // r_ij e_sigma = 0 unless j = sigma(i)

  const SplitElement& at(const Permutation& sigma) const;
  bool verified() const { return idempotent && orthogonal && complete && support_in_aut && monomial_blocks; }
};

/// Throws InputError if `phi` is not an automorphism of E (x) F^k
/// (checked in each component) or its determinant is not a unit.
IdempotentDecomposition idempotent_decomposition(const EvolutionAlgebra& a, const SplitMatrix& phi);

/// The split matrix whose c-th component is components[c].matrix().
SplitMatrix split_matrix(const std::vector<MonomialAutomorphism>& components);

}  // namespace evoalg
