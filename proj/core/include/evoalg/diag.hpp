#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evoalg/algebra.hpp"
#include "evoalg/graph.hpp"
#include "evoalg/matrix.hpp"
#include "evoalg/monomial.hpp"
#include "evoalg/rings.hpp"

namespace evoalg {

/// Diag(G) ~= G_m^free_rank x mu_{d_1} x ... x mu_{d_t}, d_1 | ... | d_t,
/// every d_i >= 2. Presents the character group Z^V / <2 e_v - e_w : (v,w) in E>.
struct DiagStructure {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// "G_m x mu_2", "mu_6", "1".
  std::string to_string() const;
  friend bool operator==(const DiagStructure&, const DiagStructure&) = default;
};

/// A point phi : V -> GF(p)^x with phi(w) = phi(v)^2 on every edge.
struct DiagPoint {
  std::vector<Scalar> values;
  friend auto operator<=>(const DiagPoint&, const DiagPoint&) = default;
};

/// One row per edge (in g.edges() order), one column per vertex: row (v, w)
/// is 2 e_v - e_w, so a loop row is e_v.
IntMatrix relation_matrix(const Digraph& g);

/// Cokernel of the relation matrix via Smith normal form.
DiagStructure diag_structure(const Digraph& g);

/// Both sides of "connected, no sources  =>  Diag ~= mu_N, N = 2^b - 1".
struct ConnectedTheoremReport {
  bool applicable = false;
  std::string reason;  // why not applicable
  std::uint64_t balance = 0;
  mpz_class order;     // N = 2^b - 1
  DiagStructure predicted;
  DiagStructure computed;
  bool agree = false;
};

ConnectedTheoremReport check_theorem_connected(const Digraph& g);

/// All GF(p)-points, sorted. Throws InputError unless `field` is a prime field.
std::vector<DiagPoint> diag_points(const Digraph& g, const FieldSpec& field);

/// (p-1)^r * prod gcd(d_i, p-1).
mpz_class diag_points_count(const DiagStructure& s, std::uint64_t p);

/// Edge relations phi(w) = phi(v)^2 with every value a unit, over any of
/// the supported coefficient rings.
bool satisfies_diag_relations(const Digraph& g, std::span<const Scalar> values);
bool satisfies_diag_relations(const Digraph& g, std::span<const DualNumber> values);
bool satisfies_diag_relations(const Digraph& g, std::span<const SplitElement> values);

/// For a point whose values all have odd multiplicative order: checks
/// phi(end) = phi(start)^(2^b) for every walk of at most max_steps steps,
/// where b is the walk balance and 2^b is taken modulo the order of
/// phi(start) (negative b through the inverse of 2). std::nullopt if some
/// value has even order.
std::optional<bool> path_power_property(const Digraph& g, const DiagPoint& phi, std::size_t max_steps);

/// The diagonal automorphism v_i -> phi(v_i) v_i. Throws InputError if phi
/// breaks an edge relation of the algebra's graph or lies in another field.
MonomialAutomorphism iota(const EvolutionAlgebra& a, const DiagPoint& phi);

}  // namespace evoalg
