#pragma once

// Internal: solutions c : V -> GF(p)^x of c(w) = k(v, w) * c(v)^2 over all
// edges (v, w). Shared by the diagonal-group point enumeration (k = 1) and
// the monomial automorphism solver (k = alpha'/alpha for a fixed sigma).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "evoalg/graph.hpp"

namespace evoalg::detail {

using Residues = std::vector<std::uint64_t>;

/// `factor(e)` returns k for edge e as a residue in [1, p). Each component
/// is rooted at its smallest vertex; the root value ranges over GF(p)^x and
/// the rest is propagated along edges, branching only where a vertex is
/// reached against edge orientation (a square root).
std::vector<Residues> solve_square_system(const Digraph& g, std::uint64_t p,
                                          const std::function<std::uint64_t(const Edge&)>& factor);

}  // namespace evoalg::detail
