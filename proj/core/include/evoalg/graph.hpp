#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace evoalg {

class EvolutionAlgebra;

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed graph on vertices 0..n-1 (named by labels). Loops are allowed,
/// multi-edges are not: the edge list is kept sorted and duplicate-free.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::vector<std::string> labels, std::vector<Edge> edges);
  /// Labels default to v1..vn.
  Digraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(std::size_t from, std::size_t to) const;
  /// Throws InputError for an unknown label.
  std::size_t index_of(std::string_view label) const;

  const std::vector<std::size_t>& successors(std::size_t v) const { return out_.at(v); }
  const std::vector<std::size_t>& predecessors(std::size_t v) const { return in_.at(v); }

  /// Induced subgraph on `vertices` (in the given order).
  Digraph induced(std::span<const std::size_t> vertices) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

/// (v_i, v_j) is an edge iff the coefficient of v_j in v_i^2 is nonzero.
Digraph graph_from_algebra(const EvolutionAlgebra& a);

using Component = std::vector<std::size_t>;

/// Weak components (underlying undirected graph). Components are ordered by
/// their smallest vertex and list their vertices in increasing order.
std::vector<Component> components(const Digraph& g);

struct Degree {
  std::size_t in = 0;
  std::size_t out = 0;
  friend bool operator==(const Degree&, const Degree&) = default;
};

/// A loop contributes 1 to both counts. Throws InputError for an unknown vertex.
Degree degrees(const Digraph& g, std::size_t v);
std::vector<std::size_t> sources(const Digraph& g);
std::vector<std::size_t> sinks(const Digraph& g);

/// One step of a walk: `direction` is +1 if the edge is traversed from
/// `edge.from` to `edge.to`, -1 if traversed against its orientation.
struct WalkStep {
  Edge edge;
  int direction = 1;
};

struct Walk {
  std::size_t start = 0;
  std::vector<WalkStep> steps;
};

/// Final vertex; throws InputError if consecutive steps do not chain.
std::size_t walk_end(const Walk& w);
/// Number of forward steps minus number of backward steps. Throws
/// InputError if the steps do not chain.
std::int64_t walk_balance(const Walk& w);
/// Every step uses an edge of g and the steps chain.
bool is_walk_in(const Digraph& g, const Walk& w);

/// Potentials relative to `root` along a spanning tree of the component:
/// pot[v] is the balance of the tree walk root -> v. The tree is grown
/// breadth-first, scanning edges in `edge_order` (defaults to g.edges()).
/// Entries outside the component are std::nullopt.
std::vector<std::optional<std::int64_t>> walk_potentials(const Digraph& g, const Component& component,
                                                         std::size_t root,
                                                         std::span<const Edge> edge_order = {});

/// The tree walk from `root` to `target` used by walk_potentials.
Walk tree_walk(const Digraph& g, const Component& component, std::size_t root, std::size_t target,
               std::span<const Edge> edge_order = {});

/// gcd of |b(cycle)| over all cycles in the component, via spanning-tree
/// potentials: gcd over edges (v, w) of |pot(v) + 1 - pot(w)|. An acyclic
/// component has balance 0.
std::uint64_t graph_balance(const Digraph& g, const Component& component);
std::uint64_t graph_balance(const Digraph& g, const Component& component, std::size_t root,
                            std::span<const Edge> edge_order);

/// Balances of all closed walks with 1..max_steps steps that never traverse
/// an edge and immediately traverse it back. Exhaustive; an acyclic graph
/// yields the empty set. max_steps defaults to 2|E|.
std::set<std::int64_t> enumerate_cycle_balances(const Digraph& g, std::optional<std::size_t> max_steps = {});

/// All (end vertex, balance) pairs reachable by walks from `start` with at
/// most max_steps steps, the empty walk included.
std::set<std::pair<std::size_t, std::int64_t>> reachable_walk_balances(const Digraph& g, std::size_t start,
                                                                       std::size_t max_steps);

/// `digraph {` / one `"a" -> "b";` line per edge / `}`. Isolated vertices
/// get their own node line.
std::string to_dot(const Digraph& g);

}  // namespace evoalg
