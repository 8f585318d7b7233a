#include "evoalg/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

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

struct Incidence {
  Edge edge;
  int direction;  // +1: leave through edge.from, arrive at edge.to
  std::size_t other;
};

// For each vertex, the edges touching it in both orientations. A loop shows
// up twice (once per direction).
std::vector<std::vector<Incidence>> incidences(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::vector<Incidence>> out(n);
  for (const Edge& e : edges) {
    out[e.from].push_back({e, +1, e.to});
    out[e.to].push_back({e, -1, e.from});
  }
  return out;
}

struct SpanningTree {
  std::vector<std::optional<std::int64_t>> potential;
  std::vector<std::optional<WalkStep>> parent_step;
};

SpanningTree grow_tree(const Digraph& g, const Component& component, std::size_t root,
                       std::span<const Edge> edge_order) {
  if (std::find(component.begin(), component.end(), root) == component.end()) {
    throw InputError("root vertex is not in the component");
  }
  std::span<const Edge> order = edge_order.empty() ? std::span<const Edge>(g.edges()) : edge_order;
  for (const Edge& e : order) {
    if (!g.has_edge(e.from, e.to)) throw InputError("edge order mentions an edge not in the graph");
  }
  const auto inc = incidences(g.vertex_count(), order);
  SpanningTree t;
  t.potential.assign(g.vertex_count(), std::nullopt);
  t.parent_step.assign(g.vertex_count(), std::nullopt);
  t.potential[root] = 0;
  std::deque<std::size_t> queue{root};
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (const Incidence& i : inc[v]) {
      if (t.potential[i.other]) continue;
      t.potential[i.other] = *t.potential[v] + i.direction;
      t.parent_step[i.other] = WalkStep{i.edge, i.direction};
      queue.push_back(i.other);
    }
  }
  for (std::size_t v : component) {
    if (!t.potential[v]) throw InputError("component is not connected");
  }
  return t;
}

// Fixed-width bitset over balances, bit k standing for k - offset.
class BalanceSet {
 public:
  explicit BalanceSet(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  void set(std::size_t k) { words_[k / 64] |= std::uint64_t{1} << (k % 64); }
  bool test(std::size_t k) const { return (words_[k / 64] >> (k % 64)) & 1U; }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  // this |= other shifted by `by` (+1 or -1); bits pushed past either end drop.
  void merge_shifted(const BalanceSet& other, int by) {
    const std::size_t w = words_.size();
    if (by > 0) {
      std::uint64_t carry = 0;
      for (std::size_t i = 0; i < w; ++i) {
        words_[i] |= (other.words_[i] << 1U) | carry;
        carry = other.words_[i] >> 63U;
      }
    } else {
      for (std::size_t i = 0; i < w; ++i) {
        std::uint64_t hi = i + 1 < w ? other.words_[i + 1] << 63U : 0;
        words_[i] |= (other.words_[i] >> 1U) | hi;
      }
    }
    trim();
  }

  void collect(std::set<std::int64_t>& out, std::int64_t offset) const {
    for (std::size_t k = 0; k < bits_; ++k) {
      if (test(k)) out.insert(static_cast<std::int64_t>(k) - offset);
    }
  }

 private:
  void trim() {
    if (bits_ % 64 != 0) words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
  }

  std::size_t bits_;
  std::vector<std::uint64_t> words_;
};

}  // namespace

Digraph::Digraph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  const std::size_t n = labels_.size();
  for (const Edge& e : edges_) {
    if (e.from >= n || e.to >= n) throw InputError("edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  out_.assign(n, {});
  in_.assign(n, {});
  for (const Edge& e : edges_) {
    out_[e.from].push_back(e.to);
    in_[e.to].push_back(e.from);
  }
}

Digraph::Digraph(std::size_t n, std::vector<Edge> edges) : Digraph(default_labels(n), std::move(edges)) {}

bool Digraph::has_edge(std::size_t from, std::size_t to) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{from, to});
}

std::size_t Digraph::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("unknown vertex '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

Digraph Digraph::induced(std::span<const std::size_t> vertices) const {
  std::vector<std::size_t> position(vertex_count(), vertex_count());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    position.at(vertices[i]) = i;
    labels.push_back(labels_[vertices[i]]);
  }
  std::vector<Edge> edges;
  for (const Edge& e : edges_) {
    if (position[e.from] < vertex_count() && position[e.to] < vertex_count()) {
      edges.push_back({position[e.from], position[e.to]});
    }
  }
  return Digraph(std::move(labels), std::move(edges));
}

Digraph graph_from_algebra(const EvolutionAlgebra& a) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = 0; j < a.dimension(); ++j) {
      if (!a.coefficient(i, j).is_zero()) edges.push_back({i, j});
    }
  }
  return Digraph(a.labels(), std::move(edges));
}

std::vector<Component> components(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Edge& e : g.edges()) {
    std::size_t a = find(e.from);
    std::size_t b = find(e.to);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<Component> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = find(v);
    if (slot[r] == n) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

Degree degrees(const Digraph& g, std::size_t v) {
  if (v >= g.vertex_count()) throw InputError("unknown vertex index " + std::to_string(v));
  return {g.predecessors(v).size(), g.successors(v).size()};
}

std::vector<std::size_t> sources(const Digraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.predecessors(v).empty()) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> sinks(const Digraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.successors(v).empty()) out.push_back(v);
  }
  return out;
}

std::size_t walk_end(const Walk& w) {
  std::size_t at = w.start;
  for (std::size_t k = 0; k < w.steps.size(); ++k) {
    const WalkStep& s = w.steps[k];
    if (s.direction != 1 && s.direction != -1) {
      throw InputError("walk step " + std::to_string(k + 1) + " has direction other than +1/-1");
    }
    const std::size_t tail = s.direction == 1 ? s.edge.from : s.edge.to;
    const std::size_t head = s.direction == 1 ? s.edge.to : s.edge.from;
    if (tail != at) throw InputError("walk step " + std::to_string(k + 1) + " does not chain");
    at = head;
  }
  return at;
}

std::int64_t walk_balance(const Walk& w) {
  walk_end(w);
  std::int64_t b = 0;
  for (const WalkStep& s : w.steps) b += s.direction;
  return b;
}

bool is_walk_in(const Digraph& g, const Walk& w) {
  if (w.start >= g.vertex_count()) return false;
  for (const WalkStep& s : w.steps) {
    if (!g.has_edge(s.edge.from, s.edge.to)) return false;
  }
  try {
    walk_end(w);
  } catch (const InputError&) {
    return false;
  }
  return true;
}

std::vector<std::optional<std::int64_t>> walk_potentials(const Digraph& g, const Component& component,
                                                         std::size_t root, std::span<const Edge> edge_order) {
  return grow_tree(g, component, root, edge_order).potential;
}

Walk tree_walk(const Digraph& g, const Component& component, std::size_t root, std::size_t target,
               std::span<const Edge> edge_order) {
  SpanningTree t = grow_tree(g, component, root, edge_order);
  if (target >= g.vertex_count() || !t.potential[target]) {
    throw InputError("target vertex is not in the component");
  }
  Walk w{root, {}};
  for (std::size_t v = target; v != root;) {
    const WalkStep& s = *t.parent_step[v];
    w.steps.push_back(s);
    v = s.direction == 1 ? s.edge.from : s.edge.to;
  }
  std::reverse(w.steps.begin(), w.steps.end());
  return w;
}

std::uint64_t graph_balance(const Digraph& g, const Component& component) {
  if (component.empty()) return 0;
  return graph_balance(g, component, component.front(), {});
}

std::uint64_t graph_balance(const Digraph& g, const Component& component, std::size_t root,
                            std::span<const Edge> edge_order) {
  const auto pot = walk_potentials(g, component, root, edge_order);
  std::uint64_t b = 0;
  for (const Edge& e : g.edges()) {
    if (!pot[e.from]) continue;
    // Tree walk to e.from, the edge, then the tree walk back from e.to.
    const std::int64_t cycle = *pot[e.from] + 1 - *pot[e.to];
    b = std::gcd(b, static_cast<std::uint64_t>(cycle < 0 ? -cycle : cycle));
  }
  return b;
}

std::set<std::int64_t> enumerate_cycle_balances(const Digraph& g, std::optional<std::size_t> max_steps) {
  const std::size_t n = g.vertex_count();
  const std::vector<Edge>& edges = g.edges();
  const std::size_t limit = max_steps.value_or(2 * edges.size());
  const auto inc = incidences(n, edges);
  std::vector<std::size_t> edge_index(n * n, 0);
  for (std::size_t k = 0; k < edges.size(); ++k) edge_index[edges[k].from * n + edges[k].to] = k;

  // For each (vertex, last step) keep the set of balances reachable so far
  // as a bitset over [-limit, limit]. The last step is encoded as
  // 2*edge + (direction == +1); `none` marks the empty walk.
  const std::size_t none = 2 * edges.size();
  const std::size_t slots = none + 1;
  const BalanceSet empty(2 * limit + 1);
  auto at = [&](std::size_t v, std::size_t last) { return v * slots + last; };

  std::set<std::int64_t> found;
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<BalanceSet> layer(n * slots, empty);
    layer[at(start, none)].set(limit);
    for (std::size_t step = 1; step <= limit; ++step) {
      std::vector<BalanceSet> next(n * slots, empty);
      bool any = false;
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t last = 0; last < slots; ++last) {
          const BalanceSet& cur = layer[at(v, last)];
          if (cur.none()) continue;
          for (const Incidence& i : inc[v]) {
            const std::size_t code = 2 * edge_index[i.edge.from * n + i.edge.to] + (i.direction == 1 ? 1 : 0);
            if (last != none && (last ^ 1U) == code) continue;  // immediate reversal
            next[at(i.other, code)].merge_shifted(cur, i.direction);
            any = true;
          }
        }
      }
      if (!any) break;
      for (std::size_t last = 0; last < slots; ++last) {
        next[at(start, last)].collect(found, static_cast<std::int64_t>(limit));
      }
      layer = std::move(next);
    }
  }
  return found;
}

std::set<std::pair<std::size_t, std::int64_t>> reachable_walk_balances(const Digraph& g, std::size_t start,
                                                                       std::size_t max_steps) {
  if (start >= g.vertex_count()) throw InputError("unknown start vertex");
  const auto inc = incidences(g.vertex_count(), g.edges());
  std::set<std::pair<std::size_t, std::int64_t>> all{{start, 0}};
  std::set<std::pair<std::size_t, std::int64_t>> layer = all;
  for (std::size_t step = 0; step < max_steps && !layer.empty(); ++step) {
    std::set<std::pair<std::size_t, std::int64_t>> next;
    for (const auto& [v, b] : layer) {
      for (const Incidence& i : inc[v]) next.emplace(i.other, b + i.direction);
    }
    all.insert(next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

std::string to_dot(const Digraph& g) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::ostringstream os;
  os << "digraph {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.successors(v).empty() && g.predecessors(v).empty()) os << "  " << quote(g.labels()[v]) << ";\n";
  }
  for (const Edge& e : g.edges()) {
    os << "  " << quote(g.labels()[e.from]) << " -> " << quote(g.labels()[e.to]) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace evoalg
