#include "square_system.hpp"

#include <deque>
#include <optional>

#include "evoalg/scalar.hpp"

namespace evoalg::detail {

namespace {

struct Constraint {
  std::size_t other;     // the neighbour already placed earlier in the order
  bool other_is_source;  // constraint reads c(u) = k c(other)^2, else c(other) = k c(u)^2
  std::uint64_t factor;
};

class ComponentSolver {
 public:
  ComponentSolver(const Digraph& g, const Component& comp, std::uint64_t p,
                  const std::function<std::uint64_t(const Edge&)>& factor)
      : p_(p) {
    // Breadth-first order from the smallest vertex, so every vertex after the
    // first has at least one constraint linking it to an earlier one.
    std::vector<bool> placed(g.vertex_count(), false);
    std::deque<std::size_t> queue{comp.front()};
    placed[comp.front()] = true;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      order_.push_back(v);
      for (std::size_t w : g.successors(v)) {
        if (!placed[w]) placed[w] = true, queue.push_back(w);
      }
      for (std::size_t w : g.predecessors(v)) {
        if (!placed[w]) placed[w] = true, queue.push_back(w);
      }
    }
    position_.assign(g.vertex_count(), g.vertex_count());
    for (std::size_t k = 0; k < order_.size(); ++k) position_[order_[k]] = k;
    const auto& position = position_;

    constraints_.resize(order_.size());
    loops_.resize(order_.size());
    for (const Edge& e : g.edges()) {
      if (position[e.from] == g.vertex_count()) continue;
      const std::uint64_t k = factor(e);
      if (e.from == e.to) {
        loops_[position[e.from]].push_back(k);
      } else if (position[e.from] < position[e.to]) {
        constraints_[position[e.to]].push_back({e.from, true, k});
      } else {
        constraints_[position[e.from]].push_back({e.to, false, k});
      }
    }
  }

  const std::vector<std::size_t>& order() const { return order_; }
  std::vector<Residues>& solutions() { return solutions_; }

  void run() {
    values_.assign(order_.size(), 0);
    by_vertex_.assign(position_.size(), 0);
    assign(0);
  }

 private:
  std::uint64_t value_of(std::size_t vertex) const { return by_vertex_[vertex]; }

  bool consistent(std::size_t pos, std::uint64_t x) const {
    for (std::uint64_t k : loops_[pos]) {
      if (x != mod_mul(k, mod_mul(x, x, p_), p_)) return false;
    }
    for (const Constraint& c : constraints_[pos]) {
      const std::uint64_t y = value_of(c.other);
      if (c.other_is_source) {
        if (x != mod_mul(c.factor, mod_mul(y, y, p_), p_)) return false;
      } else {
        if (y != mod_mul(c.factor, mod_mul(x, x, p_), p_)) return false;
      }
    }
    return true;
  }

  void assign(std::size_t pos) {
    if (pos == order_.size()) {
      solutions_.push_back(values_);
      return;
    }
    // A forward constraint pins the value; otherwise try every unit.
    std::optional<std::uint64_t> forced;
    for (const Constraint& c : constraints_[pos]) {
      if (c.other_is_source) {
        const std::uint64_t y = value_of(c.other);
        forced = mod_mul(c.factor, mod_mul(y, y, p_), p_);
        break;
      }
    }
    if (forced) {
      if (*forced != 0 && consistent(pos, *forced)) {
        values_[pos] = *forced;
        by_vertex_[order_[pos]] = *forced;
        assign(pos + 1);
      }
      return;
    }
    for (std::uint64_t x = 1; x < p_; ++x) {
      if (!consistent(pos, x)) continue;
      values_[pos] = x;
      by_vertex_[order_[pos]] = x;
      assign(pos + 1);
    }
  }

  std::uint64_t p_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;
  Residues by_vertex_;
  std::vector<std::vector<Constraint>> constraints_;
  std::vector<std::vector<std::uint64_t>> loops_;
  Residues values_;
  std::vector<Residues> solutions_;
};

}  // namespace

std::vector<Residues> solve_square_system(const Digraph& g, std::uint64_t p,
                                          const std::function<std::uint64_t(const Edge&)>& factor) {
  std::vector<Residues> partial{Residues(g.vertex_count(), 0)};
  for (const Component& comp : components(g)) {
    ComponentSolver solver(g, comp, p, factor);
    solver.run();
    const auto& local = solver.solutions();
    if (local.empty()) return {};
    std::vector<Residues> next;
    next.reserve(partial.size() * local.size());
    for (const Residues& base : partial) {
      for (const Residues& sol : local) {
        Residues r = base;
        for (std::size_t k = 0; k < sol.size(); ++k) r[solver.order()[k]] = sol[k];
        next.push_back(std::move(r));
      }
    }
    partial = std::move(next);
  }
  return partial;
}

}  // namespace evoalg::detail
