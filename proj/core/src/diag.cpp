#include "evoalg/diag.hpp"

#include <algorithm>

#include "evoalg/error.hpp"
#include "square_system.hpp"

namespace evoalg {

std::string DiagStructure::to_string() const {
  std::string s;
  if (free_rank > 0) {
    s = "G_m";
    if (free_rank > 1) s += "^" + std::to_string(free_rank);
  }
  for (const mpz_class& d : torsion) {
    if (!s.empty()) s += " x ";
    s += "mu_" + d.get_str();
  }
  return s.empty() ? "1" : s;
}

IntMatrix relation_matrix(const Digraph& g) {
  IntMatrix m(g.edges().size(), g.vertex_count());
  for (std::size_t r = 0; r < g.edges().size(); ++r) {
    const Edge& e = g.edges()[r];
    m(r, e.from) += 2;
    m(r, e.to) -= 1;
  }
  return m;
}

DiagStructure diag_structure(const Digraph& g) {
  const SmithForm snf = smith_normal_form(relation_matrix(g));
  DiagStructure s;
  s.free_rank = snf.free_rank_of_cokernel;
  for (const mpz_class& d : snf.divisors) {
    if (d > 1) s.torsion.push_back(d);
  }
  return s;
}

ConnectedTheoremReport check_theorem_connected(const Digraph& g) {
  ConnectedTheoremReport r;
  r.computed = diag_structure(g);
  if (g.vertex_count() == 0) {
    r.reason = "empty graph";
    return r;
  }
  if (components(g).size() != 1) {
    r.reason = "graph is not connected";
    return r;
  }
  if (!sources(g).empty()) {
    r.reason = "graph has a source";
    return r;
  }
  r.applicable = true;
  r.balance = graph_balance(g, components(g).front());
  if (r.balance == 0) {
    // Unreachable for source-free graphs (they contain a directed cycle):
    // mu_0 would be G_m.
    r.predicted.free_rank = 1;
  } else {
    mpz_class n;
    mpz_ui_pow_ui(n.get_mpz_t(), 2, r.balance);
    n -= 1;
    r.order = n;
    if (n > 1) r.predicted.torsion.push_back(n);
  }
  r.agree = r.predicted == r.computed;
  return r;
}

std::vector<DiagPoint> diag_points(const Digraph& g, const FieldSpec& field) {
  if (!field.is_prime_field()) throw InputError("diagonal-group points are enumerated over GF(p) only");
  const std::uint64_t p = field.modulus();
  const auto raw = detail::solve_square_system(g, p, [](const Edge&) { return std::uint64_t{1}; });
  std::vector<DiagPoint> out;
  out.reserve(raw.size());
  for (const auto& r : raw) {
    DiagPoint pt;
    pt.values.reserve(r.size());
    for (std::uint64_t x : r) pt.values.push_back(Scalar::residue(x, p));
    out.push_back(std::move(pt));
  }
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class diag_points_count(const DiagStructure& s, std::uint64_t p) {
  if (!is_prime(p)) throw InputError("p must be prime");
  mpz_class units(static_cast<unsigned long>(p - 1));
  mpz_class count;
  mpz_pow_ui(count.get_mpz_t(), units.get_mpz_t(), s.free_rank);
  for (const mpz_class& d : s.torsion) count *= gcd(d, units);
  return count;
}

namespace {

bool unit(const Scalar& x) { return !x.is_zero(); }
bool unit(const DualNumber& x) { return x.is_unit(); }
bool unit(const SplitElement& x) { return x.is_unit(); }

template <class R>
bool relations_hold(const Digraph& g, std::span<const R> values) {
  if (values.size() != g.vertex_count()) return false;
  if (!std::all_of(values.begin(), values.end(), [](const R& x) { return unit(x); })) return false;
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return values[e.to] == values[e.from] * values[e.from];
  });
}

}  // namespace

bool satisfies_diag_relations(const Digraph& g, std::span<const Scalar> values) {
  return relations_hold(g, values);
}
bool satisfies_diag_relations(const Digraph& g, std::span<const DualNumber> values) {
  return relations_hold(g, values);
}
bool satisfies_diag_relations(const Digraph& g, std::span<const SplitElement> values) {
  return relations_hold(g, values);
}

std::optional<bool> path_power_property(const Digraph& g, const DiagPoint& phi, std::size_t max_steps) {
  if (phi.values.size() != g.vertex_count()) throw InputError("diagonal point has the wrong number of values");
  std::vector<std::uint64_t> orders;
  for (const Scalar& x : phi.values) {
    const auto ord = mult_order(x);
    if (!ord || *ord % 2 == 0) return std::nullopt;
    orders.push_back(*ord);
  }
  for (std::size_t start = 0; start < g.vertex_count(); ++start) {
    const std::uint64_t m = orders[start];
    // 2 is invertible modulo the odd order m.
    const std::uint64_t half = (m + 1) / 2 % m;
    for (const auto& [end, b] : reachable_walk_balances(g, start, max_steps)) {
      const std::uint64_t base = b >= 0 ? 2 % m : half;
      const std::uint64_t e = mod_pow(base, static_cast<std::uint64_t>(b >= 0 ? b : -b), m);
      if (!(phi.values[end] == phi.values[start].pow(static_cast<std::int64_t>(e)))) return false;
    }
  }
  return true;
}

MonomialAutomorphism iota(const EvolutionAlgebra& a, const DiagPoint& phi) {
  if (phi.values.size() != a.dimension()) throw InputError("diagonal point has the wrong number of values");
  for (const Scalar& x : phi.values) {
    if (x.field() != a.field()) throw InputError("diagonal point lies over " + x.field().name());
  }
  const Digraph g = graph_from_algebra(a);
  if (!satisfies_diag_relations(g, std::span<const Scalar>(phi.values))) {
    throw InputError("map violates phi(w) = phi(v)^2 on some edge");
  }
  MonomialAutomorphism m = MonomialAutomorphism::diagonal(phi.values);
  if (!is_automorphism(a, m)) throw InputError("induced diagonal map is not an automorphism");
  return m;
}

}  // namespace evoalg
