#pragma once

// Generators and brute-force oracles shared by the test binaries. The
// oracles deliberately avoid the library's algorithms: they enumerate.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "evoalg/evoalg.hpp"

namespace evoalg::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline Digraph random_digraph(Rng& rng, std::size_t n, double density) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (coin(rng, density)) edges.push_back({i, j});
    }
  }
  return Digraph(n, std::move(edges));
}

inline bool weakly_connected(const Digraph& g) { return components(g).size() == 1; }

/// Rejection sampling; density drawn per graph so sparse and dense both occur.
inline Digraph random_connected_no_source(Rng& rng, std::size_t min_n, std::size_t max_n) {
  while (true) {
    const std::size_t n = uniform(rng, min_n, max_n);
    const double density = std::uniform_real_distribution<double>(1.2 / n, 0.6)(rng);
    Digraph g = random_digraph(rng, n, density);
    if (weakly_connected(g) && sources(g).empty()) return g;
  }
}

inline Scalar random_nonzero(Rng& rng, const FieldSpec& f) {
  if (f.is_prime_field()) return Scalar::residue(uniform(rng, 1, f.modulus() - 1), f.modulus());
  const auto num = static_cast<long>(uniform(rng, 1, 7)) * (coin(rng, 0.5) ? 1 : -1);
  const auto den = static_cast<long>(uniform(rng, 1, 3));
  return Scalar::rational(mpq_class(num, den));
}

/// Nonzero coefficients exactly on the edges of g.
inline EvolutionAlgebra algebra_on_graph(Rng& rng, const Digraph& g, const FieldSpec& f) {
  FieldMatrix m(f, g.vertex_count(), g.vertex_count());
  for (const Edge& e : g.edges()) m(e.from, e.to) = random_nonzero(rng, f);
  return EvolutionAlgebra(g.labels(), std::move(m));
}

inline bool invertible(const FieldMatrix& m) { return mat_rank_nullspace(m).rank == m.rows(); }

inline EvolutionAlgebra random_full_algebra(Rng& rng, const FieldSpec& f, std::size_t n) {
  while (true) {
    const double density = std::uniform_real_distribution<double>(0.15, 0.7)(rng);
    EvolutionAlgebra a = algebra_on_graph(rng, random_digraph(rng, n, density), f);
    if (invertible(a.structure())) return a;
  }
}

inline EvolutionAlgebra from_ints(const FieldSpec& f, std::initializer_list<std::initializer_list<long>> rows) {
  return EvolutionAlgebra(FieldMatrix::from_ints(f, rows));
}

/// v1^2 = v2, v2^2 = alpha v1.
inline EvolutionAlgebra two_cycle(const FieldSpec& f, long alpha) { return from_ints(f, {{0, 1}, {alpha, 0}}); }

/// v1^2 = v1 + alpha v2, v2^2 = beta v1 + v2.
inline EvolutionAlgebra complete_two(const FieldSpec& f, long alpha, long beta) {
  return from_ints(f, {{1, alpha}, {beta, 1}});
}

// ---------------------------------------------------------------------------
// Oracles

/// gcd of |balance| over the simple cycles of the underlying undirected
/// multigraph (a loop is a cycle of balance 1, an antiparallel pair one of
/// balance 2), found by depth-first search from each cycle's least vertex.
inline std::uint64_t oracle_cycle_gcd(const Digraph& g) {
  struct Inc {
    std::size_t edge, other;
    int dir;
  };
  std::vector<std::vector<Inc>> inc(g.vertex_count());
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const Edge& e = g.edges()[k];
    if (e.from == e.to) {
      out = std::gcd(out, std::uint64_t{1});
      continue;
    }
    inc[e.from].push_back({k, e.to, +1});
    inc[e.to].push_back({k, e.from, -1});
  }
  std::vector<bool> on_path(g.vertex_count(), false);
  auto dfs = [&](auto&& self, std::size_t root, std::size_t v, std::size_t last_edge, std::int64_t bal) -> void {
    for (const Inc& s : inc[v]) {
      if (s.edge == last_edge) continue;
      if (s.other == root) {
        const std::int64_t b = bal + s.dir;
        out = std::gcd(out, static_cast<std::uint64_t>(b < 0 ? -b : b));
      } else if (s.other > root && !on_path[s.other]) {
        on_path[s.other] = true;
        self(self, root, s.other, s.edge, bal + s.dir);
        on_path[s.other] = false;
      }
    }
  };
  for (std::size_t r = 0; r < g.vertex_count(); ++r) {
    on_path[r] = true;
    dfs(dfs, r, r, static_cast<std::size_t>(-1), 0);
    on_path[r] = false;
  }
  return out;
}

/// Every tuple in (GF(p)^x)^n with x_w = x_v^2 on every edge, in
/// lexicographic order.
inline std::vector<std::vector<std::uint64_t>> oracle_diag_points(const Digraph& g, std::uint64_t p) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> x(n, 1);
  while (true) {
    const bool ok = std::all_of(g.edges().begin(), g.edges().end(),
                                [&](const Edge& e) { return x[e.to] == x[e.from] * x[e.from] % p; });
    if (ok) out.push_back(x);
    std::size_t i = n;
    while (i > 0 && x[i - 1] == p - 1) x[--i] = 1;
    if (i == 0) return out;
    ++x[i - 1];
  }
}

/// Structure constants as residues.
inline std::vector<std::vector<std::uint64_t>> residues(const EvolutionAlgebra& a) {
  std::vector<std::vector<std::uint64_t>> m(a.dimension(), std::vector<std::uint64_t>(a.dimension()));
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = 0; j < a.dimension(); ++j) m[i][j] = a.coefficient(i, j).residue_value();
  }
  return m;
}

struct RawMonomial {
  std::vector<std::size_t> sigma;
  std::vector<std::uint64_t> c;
  friend auto operator<=>(const RawMonomial&, const RawMonomial&) = default;
};

/// All maps v_i -> c_i v_sigma(i) with c_i != 0 that respect the product,
/// over every permutation and every scalar tuple. The product rule for a
/// monomial map reduces to phi(v_i)^2 = phi(v_i^2) (distinct images still
/// multiply to zero): c_i^2 alpha_{sigma(i), sigma(j)} = alpha_ij c_j.
/// Tuples are enumerated depth first and a branch is cut as soon as a
/// constraint between assigned indices fails, which skips only tuples
/// that would fail anyway.
inline std::set<RawMonomial> oracle_automorphisms(const EvolutionAlgebra& a) {
  const std::uint64_t p = a.field().modulus();
  const std::size_t n = a.dimension();
  const auto alpha = residues(a);
  std::set<RawMonomial> out;
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::uint64_t> c(n, 0);
  auto holds = [&](std::size_t i, std::size_t j) {
    return c[i] * c[i] % p * alpha[sigma[i]][sigma[j]] % p == alpha[i][j] * c[j] % p;
  };
  auto assign = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      out.insert({sigma, c});
      return;
    }
    for (std::uint64_t x = 1; x < p; ++x) {
      c[k] = x;
      bool ok = true;
      for (std::size_t i = 0; i <= k && ok; ++i) ok = holds(i, k) && holds(k, i);
      if (ok) self(self, k + 1);
    }
  };
  do {
    assign(assign, 0);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

inline RawMonomial raw(const MonomialAutomorphism& phi) {
  RawMonomial r;
  r.sigma = phi.sigma.images();
  for (const Scalar& s : phi.scalars) r.c.push_back(s.residue_value());
  return r;
}

/// log_p of the number of n x n matrices D over GF(p) with
/// D(v_i v_j) = D(v_i) v_j + v_i D(v_j) on basis pairs.
inline std::size_t oracle_derivation_dimension(const EvolutionAlgebra& a) {
  const std::uint64_t p = a.field().modulus();
  const std::size_t n = a.dimension();
  const auto alpha = residues(a);
  std::vector<std::uint64_t> d(n * n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = i; j < n && ok; ++j) {
        for (std::size_t k = 0; k < n && ok; ++k) {
          // coefficient of v_k in D(v_i v_j) and in D(v_i) v_j + v_i D(v_j)
          std::uint64_t lhs = 0;
          if (i == j) {
            for (std::size_t m = 0; m < n; ++m) lhs += alpha[i][m] * d[m * n + k];
          }
          std::uint64_t rhs = d[i * n + j] * alpha[j][k] + d[j * n + i] * alpha[i][k];
          ok = lhs % p == rhs % p;
        }
      }
    }
    if (ok) ++count;
    std::size_t i = n * n;
    while (i > 0 && d[i - 1] == p - 1) d[--i] = 0;
    if (i == 0) break;
    ++d[i - 1];
  }
  std::size_t dim = 0;
  while (count > 1) {
    count /= p;
    ++dim;
  }
  return dim;
}

/// Determinant by cofactor expansion.
inline mpz_class laplace_det(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class out = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpz_class> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const mpz_class term = m[0][c] * laplace_det(minor);
    out += c % 2 == 0 ? term : mpz_class(-term);
  }
  return out;
}

/// Invariant factors d_k / d_{k-1} from the gcds d_k of all k x k minors.
inline std::vector<mpz_class> oracle_invariant_factors(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<mpz_class> out;
  mpz_class previous = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    mpz_class g = 0;
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        std::vector<std::vector<mpz_class>> minor;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!rsel[r]) continue;
          std::vector<mpz_class> row;
          for (std::size_t c = 0; c < cols; ++c) {
            if (csel[c]) row.push_back(a(r, c));
          }
          minor.push_back(std::move(row));
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpz_class(laplace_det(minor)).get_mpz_t());
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

/// Size of {x in GF(p)^cols : M x = 0} by enumeration.
inline std::uint64_t oracle_kernel_size(const FieldMatrix& m) {
  const std::uint64_t p = m.field().modulus();
  std::vector<std::uint64_t> x(m.cols(), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t r = 0; r < m.rows() && ok; ++r) {
      std::uint64_t s = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) s = (s + m(r, c).residue_value() * x[c]) % p;
      ok = s == 0;
    }
    if (ok) ++count;
    std::size_t i = m.cols();
    while (i > 0 && x[i - 1] == p - 1) x[--i] = 0;
    if (i == 0) return count;
    ++x[i - 1];
  }
}

}  // namespace evoalg::testing
