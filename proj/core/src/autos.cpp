#include "evoalg/autos.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "evoalg/error.hpp"
#include "square_system.hpp"

namespace evoalg {

namespace {

struct VertexKind {
  std::size_t in;
  std::size_t out;
  bool loop;
  friend bool operator==(const VertexKind&, const VertexKind&) = default;
};

class GraphAutomorphismSearch {
 public:
  explicit GraphAutomorphismSearch(const Digraph& g) : g_(g), n_(g.vertex_count()) {
    for (std::size_t v = 0; v < n_; ++v) {
      kinds_.push_back({g.predecessors(v).size(), g.successors(v).size(), g.has_edge(v, v)});
    }
  }

  std::vector<Permutation> run() {
    images_.assign(n_, 0);
    used_.assign(n_, false);
    extend(0);
    return std::move(found_);
  }

 private:
  bool compatible(std::size_t i, std::size_t t) const {
    if (used_[t] || !(kinds_[i] == kinds_[t])) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (g_.has_edge(i, j) != g_.has_edge(t, images_[j])) return false;
      if (g_.has_edge(j, i) != g_.has_edge(images_[j], t)) return false;
    }
    return true;
  }

  void extend(std::size_t i) {
    if (i == n_) {
      found_.emplace_back(images_);
      return;
    }
    for (std::size_t t = 0; t < n_; ++t) {
      if (!compatible(i, t)) continue;
      images_[i] = t;
      used_[t] = true;
      extend(i + 1);
      used_[t] = false;
    }
  }

  const Digraph& g_;
  std::size_t n_;
  std::vector<VertexKind> kinds_;
  std::vector<std::size_t> images_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

void require_full_finite(const EvolutionAlgebra& a) {
  if (!a.field().is_prime_field()) {
    throw UnsupportedError("automorphism groups are enumerated over GF(p) only (got " + a.field().name() + ")");
  }
  if (!is_full(a)) throw UnsupportedError("structure matrix is singular (E^2 != E)");
}

DiagPoint pointwise_product(const DiagPoint& x, const DiagPoint& y) {
  DiagPoint z;
  z.values.reserve(x.values.size());
  for (std::size_t i = 0; i < x.values.size(); ++i) z.values.push_back(x.values[i] * y.values[i]);
  return z;
}

template <class T>
bool sorted_contains(const std::vector<T>& sorted, const T& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

std::vector<Permutation> graph_automorphisms(const Digraph& g) { return GraphAutomorphismSearch(g).run(); }

std::vector<MonomialAutomorphism> algebra_automorphisms(const EvolutionAlgebra& a) {
  require_full_finite(a);
  const std::uint64_t p = a.field().modulus();
  const std::size_t n = a.dimension();
  const Digraph g = graph_from_algebra(a);
  std::vector<std::uint64_t> alpha(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) alpha[i * n + j] = a.coefficient(i, j).residue_value();
  }
  std::vector<MonomialAutomorphism> out;
  for (const Permutation& sigma : graph_automorphisms(g)) {
    auto factor = [&](const Edge& e) {
      // c_j = c_i^2 * alpha_{sigma(i) sigma(j)} / alpha_ij
      return mod_mul(alpha[sigma(e.from) * n + sigma(e.to)], mod_pow(alpha[e.from * n + e.to], p - 2, p), p);
    };
    for (const auto& c : detail::solve_square_system(g, p, factor)) {
      MonomialAutomorphism phi{sigma, {}};
      phi.scalars.reserve(c.size());
      for (std::uint64_t x : c) phi.scalars.push_back(Scalar::residue(x, p));
      // every pair, not only edges: c_i^2 alpha_{sigma(i) sigma(j)} = alpha_ij c_j
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (mod_mul(mod_mul(c[i], c[i], p), alpha[sigma(i) * n + sigma(j)], p) != mod_mul(alpha[i * n + j], c[j], p)) {
            throw std::logic_error("propagated scalars fail the automorphism check: " + phi.to_string(a.labels()));
          }
        }
      }
      out.push_back(std::move(phi));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExactSequenceReport check_exact_sequence(const EvolutionAlgebra& a) {
  require_full_finite(a);
  const Digraph g = graph_from_algebra(a);
  ExactSequenceReport r;
  r.diag_points = diag_points(g, a.field());
  r.automorphisms = algebra_automorphisms(a);
  r.graph_automorphisms = graph_automorphisms(g);
  const auto& aut = r.automorphisms;

  std::vector<MonomialAutomorphism> iota_image;
  iota_image.reserve(r.diag_points.size());
  for (const DiagPoint& pt : r.diag_points) iota_image.push_back(iota(a, pt));
  r.iota_lands_in_aut = std::all_of(iota_image.begin(), iota_image.end(),
                                    [&](const MonomialAutomorphism& m) { return sorted_contains(aut, m); });
  std::vector<MonomialAutomorphism> sorted_image = iota_image;
  std::sort(sorted_image.begin(), sorted_image.end());
  r.iota_injective =
      std::adjacent_find(sorted_image.begin(), sorted_image.end()) == sorted_image.end();

  r.iota_homomorphism = true;
  for (std::size_t i = 0; i < r.diag_points.size() && r.iota_homomorphism; ++i) {
    for (std::size_t j = 0; j < r.diag_points.size(); ++j) {
      const DiagPoint prod = pointwise_product(r.diag_points[i], r.diag_points[j]);
      if (!sorted_contains(r.diag_points, prod) || !(iota(a, prod) == iota_image[i] * iota_image[j])) {
        r.iota_homomorphism = false;
        break;
      }
    }
  }

  std::vector<MonomialAutomorphism> kernel;
  std::set<Permutation> image;
  for (const MonomialAutomorphism& phi : aut) {
    if (rho(phi).is_identity()) kernel.push_back(phi);
    image.insert(rho(phi));
  }
  r.kernel_order = kernel.size();
  r.kernel_equals_image = kernel == sorted_image;
  r.image.assign(image.begin(), image.end());

  r.rho_homomorphism = true;
  for (std::size_t i = 0; i < aut.size() && r.rho_homomorphism; ++i) {
    for (std::size_t j = 0; j < aut.size(); ++j) {
      const MonomialAutomorphism prod = aut[i] * aut[j];
      if (!sorted_contains(aut, prod) || !(rho(prod) == rho(aut[i]) * rho(aut[j]))) {
        r.rho_homomorphism = false;
        break;
      }
    }
  }

  r.image_is_subgroup = !r.image.empty() && r.image.front().is_identity();
  for (const Permutation& h : r.image) {
    if (!sorted_contains(r.graph_automorphisms, h)) r.image_is_subgroup = false;
    for (const Permutation& k : r.image) {
      if (!image.contains(h * k)) r.image_is_subgroup = false;
    }
  }
  r.order_identity = aut.size() == r.diag_points.size() * r.image.size();
  return r;
}

std::optional<std::vector<MonomialAutomorphism>> find_section(const std::vector<MonomialAutomorphism>& group,
                                                              const std::vector<Permutation>& image) {
  if (image.empty()) return std::nullopt;
  std::map<Permutation, std::vector<const MonomialAutomorphism*>> lifts;
  for (const MonomialAutomorphism& phi : group) lifts[rho(phi)].push_back(&phi);
  const std::set<Permutation> targets(image.begin(), image.end());

  using Choice = std::map<Permutation, MonomialAutomorphism>;
  // Adds every product of chosen lifts; fails on a clash or on a product
  // leaving the target image.
  auto close = [&](Choice& chosen) {
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<MonomialAutomorphism> members;
      for (const auto& [h, s] : chosen) members.push_back(s);
      for (const MonomialAutomorphism& x : members) {
        for (const MonomialAutomorphism& y : members) {
          MonomialAutomorphism xy = x * y;
          const Permutation h = rho(xy);
          if (!targets.contains(h)) return false;
          auto it = chosen.find(h);
          if (it == chosen.end()) {
            chosen.emplace(h, std::move(xy));
            changed = true;
          } else if (!(it->second == xy)) {
            return false;
          }
        }
      }
    }
    return true;
  };

  std::optional<Choice> result;
  auto search = [&](auto&& self, Choice chosen) -> void {
    if (result) return;
    if (!close(chosen)) return;
    auto open = std::find_if(targets.begin(), targets.end(), [&](const Permutation& h) { return !chosen.contains(h); });
    if (open == targets.end()) {
      result = std::move(chosen);
      return;
    }
    auto it = lifts.find(*open);
    if (it == lifts.end()) return;
    for (const MonomialAutomorphism* lift : it->second) {
      Choice next = chosen;
      next.emplace(*open, *lift);
      self(self, std::move(next));
      if (result) return;
    }
  };

  const Permutation id = Permutation::identity(image.front().size());
  auto id_lifts = lifts.find(id);
  if (id_lifts == lifts.end()) return std::nullopt;
  for (const MonomialAutomorphism* lift : id_lifts->second) {
    if (!lift->is_identity()) continue;
    search(search, Choice{{id, *lift}});
  }
  if (!result) return std::nullopt;
  std::vector<MonomialAutomorphism> out;
  for (auto& [h, s] : *result) out.push_back(std::move(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<bool> scheme_split_test_two_cycle(const EvolutionAlgebra& a) {
  if (a.dimension() != 2) return std::nullopt;
  if (!a.coefficient(0, 0).is_zero() || !a.coefficient(0, 1).is_one() || !a.coefficient(1, 1).is_zero() ||
      a.coefficient(1, 0).is_zero()) {
    return std::nullopt;
  }
  return is_cube(a.coefficient(1, 0));
}

// ---------------------------------------------------------------------------

const SplitElement& IdempotentDecomposition::at(const Permutation& sigma) const {
  for (const auto& [s, e] : idempotents) {
    if (s == sigma) return e;
  }
  throw InputError("permutation of the wrong degree");
}

SplitMatrix split_matrix(const std::vector<MonomialAutomorphism>& components) {
  if (components.empty()) throw InputError("split matrix needs at least one component");
  const std::size_t n = components.front().dimension();
  std::vector<FieldMatrix> mats;
  for (const auto& c : components) {
    if (c.dimension() != n) throw InputError("components of different dimension");
    mats.push_back(c.matrix());
  }
  SplitMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> entry;
      for (const FieldMatrix& m : mats) entry.push_back(m(i, j));
      out[i].emplace_back(std::move(entry));
    }
  }
  return out;
}

IdempotentDecomposition idempotent_decomposition(const EvolutionAlgebra& a, const SplitMatrix& phi) {
  const std::size_t n = a.dimension();
  if (phi.size() != n) throw InputError("split matrix has the wrong number of rows");
  for (const auto& row : phi) {
    if (row.size() != n) throw InputError("split matrix has a row of the wrong length");
  }
  if (n == 0) throw InputError("zero-dimensional algebra");
  const std::size_t k = phi[0][0].size();
  const FieldSpec& f = a.field();
  for (const auto& row : phi) {
    for (const SplitElement& x : row) {
      if (x.size() != k || x.field() != f) throw InputError("split matrix entries from different rings");
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    FieldMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = phi[i][j][c];
    }
    if (!is_automorphism(a, m)) {
      throw InputError("component " + std::to_string(c + 1) + " is not an automorphism of the algebra");
    }
  }

  // Leibniz expansion; the terms are reused for the idempotents.
  std::vector<std::pair<Permutation, SplitElement>> terms;
  SplitElement det = SplitElement::zero(f, k);
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  do {
    Permutation sigma(images);
    SplitElement term = SplitElement::constant(f.from_int(sigma.sign()), k);
    for (std::size_t i = 0; i < n; ++i) term = term * phi[i][sigma(i)];
    det = det + term;
    terms.emplace_back(std::move(sigma), std::move(term));
  } while (std::next_permutation(images.begin(), images.end()));
  if (!det.is_unit()) throw InputError("determinant " + det.to_string() + " is not a unit");

  IdempotentDecomposition d;
  const SplitElement det_inv = det.inverse();
  for (auto& [sigma, term] : terms) d.idempotents.emplace_back(sigma, det_inv * term);

  const Digraph g = graph_from_algebra(a);
  const std::vector<Permutation> aut = graph_automorphisms(g);
  SplitElement total = SplitElement::zero(f, k);
  d.idempotent = true;
  d.orthogonal = true;
  d.support_in_aut = true;
  d.monomial_blocks = true;
  for (std::size_t s = 0; s < d.idempotents.size(); ++s) {
    const auto& [sigma, e] = d.idempotents[s];
    total = total + e;
    if (!(e * e == e)) d.idempotent = false;
    for (std::size_t t = s + 1; t < d.idempotents.size(); ++t) {
      if (!(e * d.idempotents[t].second).is_zero()) d.orthogonal = false;
    }
    if (e.is_zero()) continue;
    d.support.push_back(sigma);
    if (!std::binary_search(aut.begin(), aut.end(), sigma)) d.support_in_aut = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j != sigma(i) && !(phi[i][j] * e).is_zero()) d.monomial_blocks = false;
      }
    }
  }
  d.complete = total.is_one();
  return d;
}

}  // namespace evoalg
