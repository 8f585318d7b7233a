#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "evoalg/algebra.hpp"
#include "evoalg/matrix.hpp"

namespace evoalg {

/// A bijection of {0..n-1}; images[i] = sigma(i).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError unless `images` is a bijection.
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// +1 or -1.
  int sign() const;
  std::size_t order() const;

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// Cycle notation with 1-based points, e.g. "(1 2)(3 4)"; "id" for the identity.
  std::string to_string() const;

 private:
  std::vector<std::size_t> images_;
};

/// phi(v_i) = scalars[i] * v_{sigma(i)}.
struct MonomialAutomorphism {
  Permutation sigma;
  std::vector<Scalar> scalars;

  static MonomialAutomorphism identity(const FieldSpec& f, std::size_t n);
  static MonomialAutomorphism diagonal(std::vector<Scalar> scalars);

  std::size_t dimension() const { return scalars.size(); }
  bool is_diagonal() const { return sigma.is_identity(); }
  bool is_identity() const;

  AlgebraElement apply(const AlgebraElement& x) const;
  /// Row i holds the coordinates of phi(v_i).
  FieldMatrix matrix() const;
  MonomialAutomorphism inverse() const;

  /// (phi * psi) = phi o psi: sigma_phi * sigma_psi, scalar at i equal to
  /// psi.scalars[i] * phi.scalars[psi.sigma(i)].
  friend MonomialAutomorphism operator*(const MonomialAutomorphism& phi, const MonomialAutomorphism& psi);
  friend bool operator==(const MonomialAutomorphism&, const MonomialAutomorphism&) = default;
  /// Lexicographic by (sigma, scalars).
  friend std::strong_ordering operator<=>(const MonomialAutomorphism& a, const MonomialAutomorphism& b);

  /// e.g. "v1 -> 3*v2, v2 -> 5*v1"
  std::string to_string(const std::vector<std::string>& labels) const;
};

/// phi(v_i v_j) == phi(v_i) phi(v_j) for every pair of basis vectors, and phi
/// is bijective (all scalars nonzero).
bool is_automorphism(const EvolutionAlgebra& a, const MonomialAutomorphism& phi);

/// Same check for an arbitrary linear map given by its matrix (row i = phi(v_i)).
bool is_automorphism(const EvolutionAlgebra& a, const FieldMatrix& phi);

}  // namespace evoalg
