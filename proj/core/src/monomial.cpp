#include "evoalg/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "evoalg/error.hpp"

namespace evoalg {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (std::size_t x : images_) {
    if (x >= images_.size() || hit[x]) throw InputError("not a permutation");
    hit[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

int Permutation::sign() const {
  std::vector<bool> seen(images_.size(), false);
  int s = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

std::size_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InputError("composing permutations of different degree");
  std::vector<std::size_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a(b(i));
  return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
  std::string s;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) s += " ";
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "id" : s;
}

// ---------------------------------------------------------------------------

MonomialAutomorphism MonomialAutomorphism::identity(const FieldSpec& f, std::size_t n) {
  return {Permutation::identity(n), std::vector<Scalar>(n, f.one())};
}

MonomialAutomorphism MonomialAutomorphism::diagonal(std::vector<Scalar> scalars) {
  const std::size_t n = scalars.size();
  return {Permutation::identity(n), std::move(scalars)};
}

bool MonomialAutomorphism::is_identity() const {
  return sigma.is_identity() &&
         std::all_of(scalars.begin(), scalars.end(), [](const Scalar& c) { return c.is_one(); });
}

AlgebraElement MonomialAutomorphism::apply(const AlgebraElement& x) const {
  if (x.size() != dimension()) throw InputError("element dimension does not match the map");
  AlgebraElement out(x.size(), scalars.front().field().zero());
  for (std::size_t i = 0; i < x.size(); ++i) out[sigma(i)] += x[i] * scalars[i];
  return out;
}

FieldMatrix MonomialAutomorphism::matrix() const {
  FieldMatrix m(scalars.front().field(), dimension(), dimension());
  for (std::size_t i = 0; i < dimension(); ++i) m(i, sigma(i)) = scalars[i];
  return m;
}

MonomialAutomorphism MonomialAutomorphism::inverse() const {
  // phi(v_i) = c_i v_s(i)  =>  phi^-1(v_s(i)) = c_i^-1 v_i
  std::vector<Scalar> inv(dimension(), scalars.front().field().zero());
  for (std::size_t i = 0; i < dimension(); ++i) inv[sigma(i)] = scalars[i].inverse();
  return {sigma.inverse(), std::move(inv)};
}

MonomialAutomorphism operator*(const MonomialAutomorphism& phi, const MonomialAutomorphism& psi) {
  if (phi.dimension() != psi.dimension()) throw InputError("composing maps of different dimension");
  std::vector<Scalar> c;
  c.reserve(psi.dimension());
  for (std::size_t i = 0; i < psi.dimension(); ++i) c.push_back(psi.scalars[i] * phi.scalars[psi.sigma(i)]);
  return {phi.sigma * psi.sigma, std::move(c)};
}

std::strong_ordering operator<=>(const MonomialAutomorphism& a, const MonomialAutomorphism& b) {
  if (auto c = a.sigma <=> b.sigma; c != 0) return c;
  return std::lexicographical_compare_three_way(a.scalars.begin(), a.scalars.end(), b.scalars.begin(),
                                                b.scalars.end());
}

std::string MonomialAutomorphism::to_string(const std::vector<std::string>& labels) const {
  std::string s;
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (i > 0) s += ", ";
    s += labels.at(i) + " -> ";
    if (!scalars[i].is_one()) s += scalars[i].to_string() + "*";
    s += labels.at(sigma(i));
  }
  return s;
}

bool is_automorphism(const EvolutionAlgebra& a, const FieldMatrix& phi) {
  const std::size_t n = a.dimension();
  if (phi.rows() != n || phi.cols() != n || phi.field() != a.field()) return false;
  if (determinant(phi).is_zero()) return false;
  std::vector<AlgebraElement> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = phi.row(i);
  auto map = [&](const AlgebraElement& x) {
    AlgebraElement out = a.zero();
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out[j] += x[i] * image[i][j];
    }
    return out;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const AlgebraElement lhs = map(multiply(a, a.basis_vector(i), a.basis_vector(j)));
      const AlgebraElement rhs = multiply(a, image[i], image[j]);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool is_automorphism(const EvolutionAlgebra& a, const MonomialAutomorphism& phi) {
  if (phi.dimension() != a.dimension()) return false;
  if (std::any_of(phi.scalars.begin(), phi.scalars.end(), [](const Scalar& c) { return c.is_zero(); })) {
    return false;
  }
  return is_automorphism(a, phi.matrix());
}

}  // namespace evoalg
