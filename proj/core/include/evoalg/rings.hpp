#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "evoalg/scalar.hpp"

namespace evoalg {

/// a + b*eps over a field, with eps^2 = 0.
class DualNumber {
 public:
  DualNumber(Scalar a, Scalar b);
  /// The constant a + 0*eps.
  explicit DualNumber(const Scalar& a);

  const Scalar& constant() const { return a_; }
  const Scalar& eps() const { return b_; }
  FieldSpec field() const { return a_.field(); }

  bool is_unit() const { return !a_.is_zero(); }
  /// Throws InputError unless is_unit().
  DualNumber inverse() const;

  DualNumber operator-() const { return {-a_, -b_}; }
  friend DualNumber operator+(const DualNumber& x, const DualNumber& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend DualNumber operator-(const DualNumber& x, const DualNumber& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend DualNumber operator*(const DualNumber& x, const DualNumber& y) {
    return {x.a_ * y.a_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend bool operator==(const DualNumber&, const DualNumber&) = default;

  std::string to_string() const;

 private:
  Scalar a_;
  Scalar b_;
};

/// An element of F^k with componentwise operations.
class SplitElement {
 public:
  explicit SplitElement(std::vector<Scalar> components);

  static SplitElement constant(const Scalar& c, std::size_t k);
  static SplitElement zero(const FieldSpec& f, std::size_t k) { return constant(f.zero(), k); }
  static SplitElement one(const FieldSpec& f, std::size_t k) { return constant(f.one(), k); }

  std::size_t size() const { return components_.size(); }
  const Scalar& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Scalar>& components() const { return components_; }
  FieldSpec field() const { return components_.front().field(); }

  bool is_zero() const;
  bool is_one() const;
  /// Every component nonzero.
  bool is_unit() const;
  /// Exactly the 0/1 vectors.
  bool is_idempotent() const;
  SplitElement inverse() const;

  SplitElement operator-() const;
  friend SplitElement operator+(const SplitElement& x, const SplitElement& y);
  friend SplitElement operator-(const SplitElement& x, const SplitElement& y);
  friend SplitElement operator*(const SplitElement& x, const SplitElement& y);
  friend bool operator==(const SplitElement&, const SplitElement&) = default;

  /// "(1, 0)"
  std::string to_string() const;

 private:
  std::vector<Scalar> components_;
};

}  // namespace evoalg
