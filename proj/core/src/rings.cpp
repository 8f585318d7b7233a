#include "evoalg/rings.hpp"

#include <algorithm>

#include "evoalg/error.hpp"

namespace evoalg {

DualNumber::DualNumber(Scalar a, Scalar b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.field() != b_.field()) throw InputError("dual number parts lie in different fields");
}

DualNumber::DualNumber(const Scalar& a) : a_(a), b_(a.field().zero()) {}

DualNumber DualNumber::inverse() const {
  if (!is_unit()) throw InputError("dual number with zero constant part is not invertible");
  // (a + b eps)^-1 = a^-1 - b a^-2 eps
  Scalar inv = a_.inverse();
  return {inv, -(b_ * inv * inv)};
}

std::string DualNumber::to_string() const { return a_.to_string() + " + " + b_.to_string() + "e"; }

namespace {

void require_compatible(const SplitElement& x, const SplitElement& y) {
  if (x.size() != y.size()) throw InputError("split-ring elements of different length");
}

}  // namespace

SplitElement::SplitElement(std::vector<Scalar> components) : components_(std::move(components)) {
  if (components_.empty()) throw InputError("split ring needs at least one component");
  const FieldSpec f = components_.front().field();
  for (const Scalar& c : components_) {
    if (c.field() != f) throw InputError("split-ring components lie in different fields");
  }
}

SplitElement SplitElement::constant(const Scalar& c, std::size_t k) {
  return SplitElement(std::vector<Scalar>(k, c));
}

bool SplitElement::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Scalar& c) { return c.is_zero(); });
}

bool SplitElement::is_one() const {
  return std::all_of(components_.begin(), components_.end(), [](const Scalar& c) { return c.is_one(); });
}

bool SplitElement::is_unit() const {
  return std::none_of(components_.begin(), components_.end(), [](const Scalar& c) { return c.is_zero(); });
}

bool SplitElement::is_idempotent() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Scalar& c) { return c.is_zero() || c.is_one(); });
}

SplitElement SplitElement::inverse() const {
  if (!is_unit()) throw InputError("split-ring element " + to_string() + " is not a unit");
  std::vector<Scalar> out;
  out.reserve(size());
  for (const Scalar& c : components_) out.push_back(c.inverse());
  return SplitElement(std::move(out));
}

SplitElement SplitElement::operator-() const {
  std::vector<Scalar> out;
  out.reserve(size());
  for (const Scalar& c : components_) out.push_back(-c);
  return SplitElement(std::move(out));
}

SplitElement operator+(const SplitElement& x, const SplitElement& y) {
  require_compatible(x, y);
  std::vector<Scalar> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] + y[i]);
  return SplitElement(std::move(out));
}

SplitElement operator-(const SplitElement& x, const SplitElement& y) { return x + (-y); }

SplitElement operator*(const SplitElement& x, const SplitElement& y) {
  require_compatible(x, y);
  std::vector<Scalar> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] * y[i]);
  return SplitElement(std::move(out));
}

std::string SplitElement::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) s += ", ";
    s += components_[i].to_string();
  }
  return s + ")";
}

}  // namespace evoalg
