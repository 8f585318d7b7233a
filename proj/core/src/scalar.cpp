#include "evoalg/scalar.hpp"

#include <array>
#include <cctype>
#include <ostream>

#include "evoalg/error.hpp"

namespace evoalg {

namespace {

__extension__ using u128 = unsigned __int128;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // p is prime, a in [1, p)
  return mod_pow(a, p - 2, p);
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = mod_pow(a % n, d, n);
  if (x == 0 || x == 1 || x == n - 1) return false;
  for (int r = 1; r < s; ++r) {
    x = mod_mul(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1U) result = mod_mul(result, base, p);
    base = mod_mul(base, base, p);
    e >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kBases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) throw InputError("p must be prime (got " + std::to_string(p) + ")");
  return FieldSpec(p);
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(std::int64_t v) const {
  if (is_rational()) return Scalar::rational(mpq_class(mpz_class(static_cast<long>(v))));
  if (v >= 0) return Scalar::residue(static_cast<std::uint64_t>(v), modulus_);
  // -v - 1 does not overflow for INT64_MIN
  const std::uint64_t r = static_cast<std::uint64_t>(-(v + 1)) % modulus_;
  return Scalar::residue(modulus_ - 1 - r, modulus_);
}

Scalar FieldSpec::from_integer(const mpz_class& v) const {
  if (is_rational()) return Scalar::rational(mpq_class(v));
  return Scalar::residue(reduce(v, modulus_), modulus_);
}

Scalar FieldSpec::parse(std::string_view text) const {
  std::string_view s = trim(text);
  const std::string original(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num_text = s;
  std::string_view den_text;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num_text = s.substr(0, slash);
    den_text = s.substr(slash + 1);
    if (!all_digits(den_text)) throw InputError("cannot parse scalar '" + original + "'");
  }
  if (!all_digits(num_text)) throw InputError("cannot parse scalar '" + original + "'");

  mpz_class num(std::string(num_text), 10);
  mpz_class den = den_text.empty() ? mpz_class(1) : mpz_class(std::string(den_text), 10);
  if (negative) num = -num;
  if (den == 0) throw InputError("zero denominator in scalar '" + original + "'");

  if (is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar::rational(std::move(q));
  }
  Scalar d = from_integer(den);
  if (d.is_zero()) {
    throw InputError("denominator of '" + original + "' vanishes in " + name());
  }
  return from_integer(num) / d;
}

std::string FieldSpec::name() const {
  if (is_rational()) return "Q";
  return "GF(" + std::to_string(modulus_) + ")";
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::rational(mpq_class q) {
  q.canonicalize();
  Scalar s;
  s.modulus_ = 0;
  s.value_ = std::move(q);
  return s;
}

Scalar Scalar::residue(std::uint64_t r, std::uint64_t p) { return Scalar(r % p, p); }

FieldSpec Scalar::field() const {
  return FieldSpec(modulus_);
}

bool Scalar::is_zero() const {
  if (modulus_ == 0) return std::get<mpq_class>(value_) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (modulus_ == 0) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1 % modulus_;
}

std::uint64_t Scalar::residue_value() const {
  if (modulus_ == 0) throw InputError("residue requested from a rational scalar");
  return std::get<std::uint64_t>(value_);
}

const mpq_class& Scalar::rational_value() const {
  if (modulus_ != 0) throw InputError("rational value requested from a prime-field scalar");
  return std::get<mpq_class>(value_);
}

void Scalar::require_same_field(const Scalar& rhs, const char* op) const {
  if (modulus_ != rhs.modulus_) {
    throw InputError(std::string("mixed-ring operands to '") + op + "': " + field().name() +
                     " and " + rhs.field().name());
  }
}

Scalar Scalar::operator-() const {
  if (modulus_ == 0) return rational(-std::get<mpq_class>(value_));
  std::uint64_t r = std::get<std::uint64_t>(value_);
  return residue(r == 0 ? 0 : modulus_ - r, modulus_);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs, "+");
  if (modulus_ == 0) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  } else {
    std::uint64_t a = std::get<std::uint64_t>(value_);
    std::uint64_t b = std::get<std::uint64_t>(rhs.value_);
    value_ = (a >= modulus_ - b) ? a - (modulus_ - b) : a + b;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs, "-");
  return *this += -rhs;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs, "*");
  if (modulus_ == 0) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  } else {
    value_ = mod_mul(std::get<std::uint64_t>(value_), std::get<std::uint64_t>(rhs.value_), modulus_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs, "/");
  return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  if (modulus_ == 0) return rational(1 / std::get<mpq_class>(value_));
  return residue(mod_inverse(std::get<std::uint64_t>(value_), modulus_), modulus_);
}

Scalar Scalar::pow(std::int64_t e) const {
  if (modulus_ == 0 || e < 0) return pow(mpz_class(static_cast<long>(e)));
  const std::uint64_t base = std::get<std::uint64_t>(value_);
  if (base == 0) return residue(e == 0 ? 1 : 0, modulus_);
  return residue(mod_pow(base, static_cast<std::uint64_t>(e) % (modulus_ - 1), modulus_), modulus_);
}

Scalar Scalar::pow(const mpz_class& e) const {
  if (e < 0) return inverse().pow(mpz_class(-e));
  if (modulus_ != 0) {
    std::uint64_t base = std::get<std::uint64_t>(value_);
    if (base == 0) return residue(e == 0 ? 1 : 0, modulus_);
    // Fermat: exponents only matter mod p - 1.
    return residue(mod_pow(base, reduce(e, modulus_ - 1), modulus_), modulus_);
  }
  const mpq_class& q = std::get<mpq_class>(value_);
  if (!e.fits_ulong_p()) {
    if (q == 0 || q == 1) return *this;
    if (q == -1) return rational(mpz_odd_p(e.get_mpz_t()) ? mpq_class(-1) : mpq_class(1));
    throw InputError("rational power exponent too large");
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e.get_ui());
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e.get_ui());
  return rational(mpq_class(num, den));
}

std::string Scalar::to_string() const {
  if (modulus_ == 0) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) return false;
  if (a.modulus_ == 0) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return std::get<std::uint64_t>(a.value_) == std::get<std::uint64_t>(b.value_);
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) return a.modulus_ <=> b.modulus_;
  if (a.modulus_ == 0) {
    int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
    return c <=> 0;
  }
  return std::get<std::uint64_t>(a.value_) <=> std::get<std::uint64_t>(b.value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, const FieldSpec& f) { return os << f.name(); }

// ---------------------------------------------------------------------------
// Number-theoretic queries

std::optional<std::uint64_t> mult_order(const Scalar& x) {
  if (x.is_zero()) throw InputError("multiplicative order of zero");
  const FieldSpec f = x.field();
  if (f.is_rational()) {
    if (x.is_one()) return 1;
    if (x == f.from_int(-1)) return 2;
    return std::nullopt;
  }
  const std::uint64_t p = f.modulus();
  const std::uint64_t a = x.residue_value();
  std::uint64_t order = p - 1;
  std::uint64_t rest = p - 1;
  auto strip = [&](std::uint64_t q) {
    while (order % q == 0 && mod_pow(a, order / q, p) == 1) order /= q;
  };
  for (std::uint64_t q = 2; q * q <= rest; ++q) {
    if (rest % q != 0) continue;
    while (rest % q == 0) rest /= q;
    strip(q);
  }
  if (rest > 1) strip(rest);
  return order;
}

bool is_cube(const Scalar& x) {
  if (x.is_zero()) return true;
  const FieldSpec f = x.field();
  if (f.is_prime_field()) {
    const std::uint64_t p = f.modulus();
    const std::uint64_t g = ((p - 1) % 3 == 0) ? 3 : 1;
    return mod_pow(x.residue_value(), (p - 1) / g, p) == 1;
  }
  const mpq_class& q = x.rational_value();
  mpz_class root;
  bool num_exact = mpz_root(root.get_mpz_t(), q.get_num_mpz_t(), 3) != 0;
  bool den_exact = mpz_root(root.get_mpz_t(), q.get_den_mpz_t(), 3) != 0;
  return num_exact && den_exact;
}

}  // namespace evoalg
