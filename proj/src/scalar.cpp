#include "leiblab/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "leiblab/errors.hpp"

namespace leiblab {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

std::int64_t mod_pow(std::int64_t b, std::uint64_t e, std::uint32_t p) {
  std::int64_t r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::int64_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_si();
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n\r");
  auto e = s.find_last_not_of(" \t\n\r");
  if (b == std::string_view::npos) return {};
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p == 2) throw Char2Field();
  if (!is_prime(p)) throw InvalidField("not a prime: " + std::to_string(p));
  // residues are multiplied in 64-bit arithmetic
  if (p > (1u << 31)) throw InvalidField("prime too large: " + std::to_string(p));
  return Field(p);
}

Field Field::parse(std::string_view text) {
  std::string t = trim(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "rational" || t == "rationals" || t == "q") return rationals();
  if (t.size() > 4 && t.rfind("gf(", 0) == 0 && t.back() == ')') {
    std::string_view digits(t.data() + 3, t.size() - 4);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || p > UINT32_MAX)
      throw InvalidField("bad field descriptor: " + std::string(text));
    return prime(static_cast<std::uint32_t>(p));
  }
  throw InvalidField("bad field descriptor: " + std::string(text));
}

std::string Field::name() const { return p_ == 0 ? "rational" : "gf(" + std::to_string(p_) + ")"; }

Scalar Field::zero() const { return Scalar(*this, 0); }
Scalar Field::one() const { return Scalar(*this, 1); }
Scalar Field::from_int(std::int64_t v) const { return Scalar(*this, v); }

Scalar Field::parse_scalar(std::string_view text) const {
  std::string t = trim(text);
  if (t.empty()) throw ParseError("empty coefficient");
  mpq_class q;
  auto valid_int = [](const std::string& s) {
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + i, s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  auto slash = t.find('/');
  std::string num = trim(t.substr(0, slash));
  std::string den = slash == std::string::npos ? "1" : trim(t.substr(slash + 1));
  if (!valid_int(num) || !valid_int(den)) throw ParseError("bad coefficient: " + t);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in coefficient: " + t);
  q = mpq_class(n, d);
  q.canonicalize();
  return coerce(Scalar::rational(q));
}

Scalar Field::coerce(const Scalar& s) const {
  if (s.modulus() == p_) return s;
  if (p_ == 0) throw FieldMismatch("cannot coerce a residue into the rationals");
  if (s.modulus() != 0) throw FieldMismatch("cannot coerce between different prime fields");
  mpq_class q = s.to_rational();
  std::int64_t den = reduce_mpz(q.get_den(), p_);
  if (den == 0) throw DivisionByZero();
  std::int64_t num = reduce_mpz(q.get_num(), p_);
  return Scalar::residue(num * mod_pow(den, p_ - 2, p_) % p_, p_);
}

Scalar::Scalar(const Field& f, std::int64_t v) : p_(f.characteristic()) {
  if (p_ == 0) {
    if (v != 0) q_.emplace(static_cast<long>(v));
  } else {
    r_ = mod(v, p_);
  }
}

Scalar Scalar::rational(mpq_class v) {
  Scalar s;
  if (v != 0) s.q_.emplace(std::move(v));
  return s;
}

Scalar Scalar::residue(std::int64_t v, std::uint32_t p) {
  Scalar s;
  s.p_ = p;
  s.r_ = mod(v, p);
  return s;
}

bool Scalar::is_zero() const { return p_ == 0 ? !q_ || *q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ && *q_ == 1 : r_ == 1; }

mpq_class Scalar::to_rational() const {
  if (p_ != 0) return mpq_class(static_cast<long>(r_));
  return q_ ? *q_ : mpq_class(0);
}

// Brings both operands into a common field. A rational meeting a residue is
// reduced mod p; two different primes are an error.
void Scalar::unify(const Scalar& o) {
  if (p_ == o.p_) return;
  if (p_ != 0 && o.p_ != 0) throw FieldMismatch("arithmetic between different prime fields");
  if (p_ == 0) *this = Field::prime(o.p_).coerce(*this);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (p_ == o.p_ && p_ != 0) {
    r_ += o.r_;
    if (r_ >= p_) r_ -= p_;
    return *this;
  }
  unify(o);
  if (p_ != 0) return *this += Field::prime(p_).coerce(o);
  if (o.is_zero()) return *this;
  if (!q_) q_.emplace(*o.q_);
  else *q_ += *o.q_;
  if (*q_ == 0) q_.reset();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (p_ == o.p_ && p_ != 0) {
    r_ = r_ * o.r_ % p_;
    return *this;
  }
  unify(o);
  if (p_ != 0) return *this *= Field::prime(p_).coerce(o);
  if (is_zero() || o.is_zero()) {
    q_.reset();
    return *this;
  }
  *q_ *= *o.q_;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (p_ != 0) return residue(mod_pow(r_, p_ - 2, p_), p_);
  mpq_class inv = 1 / *q_;
  return rational(inv);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  unify(o);
  if (p_ != 0) return *this *= Field::prime(p_).coerce(o).inverse();
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ != 0) {
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  } else if (q_) {
    *s.q_ = -*q_;
  }
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) {
    if (a.p_ != 0) return a.r_ == b.r_;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return *a.q_ == *b.q_;
  }
  if (a.p_ != 0 && b.p_ != 0) return false;
  Scalar x = a;
  x -= b;
  return x.is_zero();
}

std::string Scalar::to_string() const {
  if (p_ != 0) return std::to_string(r_);
  return to_rational().get_str();
}

}  // namespace leiblab
