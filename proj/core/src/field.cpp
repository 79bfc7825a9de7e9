#include "ksb/field.hpp"

namespace ksb {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on (a, p), p prime, a != 0
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p),
               newr = static_cast<std::int64_t>(a % p);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw error("Scalar: residue not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (1ull << 31))
    throw error("Field: modulus out of range [2, 2^31)");
  if (!is_prime_u64(p)) throw error("Field: modulus is not prime");
  return Field(Kind::prime_field, p);
}

std::uint64_t Field::modulus() const {
  if (is_rational()) throw error("Field: rationals have no modulus");
  return p_;
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

Scalar::Scalar() : field_(Field::rationals()), rat_(0), res_(0) {}

Scalar Scalar::zero(const Field& f) { return Scalar(f); }

Scalar Scalar::one(const Field& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const Field& f, long v) {
  Scalar s(f);
  if (f.is_rational()) {
    s.rat_ = v;
  } else {
    long p = static_cast<long>(f.modulus());
    long r = v % p;
    if (r < 0) r += p;
    s.res_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::of_mpq(const mpq_class& q) {
  Scalar s(Field::rationals());
  s.rat_ = q;
  s.rat_.canonicalize();
  return s;
}

Scalar Scalar::of_fraction(long num, long den) {
  if (den == 0) throw error("Scalar: zero denominator");
  return of_mpq(mpq_class(num, den));
}

Scalar Scalar::of_residue(const Field& f, std::uint64_t r) {
  if (f.is_rational()) throw error("Scalar: residue needs a prime field");
  Scalar s(f);
  s.res_ = r % f.modulus();
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  if (text.empty()) throw error("Scalar: empty literal");
  if (f.is_rational()) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
      throw error("Scalar: bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw error("Scalar: zero denominator in '" + text + "'");
    q.canonicalize();
    return of_mpq(q);
  }
  mpz_class z;
  if (z.set_str(text, 10) != 0)
    throw error("Scalar: bad residue literal '" + text + "'");
  mpz_class p(static_cast<unsigned long>(f.modulus()));
  mpz_class r = z % p;
  if (r < 0) r += p;
  return of_residue(f, r.get_ui());
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (field_.is_rational())
    s.rat_ = -rat_;
  else
    s.res_ = res_ == 0 ? 0 : field_.modulus() - res_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw error("Scalar: division by zero");
  Scalar s(field_);
  if (field_.is_rational())
    s.rat_ = 1 / rat_;
  else
    s.res_ = invmod(res_, field_.modulus());
  return s;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw error("Scalar: mixed fields " + field_.to_string() + " and " +
                o.field_.to_string());
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    rat_ += o.rat_;
  } else {
    res_ += o.res_;
    if (res_ >= field_.modulus()) res_ -= field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    rat_ -= o.rat_;
  } else {
    res_ = res_ >= o.res_ ? res_ - o.res_ : res_ + field_.modulus() - o.res_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational())
    rat_ *= o.rat_;
  else
    res_ = mulmod(res_, o.res_, field_.modulus());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  return a.field_.is_rational() ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.field_.is_rational()) return cmp(a.rat_, b.rat_);
  return a.res_ < b.res_ ? -1 : a.res_ > b.res_ ? 1 : 0;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? rat_.get_str() : std::to_string(res_);
}

const mpq_class& Scalar::rat() const {
  if (!field_.is_rational()) throw error("Scalar: not rational");
  return rat_;
}

std::uint64_t Scalar::res() const {
  if (field_.is_rational()) throw error("Scalar: not a residue");
  return res_;
}

}  // namespace ksb
