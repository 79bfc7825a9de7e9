#include "ksb/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ksb {

Polynomial::Polynomial(const Field& f, std::vector<Scalar> coeffs)
    : field_(f), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.field() != field_) throw error("Polynomial: coefficient field mismatch");
  normalize();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) {
  return Polynomial(c.field(), {c});
}

Polynomial Polynomial::monomial(const Scalar& c, std::size_t degree) {
  std::vector<Scalar> v(degree + 1, Scalar::zero(c.field()));
  v[degree] = c;
  return Polynomial(c.field(), std::move(v));
}

Polynomial Polynomial::x(const Field& f) {
  return monomial(Scalar::one(f), 1);
}

bool Polynomial::is_monic() const {
  return !is_zero() && coeffs_.back().is_one();
}

Scalar Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Scalar::zero(field_);
}

Scalar Polynomial::leading() const {
  if (is_zero()) throw error("Polynomial: leading coefficient of zero");
  return coeffs_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (field_ != o.field_) throw error("Polynomial: mixed fields");
  std::vector<Scalar> v(std::max(coeffs_.size(), o.coeffs_.size()),
                        Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator-() const {
  std::vector<Scalar> v(coeffs_);
  for (auto& c : v) c = -c;
  return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (field_ != o.field_) throw error("Polynomial: mixed fields");
  if (is_zero() || o.is_zero()) return zero(field_);
  std::vector<Scalar> v(coeffs_.size() + o.coeffs_.size() - 1,
                        Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::scaled(const Scalar& s) const {
  std::vector<Scalar> v(coeffs_);
  for (auto& c : v) c *= s;
  return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::monic() const {
  return scaled(leading().inverse());
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& divisor) const {
  if (field_ != divisor.field_) throw error("Polynomial: mixed fields");
  if (divisor.is_zero()) throw error("Polynomial: division by zero");
  Polynomial q = zero(field_), r = *this;
  Scalar lead_inv = divisor.leading().inverse();
  int dd = divisor.degree();
  while (!r.is_zero() && r.degree() >= dd) {
    Scalar c = r.leading() * lead_inv;
    std::size_t shift = static_cast<std::size_t>(r.degree() - dd);
    Polynomial term = monomial(c, shift);
    q = q + term;
    r = r - divisor * term;
  }
  return DivMod{std::move(q), std::move(r)};
}

Polynomial Polynomial::mod(const Polynomial& divisor) const {
  return divmod(divisor).remainder;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return zero(field_);
  std::vector<Scalar> v(coeffs_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    v[i - 1] = coeffs_[i] * Scalar::of_int(field_, static_cast<long>(i));
  return Polynomial(field_, std::move(v));
}

Scalar Polynomial::eval(const Scalar& at) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * at + *it;
  return acc;
}

Matrix Polynomial::eval(const Matrix& at) const {
  if (!at.is_square()) throw error("Polynomial: eval needs a square matrix");
  Matrix acc = Matrix::zero(field_, at.rows(), at.rows());
  Matrix id = Matrix::identity(field_, at.rows());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * at + id.scaled(*it);
  return acc;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int k = a.degree(); k >= 0; --k) {
    int c = Scalar::compare(a.coeff(static_cast<std::size_t>(k)),
                            b.coeff(static_cast<std::size_t>(k)));
    if (c != 0) return c;
  }
  return 0;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Scalar c = coeff(static_cast<std::size_t>(k));
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    if (k == 0 || !c.is_one()) os << c.to_string() << (k > 0 ? "*" : "");
    if (k == 1) os << "t";
    if (k > 1) os << "t^" << k;
    first = false;
  }
  return os.str();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

PolyXgcd poly_xgcd(const Polynomial& a, const Polynomial& b) {
  const Field& f = a.field();
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(Scalar::one(f)), s1 = Polynomial::zero(f);
  Polynomial t0 = Polynomial::zero(f), t1 = Polynomial::constant(Scalar::one(f));
  while (!r1.is_zero()) {
    auto qr = r0.divmod(r1);
    Polynomial s2 = s0 - qr.quotient * s1;
    Polynomial t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return PolyXgcd{r0, s0, t0};
  Scalar inv = r0.leading().inverse();
  return PolyXgcd{r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Polynomial poly_pow_mod(const Polynomial& base, std::uint64_t e,
                        const Polynomial& modulus) {
  const Field& f = base.field();
  Polynomial result = Polynomial::constant(Scalar::one(f)).mod(modulus);
  Polynomial b = base.mod(modulus);
  while (e > 0) {
    if (e & 1) result = (result * b).mod(modulus);
    e >>= 1;
    if (e > 0) b = (b * b).mod(modulus);
  }
  return result;
}

// ---------------------------------------------------------------------------
// squarefree decomposition
// ---------------------------------------------------------------------------

namespace {

using Part = FactorSplit::Part;

void merge_part(std::vector<Part>& parts, const Polynomial& f, int mult) {
  if (f.degree() < 1) return;
  for (auto& p : parts)
    if (p.factor == f) {
      p.multiplicity += mult;
      return;
    }
  parts.push_back(Part{f, mult});
}

// g(x) = h(x^p) over F_p (prime field): coefficients are Frobenius-fixed, so
// the p-th root just contracts exponents.
Polynomial pth_root(const Polynomial& g) {
  std::uint64_t p = g.field().modulus();
  std::vector<Scalar> v;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(g.degree()); k += p)
    v.push_back(g.coeff(k));
  return Polynomial(g.field(), std::move(v));
}

std::vector<Part> squarefree_char_p(const Polynomial& f) {
  std::vector<Part> parts;
  std::uint64_t p = f.field().modulus();
  Polynomial d = f.derivative();
  if (d.is_zero()) {
    for (const auto& part : squarefree_char_p(pth_root(f)))
      merge_part(parts, part.factor, part.multiplicity * static_cast<int>(p));
    return parts;
  }
  Polynomial g = poly_gcd(f, d);
  Polynomial w = f.divmod(g).quotient;
  int i = 1;
  while (w.degree() > 0) {
    Polynomial y = poly_gcd(w, g);
    Polynomial z = w.divmod(y).quotient;
    merge_part(parts, z, i);
    w = std::move(y);
    g = g.divmod(w).quotient;
    ++i;
  }
  if (g.degree() > 0) {
    for (const auto& part : squarefree_char_p(pth_root(g)))
      merge_part(parts, part.factor, part.multiplicity * static_cast<int>(p));
  }
  return parts;
}

std::vector<Part> squarefree_char_0(const Polynomial& f) {
  // Yun's algorithm
  std::vector<Part> parts;
  Polynomial d = f.derivative();
  Polynomial a = poly_gcd(f, d);
  Polynomial b = f.divmod(a).quotient;
  Polynomial c = d.divmod(a).quotient;
  int i = 1;
  while (b.degree() > 0) {
    Polynomial z = c - b.derivative();
    Polynomial g = poly_gcd(b, z);
    merge_part(parts, g, i);
    b = b.divmod(g).quotient;
    c = z.divmod(g).quotient;
    ++i;
  }
  return parts;
}

}  // namespace

std::vector<FactorSplit::Part> squarefree_decomposition(const Polynomial& f) {
  if (!f.is_monic()) throw error("squarefree_decomposition: non-monic input");
  if (f.field().is_rational()) return squarefree_char_0(f);
  return squarefree_char_p(f);
}

// ---------------------------------------------------------------------------
// Berlekamp factorization over F_p
// ---------------------------------------------------------------------------

namespace {

// splitting rng for large p; fixed seed keeps runs reproducible
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : state_(seed ? seed : 0x4b53u) {}
  std::uint64_t next() {
    // xorshift64*
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1Dull;
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

// Berlekamp on a monic squarefree f over F_p; returns monic irreducible
// factors (unsorted).
std::vector<Polynomial> berlekamp_squarefree(const Polynomial& f) {
  const Field& k = f.field();
  std::uint64_t p = k.modulus();
  std::size_t n = static_cast<std::size_t>(f.degree());
  if (n <= 1) return {f};

  // Q matrix: column i holds x^(i*p) mod f
  Matrix q(k, n, n);
  Polynomial xp = poly_pow_mod(Polynomial::x(k), p, f);
  Polynomial pw = Polynomial::constant(Scalar::one(k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < n; ++r) q.set(r, i, pw.coeff(r));
    pw = (pw * xp).mod(f);
  }
  Matrix kernel = (q - Matrix::identity(k, n)).kernel_basis();
  std::size_t r = kernel.cols();  // number of irreducible factors
  if (r == 1) return {f};

  std::vector<Polynomial> factors{f};
  SplitRng rng(0x4b53u);
  std::size_t basis_at = 0;
  while (factors.size() < r) {
    // next splitting element from the fixed-subalgebra kernel
    Polynomial v(k);
    if (basis_at < kernel.cols()) {
      std::vector<Scalar> coeffs;
      for (std::size_t row = 0; row < n; ++row)
        coeffs.push_back(kernel.at(row, basis_at));
      v = Polynomial(k, std::move(coeffs));
      ++basis_at;
    } else {
      // random F_p-combination of kernel vectors (large-p path)
      std::vector<Scalar> coeffs(n, Scalar::zero(k));
      for (std::size_t c = 0; c < kernel.cols(); ++c) {
        Scalar w = Scalar::of_residue(k, rng.below(p));
        for (std::size_t row = 0; row < n; ++row)
          coeffs[row] += w * kernel.at(row, c);
      }
      v = Polynomial(k, std::move(coeffs));
    }
    if (v.degree() < 1) continue;

    std::vector<Polynomial> next;
    for (const auto& g : factors) {
      if (g.degree() <= 1) {
        next.push_back(g);
        continue;
      }
      std::vector<Polynomial> pieces;
      if (p <= 4096) {
        // deterministic scan over the residue values of v
        Polynomial rest = g;
        for (std::uint64_t c = 0; c < p && rest.degree() > 0; ++c) {
          Polynomial shifted =
              v - Polynomial::constant(Scalar::of_residue(k, c));
          Polynomial d = poly_gcd(rest, shifted);
          if (d.degree() > 0) {
            pieces.push_back(d);
            rest = rest.divmod(d).quotient;
          }
        }
        if (rest.degree() > 0) pieces.push_back(rest);
      } else {
        // gcd with v^((p-1)/2) - 1 splits with probability ~1/2
        Polynomial w = poly_pow_mod(v, (p - 1) / 2, g) -
                       Polynomial::constant(Scalar::one(k));
        Polynomial d = poly_gcd(g, w);
        if (d.degree() > 0 && d.degree() < g.degree()) {
          pieces.push_back(d);
          pieces.push_back(g.divmod(d).quotient);
        } else {
          pieces.push_back(g);
        }
      }
      for (auto& piece : pieces) next.push_back(piece.monic());
    }
    factors = std::move(next);
  }
  return factors;
}

// exhaustive divisor list of |z|, or nullopt when z does not fully factor by
// trial division at desk scale
std::optional<std::vector<mpz_class>> divisors_of(const mpz_class& z0) {
  mpz_class z = abs(z0);
  if (z == 0) return std::nullopt;
  std::map<mpz_class, int> fact;
  for (mpz_class d = 2; d * d <= z && d < (1 << 20); ++d)
    while (z % d == 0) {
      ++fact[d];
      z /= d;
    }
  if (z > 1) {
    if (z >= (mpz_class(1) << 40)) return std::nullopt;  // unfactored cofactor
    ++fact[z];
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [prime, mult] : fact) {
    std::size_t sz = divs.size();
    mpz_class pk = 1;
    for (int e = 1; e <= mult; ++e) {
      pk *= prime;
      for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
    }
    if (divs.size() > 100000) return std::nullopt;
  }
  return divs;
}

// all rational roots of a monic f over Q; exhaustive flag reports whether
// the divisor enumeration was complete
struct RationalRoots {
  std::vector<Scalar> roots;  // without multiplicity (f squarefree here)
  bool exhaustive;
};

RationalRoots rational_roots(const Polynomial& f) {
  const Field& k = f.field();
  RationalRoots out{{}, true};
  Polynomial g = f;
  Scalar z = Scalar::zero(k);
  if (g.eval(z).is_zero()) {
    out.roots.push_back(z);
    g = g.divmod(Polynomial::x(k)).quotient;
  }
  if (g.degree() < 1) return out;
  // substitute t = s/D with D = lcm of denominators: integer roots of the
  // monic integer polynomial G(s) = D^n g(s/D) divide G(0)
  mpz_class den = 1;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(g.degree()); ++i)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
            g.coeff(i).rat().get_den().get_mpz_t());
  std::size_t n = static_cast<std::size_t>(g.degree());
  mpz_class g0 = 1;  // G(0) = g(0) * D^n
  {
    mpq_class c0 = g.coeff(0).rat();
    mpz_class dn;
    mpz_pow_ui(dn.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n));
    mpq_class v = c0 * mpq_class(dn);
    g0 = v.get_num();  // v is integral
  }
  auto divs = divisors_of(g0);
  if (!divs) {
    out.exhaustive = false;
    return out;
  }
  for (const auto& d : *divs) {
    for (int sign = 0; sign < 2; ++sign) {
      mpq_class cand(sign ? -d : d, den);
      cand.canonicalize();
      Scalar r = Scalar::of_mpq(cand);
      if (g.eval(r).is_zero()) out.roots.push_back(r);
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const Scalar& a, const Scalar& b) {
              return Scalar::compare(a, b) < 0;
            });
  out.roots.erase(std::unique(out.roots.begin(), out.roots.end()),
                  out.roots.end());
  return out;
}

}  // namespace

FactorSplit factor_split(const Polynomial& f) {
  if (!f.is_monic()) throw error("factor_split: input must be monic");
  if (f.degree() < 1) throw error("factor_split: degree must be >= 1");
  const Field& k = f.field();
  FactorSplit out{{}, true};

  for (const auto& sq : squarefree_decomposition(f)) {
    if (k.is_prime_field()) {
      std::vector<Polynomial> irr = berlekamp_squarefree(sq.factor);
      std::sort(irr.begin(), irr.end(), [](const Polynomial& a, const Polynomial& b) {
        return Polynomial::compare(a, b) < 0;
      });
      for (const auto& g : irr) merge_part(out.parts, g, sq.multiplicity);
      continue;
    }
    // over Q: peel off certified linear factors, then certify what is left
    RationalRoots rr = rational_roots(sq.factor);
    Polynomial rest = sq.factor;
    for (const auto& root : rr.roots) {
      Polynomial lin = Polynomial::x(k) - Polynomial::constant(root);
      merge_part(out.parts, lin, sq.multiplicity);
      rest = rest.divmod(lin).quotient;
    }
    if (rest.degree() >= 1) {
      bool certified =
          rest.degree() == 1 || (rest.degree() <= 3 && rr.exhaustive);
      if (!certified) out.complete = false;
      merge_part(out.parts, rest, sq.multiplicity);
    }
    if (!rr.exhaustive) out.complete = false;
  }

  std::sort(out.parts.begin(), out.parts.end(), [](const Part& a, const Part& b) {
    return Polynomial::compare(a.factor, b.factor) < 0;
  });
  return out;
}

// ---------------------------------------------------------------------------
// minimal and characteristic polynomials
// ---------------------------------------------------------------------------

Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw error("minimal_polynomial: non-square matrix");
  const Field& k = m.field();
  std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(Scalar::one(k));
  Matrix pw = Matrix::identity(k, n);
  Matrix krylov = pw.vectorize();  // columns: vec(M^0), vec(M^1), ...
  for (std::size_t d = 1;; ++d) {
    pw = pw * m;
    Matrix target = pw.vectorize();
    if (auto sol = krylov.solve(target)) {
      std::vector<Scalar> coeffs;
      for (std::size_t i = 0; i < d; ++i) coeffs.push_back(-sol->at(i, 0));
      coeffs.push_back(Scalar::one(k));
      return Polynomial(k, std::move(coeffs));
    }
    krylov = Matrix::hstack(krylov, target);
    if (d > n) throw error("minimal_polynomial: no dependency found");
  }
}

Polynomial charpoly(const Matrix& m) {
  if (!m.is_square()) throw error("charpoly: non-square matrix");
  const Field& k = m.field();
  std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(Scalar::one(k));

  // Berkowitz: iteratively extend the characteristic polynomial of leading
  // principal blocks; c[j] is the coefficient of t^(size - j).
  std::vector<Scalar> c{Scalar::one(k), -m.at(0, 0)};
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<Scalar> q(i + 2, Scalar::zero(k));
    q[0] = Scalar::one(k);
    q[1] = -m.at(i, i);
    Matrix s(k, i, 1);
    for (std::size_t r = 0; r < i; ++r) s.set(r, 0, m.at(r, i));
    Matrix blk(k, i, i);
    for (std::size_t r = 0; r < i; ++r)
      for (std::size_t cc = 0; cc < i; ++cc) blk.set(r, cc, m.at(r, cc));
    Matrix v = s;
    for (std::size_t t = 2; t <= i + 1; ++t) {
      Scalar dot = Scalar::zero(k);
      for (std::size_t r = 0; r < i; ++r) dot += m.at(i, r) * v.at(r, 0);
      q[t] = -dot;
      if (t <= i) v = blk * v;
    }
    std::vector<Scalar> next(i + 2, Scalar::zero(k));
    for (std::size_t j = 0; j < next.size(); ++j)
      for (std::size_t t = 0; t <= j && t < q.size(); ++t)
        if (j - t < c.size()) next[j] += q[t] * c[j - t];
    c = std::move(next);
  }
  // reorder to lowest-degree-first
  std::vector<Scalar> coeffs(n + 1, Scalar::zero(k));
  for (std::size_t j = 0; j <= n; ++j) coeffs[n - j] = c[j];
  return Polynomial(k, std::move(coeffs));
}

Scalar charpoly_coefficient(const Matrix& m, std::size_t k) {
  std::size_t n = m.rows();
  if (k > n) return Scalar::zero(m.field());
  Polynomial cp = charpoly(m);
  Scalar c = cp.coeff(n - k);
  return (k % 2 == 0) ? c : -c;
}

}  // namespace ksb
