#pragma once

#include <vector>

#include "ksb/matrix.hpp"

namespace ksb {

/// Univariate polynomial over one Field, coefficients lowest degree first.
/// Normalized: the zero polynomial has an empty coefficient list, otherwise
/// the leading coefficient is nonzero.
class Polynomial {
 public:
  explicit Polynomial(const Field& f) : field_(f) {}
  Polynomial(const Field& f, std::vector<Scalar> coeffs);

  static Polynomial zero(const Field& f) { return Polynomial(f); }
  static Polynomial constant(const Scalar& c);
  static Polynomial monomial(const Scalar& c, std::size_t degree);
  static Polynomial x(const Field& f);

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  Scalar coeff(std::size_t k) const;
  Scalar leading() const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& s) const;
  Polynomial monic() const;  // throws on zero

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  struct DivMod {
    Polynomial quotient, remainder;
  };
  DivMod divmod(const Polynomial& divisor) const;  // throws on zero divisor
  Polynomial mod(const Polynomial& divisor) const;
  Polynomial derivative() const;

  Scalar eval(const Scalar& at) const;
  Matrix eval(const Matrix& at) const;  // at square

  /// Deterministic total order for canonical factor lists: by degree, then
  /// lexicographically on coefficients from the top.
  static int compare(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;  // e.g. "t^2 - 3/2*t + 1"

 private:
  void normalize();
  Field field_;
  std::vector<Scalar> coeffs_;
};

/// Monic gcd (Euclid); gcd(0,0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// Extended gcd: returns monic g plus u, v with u*a + v*b = g.
struct PolyXgcd {
  Polynomial g, u, v;
};
PolyXgcd poly_xgcd(const Polynomial& a, const Polynomial& b);

Polynomial poly_pow_mod(const Polynomial& base, std::uint64_t e,
                        const Polynomial& modulus);

/// Pairwise-coprime monic factors with multiplicities. The product of
/// factor^multiplicity over all parts reconstructs the input exactly.
/// `complete` means every factor is certified irreducible: always true over
/// F_p (Berlekamp); over Q only when each factor is linear, or of degree 2-3
/// with exhaustive rational-root exclusion.
struct FactorSplit {
  struct Part {
    Polynomial factor;
    int multiplicity;
  };
  std::vector<Part> parts;
  bool complete;
};
FactorSplit factor_split(const Polynomial& f);  // f monic, degree >= 1

/// Squarefree decomposition (pairwise coprime squarefree parts with
/// multiplicities); valid in characteristic 0 and p.
std::vector<FactorSplit::Part> squarefree_decomposition(const Polynomial& f);

/// Monic minimal polynomial of a square matrix: the first linear dependency
/// among I, M, M^2, ...
Polynomial minimal_polynomial(const Matrix& m);

/// Characteristic polynomial det(tI - M), computed division-free (Berkowitz).
Polynomial charpoly(const Matrix& m);

/// sigma_k(M): k-th elementary-symmetric coefficient of charpoly, i.e.
/// det(tI - M) = sum_k (-1)^k sigma_k t^(n-k).
Scalar charpoly_coefficient(const Matrix& m, std::size_t k);

}  // namespace ksb
