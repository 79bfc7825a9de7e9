#include "doctest.h"

#include <algorithm>

#include "ksb/polynomial.hpp"

using namespace ksb;

namespace {

Polynomial from_ints(const Field& f, std::vector<long> lows_first) {
  std::vector<Scalar> v;
  for (long c : lows_first) v.push_back(Scalar::of_int(f, c));
  return Polynomial(f, std::move(v));
}

// oracle: all roots of f in F_p by exhaustive scan
std::vector<std::uint64_t> root_scan(const Polynomial& f) {
  std::vector<std::uint64_t> roots;
  std::uint64_t p = f.field().modulus();
  for (std::uint64_t c = 0; c < p; ++c)
    if (f.eval(Scalar::of_residue(f.field(), c)).is_zero()) roots.push_back(c);
  return roots;
}

Polynomial reassemble(const FactorSplit& fs, const Field& f) {
  Polynomial prod = Polynomial::constant(Scalar::one(f));
  for (const auto& part : fs.parts)
    for (int i = 0; i < part.multiplicity; ++i) prod = prod * part.factor;
  return prod;
}

}  // namespace

TEST_CASE("divmod and gcd over both fields") {
  Field q = Field::rationals();
  Polynomial a = from_ints(q, {-1, 0, 1});  // t^2 - 1
  Polynomial b = from_ints(q, {1, 1});      // t + 1
  auto dm = a.divmod(b);
  CHECK(dm.quotient == from_ints(q, {-1, 1}));
  CHECK(dm.remainder.is_zero());
  CHECK(poly_gcd(a, b) == b);

  auto xg = poly_xgcd(from_ints(q, {0, 0, 1}), from_ints(q, {1, 1}));
  CHECK(xg.g == Polynomial::constant(Scalar::one(q)));
  CHECK(xg.u * from_ints(q, {0, 0, 1}) + xg.v * from_ints(q, {1, 1}) == xg.g);
}

TEST_CASE("minimal_polynomial: zero, identity, nilpotent") {
  Field q = Field::rationals();
  CHECK(minimal_polynomial(Matrix::zero(q, 2, 2)) == from_ints(q, {0, 1}));
  CHECK(minimal_polynomial(Matrix::identity(q, 3)) == from_ints(q, {-1, 1}));

  // M = [[0,1],[0,0]]: M != 0 and M^2 = 0 by direct power computation
  Matrix m(q, 2, 2);
  m.set(0, 1, Scalar::one(q));
  CHECK(!m.is_zero());
  CHECK((m * m).is_zero());
  CHECK(minimal_polynomial(m) == from_ints(q, {0, 0, 1}));
}

TEST_CASE("minimal polynomial annihilates and divides charpoly") {
  for (auto field : {Field::rationals(), Field::prime(5)}) {
    std::uint64_t s = 77;
    for (int trial = 0; trial < 15; ++trial) {
      std::size_t n = 2 + trial % 3;
      Matrix m(field, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          s = s * 6364136223846793005ull + 1442695040888963407ull;
          m.set(i, j, Scalar::of_int(field, static_cast<long>((s >> 33) % 7) - 3));
        }
      Polynomial mp = minimal_polynomial(m);
      CHECK(mp.eval(m).is_zero());
      Polynomial cp = charpoly(m);
      CHECK(cp.eval(m).is_zero());  // Cayley-Hamilton
      CHECK(cp.divmod(mp).remainder.is_zero());
    }
  }
}

TEST_CASE("charpoly matches trace and determinant in dimension 2") {
  Field q = Field::rationals();
  Matrix m(q, 2, 2);
  m.set(0, 0, Scalar::of_int(q, 3));
  m.set(0, 1, Scalar::of_int(q, 1));
  m.set(1, 0, Scalar::of_int(q, 4));
  m.set(1, 1, Scalar::of_int(q, -2));
  // det(tI - M) = t^2 - (tr)t + det = t^2 - t - 10
  CHECK(charpoly(m) == from_ints(q, {-10, -1, 1}));
  CHECK(charpoly_coefficient(m, 1) == Scalar::of_int(q, 1));    // trace
  CHECK(charpoly_coefficient(m, 2) == Scalar::of_int(q, -10));  // det
}

TEST_CASE("factor_split: t^2 - 1 over F_5 against exhaustive root scan") {
  Field f5 = Field::prime(5);
  Polynomial f = from_ints(f5, {-1, 0, 1});
  CHECK(root_scan(f) == std::vector<std::uint64_t>{1, 4});
  auto fs = factor_split(f);
  CHECK(fs.complete);
  REQUIRE(fs.parts.size() == 2);
  CHECK(fs.parts[0].factor == from_ints(f5, {-1, 1}));  // t - 1
  CHECK(fs.parts[1].factor == from_ints(f5, {1, 1}));   // t + 1 = t - 4
  CHECK(reassemble(fs, f5) == f);
}

TEST_CASE("factor_split: t^3 over Q is {t} with multiplicity 3") {
  Field q = Field::rationals();
  auto fs = factor_split(from_ints(q, {0, 0, 0, 1}));
  CHECK(fs.complete);
  REQUIRE(fs.parts.size() == 1);
  CHECK(fs.parts[0].factor == from_ints(q, {0, 1}));
  CHECK(fs.parts[0].multiplicity == 3);
}

TEST_CASE("factor_split: t^4 - 1 over F_5 splits into four linear factors") {
  Field f5 = Field::prime(5);
  Polynomial f = from_ints(f5, {-1, 0, 0, 0, 1});
  CHECK(root_scan(f) == std::vector<std::uint64_t>{1, 2, 3, 4});
  auto fs = factor_split(f);
  CHECK(fs.complete);
  REQUIRE(fs.parts.size() == 4);
  for (const auto& part : fs.parts) {
    CHECK(part.factor.degree() == 1);
    CHECK(part.multiplicity == 1);
  }
  CHECK(reassemble(fs, f5) == f);
}

TEST_CASE("factor_split invariants: coprime parts, exact reconstruction") {
  Field f3 = Field::prime(3);
  std::vector<Polynomial> cases = {
      from_ints(f3, {1, 1, 1}),               // t^2+t+1 = (t-1)^2 over F_3
      from_ints(f3, {0, 1, 0, 1}),            // t^3+t = t(t^2+1), t^2+1 irred
      from_ints(f3, {0, 0, 0, 1, 0, 0, 1}),   // t^6+t^3 = t^3 (t+1)^3
      from_ints(f3, {2, 0, 1, 1}),            // random cubic
      from_ints(f3, {1, 2, 0, 0, 1, 1}),      // random quintic
  };
  for (const auto& f : cases) {
    auto fs = factor_split(f.monic());
    CHECK(fs.complete);
    CHECK(reassemble(fs, f3) == f.monic());
    for (std::size_t i = 0; i < fs.parts.size(); ++i) {
      CHECK(fs.parts[i].factor.is_monic());
      for (std::size_t j = i + 1; j < fs.parts.size(); ++j) {
        Polynomial g = poly_gcd(fs.parts[i].factor, fs.parts[j].factor);
        CHECK(g.degree() == 0);
      }
    }
    // linear-factor part agrees with exhaustive root enumeration
    auto roots = root_scan(f);
    std::vector<std::uint64_t> lin;
    for (const auto& part : fs.parts)
      if (part.factor.degree() == 1)
        lin.push_back((-part.factor.coeff(0)).res());
    std::sort(lin.begin(), lin.end());
    std::vector<std::uint64_t> uniq_roots(roots);
    CHECK(lin == uniq_roots);
  }
}

TEST_CASE("factor_split over Q: rational roots and the partial flag") {
  Field q = Field::rationals();
  // (t - 1/2)(t + 3) t
  Polynomial f = from_ints(q, {0, 1}) *
                 (from_ints(q, {0, 1}) - Polynomial::constant(Scalar::of_fraction(1, 2))) *
                 from_ints(q, {3, 1});
  auto fs = factor_split(f.monic());
  CHECK(fs.complete);
  CHECK(fs.parts.size() == 3);

  // cyclotomic degree 4: irreducible over Q but not certifiable at degree 4
  Polynomial phi5 = from_ints(q, {1, 1, 1, 1, 1});
  auto fs5 = factor_split(phi5);
  CHECK(!fs5.complete);
  CHECK(reassemble(fs5, q) == phi5);

  // degree-3 with no rational root is certified irreducible
  Polynomial c3 = from_ints(q, {-2, 0, 0, 1});  // t^3 - 2
  auto fs3 = factor_split(c3);
  CHECK(fs3.complete);
  REQUIRE(fs3.parts.size() == 1);
  CHECK(fs3.parts[0].factor == c3);

  // squarefree split with non-monic-looking content: (t^2-1)^2 (t-2)
  Polynomial g = from_ints(q, {-1, 0, 1}) * from_ints(q, {-1, 0, 1}) *
                 from_ints(q, {-2, 1});
  auto fsg = factor_split(g);
  CHECK(fsg.complete);
  CHECK(reassemble(fsg, q) == g);
}

TEST_CASE("factor_split over F_2: char-p squarefree with p-th roots") {
  Field f2 = Field::prime(2);
  // t^4 + t^2 = (t^2+t)^2 = t^2 (t+1)^2
  Polynomial f = from_ints(f2, {0, 0, 1, 0, 1});
  auto fs = factor_split(f);
  CHECK(fs.complete);
  REQUIRE(fs.parts.size() == 2);
  CHECK(fs.parts[0].multiplicity == 2);
  CHECK(fs.parts[1].multiplicity == 2);
  CHECK(reassemble(fs, f2) == f);

  // irreducible quadratic stays whole
  auto fi = factor_split(from_ints(f2, {1, 1, 1}));
  CHECK(fi.complete);
  REQUIRE(fi.parts.size() == 1);
  CHECK(fi.parts[0].factor.degree() == 2);
}
