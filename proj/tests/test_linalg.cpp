#include "doctest.h"

#include "ksb/matrix.hpp"

using namespace ksb;

namespace {

// deterministic generator for property-style tests
struct TestRng {
  std::uint64_t s;
  explicit TestRng(std::uint64_t seed) : s(seed ? seed : 1) {}
  std::uint64_t next() {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return s * 0x2545F4914F6CDD1Dull;
  }
  Scalar scalar(const Field& f, long spread = 5) {
    if (f.is_rational())
      return Scalar::of_int(f, static_cast<long>(next() % (2 * spread + 1)) - spread);
    return Scalar::of_residue(f, next() % f.modulus());
  }
  Matrix matrix(const Field& f, std::size_t r, std::size_t c) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, scalar(f));
    return m;
  }
};

Matrix col2(const Field& f, long a, long b) {
  Matrix m(f, 2, 1);
  m.set(0, 0, Scalar::of_int(f, a));
  m.set(1, 0, Scalar::of_int(f, b));
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact in both fields") {
  Field q = Field::rationals();
  CHECK(Scalar::of_fraction(1, 3) + Scalar::of_fraction(1, 6) ==
        Scalar::of_fraction(1, 2));
  CHECK(Scalar::of_fraction(2, 4) == Scalar::of_fraction(1, 2));
  CHECK(Scalar::parse(q, "-3/9") == Scalar::of_fraction(-1, 3));
  CHECK(Scalar::of_fraction(7, 2).inverse() == Scalar::of_fraction(2, 7));

  Field f5 = Field::prime(5);
  CHECK(Scalar::of_int(f5, 7) == Scalar::of_residue(f5, 2));
  CHECK(Scalar::of_int(f5, -1) == Scalar::of_residue(f5, 4));
  CHECK(Scalar::of_residue(f5, 3).inverse() == Scalar::of_residue(f5, 2));
  CHECK(Scalar::parse(f5, "-13") == Scalar::of_residue(f5, 2));
  CHECK_THROWS_AS(Scalar::of_residue(f5, 0).inverse(), error);
  CHECK_THROWS_AS(Field::prime(6), error);
  CHECK_THROWS_AS(Field::prime(1), error);
  CHECK_THROWS_AS(Scalar::one(q) + Scalar::one(f5), error);
}

TEST_CASE("solve_linear: identity case") {
  Field q = Field::rationals();
  Matrix a = Matrix::identity(q, 2);
  auto res = solve_linear(a, col2(q, 1, 0));
  REQUIRE(res.solution.has_value());
  CHECK(*res.solution == col2(q, 1, 0));
  CHECK(res.kernel.cols() == 0);
}

TEST_CASE("solve_linear: zero map") {
  Field q = Field::rationals();
  Matrix a = Matrix::zero(q, 1, 2);
  Matrix b(q, 1, 1);
  auto res = solve_linear(a, b);
  REQUIRE(res.solution.has_value());
  CHECK(res.solution->is_zero());
  CHECK(res.kernel.cols() == 2);
}

TEST_CASE("solve_linear: inconsistent system, hand row-reduction oracle") {
  // rows (1,1|1),(2,2|3): subtracting twice the first row leaves (0,0|1),
  // so the system is inconsistent but the kernel is spanned by (1,-1).
  Field q = Field::rationals();
  Matrix a(q, 2, 2);
  a.set(0, 0, Scalar::of_int(q, 1));
  a.set(0, 1, Scalar::of_int(q, 1));
  a.set(1, 0, Scalar::of_int(q, 2));
  a.set(1, 1, Scalar::of_int(q, 2));
  auto res = solve_linear(a, col2(q, 1, 3));
  CHECK(!res.solution.has_value());
  REQUIRE(res.kernel.cols() == 1);
  CHECK(a * res.kernel == Matrix::zero(q, 2, 1));
}

TEST_CASE("solve_linear invariant: A(x + k) = b exactly") {
  for (auto field : {Field::rationals(), Field::prime(7)}) {
    TestRng rng(42);
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t n = 1 + trial % 4, m = 1 + (trial / 2) % 4;
      Matrix a = rng.matrix(field, n, m);
      Matrix x0 = rng.matrix(field, m, 1);
      Matrix b = a * x0;  // guaranteed consistent
      auto res = solve_linear(a, b);
      REQUIRE(res.solution.has_value());
      CHECK(a * *res.solution == b);
      for (std::size_t kcol = 0; kcol < res.kernel.cols(); ++kcol) {
        Matrix xk = *res.solution + res.kernel.col(kcol);
        CHECK(a * xk == b);
      }
      CHECK(res.kernel.cols() + a.rank() == m);
    }
  }
}

TEST_CASE("rref is deterministic and idempotent") {
  Field f3 = Field::prime(3);
  TestRng rng(7);
  Matrix m = rng.matrix(f3, 4, 6);
  auto r1 = m.rref();
  auto r2 = m.rref();
  CHECK(r1.reduced == r2.reduced);
  CHECK(r1.pivot_cols == r2.pivot_cols);
  CHECK(r1.reduced.rref().reduced == r1.reduced);
}

TEST_CASE("inverse round-trips and detects singularity") {
  Field q = Field::rationals();
  TestRng rng(11);
  int invertible_seen = 0;
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = rng.matrix(q, 3, 3);
    auto inv = m.inverse();
    if (!inv) {
      CHECK(m.rank() < 3);
      continue;
    }
    ++invertible_seen;
    CHECK((m * *inv).is_identity());
    CHECK((*inv * m).is_identity());
  }
  CHECK(invertible_seen > 5);
}

TEST_CASE("kronecker respects the row-major pairing convention") {
  Field q = Field::rationals();
  TestRng rng(3);
  Matrix a = rng.matrix(q, 2, 3), b = rng.matrix(q, 3, 2);
  Matrix u = rng.matrix(q, 3, 1), v = rng.matrix(q, 2, 1);
  // (A (x) B)(u (x) v) = Au (x) Bv
  Matrix uv = Matrix::kronecker(u, v);
  CHECK(Matrix::kronecker(a, b) * uv == Matrix::kronecker(a * u, b * v));
}

TEST_CASE("vectorize matches the kronecker identities") {
  Field f5 = Field::prime(5);
  TestRng rng(9);
  Matrix a = rng.matrix(f5, 3, 3), x = rng.matrix(f5, 3, 4), c = rng.matrix(f5, 4, 4);
  Matrix id3 = Matrix::identity(f5, 3), id4 = Matrix::identity(f5, 4);
  CHECK(Matrix::kronecker(a, id4) * x.vectorize() == (a * x).vectorize());
  CHECK(Matrix::kronecker(id3, c.transpose()) * x.vectorize() ==
        (x * c).vectorize());
}
