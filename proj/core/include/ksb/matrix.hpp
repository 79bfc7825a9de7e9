#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ksb/field.hpp"

namespace ksb {

struct RrefResult;

/// Dense matrix over one Field. Immutable in spirit: operations return new
/// values; in-place mutation is limited to construction-time filling.
class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols);  // zero-filled

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix zero(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix column(const std::vector<Scalar>& entries);
  static Matrix from_rows(const Field& f,
                          const std::vector<std::vector<Scalar>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }

  Scalar trace() const;

  Matrix row(std::size_t r) const;
  Matrix col(std::size_t c) const;
  void set_col(std::size_t c, const Matrix& column);

  /// Horizontal/vertical stacking. Fields and shared dimensions must agree.
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);

  /// Kronecker product, row-major block convention:
  /// (A (x) B)[(i,j),(k,l)] = A[i,k] * B[j,l] with row index i*B.rows + j.
  static Matrix kronecker(const Matrix& a, const Matrix& b);

  /// Reduced row echelon form. Pivoting is deterministic: columns are
  /// scanned left to right, the pivot is the first row with a nonzero entry.
  struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank;
  };
  Rref rref() const;

  std::size_t rank() const { return rref().rank; }

  /// Canonical kernel basis: one column per free column f, with entry 1 at f
  /// and the pivot rows filled in from the RREF. Columns ordered by f.
  Matrix kernel_basis() const;

  /// Particular solution of A X = B (free variables set to zero), or nullopt
  /// if any column of B is inconsistent.
  std::optional<Matrix> solve(const Matrix& b) const;

  std::optional<Matrix> inverse() const;
  bool is_invertible() const;

  /// Row-major flattening as a single column, vec(X)[r*cols + c] = X(r,c).
  Matrix vectorize() const;
  static Matrix unvectorize(const Matrix& v, std::size_t rows,
                            std::size_t cols);

  std::string to_string() const;

 private:
  std::size_t idx(std::size_t r, std::size_t c) const { return r * cols_ + c; }
  void check_same_shape(const Matrix& o) const;

  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

/// Particular solution plus a canonical basis of the homogeneous kernel.
struct LinearSolve {
  std::optional<Matrix> solution;  // nullopt = inconsistent
  Matrix kernel;                   // columns form the kernel basis
};

/// Exact solver for A x = b (b a column). Always returns the kernel basis.
LinearSolve solve_linear(const Matrix& a, const Matrix& b);

}  // namespace ksb
