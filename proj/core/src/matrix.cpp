#include "ksb/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace ksb {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

Matrix Matrix::zero(const Field& f, std::size_t rows, std::size_t cols) {
  return Matrix(f, rows, cols);
}

Matrix Matrix::column(const std::vector<Scalar>& entries) {
  if (entries.empty()) throw error("Matrix: empty column needs a field");
  Matrix m(entries.front().field(), entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

Matrix Matrix::from_rows(const Field& f,
                         const std::vector<std::vector<Scalar>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw error("Matrix: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw error("Matrix: index out of range");
  return data_[idx(r, c)];
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw error("Matrix: index out of range");
  if (v.field() != field_) throw error("Matrix: entry from wrong field");
  data_[idx(r, c)] = v;
}

void Matrix::check_same_shape(const Matrix& o) const {
  if (field_ != o.field_) throw error("Matrix: mixed fields");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw error("Matrix: dimension mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same_shape(o);
  Matrix m(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same_shape(o);
  Matrix m(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m(*this);
  for (auto& v : m.data_) v = -v;
  return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
  if (s.field() != field_) throw error("Matrix: scalar from wrong field");
  Matrix m(*this);
  for (auto& v : m.data_) v *= s;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_) throw error("Matrix: mixed fields");
  if (cols_ != o.rows_) throw error("Matrix: dimension mismatch in product");
  Matrix m(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = data_[idx(i, k)];
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.data_[o.idx(k, j)];
        if (b.is_zero()) continue;
        m.data_[m.idx(i, j)] += a * b;
      }
    }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.data_[m.idx(j, i)] = data_[idx(i, j)];
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_)
    return false;
  return a.data_ == b.data_ ? true
                            : std::equal(a.data_.begin(), a.data_.end(),
                                         b.data_.begin());
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& v = data_[idx(i, j)];
      if (i == j ? !v.is_one() : !v.is_zero()) return false;
    }
  return true;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw error("Matrix: trace of non-square matrix");
  Scalar t = Scalar::zero(field_);
  for (std::size_t i = 0; i < rows_; ++i) t += data_[idx(i, i)];
  return t;
}

Matrix Matrix::row(std::size_t r) const {
  Matrix m(field_, 1, cols_);
  for (std::size_t j = 0; j < cols_; ++j) m.data_[j] = data_[idx(r, j)];
  return m;
}

Matrix Matrix::col(std::size_t c) const {
  Matrix m(field_, rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) m.data_[i] = data_[idx(i, c)];
  return m;
}

void Matrix::set_col(std::size_t c, const Matrix& column) {
  if (column.rows_ != rows_ || column.cols_ != 1)
    throw error("Matrix: bad column shape");
  for (std::size_t i = 0; i < rows_; ++i) data_[idx(i, c)] = column.data_[i];
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_)
    throw error("Matrix: hstack mismatch");
  Matrix m(a.field_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) m.data_[m.idx(i, j)] = a.data_[a.idx(i, j)];
    for (std::size_t j = 0; j < b.cols_; ++j)
      m.data_[m.idx(i, a.cols_ + j)] = b.data_[b.idx(i, j)];
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.cols_ != b.cols_)
    throw error("Matrix: vstack mismatch");
  Matrix m(a.field_, a.rows_ + b.rows_, a.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) m.data_[m.idx(i, j)] = a.data_[a.idx(i, j)];
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      m.data_[m.idx(a.rows_ + i, j)] = b.data_[b.idx(i, j)];
  return m;
}

Matrix Matrix::kronecker(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw error("Matrix: mixed fields in kronecker");
  Matrix m(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& v = a.data_[a.idx(i, k)];
      if (v.is_zero()) continue;
      for (std::size_t j = 0; j < b.rows_; ++j)
        for (std::size_t l = 0; l < b.cols_; ++l)
          m.data_[m.idx(i * b.rows_ + j, k * b.cols_ + l)] =
              v * b.data_[b.idx(j, l)];
    }
  return m;
}

Matrix::Rref Matrix::rref() const {
  Matrix r(*this);
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    std::size_t sel = lead;
    while (sel < rows_ && r.data_[r.idx(sel, c)].is_zero()) ++sel;
    if (sel == rows_) continue;
    // swap into place, normalize, eliminate everywhere else
    if (sel != lead)
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(r.data_[r.idx(sel, j)], r.data_[r.idx(lead, j)]);
    Scalar inv = r.data_[r.idx(lead, c)].inverse();
    for (std::size_t j = c; j < cols_; ++j) r.data_[r.idx(lead, j)] *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == lead) continue;
      Scalar f = r.data_[r.idx(i, c)];
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < cols_; ++j)
        r.data_[r.idx(i, j)] -= f * r.data_[r.idx(lead, j)];
    }
    pivots.push_back(c);
    ++lead;
  }
  std::size_t rank = pivots.size();
  return Rref{std::move(r), std::move(pivots), rank};
}

Matrix Matrix::kernel_basis() const {
  Rref rr = rref();
  std::vector<std::size_t> free_cols;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (pi < rr.pivot_cols.size() && rr.pivot_cols[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  Matrix k(field_, cols_, free_cols.size());
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    std::size_t f = free_cols[fi];
    k.set(f, fi, Scalar::one(field_));
    for (std::size_t pr = 0; pr < rr.pivot_cols.size(); ++pr)
      k.set(rr.pivot_cols[pr], fi, -rr.reduced.at(pr, f));
  }
  return k;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
  if (b.rows_ != rows_) throw error("Matrix: solve dimension mismatch");
  Matrix aug = hstack(*this, b);
  Rref rr = aug.rref();
  for (std::size_t p : rr.pivot_cols)
    if (p >= cols_) return std::nullopt;  // pivot in the RHS block
  Matrix x(field_, cols_, b.cols_);
  for (std::size_t pr = 0; pr < rr.pivot_cols.size(); ++pr)
    for (std::size_t j = 0; j < b.cols_; ++j)
      x.set(rr.pivot_cols[pr], j, rr.reduced.at(pr, cols_ + j));
  return x;
}

std::optional<Matrix> Matrix::inverse() const {
  if (!is_square()) throw error("Matrix: inverse of non-square matrix");
  Matrix aug = hstack(*this, identity(field_, rows_));
  Rref rr = aug.rref();
  if (rr.rank != rows_) return std::nullopt;
  for (std::size_t i = 0; i < rows_; ++i)
    if (rr.pivot_cols[i] != i) return std::nullopt;
  Matrix inv(field_, rows_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rows_; ++j)
      inv.set(i, j, rr.reduced.at(i, rows_ + j));
  return inv;
}

bool Matrix::is_invertible() const {
  return is_square() && rank() == rows_;
}

Matrix Matrix::vectorize() const {
  Matrix v(field_, rows_ * cols_, 1);
  for (std::size_t i = 0; i < data_.size(); ++i) v.data_[i] = data_[i];
  return v;
}

Matrix Matrix::unvectorize(const Matrix& v, std::size_t rows,
                           std::size_t cols) {
  if (v.cols_ != 1 || v.rows_ != rows * cols)
    throw error("Matrix: unvectorize shape mismatch");
  Matrix m(v.field_, rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) m.data_[i] = v.data_[i];
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? " " : "") << at(i, j).to_string();
  }
  os << "]";
  return os.str();
}

LinearSolve solve_linear(const Matrix& a, const Matrix& b) {
  if (b.cols() != 1) throw error("solve_linear: b must be a column");
  return LinearSolve{a.solve(b), a.kernel_basis()};
}

}  // namespace ksb
