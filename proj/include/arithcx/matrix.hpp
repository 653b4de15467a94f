#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace arithcx {

// Dense row-major matrix over an exact coefficient ring.  The entry type
// must provide +, -, *, unary -, ==, and a default constructor yielding the
// ring zero.  All arithmetic is exact; there is no overflow path.
template <typename T>
class Matrix {
public:
  Matrix() = default;
  Matrix(long rows, long cols)
      : rows_(rows), cols_(cols),
        entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }

  static Matrix identity(long n) {
    Matrix m(n, n);
    for (long i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  T& operator()(long r, long c) { return entries_[index(r, c)]; }
  const T& operator()(long r, long c) const { return entries_[index(r, c)]; }

  bool is_zero() const {
    const T zero{};
    for (const T& e : entries_)
      if (!(e == zero)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (long r = 0; r < rows_; ++r)
      for (long c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
  }

  Matrix operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = -entries_[i];
    return m;
  }

  Matrix block(long r0, long c0, long nrows, long ncols) const {
    if (r0 < 0 || c0 < 0 || r0 + nrows > rows_ || c0 + ncols > cols_)
      throw std::invalid_argument("block out of range");
    Matrix m(nrows, ncols);
    for (long r = 0; r < nrows; ++r)
      for (long c = 0; c < ncols; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      m.entries_[i] = a.entries_[i] + b.entries_[i];
    return m;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      m.entries_[i] = a.entries_[i] - b.entries_[i];
    return m;
  }

  // Exact ring product.  Zero entries are skipped; the differentials built
  // here are sparse and this keeps symbolic composites cheap.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix m(a.rows_, b.cols_);
    const T zero{};
    for (long i = 0; i < a.rows_; ++i)
      for (long k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == zero) continue;
        for (long j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (bkj == zero) continue;
          m(i, j) += aik * bkj;
        }
      }
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t index(long r, long c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  long rows_ = 0;
  long cols_ = 0;
  std::vector<T> entries_;
};

template <typename U, typename T, typename F>
Matrix<U> map_entries(const Matrix<T>& a, F&& f) {
  Matrix<U> m(a.rows(), a.cols());
  for (long r = 0; r < a.rows(); ++r)
    for (long c = 0; c < a.cols(); ++c) m(r, c) = f(a(r, c));
  return m;
}

} // namespace arithcx
