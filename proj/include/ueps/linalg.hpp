#pragma once

// Dense matrices over an exact field scalar (cyclo::Number, mpq_class, ...)
// plus the handful of elimination routines the project needs.  Pivoting is
// on "first nonzero entry": the scalars are exact, so no magnitude pivoting
// is wanted or possible.

#include <optional>
#include <stdexcept>
#include <vector>

namespace ueps::la {

template <class T>
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int r, int c) : r_(r), c_(c), a_(size_t(r) * c, T{}) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }
  const std::vector<T>& flat() const { return a_; }

  bool operator==(const Mat& o) const {
    return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!(x == T{})) return false;
    return true;
  }

  Mat operator+(const Mat& o) const {
    Mat m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
  }
  Mat operator-(const Mat& o) const {
    Mat m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
  }
  Mat operator*(const Mat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
    Mat m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const T& x = (*this)(i, k);
        if (x == T{}) continue;
        for (int j = 0; j < o.c_; ++j) {
          const T& y = o(k, j);
          if (y == T{}) continue;
          m(i, j) += x * y;
        }
      }
    return m;
  }
  Mat scaled(const T& s) const {
    Mat m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
  }

  Mat pow(long e) const {
    Mat acc = identity(r_), base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  // Scalar multiple of the identity?  Fills the scalar when true.
  bool is_scalar(T& s) const {
    if (r_ != c_ || r_ == 0) return false;
    s = (*this)(0, 0);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) {
        if (i == j && !((*this)(i, j) == s)) return false;
        if (i != j && !((*this)(i, j) == T{})) return false;
      }
    return true;
  }

 private:
  int r_, c_;
  std::vector<T> a_;
};

template <class T>
int rank(Mat<T> m) {
  int rk = 0;
  for (int col = 0; col < m.cols() && rk < m.rows(); ++col) {
    int piv = -1;
    for (int i = rk; i < m.rows(); ++i)
      if (!(m(i, col) == T{})) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(rk, j), m(piv, j));
    T inv = T(1) / m(rk, col);
    for (int j = col; j < m.cols(); ++j) m(rk, j) = m(rk, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == rk || m(i, col) == T{}) continue;
      T f = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        m(i, j) = m(i, j) - f * m(rk, j);
    }
    ++rk;
  }
  return rk;
}

template <class T>
std::optional<Mat<T>> inverse(const Mat<T>& m) {
  const int n = m.rows();
  Mat<T> w(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = m(i, j);
    w(i, n + i) = T(1);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!(w(i, col) == T{})) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    for (int j = 0; j < 2 * n; ++j) std::swap(w(col, j), w(piv, j));
    T inv = T(1) / w(col, col);
    for (int j = 0; j < 2 * n; ++j) w(col, j) = w(col, j) * inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || w(i, col) == T{}) continue;
      T f = w(i, col);
      for (int j = 0; j < 2 * n; ++j) w(i, j) = w(i, j) - f * w(col, j);
    }
  }
  Mat<T> out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = w(i, n + j);
  return out;
}

// Basis of the right nullspace of m (vectors of length cols).
template <class T>
std::vector<std::vector<T>> nullspace(Mat<T> m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivot_col;
  int rk = 0;
  for (int col = 0; col < cols && rk < rows; ++col) {
    int piv = -1;
    for (int i = rk; i < rows; ++i)
      if (!(m(i, col) == T{})) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(m(rk, j), m(piv, j));
    T inv = T(1) / m(rk, col);
    for (int j = col; j < cols; ++j) m(rk, j) = m(rk, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == rk || m(i, col) == T{}) continue;
      T f = m(i, col);
      for (int j = col; j < cols; ++j) m(i, j) = m(i, j) - f * m(rk, j);
    }
    pivot_col.push_back(col);
    ++rk;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(cols, T{});
    v[free] = T(1);
    for (int i = 0; i < rk; ++i) v[pivot_col[i]] = T{} - m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Incremental row-echelon span; used for Burnside-type closure computations.
template <class T>
class RowSpan {
 public:
  explicit RowSpan(int width) : width_(width) {}

  int rank() const { return (int)rows_.size(); }

  // Returns true when v enlarged the span.
  bool insert(std::vector<T> v) {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const T& x = v[pivots_[r]];
      if (x == T{}) continue;
      for (int j = 0; j < width_; ++j) v[j] = v[j] - x * rows_[r][j];
    }
    int p = -1;
    for (int j = 0; j < width_; ++j)
      if (!(v[j] == T{})) {
        p = j;
        break;
      }
    if (p < 0) return false;
    T inv = T(1) / v[p];
    for (int j = p; j < width_; ++j) v[j] = v[j] * inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  bool contains(std::vector<T> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const T& x = v[pivots_[r]];
      if (x == T{}) continue;
      for (int j = 0; j < width_; ++j) v[j] = v[j] - x * rows_[r][j];
    }
    for (int j = 0; j < width_; ++j)
      if (!(v[j] == T{})) return false;
    return true;
  }

 private:
  int width_;
  std::vector<std::vector<T>> rows_;
  std::vector<int> pivots_;
};

}  // namespace ueps::la
