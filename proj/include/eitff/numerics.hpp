#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "eitff/error.hpp"

namespace eitff {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr int kJacobiSweepBudget = 100;

inline double conj_value(double x) { return x; }
inline Complex conj_value(const Complex& z) { return std::conj(z); }

/// Dense row-major matrix over double or Complex.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const T> data() const { return data_; }
  std::span<T> data() { return data_; }

  /// Conjugate transpose (plain transpose for real matrices).
  Matrix adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        out(j, i) = conj_value((*this)(i, j));
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix& operator+=(const Matrix& other) {
    check_same_shape(other);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& other) {
    check_same_shape(other);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        if (aik == T{}) continue;
        const T* brow = b.data_.data() + k * b.cols_;
        T* orow = out.data_.data() + i * out.cols_;
        for (std::size_t j = 0; j < b.cols_; ++j) orow[j] += aik * brow[j];
      }
    }
    return out;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& x : data_) s += std::norm(x);
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& x : data_) m = std::max(m, std::abs(x));
    return m;
  }

  bool operator==(const Matrix&) const = default;

 private:
  void check_same_shape(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
      fail(ErrorKind::DimensionMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<Complex>;

ComplexMatrix to_complex(const RealMatrix& m);
/// Largest entrywise |a - b|; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(const RealMatrix& a, const RealMatrix& b);
/// Largest |Im| over all entries.
double max_imag(const ComplexMatrix& m);

/// n×n grid of r×r complex blocks.
class BlockMatrix {
 public:
  BlockMatrix() = default;
  BlockMatrix(std::size_t n, std::size_t r);

  std::size_t n() const { return n_; }
  std::size_t r() const { return r_; }
  std::size_t order() const { return n_ * r_; }

  ComplexMatrix& block(std::size_t i, std::size_t j) {
    return blocks_[i * n_ + j];
  }
  const ComplexMatrix& block(std::size_t i, std::size_t j) const {
    return blocks_[i * n_ + j];
  }

  /// Replaces block (i,j); the block must be r×r.
  void set_block(std::size_t i, std::size_t j, ComplexMatrix b);

  ComplexMatrix flatten() const;
  static BlockMatrix from_flat(const ComplexMatrix& flat, std::size_t r);

 private:
  std::size_t n_ = 0;
  std::size_t r_ = 0;
  std::vector<ComplexMatrix> blocks_;
};

struct EigenDecomposition {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Cyclic Jacobi eigensolver for Hermitian matrices. Real symmetric input
/// takes a real-arithmetic path. Throws NotHermitian when H differs from its
/// adjoint by more than tol (relative to max(1, max|H|)) and NoConvergence
/// after kJacobiSweepBudget sweeps.
EigenDecomposition hermitian_eigen(const ComplexMatrix& h,
                                   double tol = kDefaultTol);

struct Cluster {
  double value;
  std::size_t multiplicity;
};

struct Spectrum {
  std::vector<Cluster> clusters;  // descending by value
  double tolerance = kDefaultTol;

  std::size_t total_multiplicity() const;
};

/// Greedy clustering: consecutive sorted values closer than tol share a
/// cluster, represented by their mean. Throws AmbiguousClustering when two
/// resulting representatives lie within 2·tol of each other.
Spectrum cluster_eigenvalues(std::span<const double> values,
                             double tol = kDefaultTol);

/// Singular values (descending) as square roots of the eigenvalues of X*X.
std::vector<double> singular_values(const ComplexMatrix& x,
                                    double tol = kDefaultTol);

}  // namespace eitff
