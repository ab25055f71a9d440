#include "eitff/numerics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace eitff {

ComplexMatrix to_complex(const RealMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

template <typename T>
static double max_abs_diff_impl(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorKind::DimensionMismatch, "matrix shapes differ");
  double m = 0.0;
  auto da = a.data();
  auto db = b.data();
  for (std::size_t k = 0; k < da.size(); ++k)
    m = std::max(m, std::abs(da[k] - db[k]));
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return max_abs_diff_impl(a, b);
}
double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  return max_abs_diff_impl(a, b);
}

double max_imag(const ComplexMatrix& m) {
  double out = 0.0;
  for (const auto& z : m.data()) out = std::max(out, std::abs(z.imag()));
  return out;
}

BlockMatrix::BlockMatrix(std::size_t n, std::size_t r)
    : n_(n), r_(r), blocks_(n * n, ComplexMatrix(r, r)) {}

void BlockMatrix::set_block(std::size_t i, std::size_t j, ComplexMatrix b) {
  if (b.rows() != r_ || b.cols() != r_)
    fail(ErrorKind::DimensionMismatch,
         "block must be " + std::to_string(r_) + "x" + std::to_string(r_));
  blocks_[i * n_ + j] = std::move(b);
}

ComplexMatrix BlockMatrix::flatten() const {
  ComplexMatrix out(order(), order());
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const auto& b = block(i, j);
      for (std::size_t a = 0; a < r_; ++a)
        for (std::size_t c = 0; c < r_; ++c) out(i * r_ + a, j * r_ + c) = b(a, c);
    }
  return out;
}

BlockMatrix BlockMatrix::from_flat(const ComplexMatrix& flat, std::size_t r) {
  if (r == 0 || !flat.square() || flat.rows() % r != 0)
    fail(ErrorKind::DimensionMismatch, "flat matrix is not an r-block grid");
  const std::size_t n = flat.rows() / r;
  BlockMatrix out(n, r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto& b = out.block(i, j);
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t c = 0; c < r; ++c) b(a, c) = flat(i * r + a, j * r + c);
    }
  return out;
}

namespace {

template <typename T>
T unit_phase(const T& x, double magnitude) {
  return x / magnitude;
}

/// Cyclic-by-row Jacobi. On return `a` is diagonal and `v` holds the
/// accumulated unitary; columns of v are eigenvectors.
template <typename T>
void jacobi_sweeps(Matrix<T>& a, Matrix<T>& v) {
  const std::size_t n = a.rows();
  const double norm = a.frobenius_norm();
  const double target =
      std::numeric_limits<double>::epsilon() * static_cast<double>(n) * norm;

  for (int sweep = 0; sweep <= kJacobiSweepBudget; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(2.0 * off) <= target || norm == 0.0) return;
    if (sweep == kJacobiSweepBudget) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const T apq = a(p, q);
        const double g = std::abs(apq);
        if (g < std::numeric_limits<double>::min()) continue;
        const double app = std::real(a(p, p));
        const double aqq = std::real(a(q, q));
        const double theta = (aqq - app) / (2.0 * g);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const T e = unit_phase(apq, g);
        const T ebar = conj_value(e);

        // A <- A U with U = [[c, s], [-s ebar, c ebar]] on (p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const T akp = a(k, p);
          const T akq = a(k, q);
          a(k, p) = c * akp - s * ebar * akq;
          a(k, q) = s * akp + c * ebar * akq;
        }
        // A <- U* A.
        for (std::size_t k = 0; k < n; ++k) {
          const T apk = a(p, k);
          const T aqk = a(q, k);
          a(p, k) = c * apk - s * e * aqk;
          a(q, k) = s * apk + c * e * aqk;
        }
        a(p, q) = T{};
        a(q, p) = T{};
        a(p, p) = app - t * g;
        a(q, q) = aqq + t * g;

        for (std::size_t k = 0; k < n; ++k) {
          const T vkp = v(k, p);
          const T vkq = v(k, q);
          v(k, p) = c * vkp - s * ebar * vkq;
          v(k, q) = s * vkp + c * ebar * vkq;
        }
      }
    }
  }
  fail(ErrorKind::NoConvergence,
       "Jacobi iteration exceeded " + std::to_string(kJacobiSweepBudget) +
           " sweeps");
}

bool lex_less(const ComplexMatrix& v, std::size_t a, std::size_t b) {
  for (std::size_t k = 0; k < v.rows(); ++k) {
    const Complex x = v(k, a);
    const Complex y = v(k, b);
    if (x.real() != y.real()) return x.real() < y.real();
    if (x.imag() != y.imag()) return x.imag() < y.imag();
  }
  return false;
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& h, double tol) {
  if (!h.square())
    fail(ErrorKind::DimensionMismatch, "eigenproblem needs a square matrix");
  const std::size_t n = h.rows();
  const double scale = std::max(1.0, h.max_abs());
  bool real = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (std::abs(h(i, j) - std::conj(h(j, i))) > tol * scale)
        fail(ErrorKind::NotHermitian, "matrix is not Hermitian",
             "entry(" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (h(i, j).imag() != 0.0) real = false;
    }
  }

  std::vector<double> diag(n);
  ComplexMatrix vectors;
  if (real) {
    RealMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a(i, j) = 0.5 * (h(i, j).real() + h(j, i).real());
    RealMatrix v = RealMatrix::identity(n);
    jacobi_sweeps(a, v);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i);
    vectors = to_complex(v);
  } else {
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
    ComplexMatrix v = ComplexMatrix::identity(n);
    jacobi_sweeps(a, v);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
    vectors = std::move(v);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (diag[a] != diag[b]) return diag[a] > diag[b];
    return lex_less(vectors, a, b);
  });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = diag[order[k]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = vectors(i, order[k]);
  }
  return out;
}

std::size_t Spectrum::total_multiplicity() const {
  std::size_t total = 0;
  for (const auto& c : clusters) total += c.multiplicity;
  return total;
}

Spectrum cluster_eigenvalues(std::span<const double> values, double tol) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  Spectrum out;
  out.tolerance = tol;
  std::size_t start = 0;
  for (std::size_t k = 1; k <= sorted.size(); ++k) {
    if (k == sorted.size() || sorted[k - 1] - sorted[k] > tol) {
      const double sum =
          std::accumulate(sorted.begin() + static_cast<std::ptrdiff_t>(start),
                          sorted.begin() + static_cast<std::ptrdiff_t>(k), 0.0);
      out.clusters.push_back({sum / static_cast<double>(k - start), k - start});
      start = k;
    }
  }
  for (std::size_t k = 1; k < out.clusters.size(); ++k) {
    if (out.clusters[k - 1].value - out.clusters[k].value <= 2.0 * tol)
      fail(ErrorKind::AmbiguousClustering,
           "cluster representatives " + std::to_string(out.clusters[k - 1].value) +
               " and " + std::to_string(out.clusters[k].value) +
               " are within 2*tol");
  }
  return out;
}

std::vector<double> singular_values(const ComplexMatrix& x, double tol) {
  const auto gram = x.adjoint() * x;
  auto eig = hermitian_eigen(gram, tol);
  std::vector<double> out;
  out.reserve(eig.values.size());
  for (double v : eig.values) out.push_back(std::sqrt(std::max(0.0, v)));
  return out;
}

}  // namespace eitff
