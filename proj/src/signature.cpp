#include "eitff/signature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eitff/error.hpp"

namespace eitff {
namespace {

std::string block_loc(std::size_t i, std::size_t j) {
  return "block(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

bool SignatureMatrix::is_real(double tol) const {
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j)
      if (max_imag(block(i, j)) > tol) return false;
  return true;
}

SignatureReport verify_signature(const SignatureMatrix& s, double tol,
                                 double cluster_tol) {
  const std::size_t n = s.n();
  const std::size_t r = s.r();
  if (n == 0 || r == 0)
    fail(ErrorKind::InvalidInput, "empty signature matrix");

  SignatureReport report;
  for (std::size_t i = 0; i < n; ++i) {
    const double dev = s.block(i, i).max_abs();
    report.s1_deviation = std::max(report.s1_deviation, dev);
    if (dev > tol)
      axiom_violation("S1", "diagonal block is not zero", block_loc(i, i));
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dev =
          max_abs_diff(s.block(j, i), s.block(i, j).adjoint());
      report.s3_deviation = std::max(report.s3_deviation, dev);
      if (dev > tol)
        axiom_violation("S3", "block is not the adjoint of its mirror",
                        block_loc(j, i));
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      for (double sv : singular_values(s.block(i, j), tol)) {
        const double dev = std::abs(sv - 1.0);
        report.s2_deviation = std::max(report.s2_deviation, dev);
        if (dev > tol)
          axiom_violation("S2",
                          "block is not unitary (singular value " +
                              std::to_string(sv) + ")",
                          block_loc(i, j));
      }
    }

  const auto eig = hermitian_eigen(s.blocks().flatten(), tol);
  report.spectrum = cluster_eigenvalues(eig.values, cluster_tol);
  const auto& clusters = report.spectrum.clusters;
  if (clusters.size() != 2 || clusters[0].value <= 0.0 ||
      clusters[1].value >= 0.0)
    throw Error(ErrorKind::NotTwoEigenvalues,
                "expected one positive and one negative eigenvalue, found " +
                    std::to_string(clusters.size()) + " distinct eigenvalues",
                "S4", "S4");

  std::size_t idx = 0;
  for (const auto& cl : clusters)
    for (std::size_t t = 0; t < cl.multiplicity; ++t, ++idx)
      report.s4_spread =
          std::max(report.s4_spread, std::abs(eig.values[idx] - cl.value));

  auto& p = report.params;
  p.n = static_cast<std::int64_t>(n);
  p.r = static_cast<std::int64_t>(r);
  p.d = static_cast<std::int64_t>(clusters[0].multiplicity);
  p.lambda_plus = clusters[0].value;
  p.lambda_minus = clusters[1].value;
  p.redundancy = static_cast<double>(p.r * p.n) / static_cast<double>(p.d);
  return report;
}

EitffParams expected_params(const DracknParams& dp, std::int64_t r) {
  EitffParams p;
  p.n = dp.n;
  p.r = r;
  const double d = static_cast<double>(r * dp.n) * std::abs(dp.tau) /
                   (dp.theta - dp.tau);
  p.d = std::llround(d);
  p.lambda_plus = dp.theta;
  p.lambda_minus = dp.tau;
  p.redundancy = (dp.theta - dp.tau) / std::abs(dp.tau);
  return p;
}

}  // namespace eitff
