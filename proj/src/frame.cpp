#include "eitff/frame.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eitff/error.hpp"

namespace eitff {
namespace {

std::string pair_loc(std::size_t i, std::size_t j) {
  return "pair(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

double mean(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

}  // namespace

ComplexMatrix FusionFrame::subspace(std::size_t i) const {
  ComplexMatrix out(d, r);
  for (std::size_t row = 0; row < d; ++row)
    for (std::size_t col = 0; col < r; ++col)
      out(row, col) = synthesis(row, i * r + col);
  return out;
}

FusionGram gram_from_signature(const SignatureMatrix& s, double tol) {
  const auto report = verify_signature(s, tol);
  const auto& p = report.params;

  auto flat = s.blocks().flatten();
  flat *= Complex(-1.0 / p.lambda_minus);
  flat += ComplexMatrix::identity(flat.rows());

  FusionGram out;
  out.gram = BlockMatrix::from_flat(flat, s.r());
  out.beta = 1.0 - p.lambda_plus / p.lambda_minus;
  out.params = p;
  return out;
}

FusionFrame factor_gram(const BlockMatrix& gram, double beta, double tol) {
  if (!(beta > 1.0 + tol))
    fail(ErrorKind::NotScaledProjection,
         "beta = " + std::to_string(beta) +
             " describes mutually orthogonal subspaces, which are excluded");

  const auto g = gram.flatten();
  const double gnorm = g.frobenius_norm();
  const double dev = (g * g - g * Complex(beta)).frobenius_norm();
  if (dev > tol * beta * gnorm)
    fail(ErrorKind::NotScaledProjection,
         "||G^2 - beta G||_F = " + std::to_string(dev) + " exceeds tolerance");

  const auto eig = hermitian_eigen(g, tol);
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    if (std::abs(eig.values[k] - beta) < beta / 2.0)
      kept.push_back(k);
    else if (std::abs(eig.values[k]) >= beta / 2.0)
      fail(ErrorKind::NotScaledProjection,
           "eigenvalue " + std::to_string(eig.values[k]) +
               " is neither 0 nor beta");
  }

  FusionFrame f;
  f.d = kept.size();
  f.n = gram.n();
  f.r = gram.r();
  f.beta = beta;
  f.synthesis = ComplexMatrix(f.d, g.rows());
  for (std::size_t row = 0; row < f.d; ++row) {
    const std::size_t k = kept[row];
    const double scale = std::sqrt(eig.values[k]);
    for (std::size_t col = 0; col < g.rows(); ++col)
      f.synthesis(row, col) = scale * std::conj(eig.vectors(col, k));
  }

  const double recon =
      (f.synthesis.adjoint() * f.synthesis - g).frobenius_norm();
  if (recon > 10.0 * tol * gnorm)
    fail(ErrorKind::NotScaledProjection,
         "factorization residual " + std::to_string(recon) +
             " exceeds tolerance");

  if (f.n >= 2) {
    const auto sv = singular_values(gram.block(0, 1), tol);
    f.alpha = 1.0 / mean(sv);
  }
  return f;
}

FusionFrame factor_gram(const FusionGram& g, double tol) {
  auto f = factor_gram(g.gram, g.beta, tol);
  const double alpha = std::abs(g.params.lambda_minus);
  if (f.n >= 2 && std::abs(f.alpha - alpha) > 10.0 * tol * alpha)
    fail(ErrorKind::NotIsoclinic,
         "cross-Gram scale " + std::to_string(f.alpha) +
             " disagrees with |lambda_min| = " + std::to_string(alpha));
  f.alpha = alpha;
  return f;
}

EitffCertificate check_eitff(const FusionFrame& f, double tol) {
  if (f.synthesis.rows() != f.d || f.synthesis.cols() != f.n * f.r ||
      f.d == 0)
    fail(ErrorKind::DimensionMismatch, "synthesis matrix shape mismatch");

  EitffCertificate cert;
  const double beta =
      static_cast<double>(f.n * f.r) / static_cast<double>(f.d);
  cert.beta = beta;
  cert.alpha = f.alpha;

  const auto frame_op = f.synthesis * f.synthesis.adjoint();
  cert.tightness_deviation =
      max_abs_diff(frame_op, ComplexMatrix::identity(f.d) * Complex(beta));
  if (cert.tightness_deviation > tol)
    fail(ErrorKind::NotTight, "sum of projections deviates from (rn/d) I by " +
                                  std::to_string(cert.tightness_deviation));
  if (std::abs(f.beta - beta) > tol * beta)
    fail(ErrorKind::NotTight, "recorded beta " + std::to_string(f.beta) +
                                  " differs from rn/d = " +
                                  std::to_string(beta));

  std::vector<ComplexMatrix> blocks;
  blocks.reserve(f.n);
  for (std::size_t i = 0; i < f.n; ++i) blocks.push_back(f.subspace(i));

  for (std::size_t i = 0; i < f.n; ++i) {
    const double dev = max_abs_diff(blocks[i].adjoint() * blocks[i],
                                    ComplexMatrix::identity(f.r));
    cert.orthonormal_deviation = std::max(cert.orthonormal_deviation, dev);
    if (dev > tol)
      fail(ErrorKind::NotOrthonormal,
           "subspace basis is not orthonormal (deviation " +
               std::to_string(dev) + ")",
           "subspace(" + std::to_string(i) + ")");
  }

  bool have_sigma = false;
  for (std::size_t i = 0; i < f.n; ++i)
    for (std::size_t j = i + 1; j < f.n; ++j) {
      const auto sv = singular_values(blocks[i].adjoint() * blocks[j], tol);
      if (!have_sigma) {
        cert.sigma = mean(sv);
        have_sigma = true;
      }
      double spread = sv.front() - sv.back();
      for (double x : sv) spread = std::max(spread, std::abs(x - cert.sigma));
      cert.isoclinic_spread = std::max(cert.isoclinic_spread, spread);
      if (spread > tol)
        fail(ErrorKind::NotIsoclinic,
             "cross-Gram singular values spread by " + std::to_string(spread),
             pair_loc(i, j));
    }
  cert.lambda_iso = cert.sigma * cert.sigma;
  if (f.alpha > 0.0 && std::abs(f.alpha * cert.sigma - 1.0) > 10.0 * tol)
    fail(ErrorKind::NotIsoclinic,
         "alpha * sigma = " + std::to_string(f.alpha * cert.sigma) +
             " is not 1");

  cert.real = max_imag(f.synthesis) <= tol;
  return cert;
}

}  // namespace eitff
