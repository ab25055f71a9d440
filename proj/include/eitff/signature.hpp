#pragma once

#include <cstddef>
#include <cstdint>

#include "eitff/drackn.hpp"
#include "eitff/numerics.hpp"

namespace eitff {

/// n×n grid of r×r blocks that is a candidate EITFF signature matrix.
/// Nothing is checked at construction; see verify_signature.
class SignatureMatrix {
 public:
  SignatureMatrix() = default;
  explicit SignatureMatrix(BlockMatrix blocks) : blocks_(std::move(blocks)) {}

  std::size_t n() const { return blocks_.n(); }
  std::size_t r() const { return blocks_.r(); }
  const BlockMatrix& blocks() const { return blocks_; }
  BlockMatrix& blocks() { return blocks_; }
  const ComplexMatrix& block(std::size_t i, std::size_t j) const {
    return blocks_.block(i, j);
  }

  /// Every imaginary part is at most tol in magnitude.
  bool is_real(double tol = kDefaultTol) const;

 private:
  BlockMatrix blocks_;
};

struct EitffParams {
  std::int64_t d = 0;
  std::int64_t n = 0;
  std::int64_t r = 0;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  double redundancy = 0.0;  // rn/d

  std::int64_t multiplicity_minus() const { return r * n - d; }
};

struct SignatureReport {
  EitffParams params;
  Spectrum spectrum;
  double s1_deviation = 0.0;  // max |S_ii|
  double s2_deviation = 0.0;  // max |σ - 1| over off-diagonal blocks
  double s3_deviation = 0.0;  // max |S_ji - S_ij*|
  double s4_spread = 0.0;     // max distance of an eigenvalue to its cluster
};

/// (S1) zero diagonal, (S2) unitary off-diagonal blocks (all singular values
/// 1), (S3) S_ji = S_ij*, each within tol; (S4) the eigenvalues fall into
/// exactly two clusters at cluster_tol, one positive and one negative.
SignatureReport verify_signature(const SignatureMatrix& s,
                                 double tol = kDefaultTol,
                                 double cluster_tol = 1e-6);

/// Closed form: d = rn|τ|/(θ-τ), λ± = θ, τ, redundancy (θ-τ)/|τ|.
EitffParams expected_params(const DracknParams& p, std::int64_t r);

}  // namespace eitff
