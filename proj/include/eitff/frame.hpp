#pragma once

#include <cstddef>
#include <utility>

#include "eitff/numerics.hpp"
#include "eitff/signature.hpp"

namespace eitff {

struct FusionGram {
  BlockMatrix gram;    // I - S / λ_min
  double beta = 0.0;   // 1 - λ+/λ-, so that G² = βG
  EitffParams params;  // from verifying the signature matrix
};

/// Verifies S and returns its fusion Gram matrix.
FusionGram gram_from_signature(const SignatureMatrix& s,
                               double tol = kDefaultTol);

/// d×(rn) synthesis matrix whose column blocks M_i are d×r.
struct FusionFrame {
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t r = 0;
  ComplexMatrix synthesis;
  double alpha = 0.0;  // α·M_i*M_j is unitary for i ≠ j
  double beta = 0.0;   // Σ M_i M_i* = β I_d

  ComplexMatrix subspace(std::size_t i) const;
};

/// Factors G = M*M by keeping the eigenpairs of G within β/2 of β. α is the
/// reciprocal common singular value of the off-diagonal Gram blocks.
/// Throws NotScaledProjection unless ‖G² - βG‖ is within tol (relative to
/// β‖G‖_F) and β > 1.
FusionFrame factor_gram(const BlockMatrix& gram, double beta,
                        double tol = kDefaultTol);

/// As above, but reports α = |λ_min(S)| and cross-checks it against the
/// singular-value estimate.
FusionFrame factor_gram(const FusionGram& g, double tol = kDefaultTol);

struct EitffCertificate {
  double sigma = 0.0;           // common singular value of M_i*M_j
  double lambda_iso = 0.0;      // sigma²
  double alpha = 0.0;
  double beta = 0.0;
  bool real = false;
  double tightness_deviation = 0.0;    // max |MM* - (rn/d) I|
  double orthonormal_deviation = 0.0;  // max |M_i*M_i - I|
  double isoclinic_spread = 0.0;       // max spread of singular values
};

/// Checks tightness, orthonormal blocks and equi-isoclinic cross-Grams, in
/// that order. Throws NotTight, NotOrthonormal or NotIsoclinic.
EitffCertificate check_eitff(const FusionFrame& f, double tol = kDefaultTol);

}  // namespace eitff
