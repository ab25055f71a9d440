#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "eitff/numerics.hpp"

namespace eitff {

class SignatureMatrix;

/// Symmetric zero-diagonal matrix with unimodular off-diagonal entries.
///
/// Exact mode stores each off-diagonal entry ω_N^e as its exponent e in Z_N
/// (the diagonal holds the sentinel -1); numeric mode stores Complex entries.
/// Both factories enforce a zero diagonal (C1) and symmetry (C3) exactly and
/// throw AxiomViolation otherwise.
class ConferenceMatrix {
 public:
  static ConferenceMatrix exact(std::uint32_t modulus,
                                std::vector<std::vector<std::int64_t>> exponents);
  static ConferenceMatrix numeric(ComplexMatrix entries);

  std::size_t n() const { return n_; }
  bool is_exact() const { return modulus_.has_value(); }
  /// Exact-mode modulus N; 0 in numeric mode.
  std::uint32_t modulus() const { return modulus_.value_or(0); }
  /// Exponent in [0, N) off the diagonal, -1 on it. Exact mode only.
  std::int64_t exponent(std::size_t i, std::size_t j) const;
  Complex entry(std::size_t i, std::size_t j) const;
  const ComplexMatrix& entries() const { return entries_; }

  bool operator==(const ConferenceMatrix& other) const;

 private:
  ConferenceMatrix() = default;

  std::size_t n_ = 0;
  std::optional<std::uint32_t> modulus_;
  std::vector<std::int64_t> exponents_;  // row-major, exact mode only
  ComplexMatrix entries_;                // always populated
};

/// exp(2πi·e/N) with the argument reduced exactly before evaluation.
Complex root_of_unity(std::int64_t exponent, std::uint32_t modulus);

/// Exact conference matrix C_kl = ω^{a·γ_kl}, ω = exp(2πi/(q-1)), built on
/// the Mathon labels for q = 2^k. Requires k > 1 and a ≢ 0 mod (q-1).
ConferenceMatrix mathon_conference(unsigned k, std::int64_t a);

struct ConferenceReport {
  std::size_t n = 0;
  double c4_deviation = 0.0;  // max |CC* - (n-1)I|
  bool exact_count_checked = false;
  std::int64_t count_per_residue = 0;  // (n-2)/p when checked
};

/// (C1)-(C3) exactly, (C4) numerically within tol, and for prime exact
/// moduli p additionally the residue count: for every i ≠ j the differences
/// ℓ(i,k) - ℓ(j,k), k ∉ {i,j}, hit each residue of Z_p exactly (n-2)/p times.
ConferenceReport verify_conference(const ConferenceMatrix& c,
                                   double tol = kDefaultTol);

/// Block map a+bi -> [[a, b], [b, -a]].
SignatureMatrix et_taoui_to_signature(const ConferenceMatrix& c);

/// Inverse of et_taoui_to_signature; every off-diagonal block must have the
/// shape [[a, b], [b, -a]] within tol. The result is in numeric mode.
ConferenceMatrix signature_to_conference(const SignatureMatrix& s,
                                         double tol = kDefaultTol);

/// Re-expresses a numeric conference matrix in exact mode when every
/// off-diagonal entry is within tol of an N-th root of unity.
std::optional<ConferenceMatrix> snap_to_roots(const ConferenceMatrix& c,
                                              std::uint32_t modulus,
                                              double tol = kDefaultTol);

/// Real matrix of doubled order replacing a+bi with [[a, -b], [b, a]].
RealMatrix ctr(const ComplexMatrix& z);

}  // namespace eitff
