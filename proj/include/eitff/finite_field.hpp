#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace eitff {

/// Element of GF(2^k) as a k-bit mask of polynomial coefficients.
struct FieldElement {
  std::uint32_t bits = 0;

  bool is_zero() const { return bits == 0; }
  friend FieldElement operator+(FieldElement a, FieldElement b) {
    return {a.bits ^ b.bits};
  }
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

using FieldPoint = std::pair<FieldElement, FieldElement>;

/// GF(2^k) with a canonical modulus and generator. Immutable once built.
class FieldSpec {
 public:
  static constexpr unsigned kMaxDegree = 16;

  /// Smallest irreducible modulus (with nonzero constant term) and the
  /// smallest element of full multiplicative order. Throws OutOfRange for
  /// k outside [1, 16].
  static FieldSpec build(unsigned k);

  unsigned k() const { return k_; }
  std::uint32_t q() const { return std::uint32_t{1} << k_; }
  std::uint32_t group_order() const { return q() - 1; }
  std::uint32_t modulus_bits() const { return modulus_; }
  FieldElement generator() const { return generator_; }

  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement pow_generator(std::int64_t exponent) const;
  /// Discrete log base the generator, in [0, q-2]. Throws ZeroElement on 0.
  std::uint32_t dlog(FieldElement x) const;

  /// Alternating form u1 v2 + u2 v1 on GF(q)^2.
  FieldElement symplectic(const FieldPoint& u, const FieldPoint& v) const;

  std::vector<FieldElement> elements() const;

 private:
  FieldSpec() = default;

  unsigned k_ = 0;
  std::uint32_t modulus_ = 0;
  FieldElement generator_;
  std::vector<std::uint32_t> exp_table_;  // generator^t for t in [0, q-2]
  std::vector<std::uint32_t> log_table_;  // indexed by element bits
};

/// Carryless product of a and b reduced modulo `modulus` (a bit mask).
std::uint32_t gf2_mul_mod(std::uint32_t a, std::uint32_t b,
                          std::uint32_t modulus);

/// True when the polynomial (bit mask) of degree >= 1 has no factor of
/// degree 1..deg/2 over GF(2).
bool gf2_irreducible(std::uint32_t poly);

}  // namespace eitff
