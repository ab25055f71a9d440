#include "eitff/finite_field.hpp"

#include <bit>
#include <string>

#include "eitff/error.hpp"

namespace eitff {
namespace {

unsigned degree(std::uint64_t poly) {
  return static_cast<unsigned>(std::bit_width(poly)) - 1;
}

// Remainder of a modulo b over GF(2).
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned db = degree(b);
  while (a != 0 && degree(a) >= db) a ^= b << (degree(a) - db);
  return a;
}

}  // namespace

std::uint32_t gf2_mul_mod(std::uint32_t a, std::uint32_t b,
                          std::uint32_t modulus) {
  std::uint64_t product = 0;
  for (std::uint64_t x = a, y = b; y != 0; y >>= 1, x <<= 1)
    if (y & 1u) product ^= x;
  return static_cast<std::uint32_t>(poly_mod(product, modulus));
}

bool gf2_irreducible(std::uint32_t poly) {
  if (poly < 2) return false;
  const unsigned d = degree(poly);
  for (std::uint32_t divisor = 2; degree(divisor) <= d / 2; ++divisor)
    if (poly_mod(poly, divisor) == 0) return false;
  return true;
}

FieldSpec FieldSpec::build(unsigned k) {
  if (k < 1 || k > kMaxDegree)
    fail(ErrorKind::OutOfRange,
         "extension degree " + std::to_string(k) + " outside [1, 16]");

  FieldSpec spec;
  spec.k_ = k;
  const std::uint32_t lo = std::uint32_t{1} << k;
  for (std::uint32_t poly = lo | 1u; poly < (lo << 1); poly += 2) {
    if (gf2_irreducible(poly)) {
      spec.modulus_ = poly;
      break;
    }
  }

  const std::uint32_t order = spec.group_order();
  for (std::uint32_t candidate = 1; candidate < spec.q(); ++candidate) {
    std::uint32_t x = candidate;
    std::uint32_t t = 1;
    while (x != 1) {
      x = gf2_mul_mod(x, candidate, spec.modulus_);
      ++t;
    }
    if (t == order) {
      spec.generator_ = {candidate};
      break;
    }
  }

  spec.exp_table_.resize(order);
  spec.log_table_.assign(spec.q(), 0);
  std::uint32_t x = 1;
  for (std::uint32_t t = 0; t < order; ++t) {
    spec.exp_table_[t] = x;
    spec.log_table_[x] = t;
    x = gf2_mul_mod(x, spec.generator_.bits, spec.modulus_);
  }
  return spec;
}

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const {
  return {gf2_mul_mod(a.bits, b.bits, modulus_)};
}

FieldElement FieldSpec::pow_generator(std::int64_t exponent) const {
  const auto order = static_cast<std::int64_t>(group_order());
  auto t = exponent % order;
  if (t < 0) t += order;
  return {exp_table_[static_cast<std::size_t>(t)]};
}

std::uint32_t FieldSpec::dlog(FieldElement x) const {
  if (x.is_zero()) fail(ErrorKind::ZeroElement, "discrete log of zero");
  if (x.bits >= q()) fail(ErrorKind::OutOfRange, "element outside the field");
  return log_table_[x.bits];
}

FieldElement FieldSpec::symplectic(const FieldPoint& u,
                                   const FieldPoint& v) const {
  return mul(u.first, v.second) + mul(u.second, v.first);
}

std::vector<FieldElement> FieldSpec::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q());
  for (std::uint32_t b = 0; b < q(); ++b) out.push_back({b});
  return out;
}

}  // namespace eitff
