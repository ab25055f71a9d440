#include <doctest.h>

#include <set>

#include "eitff/error.hpp"
#include "eitff/finite_field.hpp"
#include "support/oracles.hpp"

using namespace eitff;

TEST_CASE("field_build picks the smallest irreducible modulus") {
  CHECK(FieldSpec::build(1).modulus_bits() == 0b11);
  CHECK(FieldSpec::build(2).modulus_bits() == 0b111);
  CHECK(FieldSpec::build(3).modulus_bits() == 0b1011);

  // Oracle: smallest degree-k mask with constant term 1 that is not a
  // product of two lower-degree polynomials.
  for (unsigned k = 2; k <= 8; ++k) {
    const auto reducible = testing::reducible_polynomials(k);
    std::uint32_t want = 0;
    for (std::uint32_t p = (1u << k) | 1u; p < (2u << k); p += 2)
      if (!reducible.count(p)) {
        want = p;
        break;
      }
    CAPTURE(k);
    CHECK(FieldSpec::build(k).modulus_bits() == want);
  }
}

TEST_CASE("field_build range") {
  for (unsigned k : {0u, 17u}) {
    try {
      FieldSpec::build(k);
      FAIL("expected OutOfRange");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::OutOfRange);
    }
  }
  CHECK(FieldSpec::build(16).q() == 65536);
}

TEST_CASE("GF(2) and GF(4) by hand") {
  const auto f1 = FieldSpec::build(1);
  CHECK(f1.q() == 2);
  CHECK(f1.generator().bits == 1);

  const auto f = FieldSpec::build(2);
  const FieldElement g = f.generator();
  CHECK(g.bits == 0b10);
  // x^2 mod x^2 + x + 1 = x + 1
  CHECK(f.mul(g, g) == g + FieldElement{1});
  CHECK(f.dlog({1}) == 0);
  CHECK(f.dlog(g) == 1);
  CHECK(f.dlog(g + FieldElement{1}) == 2);
}

TEST_CASE("mul identities and agreement with shift-and-xor") {
  for (unsigned k = 1; k <= 6; ++k) {
    const auto f = FieldSpec::build(k);
    for (auto a : f.elements()) {
      CHECK(f.mul(a, {1}) == a);
      CHECK(f.mul({0}, a) == FieldElement{0});
      for (auto b : f.elements()) {
        CHECK(f.mul(a, b).bits ==
              testing::slow_gf_mul(a.bits, b.bits, f.modulus_bits(), k));
        CHECK(f.mul(a, b) == f.mul(b, a));
      }
    }
  }
}

TEST_CASE("property: cyclic multiplicative group and log homomorphism") {
  for (unsigned k = 1; k <= 8; ++k) {
    CAPTURE(k);
    const auto f = FieldSpec::build(k);
    const auto order = f.group_order();

    std::set<std::uint32_t> logs;
    for (auto x : f.elements())
      if (!x.is_zero()) logs.insert(f.dlog(x));
    CHECK(logs.size() == order);
    CHECK(*logs.rbegin() == order - 1);

    // generator has exact order q - 1
    FieldElement x{1};
    for (std::uint32_t t = 1; t <= order; ++t) {
      x = f.mul(x, f.generator());
      if (t < order) CHECK(x.bits != 1);
    }
    CHECK(x.bits == 1);

    for (auto a : f.elements())
      for (auto b : f.elements()) {
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(f.dlog(f.mul(a, b)) == (f.dlog(a) + f.dlog(b)) % order);
      }
  }
}

TEST_CASE("dlog of zero") {
  const auto f = FieldSpec::build(3);
  try {
    f.dlog({0});
    FAIL("expected ZeroElement");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroElement);
  }
}

TEST_CASE("symplectic form") {
  const auto f = FieldSpec::build(2);
  CHECK(f.symplectic({{1}, {0}}, {{0}, {1}}) == FieldElement{1});

  for (unsigned k = 1; k <= 6; ++k) {
    const auto field = FieldSpec::build(k);
    const auto elems = field.elements();
    for (auto u1 : elems)
      for (auto u2 : elems) {
        const FieldPoint u{u1, u2};
        CHECK(field.symplectic(u, u).is_zero());
        if (u1.is_zero() && u2.is_zero()) continue;
        bool hits_one = false;
        for (auto v1 : elems)
          for (auto v2 : elems) {
            const FieldPoint v{v1, v2};
            const auto b = field.symplectic(u, v);
            CHECK(b == field.symplectic(v, u));
            hits_one = hits_one || b.bits == 1;
          }
        CHECK(hits_one);
      }
  }
}
