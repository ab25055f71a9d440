#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "eitff/frame.hpp"
#include "eitff/representations.hpp"
#include "eitff/signature.hpp"
#include "support/expect.hpp"
#include "support/oracles.hpp"

using namespace eitff;
using testing::caught;
using testing::throws_kind;
using testing::violates;

namespace {

SignatureMatrix mathon_lift(unsigned k, const char* sel) {
  const auto a = mathon_drackn(k).adjacency;
  return lift_dihedral(a, RepSelection::parse(sel, a.m()));
}

}  // namespace

TEST_CASE("expected_params") {
  const auto p5 = expected_params(DracknParams::from_nmc(5, 3, 1), 2);
  CHECK(p5.d == 5);
  CHECK(p5.lambda_plus == doctest::Approx(2.0));
  CHECK(p5.lambda_minus == doctest::Approx(-2.0));
  CHECK(p5.redundancy == doctest::Approx(2.0));
  CHECK(p5.multiplicity_minus() == 5);

  const auto p7 = expected_params(DracknParams::from_nmc(7, 6, 1), 5);
  CHECK(p7.d == 21);
  CHECK(p7.multiplicity_minus() == 14);
  CHECK(p7.redundancy == doctest::Approx(5.0 / 3.0));

  CHECK(expected_params(DracknParams::from_nmc(9, 7, 1), 6).d == 27);
}

TEST_CASE("verify_signature on Mathon lifts") {
  for (unsigned k : {2u, 3u, 4u}) {
    CAPTURE(k);
    const double q = 1 << k;
    const auto rep = verify_signature(mathon_lift(k, "1"));
    CHECK(rep.params.d == (1 << k) + 1);
    CHECK(rep.params.n == (1 << k) + 1);
    CHECK(rep.params.r == 2);
    CHECK(rep.params.lambda_plus == doctest::Approx(std::sqrt(q)));
    CHECK(rep.params.lambda_minus == doctest::Approx(-std::sqrt(q)));
    CHECK(rep.s1_deviation == 0.0);
    CHECK(rep.s2_deviation < 1e-9);
    CHECK(rep.s3_deviation < 1e-12);
  }
}

TEST_CASE("redundancy is independent of the chosen irreps") {
  const auto params = verify_drackn(mathon_drackn(3).adjacency);
  const double closed = (params.theta - params.tau) / std::abs(params.tau);
  for (const char* sel : {"1", "2", "3", "1,2", "1,2,3"}) {
    CAPTURE(sel);
    const auto s = mathon_lift(3, sel);
    const auto rep = verify_signature(s);
    CHECK(rep.params.redundancy == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(rep.params.redundancy == doctest::Approx(closed).epsilon(1e-6));
    const auto want = expected_params(params, static_cast<std::int64_t>(s.r()));
    CHECK(rep.params.d == want.d);
  }
}

TEST_CASE("verify_signature rejections") {
  SUBCASE("S1") {
    auto s = mathon_lift(2, "1");
    s.blocks().block(0, 0)(0, 0) = 0.5;
    CHECK(violates([&] { verify_signature(s); }, "S1"));
  }
  SUBCASE("S3") {
    auto s = mathon_lift(2, "1");
    auto b = s.block(0, 1);
    b(0, 0) = -b(0, 0);
    b(0, 1) = -b(0, 1);
    s.blocks().set_block(0, 1, b);
    CHECK(violates([&] { verify_signature(s); }, "S3"));
  }
  SUBCASE("S2") {
    auto s = mathon_lift(2, "1");
    s.blocks().set_block(0, 1, s.block(0, 1) * Complex(2.0));
    s.blocks().set_block(1, 0, s.block(1, 0) * Complex(2.0));
    CHECK(violates([&] { verify_signature(s); }, "S2"));
  }
  SUBCASE("S4") {
    // unitary symmetric blocks that do not square to a scalar
    auto s = mathon_lift(2, "1");
    const auto neg = s.block(0, 1) * Complex(-1.0);
    s.blocks().set_block(0, 1, neg);
    s.blocks().set_block(1, 0, neg.adjoint());
    const auto c = caught([&] { verify_signature(s); });
    REQUIRE(c);
    CHECK(c->kind == ErrorKind::NotTwoEigenvalues);
    CHECK(c->axiom == "S4");
  }
}

TEST_CASE("fusion Gram matrix is a scaled projection") {
  const auto g = gram_from_signature(mathon_lift(2, "1"));
  CHECK(g.beta == doctest::Approx(2.0));
  const auto flat = g.gram.flatten();
  CHECK(max_abs_diff(flat * flat, flat * Complex(2.0)) < 1e-12);
  for (std::size_t i = 0; i < flat.rows(); ++i)
    CHECK(flat(i, i).real() == doctest::Approx(1.0));
}

TEST_CASE("factor_gram and check_eitff") {
  SUBCASE("q = 4") {
    const auto f = factor_gram(gram_from_signature(mathon_lift(2, "1")));
    CHECK(f.d == 5);
    CHECK(f.n == 5);
    CHECK(f.r == 2);
    CHECK(f.alpha == doctest::Approx(2.0));
    const auto cert = check_eitff(f);
    CHECK(cert.sigma == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(cert.lambda_iso == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(cert.real);
    CHECK(cert.tightness_deviation < 1e-8);
    CHECK(cert.orthonormal_deviation < 1e-9);
    CHECK(cert.isoclinic_spread < 1e-9);
  }
  SUBCASE("q = 8, K = {1}") {
    const auto f = factor_gram(gram_from_signature(mathon_lift(3, "1")));
    CHECK(f.d == 9);
    const auto cert = check_eitff(f);
    CHECK(cert.sigma == doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-12));
  }
  SUBCASE("q = 8 deleted permutation") {
    const auto s = lift_deleted_permutation(mathon_drackn(3).adjacency);
    const auto f = factor_gram(gram_from_signature(s));
    CHECK(f.d == 27);
    CHECK(f.r == 6);
    CHECK_NOTHROW(check_eitff(f));
  }
  SUBCASE("rescaled column is not tight") {
    auto f = factor_gram(gram_from_signature(mathon_lift(2, "1")));
    for (std::size_t row = 0; row < f.d; ++row) f.synthesis(row, 0) *= 1.01;
    CHECK(throws_kind([&] { check_eitff(f); }, ErrorKind::NotTight));
  }
  SUBCASE("non-projection Gram") {
    const auto g = gram_from_signature(mathon_lift(2, "1"));
    CHECK(throws_kind([&] { factor_gram(g.gram, 3.0); },
                      ErrorKind::NotScaledProjection));
    CHECK(throws_kind([&] { factor_gram(g.gram, 1.0); },
                      ErrorKind::NotScaledProjection));
  }
}

TEST_CASE("(7,6,1) deleted-permutation lift") {
  const auto a = testing::hoffman_singleton_cover();
  const auto s = lift_deleted_permutation(a);
  const auto rep = verify_signature(s);
  const auto want = expected_params(verify_drackn(a), 5);
  CHECK(rep.params.d == 21);
  CHECK(rep.params.d == want.d);
  REQUIRE(rep.spectrum.clusters.size() == 2);
  CHECK(rep.spectrum.clusters[0].value == doctest::Approx(2.0));
  CHECK(rep.spectrum.clusters[0].multiplicity == 21);
  CHECK(rep.spectrum.clusters[1].value == doctest::Approx(-3.0));
  CHECK(rep.spectrum.clusters[1].multiplicity == 14);
  CHECK(s.is_real());
  CHECK_NOTHROW(check_eitff(factor_gram(gram_from_signature(s))));
}

TEST_CASE("adjacency spectrum splits as lift spectrum plus n-1 and -1") {
  for (unsigned k : {2u, 3u}) {
    CAPTURE(k);
    const auto a = mathon_drackn(k).adjacency;
    const std::size_t n = a.n();
    auto want = hermitian_eigen(lift_deleted_permutation(a).blocks().flatten())
                    .values;
    want.push_back(double(n - 1));
    want.insert(want.end(), n - 1, -1.0);
    std::sort(want.rbegin(), want.rend());
    const auto got = hermitian_eigen(to_complex(a.flatten())).values;
    const auto cg = cluster_eigenvalues(got, 1e-6);
    const auto cw = cluster_eigenvalues(want, 1e-6);
    REQUIRE(cg.clusters.size() == cw.clusters.size());
    for (std::size_t t = 0; t < cg.clusters.size(); ++t) {
      CHECK(cg.clusters[t].value == doctest::Approx(cw.clusters[t].value));
      CHECK(cg.clusters[t].multiplicity == cw.clusters[t].multiplicity);
    }
  }
}
