// One line per acceptance criterion: [PASS], [FAIL] or [SKIP].

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "eitff/cli.hpp"
#include "eitff/conference.hpp"
#include "eitff/frame.hpp"
#include "eitff/json_io.hpp"
#include "eitff/representations.hpp"
#include "eitff/signature.hpp"

using namespace eitff;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Skip {
  std::string reason;
};

int failures = 0;

void report(const char* id, const char* title, double budget_s,
            const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const Skip& s) {
    std::printf("[SKIP] %s %s: %s\n", id, title, s.reason.c_str());
    return;
  } catch (const std::exception& e) {
    v.ok = false;
    v.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  if (budget_s > 0 && secs >= budget_s && v.ok) {
    v.ok = false;
    v.detail = "runtime " + std::to_string(secs) + " s over budget";
  }
  if (!v.ok) ++failures;
  std::printf("[%s] %s %s (%.3f s)%s%s\n", v.ok ? "PASS" : "FAIL", id, title,
              secs, v.ok ? "" : ": ", v.detail.c_str());
}

io::Json run_cli(std::vector<std::string> args, int& code) {
  args.insert(args.begin(), "eitff");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return io::Json::parse(out.str());
}

SignatureMatrix mathon_lift(unsigned k, const std::string& sel) {
  const auto a = mathon_drackn(k).adjacency;
  return lift_dihedral(a, RepSelection::parse(sel, a.m()));
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// Spectrum of the flattened matrix clustered at 1e-6.
Spectrum spectrum_of(const ComplexMatrix& h) {
  return cluster_eigenvalues(hermitian_eigen(h).values, 1e-6);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string fixture = argc > 1 ? argv[1] : "";

  report("AC1", "Mathon DRACKN exactness, k = 2..5", 5.0, [] {
    Verdict v;
    for (unsigned k = 2; k <= 5; ++k) {
      const std::int64_t q = 1 << k;
      int code = 0;
      const auto env = run_cli({"mathon-drackn", "--k", std::to_string(k)}, code);
      v.require(code == 0, "cli exit code " + std::to_string(code));
      const auto a = io::drackn_from_json(env["payload"]["drackn"]);
      const auto p = verify_drackn(a);
      v.require(p.n == q + 1 && p.m == q - 1 && p.c == 1,
                "wrong parameters at k = " + std::to_string(k));
    }
    return v;
  });

  report("AC2", "K = {1} lift gives (q+1, q+1, 2), q = 4, 8, 16", 30.0, [] {
    Verdict v;
    for (unsigned k : {2u, 3u, 4u}) {
      const std::int64_t q = 1 << k;
      const auto rep = verify_signature(mathon_lift(k, "1"));
      v.require(rep.params.d == q + 1 && rep.params.n == q + 1 &&
                    rep.params.r == 2,
                "(d,n,r) mismatch at q = " + std::to_string(q));
      const auto& c = rep.spectrum.clusters;
      v.require(c.size() == 2, "not two clusters");
      if (c.size() != 2) continue;
      const double s = std::sqrt(double(q));
      v.require(near(c[0].value, s, 1e-6) && near(c[1].value, -s, 1e-6),
                "eigenvalues are not ±sqrt(q) at q = " + std::to_string(q));
      v.require(c[0].multiplicity == std::size_t(q + 1) &&
                    c[1].multiplicity == std::size_t(q + 1),
                "multiplicities at q = " + std::to_string(q));
    }
    return v;
  });

  report("AC3", "redundancy invariance at q = 8", 0.0, [] {
    Verdict v;
    const auto dp = verify_drackn(mathon_drackn(3).adjacency);
    const double closed = (dp.theta - dp.tau) / std::abs(dp.tau);
    v.require(dp.delta == 0, "delta is not 0");
    for (const char* sel : {"1", "2", "3", "1,2", "1,2,3"}) {
      const auto rep = verify_signature(mathon_lift(3, sel));
      const double rd = double(rep.params.r * rep.params.n) / rep.params.d;
      v.require(near(rd, 2.0, 1e-6) && near(rd, closed, 1e-6),
                std::string("redundancy off for K = {") + sel + "}");
    }
    return v;
  });

  report("AC4", "q = 4 frame certification", 1.0, [] {
    Verdict v;
    const auto f = factor_gram(gram_from_signature(mathon_lift(2, "1")));
    for (std::size_t i = 0; i < f.n; ++i) {
      const auto mi = f.subspace(i);
      v.require(max_abs_diff(mi.adjoint() * mi, ComplexMatrix::identity(2)) <
                    1e-9,
                "M_i*M_i is not I_2");
      for (std::size_t j = 0; j < f.n; ++j) {
        if (i == j) continue;
        for (double s : singular_values(mi.adjoint() * f.subspace(j)))
          v.require(near(s, 0.5, 1e-9), "cross-Gram singular value not 1/2");
      }
    }
    const auto frame = f.synthesis * f.synthesis.adjoint();
    v.require(max_abs_diff(frame, ComplexMatrix::identity(5) * Complex(2.0)) <
                  1e-8,
              "sum of projections is not 2 I_5");
    v.require(max_imag(f.synthesis) <= 1e-9, "entries are not real");
    const auto cert = check_eitff(f);
    v.require(cert.isoclinic_spread < 1e-9, "isoclinic spread too large");
    return v;
  });

  report("AC5", "Mathon conference matrices, k = 2, 3, 4", 0.0, [] {
    Verdict v;
    for (unsigned k : {2u, 3u, 4u}) {
      const auto rep = verify_conference(mathon_conference(k, 1), 1e-9);
      if (k < 4)
        v.require(rep.exact_count_checked && rep.count_per_residue == 1,
                  "exact count at k = " + std::to_string(k));
      else
        v.require(!rep.exact_count_checked && rep.c4_deviation <= 1e-9 &&
                      rep.n == 17,
                  "numeric CC* = 16 I at k = 4");
    }
    return v;
  });

  report("AC6", "Et-Taoui equivalence both directions", 0.0, [] {
    Verdict v;
    const auto c = mathon_conference(2, 1);
    const auto s = et_taoui_to_signature(c);
    const auto rep = verify_signature(s);
    v.require(rep.params.d == 5 && rep.params.n == 5 && rep.params.r == 2,
              "(d,n,r) is not (5,5,2)");
    const auto flat = s.blocks().flatten();
    v.require(max_abs_diff(flat * flat,
                           ComplexMatrix::identity(10) * Complex(4.0)) <= 1e-9,
              "S^2 is not 4 I_10");

    ComplexMatrix bent = c.entries();
    const Complex z = std::polar(1.0, 0.5);
    bent(1, 3) *= z;
    bent(3, 1) *= z;
    bool rejected = false;
    try {
      verify_signature(et_taoui_to_signature(ConferenceMatrix::numeric(bent)));
    } catch (const Error& e) {
      rejected = e.axiom() == "S4";
    }
    v.require(rejected, "perturbed image was not rejected by S4");
    return v;
  });

  report("AC7", "conference -> DRACKN -> lift -> conference", 1.0, [] {
    Verdict v;
    const auto a = conference_to_drackn(mathon_conference(2, 1), 3);
    const auto p = verify_drackn(a);
    v.require(p.n == 5 && p.m == 3 && p.c == 1, "not a (5,3,1)-DRACKN");
    const auto back =
        signature_to_conference(lift_dihedral(a, RepSelection::parse("1", 3)));
    v.require(verify_conference(back).n == 5, "recovered matrix is not 5x5");
    return v;
  });

  report("AC8", "(7,6,1) deleted-permutation lift", 0.0, [&] {
    if (fixture.empty()) throw Skip{"no (7,6,1) DRACKN file supplied"};
    Verdict v;
    const auto a = io::drackn_from_json(io::read_json_file(fixture));
    const auto dp = verify_drackn(a);
    v.require(dp.n == 7 && dp.m == 6 && dp.c == 1, "input is not (7,6,1)");
    const auto rep = verify_signature(lift_deleted_permutation(a));
    const auto want = expected_params(dp, 5);
    v.require(rep.params.d == 21 && rep.params.n == 7 && rep.params.r == 5,
              "(d,n,r) is not (21,7,5)");
    v.require(rep.params.d == want.d && rep.params.r == want.r,
              "does not match expected_params");
    const auto& c = rep.spectrum.clusters;
    v.require(c.size() == 2 && near(c[0].value, 2.0, 1e-6) &&
                  c[0].multiplicity == 21 && near(c[1].value, -3.0, 1e-6) &&
                  c[1].multiplicity == 14,
              "spectrum is not 2^21 (-3)^14");
    return v;
  });

  report("AC9", "adjacency spectrum = lift spectrum + {n-1} + {-1}^(n-1)", 0.0,
         [] {
           Verdict v;
           for (unsigned k : {2u, 3u}) {
             const auto a = mathon_drackn(k).adjacency;
             const std::size_t n = a.n();
             auto want = hermitian_eigen(
                             lift_deleted_permutation(a).blocks().flatten())
                             .values;
             want.push_back(double(n - 1));
             want.insert(want.end(), n - 1, -1.0);
             std::sort(want.rbegin(), want.rend());
             const auto got = spectrum_of(to_complex(a.flatten()));
             const auto exp = cluster_eigenvalues(want, 1e-6);
             bool same = got.clusters.size() == exp.clusters.size();
             for (std::size_t t = 0; same && t < got.clusters.size(); ++t)
               same = near(got.clusters[t].value, exp.clusters[t].value, 1e-6) &&
                      got.clusters[t].multiplicity ==
                          exp.clusters[t].multiplicity;
             v.require(same, "multisets differ at q = " +
                                 std::to_string(1u << k));
           }
           return v;
         });

  return failures == 0 ? 0 : 1;
}
