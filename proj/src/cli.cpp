#include "eitff/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "eitff/conference.hpp"
#include "eitff/drackn.hpp"
#include "eitff/frame.hpp"
#include "eitff/json_io.hpp"
#include "eitff/representations.hpp"
#include "eitff/signature.hpp"

namespace eitff::cli {
namespace {

using io::Json;

constexpr double kClusterTol = 1e-6;

struct Diagnostics {
  Json records = Json::array();

  void add(const std::string& check, const std::string& location,
           double deviation, double tolerance) {
    records.push_back({{"check", check},
                       {"location", location},
                       {"deviation", deviation},
                       {"tolerance", tolerance}});
  }
};

/// What a command produced: `document` is the primary artifact (written to
/// --out when given); `payload` carries it plus derived data.
struct Outcome {
  Json document;
  Json payload;
};

void drackn_diagnostics(Diagnostics& diag) {
  for (const char* axiom : {"D1", "D2", "D3", "D4"})
    diag.add(axiom, "all blocks (exact integer check)", 0.0, 0.0);
}

void signature_diagnostics(Diagnostics& diag, const SignatureReport& rep,
                           double tol) {
  diag.add("S1", "diagonal blocks", rep.s1_deviation, tol);
  diag.add("S2", "off-diagonal singular values", rep.s2_deviation, tol);
  diag.add("S3", "adjoint pairing", rep.s3_deviation, tol);
  diag.add("S4", "eigenvalue clusters", rep.s4_spread, kClusterTol);
}

void conference_diagnostics(Diagnostics& diag, const ConferenceReport& rep,
                            double tol) {
  diag.add("C1", "diagonal (exact)", 0.0, 0.0);
  diag.add("C2", "off-diagonal moduli", 0.0, tol);
  diag.add("C3", "symmetry (exact)", 0.0, 0.0);
  diag.add("C4", "CC* = (n-1)I", rep.c4_deviation, tol);
  if (rep.exact_count_checked)
    diag.add("C4-exact", "residue counts (n-2)/p", 0.0, 0.0);
}

Json labels_to_json(const MathonLabels& labels) {
  Json reps = Json::array();
  for (const auto& [u1, u2] : labels.reps) reps.push_back({u1.bits, u2.bits});
  return {{"reps", reps}, {"gamma", labels.gamma}};
}

void expect_params(const DracknParams& got, std::int64_t n, std::int64_t m,
                   std::int64_t c) {
  if (got.n != n || got.m != m || got.c != c)
    axiom_violation("D4",
                    "constructed cover has parameters (" +
                        std::to_string(got.n) + "," + std::to_string(got.m) +
                        "," + std::to_string(got.c) + ")",
                    "parameters");
}

DracknAdjacency load_or_build(const std::string& input, unsigned k) {
  if (!input.empty()) return io::drackn_from_json(io::read_json_file(input));
  return mathon_drackn(k).adjacency;
}

Outcome cmd_mathon_drackn(unsigned k, Diagnostics& diag) {
  const auto mathon = mathon_drackn(k);
  const auto params = verify_drackn(mathon.adjacency);
  const auto q = static_cast<std::int64_t>(mathon.field.q());
  expect_params(params, q + 1, q - 1, 1);
  drackn_diagnostics(diag);
  auto doc = io::to_json(mathon.adjacency);
  return {doc,
          {{"drackn", doc},
           {"params", io::to_json(params)},
           {"field", io::to_json(mathon.field)},
           {"labels", labels_to_json(mathon.labels)}}};
}

Outcome cmd_verify_drackn(const std::string& input, Diagnostics& diag) {
  const auto adj = io::drackn_from_json(io::read_json_file(input));
  const auto params = verify_drackn(adj);
  drackn_diagnostics(diag);
  Json group = nullptr;
  try {
    const auto closure = block_group_closure(adj);
    group = {{"order", closure.elements.size()},
             {"transitive", closure.transitive},
             {"abelian", closure.abelian}};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
  }
  return {io::to_json(params),
          {{"params", io::to_json(params)}, {"group", group}}};
}

Outcome cmd_lift(const std::string& input, unsigned k,
                 const std::string& irreps, double tol, Diagnostics& diag) {
  const auto adj = load_or_build(input, k);
  const auto dparams = verify_drackn(adj);
  drackn_diagnostics(diag);

  const bool deleted = irreps == "all";
  const auto sig =
      deleted ? lift_deleted_permutation(adj)
              : lift_dihedral(adj, RepSelection::parse(
                                       irreps,
                                       static_cast<std::uint32_t>(adj.m())));
  const auto rep = verify_signature(sig, tol, kClusterTol);
  signature_diagnostics(diag, rep, tol);

  const auto expected =
      expected_params(dparams, static_cast<std::int64_t>(sig.r()));
  const double eig_dev =
      std::max(std::abs(rep.params.lambda_plus - expected.lambda_plus),
               std::abs(rep.params.lambda_minus - expected.lambda_minus));
  if (rep.params.d != expected.d || eig_dev > kClusterTol)
    axiom_violation("S4",
                    "lift disagrees with the closed-form prediction d = " +
                        std::to_string(expected.d),
                    "parameters");
  diag.add("theta/tau", "closed-form eigenvalues", eig_dev, kClusterTol);

  auto doc = io::to_json(sig);
  return {doc,
          {{"signature", doc},
           {"representation", deleted ? "deleted-permutation" : "dihedral"},
           {"params", io::to_json(rep.params)},
           {"expected", io::to_json(expected)},
           {"drackn_params", io::to_json(dparams)},
           {"spectrum", io::to_json(rep.spectrum)},
           {"real", sig.is_real(tol)}}};
}

Outcome cmd_conference(unsigned k, std::int64_t a, double tol,
                       Diagnostics& diag) {
  const auto c = mathon_conference(k, a);
  const auto rep = verify_conference(c, tol);
  conference_diagnostics(diag, rep, tol);
  auto doc = io::to_json(c);
  return {doc, {{"conference", doc}, {"report", io::to_json(rep)}}};
}

Outcome cmd_verify_conference(const std::string& input, double tol,
                              Diagnostics& diag) {
  const auto c = io::conference_from_json(io::read_json_file(input));
  const auto rep = verify_conference(c, tol);
  conference_diagnostics(diag, rep, tol);
  return {io::to_json(rep), {{"report", io::to_json(rep)}}};
}

Outcome cmd_convert(const std::string& mode, const std::string& input,
                    std::uint32_t p, std::uint32_t modulus, double tol,
                    Diagnostics& diag) {
  const auto doc_in = io::read_json_file(input);
  if (mode == "ettaoui-fwd") {
    const auto c = io::conference_from_json(doc_in);
    const auto sig = et_taoui_to_signature(c);
    const auto rep = verify_signature(sig, tol, kClusterTol);
    signature_diagnostics(diag, rep, tol);
    auto doc = io::to_json(sig);
    return {doc, {{"signature", doc}, {"params", io::to_json(rep.params)}}};
  }
  if (mode == "ettaoui-inv") {
    const auto sig = io::signature_from_json(doc_in);
    auto c = signature_to_conference(sig, tol);
    if (modulus != 0) {
      auto snapped = snap_to_roots(c, modulus, tol);
      if (!snapped)
        fail(ErrorKind::InvalidInput,
             "entries are not " + std::to_string(modulus) +
                 "th roots of unity");
      c = std::move(*snapped);
    }
    const auto rep = verify_conference(c, tol);
    conference_diagnostics(diag, rep, tol);
    auto doc = io::to_json(c);
    return {doc, {{"conference", doc}, {"report", io::to_json(rep)}}};
  }
  // conf2drackn
  const auto c = io::conference_from_json(doc_in);
  const auto adj = conference_to_drackn(c, p);
  const auto params = verify_drackn(adj);
  const auto n = static_cast<std::int64_t>(c.n());
  expect_params(params, n, p, (n - 2) / p);
  drackn_diagnostics(diag);
  auto doc = io::to_json(adj);
  return {doc, {{"drackn", doc}, {"params", io::to_json(params)}}};
}

Outcome cmd_frame(const std::string& input, double tol, Diagnostics& diag) {
  const auto sig = io::signature_from_json(io::read_json_file(input));
  const auto gram = gram_from_signature(sig, tol);
  const auto frame = factor_gram(gram, tol);
  const auto cert = check_eitff(frame, tol);
  diag.add("tight", "sum of projections", cert.tightness_deviation, tol);
  diag.add("orthonormal", "subspace bases", cert.orthonormal_deviation, tol);
  diag.add("isoclinic", "cross-Gram singular values", cert.isoclinic_spread,
           tol);
  auto doc = io::to_json(frame);
  return {doc,
          {{"frame", doc},
           {"params", io::to_json(gram.params)},
           {"certificate", io::to_json(cert)}}};
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoConvergence:
      return kNoConvergence;
    case ErrorKind::NotHermitian:
    case ErrorKind::AmbiguousClustering:
    case ErrorKind::AxiomViolation:
    case ErrorKind::InconsistentC:
    case ErrorKind::NotTwoEigenvalues:
    case ErrorKind::NotScaledProjection:
    case ErrorKind::NotIsoclinic:
    case ErrorKind::NotTight:
    case ErrorKind::NotOrthonormal:
    case ErrorKind::ExactCountFailure:
    case ErrorKind::WrongBlockShape:
      return kAxiomViolation;
    default:
      return kUsage;
  }
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Constructs and certifies DRACKNs, EITFF signature matrices, "
               "fusion frames and complex conference matrices."};
  app.require_subcommand(1);

  double tol = kDefaultTol;
  std::string output;
  std::string input;
  unsigned k = 0;
  std::int64_t a = 1;
  std::string irreps = "1";
  std::string verify_file;
  std::uint32_t p = 0;
  std::uint32_t modulus = 0;
  bool fwd = false, inv = false, c2d = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", tol, "Tolerance for floating-point checks")
        ->capture_default_str();
    sub->add_option("--out", output, "Write the produced document here");
  };

  auto* mathon = app.add_subcommand("mathon-drackn",
                                    "Build and verify the Mathon cover, q = 2^k");
  mathon->add_option("--k", k, "Extension degree")->required();
  add_common(mathon);

  auto* vdr = app.add_subcommand("verify-drackn", "Verify a DRACKN file");
  vdr->add_option("--input,input", input, "DRACKN JSON ('-' for stdin)")
      ->required();
  add_common(vdr);

  auto* lift = app.add_subcommand("lift", "Lift a DRACKN to a signature matrix");
  auto* lift_in = lift->add_option("--input", input, "DRACKN JSON");
  auto* lift_k = lift->add_option("--k", k, "Use the Mathon cover for q = 2^k");
  lift_in->excludes(lift_k);
  lift->add_option("--irreps", irreps,
                   "Dihedral irrep indices (e.g. 1,3) or 'all' for the "
                   "deleted permutation representation")
      ->capture_default_str();
  add_common(lift);

  auto* conf = app.add_subcommand(
      "conference", "Build (--k --a) or verify (--verify) a conference matrix");
  auto* conf_k = conf->add_option("--k", k, "Extension degree");
  conf->add_option("--a", a, "Irrep index a")->capture_default_str();
  auto* conf_v = conf->add_option("--verify", verify_file, "File to verify");
  conf_k->excludes(conf_v);
  add_common(conf);

  auto* vconf = app.add_subcommand("verify-conference",
                                   "Verify a conference matrix file");
  vconf->add_option("--input,input", input, "Conference JSON")->required();
  add_common(vconf);

  auto* convert = app.add_subcommand("convert", "Convert between objects");
  auto* f1 = convert->add_flag("--ettaoui-fwd", fwd,
                               "Conference matrix -> signature matrix");
  auto* f2 = convert->add_flag("--ettaoui-inv", inv,
                               "Signature matrix -> conference matrix");
  auto* f3 = convert->add_flag("--conf2drackn", c2d,
                               "Conference matrix -> DRACKN (needs --p)");
  f1->excludes(f2)->excludes(f3);
  f2->excludes(f3);
  convert->add_option("--p", p, "Prime root-of-unity order");
  convert->add_option("--modulus", modulus,
                      "Recover exact exponents modulo this order");
  convert->add_option("--input,input", input, "Input JSON")->required();
  add_common(convert);

  auto* frame = app.add_subcommand("frame",
                                   "Factor a signature matrix into a frame");
  frame->add_option("--input,input", input, "Signature JSON")->required();
  add_common(frame);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, err, err);
    return code == 0 ? kOk : kUsage;
  }

  auto* sub = app.get_subcommands().front();
  Diagnostics diag;
  Json envelope = {{"command", sub->get_name()}};
  int code = kOk;
  try {
    Outcome outcome;
    if (sub == mathon) {
      outcome = cmd_mathon_drackn(k, diag);
    } else if (sub == vdr) {
      outcome = cmd_verify_drackn(input, diag);
    } else if (sub == lift) {
      if (input.empty() && lift_k->count() == 0)
        fail(ErrorKind::InvalidInput, "lift needs --input or --k");
      outcome = cmd_lift(input, k, irreps, tol, diag);
    } else if (sub == conf) {
      if (!verify_file.empty())
        outcome = cmd_verify_conference(verify_file, tol, diag);
      else if (conf_k->count() != 0)
        outcome = cmd_conference(k, a, tol, diag);
      else
        fail(ErrorKind::InvalidInput, "conference needs --k or --verify");
    } else if (sub == vconf) {
      outcome = cmd_verify_conference(input, tol, diag);
    } else if (sub == convert) {
      if (fwd) {
        outcome = cmd_convert("ettaoui-fwd", input, p, modulus, tol, diag);
      } else if (inv) {
        outcome = cmd_convert("ettaoui-inv", input, p, modulus, tol, diag);
      } else if (c2d) {
        if (p == 0) fail(ErrorKind::InvalidInput, "--conf2drackn needs --p");
        outcome = cmd_convert("conf2drackn", input, p, modulus, tol, diag);
      } else {
        fail(ErrorKind::InvalidInput,
             "convert needs --ettaoui-fwd, --ettaoui-inv or --conf2drackn");
      }
    } else {
      outcome = cmd_frame(input, tol, diag);
    }
    if (!output.empty())
      io::write_text_file(output, io::canonical_dump(outcome.document));
    envelope["status"] = "ok";
    envelope["payload"] = std::move(outcome.payload);
  } catch (const Error& e) {
    code = exit_code_for(e.kind());
    envelope["status"] = "error";
    envelope["error"] = {{"kind", std::string(to_string(e.kind()))},
                         {"message", e.what()},
                         {"location", e.location()},
                         {"axiom", e.axiom()}};
  }
  envelope["diagnostics"] = std::move(diag.records);
  out << io::canonical_dump(envelope) << '\n';
  return code;
}

}  // namespace eitff::cli
