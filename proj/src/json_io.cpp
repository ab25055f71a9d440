#include "eitff/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "eitff/error.hpp"

namespace eitff::io {
namespace {

void dump_number(double x, std::string& out) {
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

void dump(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {  // std::map: sorted keys
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        dump(value, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) out += ',';
        dump(j[k], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      dump_number(j.get<double>(), out);
      break;
    default:
      out += j.dump();
  }
}

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput,
         std::string("field '") + key + "': " + e.what());
  }
}

void expect_array(const Json& j, std::size_t size, const std::string& what) {
  if (!j.is_array() || j.size() != size)
    fail(ErrorKind::InvalidInput,
         what + " must be an array of length " + std::to_string(size));
}

}  // namespace

std::string canonical_dump(const Json& doc) {
  std::string out;
  dump(doc, out);
  return out;
}

Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  expect_array(j, 2, "complex value");
  if (!j[0].is_number() || !j[1].is_number())
    fail(ErrorKind::InvalidInput, "complex value must hold two numbers");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const FieldSpec& f) {
  return {{"k", f.k()},
          {"modulus_bits", f.modulus_bits()},
          {"generator_bits", f.generator().bits}};
}

Json to_json(const DracknParams& p) {
  return {{"n", p.n},         {"m", p.m},         {"c", p.c},
          {"delta", p.delta}, {"disc", p.disc},   {"theta", p.theta},
          {"tau", p.tau}};
}

Json to_json(const EitffParams& p) {
  return {{"d", p.d},
          {"n", p.n},
          {"r", p.r},
          {"lambda_plus", p.lambda_plus},
          {"lambda_minus", p.lambda_minus},
          {"redundancy", p.redundancy}};
}

Json to_json(const Spectrum& s) {
  Json clusters = Json::array();
  for (const auto& c : s.clusters)
    clusters.push_back({{"value", c.value}, {"multiplicity", c.multiplicity}});
  return {{"clusters", clusters}, {"tolerance", s.tolerance}};
}

Json to_json(const ConferenceReport& r) {
  Json j = {{"n", r.n},
            {"c4_deviation", r.c4_deviation},
            {"exact_count_checked", r.exact_count_checked}};
  if (r.exact_count_checked) j["count_per_residue"] = r.count_per_residue;
  return j;
}

Json to_json(const EitffCertificate& c) {
  return {{"sigma", c.sigma},
          {"lambda_iso", c.lambda_iso},
          {"alpha", c.alpha},
          {"beta", c.beta},
          {"real", c.real},
          {"tightness_deviation", c.tightness_deviation},
          {"orthonormal_deviation", c.orthonormal_deviation},
          {"isoclinic_spread", c.isoclinic_spread}};
}

Json to_json(const DracknAdjacency& a) {
  Json blocks = Json::array();
  for (std::size_t i = 0; i < a.n(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.n(); ++j) {
      const auto& b = a.block(i, j);
      row.push_back(b ? Json(*b) : Json(nullptr));
    }
    blocks.push_back(std::move(row));
  }
  return {{"n", a.n()}, {"m", a.m()}, {"blocks", std::move(blocks)}};
}

DracknAdjacency drackn_from_json(const Json& j) {
  const auto n = get_field<std::size_t>(j, "n");
  const auto m = get_field<std::size_t>(j, "m");
  const auto& blocks = j.at("blocks");
  expect_array(blocks, n, "blocks");
  DracknAdjacency a(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    expect_array(blocks[i], n, "blocks row");
    for (std::size_t k = 0; k < n; ++k) {
      const auto& entry = blocks[i][k];
      if (entry.is_null()) continue;
      if (!entry.is_array())
        fail(ErrorKind::InvalidInput, "block must be null or an array");
      Permutation p;
      for (const auto& x : entry) {
        if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
          fail(ErrorKind::InvalidInput, "permutation entries must be indices");
        p.push_back(x.get<std::uint32_t>());
      }
      a.block(i, k) = std::move(p);
    }
  }
  return a;
}

Json to_json(const ConferenceMatrix& c) {
  const std::size_t n = c.n();
  if (c.is_exact()) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < n; ++j) row.push_back(c.exponent(i, j));
      rows.push_back(std::move(row));
    }
    return {{"n", n}, {"modulus", c.modulus()}, {"exponents", std::move(rows)}};
  }
  Json rows = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(to_json(c.entry(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", n}, {"entries", std::move(rows)}};
}

ConferenceMatrix conference_from_json(const Json& j) {
  const auto n = get_field<std::size_t>(j, "n");
  if (j.contains("exponents")) {
    const auto modulus = get_field<std::uint32_t>(j, "modulus");
    const auto& rows = j.at("exponents");
    expect_array(rows, n, "exponents");
    std::vector<std::vector<std::int64_t>> exps(n);
    for (std::size_t i = 0; i < n; ++i) {
      expect_array(rows[i], n, "exponents row");
      for (const auto& x : rows[i]) {
        if (!x.is_number_integer())
          fail(ErrorKind::InvalidInput, "exponents must be integers");
        exps[i].push_back(x.get<std::int64_t>());
      }
    }
    return ConferenceMatrix::exact(modulus, std::move(exps));
  }
  if (!j.contains("entries"))
    fail(ErrorKind::InvalidInput,
         "conference document needs 'exponents' or 'entries'");
  const auto& rows = j.at("entries");
  expect_array(rows, n, "entries");
  ComplexMatrix entries(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    expect_array(rows[i], n, "entries row");
    for (std::size_t k = 0; k < n; ++k)
      entries(i, k) = complex_from_json(rows[i][k]);
  }
  return ConferenceMatrix::numeric(std::move(entries));
}

Json to_json(const SignatureMatrix& s) {
  Json grid = Json::array();
  for (std::size_t i = 0; i < s.n(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < s.n(); ++j) {
      const auto& b = s.block(i, j);
      Json block = Json::array();
      for (std::size_t x = 0; x < s.r(); ++x) {
        Json brow = Json::array();
        for (std::size_t y = 0; y < s.r(); ++y) brow.push_back(to_json(b(x, y)));
        block.push_back(std::move(brow));
      }
      row.push_back(std::move(block));
    }
    grid.push_back(std::move(row));
  }
  return {{"n", s.n()}, {"r", s.r()}, {"blocks", std::move(grid)}};
}

SignatureMatrix signature_from_json(const Json& j) {
  const auto n = get_field<std::size_t>(j, "n");
  const auto r = get_field<std::size_t>(j, "r");
  const auto& grid = j.at("blocks");
  expect_array(grid, n, "blocks");
  BlockMatrix blocks(n, r);
  for (std::size_t i = 0; i < n; ++i) {
    expect_array(grid[i], n, "blocks row");
    for (std::size_t k = 0; k < n; ++k) {
      const auto& block = grid[i][k];
      expect_array(block, r, "block");
      auto& out = blocks.block(i, k);
      for (std::size_t x = 0; x < r; ++x) {
        expect_array(block[x], r, "block row");
        for (std::size_t y = 0; y < r; ++y)
          out(x, y) = complex_from_json(block[x][y]);
      }
    }
  }
  return SignatureMatrix(std::move(blocks));
}

Json to_json(const FusionFrame& f) {
  Json m = Json::array();
  for (const auto& z : f.synthesis.data()) m.push_back(to_json(z));
  return {{"d", f.d},         {"n", f.n},       {"r", f.r},
          {"alpha", f.alpha}, {"beta", f.beta}, {"M", std::move(m)}};
}

FusionFrame frame_from_json(const Json& j) {
  FusionFrame f;
  f.d = get_field<std::size_t>(j, "d");
  f.n = get_field<std::size_t>(j, "n");
  f.r = get_field<std::size_t>(j, "r");
  f.alpha = get_field<double>(j, "alpha");
  f.beta = get_field<double>(j, "beta");
  const auto& m = j.at("M");
  const std::size_t cols = f.n * f.r;
  expect_array(m, f.d * cols, "M");
  f.synthesis = ComplexMatrix(f.d, cols);
  for (std::size_t k = 0; k < m.size(); ++k)
    f.synthesis(k / cols, k % cols) = complex_from_json(m[k]);
  return f;
}

Json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidInput, "cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::InvalidInput, "'" + path + "' is not JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::InvalidInput, "cannot write '" + path + "'");
  out << text << '\n';
}

}  // namespace eitff::io
