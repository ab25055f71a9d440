#include "eitff/conference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "eitff/drackn.hpp"
#include "eitff/error.hpp"
#include "eitff/signature.hpp"

namespace eitff {
namespace {

std::string entry_loc(std::size_t i, std::size_t j) {
  return "entry(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string block_loc(std::size_t i, std::size_t j) {
  return "block(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::int64_t reduce(std::int64_t e, std::uint32_t modulus) {
  const auto n = static_cast<std::int64_t>(modulus);
  return ((e % n) + n) % n;
}

}  // namespace

Complex root_of_unity(std::int64_t exponent, std::uint32_t modulus) {
  const auto e = reduce(exponent, modulus);
  if (e == 0) return {1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) /
                       static_cast<double>(modulus);
  return std::polar(1.0, angle);
}

ConferenceMatrix ConferenceMatrix::exact(
    std::uint32_t modulus, std::vector<std::vector<std::int64_t>> exponents) {
  if (modulus == 0)
    fail(ErrorKind::InvalidInput, "root-of-unity modulus must be positive");
  const std::size_t n = exponents.size();
  for (const auto& row : exponents)
    if (row.size() != n)
      fail(ErrorKind::DimensionMismatch, "exponent array is not square");

  ConferenceMatrix c;
  c.n_ = n;
  c.modulus_ = modulus;
  c.exponents_.resize(n * n);
  c.entries_ = ComplexMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        if (exponents[i][j] != -1)
          axiom_violation("C1",
                          "diagonal exponent must be the zero sentinel -1",
                          entry_loc(i, i));
        c.exponents_[i * n + j] = -1;
        continue;
      }
      const auto e = reduce(exponents[i][j], modulus);
      if (e != reduce(exponents[j][i], modulus))
        axiom_violation("C3", "matrix is not symmetric", entry_loc(i, j));
      c.exponents_[i * n + j] = e;
      c.entries_(i, j) = root_of_unity(e, modulus);
    }
  return c;
}

ConferenceMatrix ConferenceMatrix::numeric(ComplexMatrix entries) {
  if (!entries.square())
    fail(ErrorKind::DimensionMismatch, "conference matrix must be square");
  const std::size_t n = entries.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (entries(i, i) != Complex{})
      axiom_violation("C1", "diagonal entry is not zero", entry_loc(i, i));
    for (std::size_t j = i + 1; j < n; ++j)
      if (entries(i, j) != entries(j, i))
        axiom_violation("C3", "matrix is not symmetric", entry_loc(i, j));
  }
  ConferenceMatrix c;
  c.n_ = n;
  c.entries_ = std::move(entries);
  return c;
}

std::int64_t ConferenceMatrix::exponent(std::size_t i, std::size_t j) const {
  if (!is_exact())
    fail(ErrorKind::NotExactMode, "numeric conference matrix has no exponents");
  return exponents_[i * n_ + j];
}

Complex ConferenceMatrix::entry(std::size_t i, std::size_t j) const {
  return entries_(i, j);
}

bool ConferenceMatrix::operator==(const ConferenceMatrix& other) const {
  if (n_ != other.n_ || modulus_ != other.modulus_) return false;
  if (is_exact()) return exponents_ == other.exponents_;
  return entries_ == other.entries_;
}

ConferenceMatrix mathon_conference(unsigned k, std::int64_t a) {
  if (k < 2 || k > 16)
    fail(ErrorKind::OutOfRange,
         "Mathon conference matrices need 2 <= k <= 16, got " +
             std::to_string(k));
  const auto m = (std::uint32_t{1} << k) - 1;
  if (reduce(a, m) == 0)
    fail(ErrorKind::DegenerateIrrep,
         "a = " + std::to_string(a) + " is 0 mod " + std::to_string(m) +
             ", which selects the trivial representation");

  const auto mathon = mathon_drackn(k);
  const std::size_t n = mathon.adjacency.n();
  std::vector<std::vector<std::int64_t>> exps(n,
                                              std::vector<std::int64_t>(n, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        exps[i][j] = reduce(
            reduce(a, m) * static_cast<std::int64_t>(mathon.labels.gamma[i][j]),
            m);
  return ConferenceMatrix::exact(m, std::move(exps));
}

ConferenceReport verify_conference(const ConferenceMatrix& c, double tol) {
  const std::size_t n = c.n();
  if (n == 0) fail(ErrorKind::InvalidInput, "empty conference matrix");
  const auto& e = c.entries();

  for (std::size_t i = 0; i < n; ++i) {
    if (e(i, i) != Complex{})
      axiom_violation("C1", "diagonal entry is not zero", entry_loc(i, i));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (e(i, j) != e(j, i))
        axiom_violation("C3", "matrix is not symmetric", entry_loc(i, j));
      if (std::abs(std::abs(e(i, j)) - 1.0) > tol)
        axiom_violation("C2", "off-diagonal entry is not unimodular",
                        entry_loc(i, j));
    }
  }

  ConferenceReport report;
  report.n = n;
  const auto gram = e * e.adjoint();
  std::size_t worst_i = 0, worst_j = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex want = i == j ? Complex(static_cast<double>(n) - 1.0) : 0.0;
      const double dev = std::abs(gram(i, j) - want);
      if (dev > report.c4_deviation) {
        report.c4_deviation = dev;
        worst_i = i;
        worst_j = j;
      }
    }
  if (report.c4_deviation > tol)
    axiom_violation("C4",
                    "CC* deviates from (n-1)I by " +
                        std::to_string(report.c4_deviation),
                    entry_loc(worst_i, worst_j));

  if (c.is_exact() && is_prime(c.modulus()) && n >= 2) {
    const std::uint32_t p = c.modulus();
    const auto want = static_cast<std::int64_t>(n - 2) / p;
    std::vector<std::int64_t> counts(p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t k = 0; k < n; ++k)
          if (k != i && k != j)
            ++counts[reduce(c.exponent(i, k) - c.exponent(j, k), p)];
        for (std::uint32_t res = 0; res < p; ++res)
          if (counts[res] * p != static_cast<std::int64_t>(n - 2))
            fail(ErrorKind::ExactCountFailure,
                 "residue " + std::to_string(res) + " occurs " +
                     std::to_string(counts[res]) + " times, expected (n-2)/p",
                 "pair(" + std::to_string(i) + "," + std::to_string(j) +
                     ") residue " + std::to_string(res) + " count " +
                     std::to_string(counts[res]));
      }
    report.exact_count_checked = true;
    report.count_per_residue = want;
  }
  return report;
}

SignatureMatrix et_taoui_to_signature(const ConferenceMatrix& c) {
  const std::size_t n = c.n();
  BlockMatrix blocks(n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Complex z = c.entry(i, j);
      auto& b = blocks.block(i, j);
      b(0, 0) = z.real();
      b(0, 1) = z.imag();
      b(1, 0) = z.imag();
      b(1, 1) = -z.real();
    }
  return SignatureMatrix(std::move(blocks));
}

ConferenceMatrix signature_to_conference(const SignatureMatrix& s,
                                         double tol) {
  if (s.r() != 2)
    fail(ErrorKind::WrongBlockShape,
         "conference conversion needs 2x2 blocks, got r = " +
             std::to_string(s.r()));
  const std::size_t n = s.n();
  ComplexMatrix raw(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& b = s.block(i, j);
      if (max_imag(b) > tol)
        fail(ErrorKind::WrongBlockShape, "block has imaginary entries",
             block_loc(i, j));
      if (i == j) {
        if (b.max_abs() > tol)
          fail(ErrorKind::WrongBlockShape, "diagonal block is not zero",
               block_loc(i, j));
        continue;
      }
      const double a = b(0, 0).real();
      const double bb = b(0, 1).real();
      if (std::abs(b(1, 0).real() - bb) > tol ||
          std::abs(b(1, 1).real() + a) > tol)
        fail(ErrorKind::WrongBlockShape,
             "block is not of the form [[a, b], [b, -a]]", block_loc(i, j));
      raw(i, j) = Complex(0.5 * (a - b(1, 1).real()),
                          0.5 * (bb + b(1, 0).real()));
    }

  ComplexMatrix entries(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(raw(i, j) - raw(j, i)) > tol)
        axiom_violation("C3", "blocks (i,j) and (j,i) disagree",
                        entry_loc(i, j));
      const Complex avg = 0.5 * (raw(i, j) + raw(j, i));
      entries(i, j) = avg;
      entries(j, i) = avg;
    }
  return ConferenceMatrix::numeric(std::move(entries));
}

std::optional<ConferenceMatrix> snap_to_roots(const ConferenceMatrix& c,
                                              std::uint32_t modulus,
                                              double tol) {
  if (modulus == 0) return std::nullopt;
  const std::size_t n = c.n();
  std::vector<std::vector<std::int64_t>> exps(n,
                                              std::vector<std::int64_t>(n, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Complex z = c.entry(i, j);
      const double turns = std::arg(z) / (2.0 * std::numbers::pi);
      const auto e = reduce(
          static_cast<std::int64_t>(std::llround(turns * modulus)), modulus);
      if (std::abs(z - root_of_unity(e, modulus)) > tol) return std::nullopt;
      exps[i][j] = e;
    }
  return ConferenceMatrix::exact(modulus, std::move(exps));
}

RealMatrix ctr(const ComplexMatrix& z) {
  RealMatrix out(2 * z.rows(), 2 * z.cols());
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) {
      const Complex w = z(i, j);
      out(2 * i, 2 * j) = w.real();
      out(2 * i, 2 * j + 1) = -w.imag();
      out(2 * i + 1, 2 * j) = w.imag();
      out(2 * i + 1, 2 * j + 1) = w.real();
    }
  return out;
}

}  // namespace eitff
