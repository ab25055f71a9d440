#include "eitff/representations.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "eitff/error.hpp"

namespace eitff {
namespace {

std::uint32_t mod(std::int64_t x, std::uint32_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint32_t>(((x % mm) + mm) % mm);
}

std::string block_loc(std::size_t i, std::size_t j) {
  return "block(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

bool fits(const Permutation& p, int eps, std::uint32_t b, std::uint32_t m) {
  for (std::uint32_t x = 0; x < m; ++x)
    if (p[x] != mod(static_cast<std::int64_t>(eps) * x + b, m)) return false;
  return true;
}

}  // namespace

DihedralElement compose(const DihedralElement& g, const DihedralElement& h,
                        std::uint32_t m) {
  return {g.eps * h.eps,
          mod(static_cast<std::int64_t>(g.eps) * h.b + g.b, m)};
}

std::uint32_t apply(const DihedralElement& g, std::uint32_t x, std::uint32_t m) {
  return mod(static_cast<std::int64_t>(g.eps) * x + g.b, m);
}

Permutation to_permutation(const DihedralElement& g, std::uint32_t m) {
  Permutation p(m);
  for (std::uint32_t x = 0; x < m; ++x) p[x] = apply(g, x, m);
  return p;
}

RepSelection RepSelection::all(std::uint32_t m) {
  RepSelection sel;
  sel.m = m;
  for (std::uint32_t k = 1; 2 * k < m; ++k) sel.indices.push_back(k);
  return sel;
}

RepSelection RepSelection::parse(std::string_view text, std::uint32_t m) {
  if (text == "all") return all(m);
  RepSelection sel;
  sel.m = m;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    std::uint32_t k = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), k);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      fail(ErrorKind::InvalidInput,
           "bad irrep index '" + std::string(token) + "'");
    if (k < 1 || 2 * k >= m)
      fail(ErrorKind::IndexOutOfRange,
           "irrep index " + std::to_string(k) + " outside [1, " +
               std::to_string((m - 1) / 2) + "]");
    sel.indices.push_back(k);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  std::sort(sel.indices.begin(), sel.indices.end());
  sel.indices.erase(std::unique(sel.indices.begin(), sel.indices.end()),
                    sel.indices.end());
  if (sel.indices.empty())
    fail(ErrorKind::InvalidInput, "empty irrep selection");
  return sel;
}

DihedralGrid identify_dihedral(const DracknAdjacency& a) {
  const auto m = static_cast<std::uint32_t>(a.m());
  if (m % 2 == 0)
    fail(ErrorKind::EvenModulus,
         "dihedral irreps need an odd fiber size, got m = " +
             std::to_string(m));
  DihedralGrid grid(a.n(), std::vector<DihedralElement>(a.n()));
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (i == j) continue;
      const auto& p = a.perm(i, j);
      bool found = false;
      for (int eps : {1, -1}) {
        // g(0) = b pins the translation part.
        const std::uint32_t b = p[0];
        if (fits(p, eps, b, m)) {
          grid[i][j] = {eps, b};
          found = true;
          break;
        }
      }
      if (!found)
        fail(ErrorKind::NotAffine, "block is not an affine map of Z_m",
             block_loc(i, j));
    }
  return grid;
}

RealMatrix irrep_matrix(std::uint32_t m, std::uint32_t k,
                        const DihedralElement& g) {
  if (k < 1 || 2 * k >= m)
    fail(ErrorKind::IndexOutOfRange,
         "irrep index " + std::to_string(k) + " invalid for m = " +
             std::to_string(m));
  // g = (x ↦ x + b) ∘ (x ↦ eps·x): rotation(2πkb/m) · diag(1, eps).
  const auto residue = (static_cast<std::uint64_t>(k) * g.b) % m;
  const double angle =
      2.0 * std::numbers::pi * static_cast<double>(residue) / m;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  RealMatrix out(2, 2);
  out(0, 0) = c;
  out(1, 0) = s;
  out(0, 1) = -s * g.eps;
  out(1, 1) = c * g.eps;
  return out;
}

SignatureMatrix lift_dihedral(const DracknAdjacency& a,
                              const RepSelection& sel) {
  if (a.m() == 1)
    fail(ErrorKind::FiberTooSmall,
         "fibers of size 1 admit only the trivial representation");
  if (sel.m != a.m())
    fail(ErrorKind::DimensionMismatch, "selection modulus differs from m");
  if (sel.indices.empty())
    fail(ErrorKind::InvalidInput, "empty irrep selection");
  const auto grid = identify_dihedral(a);
  const auto m = static_cast<std::uint32_t>(a.m());
  const std::size_t r = sel.degree();

  BlockMatrix blocks(a.n(), r);
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (i == j) continue;
      auto& out = blocks.block(i, j);
      for (std::size_t s = 0; s < sel.indices.size(); ++s) {
        const auto rho = irrep_matrix(m, sel.indices[s], grid[i][j]);
        for (std::size_t x = 0; x < 2; ++x)
          for (std::size_t y = 0; y < 2; ++y)
            out(2 * s + x, 2 * s + y) = rho(x, y);
      }
    }
  return SignatureMatrix(std::move(blocks));
}

RealMatrix deleted_permutation_basis(std::size_t m) {
  if (m < 2)
    fail(ErrorKind::FiberTooSmall,
         "the all-ones complement is trivial for m < 2");
  // v = 1/√m - e_1, H = I - 2vvᵀ/(vᵀv).
  const double u = 1.0 / std::sqrt(static_cast<double>(m));
  std::vector<double> v(m, u);
  v[0] -= 1.0;
  double vv = 0.0;
  for (double x : v) vv += x * x;
  RealMatrix q(m, m - 1);
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t col = 1; col < m; ++col)
      q(row, col - 1) = (row == col ? 1.0 : 0.0) - 2.0 * v[row] * v[col] / vv;
  return q;
}

SignatureMatrix lift_deleted_permutation(const DracknAdjacency& a) {
  const std::size_t m = a.m();
  if (m == 1)
    fail(ErrorKind::FiberTooSmall,
         "fibers of size 1 admit only the trivial representation");
  if (!blocks_act_transitively(a))
    fail(ErrorKind::NotTransitive,
         "block group does not act transitively on the fiber");

  const auto q = deleted_permutation_basis(m);
  const auto qt = q.transpose();
  const std::size_t r = m - 1;
  BlockMatrix blocks(a.n(), r);
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (i == j) continue;
      // P Q: row perm[t] of the product is row t of Q.
      const auto& perm = a.perm(i, j);
      RealMatrix pq(m, r);
      for (std::size_t t = 0; t < m; ++t)
        for (std::size_t c = 0; c < r; ++c) pq(perm[t], c) = q(t, c);
      blocks.set_block(i, j, to_complex(qt * pq));
    }
  return SignatureMatrix(std::move(blocks));
}

}  // namespace eitff
