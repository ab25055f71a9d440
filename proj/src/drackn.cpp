#include "eitff/drackn.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "eitff/conference.hpp"
#include "eitff/error.hpp"

namespace eitff {
namespace {

std::string block_loc(std::size_t i, std::size_t j) {
  return "block(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string entry_loc(std::size_t i, std::size_t j, std::size_t row,
                      std::size_t col) {
  return block_loc(i, j) + " entry(" + std::to_string(row) + "," +
         std::to_string(col) + ")";
}

}  // namespace

Permutation identity_permutation(std::size_t m) {
  Permutation p(m);
  for (std::size_t t = 0; t < m; ++t) p[t] = static_cast<std::uint32_t>(t);
  return p;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t t = 0; t < p.size(); ++t)
    out[p[t]] = static_cast<std::uint32_t>(t);
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t t = 0; t < b.size(); ++t) out[t] = a[b[t]];
  return out;
}

bool is_bijection(const Permutation& p, std::size_t m) {
  if (p.size() != m) return false;
  std::vector<bool> seen(m, false);
  for (auto x : p) {
    if (x >= m || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

DracknAdjacency::DracknAdjacency(std::size_t n, std::size_t m)
    : n_(n), m_(m), blocks_(n * n) {}

RealMatrix DracknAdjacency::flatten() const {
  RealMatrix out(n_ * m_, n_ * m_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const auto& b = block(i, j);
      if (!b) continue;
      for (std::size_t t = 0; t < m_; ++t) out(i * m_ + (*b)[t], j * m_ + t) = 1.0;
    }
  return out;
}

DracknParams DracknParams::from_nmc(std::int64_t n, std::int64_t m,
                                    std::int64_t c) {
  DracknParams p;
  p.n = n;
  p.m = m;
  p.c = c;
  p.delta = n - m * c - 2;
  p.disc = p.delta * p.delta + 4 * (n - 1);
  const double root = std::sqrt(static_cast<double>(p.disc));
  p.theta = (static_cast<double>(p.delta) + root) / 2.0;
  p.tau = (static_cast<double>(p.delta) - root) / 2.0;
  return p;
}

DracknParams verify_drackn(const DracknAdjacency& a) {
  const std::size_t n = a.n();
  const std::size_t m = a.m();
  if (n < 2 || m < 1)
    fail(ErrorKind::InvalidInput, "a DRACKN needs n >= 2 fibers of size m >= 1");

  for (std::size_t i = 0; i < n; ++i)
    if (a.block(i, i))
      axiom_violation("D1", "diagonal block is not empty", block_loc(i, i));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& b = a.block(i, j);
      if (!b || !is_bijection(*b, m))
        axiom_violation("D2", "off-diagonal block is not a permutation of [" +
                                  std::to_string(m) + "]",
                        block_loc(i, j));
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.perm(j, i) != inverse(a.perm(i, j)))
        axiom_violation("D3", "block is not the transpose of its mirror",
                        block_loc(j, i));

  // counts(row, col) = ((A^2)_{ij})_{row,col}
  std::vector<std::int64_t> counts(m * m);
  std::optional<std::int64_t> c;
  if (m == 1) c = 1;
  std::optional<std::int64_t> delta;
  if (c) delta = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(m) * *c - 2;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const auto& left = a.perm(i, k);
        const auto& right = a.perm(k, j);
        for (std::size_t t = 0; t < m; ++t) ++counts[left[right[t]] * m + t];
      }

      if (i == j) {
        for (std::size_t row = 0; row < m; ++row)
          for (std::size_t col = 0; col < m; ++col) {
            const std::int64_t want =
                row == col ? static_cast<std::int64_t>(n) - 1 : 0;
            if (counts[row * m + col] != want)
              axiom_violation("D4", "diagonal block of A^2 is not (n-1)I",
                              entry_loc(i, j, row, col));
          }
        continue;
      }

      const auto& matched = a.perm(i, j);
      for (std::size_t col = 0; col < m; ++col)
        for (std::size_t row = 0; row < m; ++row) {
          if (row == matched[col]) continue;
          const auto value = counts[row * m + col];
          if (!c) {
            if (value <= 0)
              axiom_violation("D4",
                              "nonadjacent cross-fiber vertices have no common "
                              "neighbour (c must be positive)",
                              entry_loc(i, j, row, col));
            c = value;
            delta = static_cast<std::int64_t>(n) -
                    static_cast<std::int64_t>(m) * value - 2;
          } else if (value != *c) {
            fail(ErrorKind::InconsistentC,
                 "off-diagonal block of A^2 has " + std::to_string(value) +
                     " where c = " + std::to_string(*c) + " was inferred",
                 entry_loc(i, j, row, col));
          }
        }
      for (std::size_t col = 0; col < m; ++col) {
        const auto value = counts[matched[col] * m + col];
        if (value != *delta + *c)
          axiom_violation("D4",
                          "adjacent pair has " + std::to_string(value) +
                              " common neighbours, expected delta + c = " +
                              std::to_string(*delta + *c),
                          entry_loc(i, j, matched[col], col));
      }
    }
  }
  return DracknParams::from_nmc(static_cast<std::int64_t>(n),
                                static_cast<std::int64_t>(m), *c);
}

MathonDrackn mathon_drackn(unsigned k) {
  auto field = FieldSpec::build(k);
  const std::uint32_t q = field.q();
  const std::uint32_t m = q - 1;
  const std::size_t n = q + 1;

  MathonLabels labels;
  labels.reps.reserve(n);
  for (const auto& x : field.elements()) labels.reps.push_back({{1}, x});
  labels.reps.push_back({{0}, {1}});

  labels.gamma.assign(n, std::vector<std::uint32_t>(n, 0));
  DracknAdjacency adj(n, m);
  for (std::size_t kk = 0; kk < n; ++kk)
    for (std::size_t l = 0; l < n; ++l) {
      if (kk == l) continue;
      const auto b = field.symplectic(labels.reps[kk], labels.reps[l]);
      const auto g = field.dlog(b);
      labels.gamma[kk][l] = g;
      // (A_kl)_{ij} = 1 iff i + j + gamma = 0 mod m: column j -> row -j-gamma.
      Permutation p(m);
      for (std::uint32_t j = 0; j < m; ++j) p[j] = (2 * m - j - g) % m;
      adj.block(kk, l) = std::move(p);
    }
  return {std::move(adj), std::move(labels), std::move(field)};
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

DracknAdjacency conference_to_drackn(const ConferenceMatrix& c,
                                     std::uint32_t p) {
  if (!c.is_exact())
    fail(ErrorKind::NotExactMode,
         "conference matrix lacks exact root-of-unity exponents");
  if (!is_prime(p))
    fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  const std::size_t n = c.n();
  if (n < 2 || (n - 2) % p != 0)
    fail(ErrorKind::DivisibilityFailure,
         std::to_string(p) + " does not divide n - 2 = " +
             std::to_string(static_cast<long long>(n) - 2));
  if (c.modulus() != p)
    fail(ErrorKind::ModulusMismatch,
         "conference modulus " + std::to_string(c.modulus()) +
             " differs from p = " + std::to_string(p));

  DracknAdjacency adj(n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto ell = static_cast<std::uint32_t>(c.exponent(i, j));
      // T^ell R sends e_t to e_{ell - t}.
      Permutation perm(p);
      for (std::uint32_t t = 0; t < p; ++t) perm[t] = (ell + p - t) % p;
      adj.block(i, j) = std::move(perm);
    }
  return adj;
}

bool blocks_act_transitively(const DracknAdjacency& a) {
  const std::size_t m = a.m();
  if (m == 0) return false;
  std::vector<bool> seen(m, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < a.n(); ++i)
      for (std::size_t j = 0; j < a.n(); ++j) {
        if (i == j || !a.block(i, j)) continue;
        const auto y = (*a.block(i, j))[x];
        if (!seen[y]) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
      }
  }
  return reached == m;
}

GroupClosure block_group_closure(const DracknAdjacency& a, std::size_t cap) {
  const std::size_t m = a.m();
  if (cap == 0) cap = 10 * m * m;

  std::set<Permutation> generator_set;
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      if (i != j && a.block(i, j)) generator_set.insert(*a.block(i, j));
  const std::vector<Permutation> generators(generator_set.begin(),
                                            generator_set.end());

  std::set<Permutation> group{identity_permutation(m)};
  std::vector<Permutation> frontier{identity_permutation(m)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier)
      for (const auto& g : generators) {
        auto prod = compose(g, e);
        if (group.insert(prod).second) {
          if (group.size() > cap)
            fail(ErrorKind::CapExceeded,
                 "block group has more than " + std::to_string(cap) +
                     " elements");
          next.push_back(std::move(prod));
        }
      }
    frontier = std::move(next);
  }

  GroupClosure out;
  out.elements.assign(group.begin(), group.end());
  out.transitive = blocks_act_transitively(a);
  out.abelian = true;
  for (std::size_t x = 0; x < generators.size() && out.abelian; ++x)
    for (std::size_t y = x + 1; y < generators.size(); ++y)
      if (compose(generators[x], generators[y]) !=
          compose(generators[y], generators[x])) {
        out.abelian = false;
        break;
      }
  return out;
}

}  // namespace eitff
