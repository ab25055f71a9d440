#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "eitff/finite_field.hpp"
#include "eitff/numerics.hpp"

namespace eitff {

class ConferenceMatrix;

/// Permutation of [m] stored as an image array: column t of the permutation
/// matrix carries its single 1 in row perm[t].
using Permutation = std::vector<std::uint32_t>;

Permutation identity_permutation(std::size_t m);
Permutation inverse(const Permutation& p);
/// (a ∘ b)[t] = a[b[t]]; the permutation matrix of a∘b is P_a·P_b.
Permutation compose(const Permutation& a, const Permutation& b);
bool is_bijection(const Permutation& p, std::size_t m);

/// n×n grid of m×m permutation blocks with empty diagonal.
class DracknAdjacency {
 public:
  DracknAdjacency() = default;
  DracknAdjacency(std::size_t n, std::size_t m);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }

  const std::optional<Permutation>& block(std::size_t i, std::size_t j) const {
    return blocks_[i * n_ + j];
  }
  std::optional<Permutation>& block(std::size_t i, std::size_t j) {
    return blocks_[i * n_ + j];
  }
  /// Off-diagonal block assumed present (call after verification).
  const Permutation& perm(std::size_t i, std::size_t j) const {
    return *blocks_[i * n_ + j];
  }

  /// Flattened 0/1 adjacency matrix of order mn.
  RealMatrix flatten() const;

  bool operator==(const DracknAdjacency&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::optional<Permutation>> blocks_;
};

struct DracknParams {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t c = 0;
  std::int64_t delta = 0;  // n - mc - 2
  std::int64_t disc = 0;   // delta^2 + 4(n-1)
  double theta = 0.0;
  double tau = 0.0;

  static DracknParams from_nmc(std::int64_t n, std::int64_t m, std::int64_t c);
};

/// Checks (D1)-(D4) exactly. (D4) is evaluated by composing permutations in
/// integer arithmetic; c is inferred from the off-diagonal blocks of A².
/// When m = 1 every c satisfies (D4) and c = 1 is reported.
DracknParams verify_drackn(const DracknAdjacency& a);

struct MathonLabels {
  std::vector<FieldPoint> reps;  // line representatives u_k
  /// gamma[k][l] with B(u_k, u_l) = generator^gamma; diagonal unused (0).
  std::vector<std::vector<std::uint32_t>> gamma;
};

struct MathonDrackn {
  DracknAdjacency adjacency;
  MathonLabels labels;
  FieldSpec field;
};

/// The (q+1, q-1, 1) cover on GF(q)^2 \ {0}, q = 2^k, with vertex (k, i)
/// labelling generator^i · u_k and representatives (1, x) for x ∈ GF(q) in
/// bit order followed by (0, 1).
MathonDrackn mathon_drackn(unsigned k);

/// A_ij = T^{ℓ(i,j)} R on Z_p where C_ij = ω_p^{ℓ(i,j)}. Requires an exact
/// conference matrix with modulus p, p prime and p | n-2.
DracknAdjacency conference_to_drackn(const ConferenceMatrix& c,
                                     std::uint32_t p);

struct GroupClosure {
  std::vector<Permutation> elements;  // sorted
  bool transitive = false;
  bool abelian = false;
};

/// Group generated by the off-diagonal blocks. Throws CapExceeded once more
/// than `cap` elements are found; cap = 0 means the default 10·m².
GroupClosure block_group_closure(const DracknAdjacency& a,
                                 std::size_t cap = 0);

/// Orbit of point 0 under the off-diagonal blocks covers [m].
bool blocks_act_transitively(const DracknAdjacency& a);

bool is_prime(std::uint64_t p);

}  // namespace eitff
