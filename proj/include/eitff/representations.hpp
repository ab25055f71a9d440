#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "eitff/drackn.hpp"
#include "eitff/numerics.hpp"
#include "eitff/signature.hpp"

namespace eitff {

/// The affine bijection x ↦ eps·x + b of Z_m.
struct DihedralElement {
  int eps = 1;         // +1 or -1
  std::uint32_t b = 0;  // residue in [0, m)

  bool operator==(const DihedralElement&) const = default;
};

/// (g ∘ h)(x) = g(h(x)).
DihedralElement compose(const DihedralElement& g, const DihedralElement& h,
                        std::uint32_t m);
std::uint32_t apply(const DihedralElement& g, std::uint32_t x, std::uint32_t m);
/// Image array of g in the convention of Permutation (column t -> row g(t)).
Permutation to_permutation(const DihedralElement& g, std::uint32_t m);

/// Subset K of {1, ..., (m-1)/2}; index k selects the degree-2 irrep on
/// span{f_k, f_-k}.
struct RepSelection {
  std::uint32_t m = 0;
  std::vector<std::uint32_t> indices;  // sorted, distinct

  std::size_t degree() const { return 2 * indices.size(); }

  /// K = {1, ..., (m-1)/2}.
  static RepSelection all(std::uint32_t m);
  /// Parses "1,3" or "all". Throws IndexOutOfRange / InvalidInput.
  static RepSelection parse(std::string_view text, std::uint32_t m);
};

using DihedralGrid = std::vector<std::vector<DihedralElement>>;

/// Reads each off-diagonal block as an element of D_2m. Throws EvenModulus
/// for even m and NotAffine when a block fits neither sign.
DihedralGrid identify_dihedral(const DracknAdjacency& a);

/// Degree-2 real irrep of index k: x+1 ↦ rotation by 2πk/m and
/// -x ↦ diag(1, -1), extended multiplicatively.
RealMatrix irrep_matrix(std::uint32_t m, std::uint32_t k,
                        const DihedralElement& g);

/// Block (i,j) = ⊕_{k∈K} irrep_matrix(m, k, A_ij). Throws FiberTooSmall
/// when m = 1.
SignatureMatrix lift_dihedral(const DracknAdjacency& a,
                              const RepSelection& sel);

/// Orthonormal basis (m × (m-1)) of the complement of the all-ones vector:
/// columns 2..m of the Householder reflector sending 1/√m to e_1.
RealMatrix deleted_permutation_basis(std::size_t m);

/// Block (i,j) = Qᵀ P_ij Q with Q = deleted_permutation_basis(m). Requires
/// the block group to act transitively (NotTransitive otherwise).
SignatureMatrix lift_deleted_permutation(const DracknAdjacency& a);

}  // namespace eitff
