#ifndef SNFY_OPERATORS_HPP
#define SNFY_OPERATORS_HPP

#include <map>
#include <vector>

#include "snfy/partitions.hpp"
#include "snfy/polymat.hpp"

namespace snfy {

/// The string-order h-basis index for degree n: partitions in the global
/// descending order, with the start offset and size of every string block.
/// Materialized once; all matrix code indexes by position.
struct HBasisIndex {
    int n = 0;
    std::vector<Partition> order;
    std::vector<int> block_starts;    // offset of each string block
    std::vector<int> cardinalities;   // (i_1, ..., i_t)
    std::map<Partition, int> position;

    int dim() const noexcept { return static_cast<int>(order.size()); }
    int t() const noexcept { return static_cast<int>(cardinalities.size()); }

    static HBasisIndex build(int n);
};

enum class Basis { HStringOrder, SchurLexOrder };

/// Identifies which operator matrix a certificate refers to.
struct OperatorMatrixSpec {
    int n = 0;
    int k = 1;
    Basis basis = Basis::HStringOrder;
    std::vector<PolyZx> substituted_fs;  // empty means plain integer matrix
};

/// Matrix of d/dp_1 p_1 on {h_lambda} in string order; column lambda holds
/// the expansion of the image of h_lambda. Integer entries.
PolyMatrix build_A_h_basis(const HBasisIndex& idx);
PolyMatrix build_A_h_basis(int n);

/// Matrix of d/dp_1 p_1 on {s_lambda}, descending lexicographic order.
/// Built combinatorially from cover relations of Young's lattice: entry
/// (mu, lambda) counts partitions of n+1 covering both. Symmetric.
PolyMatrix build_M_schur(int n);

/// Matrix of k d/dp_k p_k on {h_lambda} in string order. k = 1 agrees with
/// build_A_h_basis.
PolyMatrix build_M_k_h_basis(const HBasisIndex& idx, int k);
PolyMatrix build_M_k_h_basis(int n, int k);

/// Expansion of the power sum p_k in the complete homogeneous basis via
/// Newton's identity; memoized per k. Keys are partitions of k.
const std::map<Partition, mpz_class>& power_sum_in_h(int k);

/// Replace the diagonal of A: within each string block, diagonal position r
/// gets fs[r]. fs must have length n. Off-diagonal entries unchanged.
PolyMatrix substitute_diagonal(const PolyMatrix& a, const HBasisIndex& idx,
                               const std::vector<PolyZx>& fs);

/// fs with fs[i-1] = i + x for i < n and fs[n-1] = n + 1 + x, so that
/// substitute_diagonal(A, fs) = A + xI.
std::vector<PolyZx> default_fs(int n);

/// prod over lambda |- n of (x + k(m_k(lambda) + 1)).
PolyZx char_poly_formula(int n, int k);

}  // namespace snfy

#endif
