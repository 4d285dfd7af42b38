#ifndef SNFY_SNF_PAPER_HPP
#define SNFY_SNF_PAPER_HPP

#include <string>
#include <vector>

#include "snfy/operators.hpp"
#include "snfy/polymat.hpp"

namespace snfy {

/// Last row/column position of string block b (the alpha position).
inline int block_last_position(const HBasisIndex& idx, int b) {
    return idx.block_starts[static_cast<size_t>(b)] +
           idx.cardinalities[static_cast<size_t>(b)] - 1;
}

/// A diagonalization certificate: D = P * Ax * Q with det P = det Q = 1.
/// `verified` is set only after verify_certificate has done the exact
/// product and determinant checks.
struct SnfCertificate {
    OperatorMatrixSpec input_spec;
    PolyMatrix D;
    Transcript transcript;
    PolyMatrix P, Q;
    bool verified = false;
};

/// One divisibility check on a beta entry: the entry at (alpha row of block
/// k, column j of block l) must be divisible by fs[0]*...*fs[j-1]. j is
/// 1-based so that j also counts the factors in the divisor.
struct BetaCheck {
    int block_k = 0;
    int block_l = 0;
    int j = 1;
    int row = 0;
    int col = 0;
    bool ok = false;
};

struct BetaReport {
    std::vector<BetaCheck> checks;

    bool all_ok() const;
    std::vector<BetaCheck> failures() const;
};

/// Structural defect found by check_block_structure, with coordinates.
struct StructureIssue {
    int row = 0;
    int col = 0;
    std::string what;
};

/// Checks the block shape shared by the operator matrix and its substituted
/// form: blocks below the diagonal are zero, diagonal blocks are lower
/// bidiagonal with unit subdiagonal, and blocks above the diagonal are zero
/// on and above their local diagonal. Diagonal values themselves are not
/// checked (they differ between the integer and substituted matrices).
std::vector<StructureIssue> check_block_structure(const PolyMatrix& m, const HBasisIndex& idx);

/// Stage 1: per block, rotate the first row to the bottom (as size-1 signed
/// adjacent swaps) and eliminate the rotated row against the unit diagonal
/// above it. The result is upper triangular with per-block diagonal
/// (1, ..., 1, fs[0]*...*fs[s-1]); the former first row's trailing entries
/// become the beta rows. Ops are appended to the transcript.
/// Throws std::logic_error when the input violates the expected block shape
/// and std::invalid_argument when fs is malformed (wrong length or a zero).
PolyMatrix upper_triangularize(const PolyMatrix& ax, const HBasisIndex& idx,
                               const std::vector<PolyZx>& fs, Transcript& transcript);

/// Checks fs[0]*...*fs[j-1] divides every beta entry of the stage-1 matrix.
/// Reports every check; callers decide whether a failure is fatal.
BetaReport verify_beta_divisibility(const PolyMatrix& a1, const HBasisIndex& idx,
                                    const std::vector<PolyZx>& fs);

/// Stage 2: column ops cancel the rows with unit diagonal (top to bottom,
/// left to right), then row ops cancel the columns with unit diagonal. The
/// result is the identity except for the alpha diagonal entries and residual
/// beta entries at (alpha row, alpha column) crossings with block k < l.
/// Throws std::logic_error if anything survives outside that pattern.
PolyMatrix cancel_C1_C2(const PolyMatrix& a1, const HBasisIndex& idx, Transcript& transcript);

/// Stage 3: clears the residual beta entries with row ops, walking alpha
/// columns left to right; each entry must be divisible by the alpha on that
/// column's diagonal. Returns the resulting diagonal matrix.
/// Throws std::domain_error with coordinates if divisibility fails.
PolyMatrix clear_betas(const PolyMatrix& a2, const HBasisIndex& idx, Transcript& transcript);

/// Stage 4: normalizes signs (paired row negations) and permutes the
/// diagonal with paired signed row+column swaps so the unit entries come
/// first and the alpha entries follow in weakly increasing block
/// cardinality. Verifies the divisibility chain d_i | d_{i+1}.
void sort_diagonal(PolyMatrix& d, const HBasisIndex& idx, Transcript& transcript);

/// The predicted diagonal: p(n) - t ones, then alpha_j for the parts j of
/// the conjugate shape in weakly increasing order.
std::vector<PolyZx> theorem_diagonal(int n);

struct VerifyOutcome {
    bool ok = false;
    std::string detail;
};

/// Exact certificate check: every transcript op is structurally det-1, D is
/// diagonal with a divisibility chain, P * ax * Q = D entrywise, the product
/// of the diagonal equals det(ax) (so det P * det Q = 1 in Z[x]), and
/// det P(0) = det Q(0) = 1 fixes both signs. Sets cert.verified on success.
VerifyOutcome verify_certificate(SnfCertificate& cert, const PolyMatrix& ax, int threads = 1);

/// Full pipeline on the degree-n operator matrix with the given diagonal
/// substitution (fs must have length n). verify = true runs
/// verify_certificate and throws std::domain_error on failure.
SnfCertificate run_pipeline(int n, const std::vector<PolyZx>& fs, bool verify, int threads = 1);

/// Same with fs = default_fs(n), i.e. the matrix A + xI.
SnfCertificate run_pipeline(int n, bool verify, int threads = 1);

}  // namespace snfy

#endif
