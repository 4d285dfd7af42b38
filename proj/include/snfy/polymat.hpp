#ifndef SNFY_POLYMAT_HPP
#define SNFY_POLYMAT_HPP

#include <cstdint>
#include <vector>

#include "snfy/partitions.hpp"
#include "snfy/polyzx.hpp"

namespace snfy {

/// Dense square matrix over Z[x] with partition labels on rows and columns.
class PolyMatrix {
  public:
    PolyMatrix() = default;
    explicit PolyMatrix(int dim);
    PolyMatrix(int dim, std::vector<Partition> row_labels, std::vector<Partition> col_labels);

    static PolyMatrix identity(int dim);

    int dim() const noexcept { return dim_; }
    const PolyZx& at(int r, int c) const { return entries_[idx(r, c)]; }
    PolyZx& at(int r, int c) { return entries_[idx(r, c)]; }

    const std::vector<Partition>& row_labels() const noexcept { return row_labels_; }
    const std::vector<Partition>& col_labels() const noexcept { return col_labels_; }
    std::vector<Partition>& row_labels() noexcept { return row_labels_; }
    std::vector<Partition>& col_labels() noexcept { return col_labels_; }

    bool is_diagonal() const;
    std::vector<PolyZx> diagonal() const;
    int max_entry_degree() const;  // 0 for the zero matrix

    /// Entrywise evaluation at an integer point.
    std::vector<std::vector<mpz_class>> eval_at(const mpz_class& c) const;

    // labels annotate rows for reporting; equality is the matrix itself
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) noexcept {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

  private:
    size_t idx(int r, int c) const { return static_cast<size_t>(r) * static_cast<size_t>(dim_) + static_cast<size_t>(c); }
    int dim_ = 0;
    std::vector<PolyZx> entries_;
    std::vector<Partition> row_labels_, col_labels_;
};

/// Elementary row/column operation with determinant exactly 1.
///
/// add_multiple_row/col: line a += mult * line b (a != b).
/// swap_rows/cols_signed: line a <- line b, line b <- -line a; the negation
/// keeps the transformation in SL. i == j is a no-op.
/// negate_pair_row/col: negate lines a and b together (a != b), so the two
/// sign flips cancel in the determinant.
struct ElementaryOp {
    enum class Kind : std::uint8_t {
        AddMultipleRow,
        AddMultipleCol,
        SwapRowsSigned,
        SwapColsSigned,
        NegatePairRow,
        NegatePairCol,
    };

    Kind kind;
    int a = 0;
    int b = 0;
    PolyZx mult;

    bool is_row_op() const noexcept {
        return kind == Kind::AddMultipleRow || kind == Kind::SwapRowsSigned ||
               kind == Kind::NegatePairRow;
    }

    static ElementaryOp add_row(int target, int source, PolyZx m) {
        return {Kind::AddMultipleRow, target, source, std::move(m)};
    }
    static ElementaryOp add_col(int target, int source, PolyZx m) {
        return {Kind::AddMultipleCol, target, source, std::move(m)};
    }
    static ElementaryOp swap_rows(int i, int j) { return {Kind::SwapRowsSigned, i, j, {}}; }
    static ElementaryOp swap_cols(int i, int j) { return {Kind::SwapColsSigned, i, j, {}}; }
    static ElementaryOp negate_rows(int i, int j) { return {Kind::NegatePairRow, i, j, {}}; }
    static ElementaryOp negate_cols(int i, int j) { return {Kind::NegatePairCol, i, j, {}}; }

    friend bool operator==(const ElementaryOp& x, const ElementaryOp& y) noexcept = default;
};

/// Ordered elementary operations; compiling the row side against the identity
/// yields P, the column side yields Q, both with determinant 1.
struct Transcript {
    std::vector<ElementaryOp> row_ops;
    std::vector<ElementaryOp> col_ops;

    void record(const ElementaryOp& op) { (op.is_row_op() ? row_ops : col_ops).push_back(op); }

    friend bool operator==(const Transcript& a, const Transcript& b) noexcept = default;
};

/// Throws std::invalid_argument if an op is structurally not determinant-1
/// (add or negate-pair with a == b) or indexes out of range.
void validate_op(const ElementaryOp& op, int dim);

/// Returns a copy of m with op applied. Determinant is preserved.
PolyMatrix apply_op(const PolyMatrix& m, const ElementaryOp& op);

/// In-place variant used by the elimination pipeline.
void apply_op_inplace(PolyMatrix& m, const ElementaryOp& op);

/// P = row ops applied to I in order; Q = column ops applied to I in order.
std::pair<PolyMatrix, PolyMatrix> compile_transcript(const Transcript& t, int dim);

/// Exact matrix product. threads > 1 parallelizes over output rows.
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b, int threads = 1);

/// A + x*I.
PolyMatrix mat_add_xI(const PolyMatrix& a);

/// Exact determinant by evaluation at dim*(max degree + 1) consecutive
/// integer points (fraction-free integer elimination per point) followed by
/// Newton interpolation. threads > 1 parallelizes over the points.
PolyZx determinant(const PolyMatrix& m, int threads = 1);

/// Determinant of the square submatrix selected by rows x cols.
PolyZx minor(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

/// Fraction-free (Bareiss) determinant of an integer matrix; consumes its input.
mpz_class int_determinant(std::vector<std::vector<mpz_class>> m);

/// Interpolates the integer-coefficient polynomial with the given values at
/// the consecutive points 0, 1, ..., values.size()-1. Throws if the data is
/// not matched by an integer-coefficient polynomial of that degree range.
PolyZx interpolate_at_consecutive(const std::vector<mpz_class>& values);

}  // namespace snfy

#endif
