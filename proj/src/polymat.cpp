#include "snfy/polymat.hpp"

#include <stdexcept>

#include "snfy/parallel.hpp"

namespace snfy {

PolyMatrix::PolyMatrix(int dim) : dim_(dim), entries_(static_cast<size_t>(dim) * static_cast<size_t>(dim)) {
    if (dim < 0) throw std::invalid_argument("PolyMatrix: negative dimension");
}

PolyMatrix::PolyMatrix(int dim, std::vector<Partition> row_labels, std::vector<Partition> col_labels)
    : PolyMatrix(dim) {
    if ((!row_labels.empty() && static_cast<int>(row_labels.size()) != dim) ||
        (!col_labels.empty() && static_cast<int>(col_labels.size()) != dim))
        throw std::invalid_argument("PolyMatrix: label count != dim");
    row_labels_ = std::move(row_labels);
    col_labels_ = std::move(col_labels);
}

PolyMatrix PolyMatrix::identity(int dim) {
    PolyMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = PolyZx(1);
    return m;
}

bool PolyMatrix::is_diagonal() const {
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            if (r != c && !at(r, c).is_zero()) return false;
    return true;
}

std::vector<PolyZx> PolyMatrix::diagonal() const {
    std::vector<PolyZx> d;
    d.reserve(static_cast<size_t>(dim_));
    for (int i = 0; i < dim_; ++i) d.push_back(at(i, i));
    return d;
}

int PolyMatrix::max_entry_degree() const {
    int d = 0;
    for (const auto& e : entries_) d = std::max(d, e.degree());
    return d;
}

std::vector<std::vector<mpz_class>> PolyMatrix::eval_at(const mpz_class& c) const {
    std::vector<std::vector<mpz_class>> out(static_cast<size_t>(dim_),
                                            std::vector<mpz_class>(static_cast<size_t>(dim_)));
    for (int r = 0; r < dim_; ++r)
        for (int cidx = 0; cidx < dim_; ++cidx) out[static_cast<size_t>(r)][static_cast<size_t>(cidx)] = at(r, cidx).eval_at(c);
    return out;
}

void validate_op(const ElementaryOp& op, int dim) {
    if (op.a < 0 || op.a >= dim || op.b < 0 || op.b >= dim)
        throw std::invalid_argument("ElementaryOp: index out of range");
    switch (op.kind) {
        case ElementaryOp::Kind::AddMultipleRow:
        case ElementaryOp::Kind::AddMultipleCol:
        case ElementaryOp::Kind::NegatePairRow:
        case ElementaryOp::Kind::NegatePairCol:
            if (op.a == op.b)
                throw std::invalid_argument("ElementaryOp: target must differ from source");
            break;
        case ElementaryOp::Kind::SwapRowsSigned:
        case ElementaryOp::Kind::SwapColsSigned:
            break;  // i == j is the identity
    }
}

void apply_op_inplace(PolyMatrix& m, const ElementaryOp& op) {
    validate_op(op, m.dim());
    const int n = m.dim();
    switch (op.kind) {
        case ElementaryOp::Kind::AddMultipleRow:
            if (op.mult.is_zero()) return;
            for (int c = 0; c < n; ++c)
                if (!m.at(op.b, c).is_zero()) m.at(op.a, c) += op.mult * m.at(op.b, c);
            return;
        case ElementaryOp::Kind::AddMultipleCol:
            if (op.mult.is_zero()) return;
            for (int r = 0; r < n; ++r)
                if (!m.at(r, op.b).is_zero()) m.at(r, op.a) += op.mult * m.at(r, op.b);
            return;
        case ElementaryOp::Kind::SwapRowsSigned:
            if (op.a == op.b) return;
            for (int c = 0; c < n; ++c) {
                PolyZx tmp = std::move(m.at(op.a, c));
                m.at(op.a, c) = std::move(m.at(op.b, c));
                m.at(op.b, c) = -tmp;
            }
            return;
        case ElementaryOp::Kind::SwapColsSigned:
            if (op.a == op.b) return;
            for (int r = 0; r < n; ++r) {
                PolyZx tmp = std::move(m.at(r, op.a));
                m.at(r, op.a) = std::move(m.at(r, op.b));
                m.at(r, op.b) = -tmp;
            }
            return;
        case ElementaryOp::Kind::NegatePairRow:
            for (int c = 0; c < n; ++c) {
                m.at(op.a, c) = -m.at(op.a, c);
                m.at(op.b, c) = -m.at(op.b, c);
            }
            return;
        case ElementaryOp::Kind::NegatePairCol:
            for (int r = 0; r < n; ++r) {
                m.at(r, op.a) = -m.at(r, op.a);
                m.at(r, op.b) = -m.at(r, op.b);
            }
            return;
    }
}

PolyMatrix apply_op(const PolyMatrix& m, const ElementaryOp& op) {
    PolyMatrix out = m;
    apply_op_inplace(out, op);
    return out;
}

std::pair<PolyMatrix, PolyMatrix> compile_transcript(const Transcript& t, int dim) {
    PolyMatrix p = PolyMatrix::identity(dim);
    PolyMatrix q = PolyMatrix::identity(dim);
    for (const auto& op : t.row_ops) {
        if (!op.is_row_op()) throw std::invalid_argument("compile_transcript: column op on row side");
        apply_op_inplace(p, op);
    }
    for (const auto& op : t.col_ops) {
        if (op.is_row_op()) throw std::invalid_argument("compile_transcript: row op on column side");
        apply_op_inplace(q, op);
    }
    return {std::move(p), std::move(q)};
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b, int threads) {
    if (a.dim() != b.dim()) throw std::invalid_argument("mat_mul: dimension mismatch");
    const int n = a.dim();
    PolyMatrix out(n, a.row_labels(), b.col_labels());
    parallel_for(static_cast<size_t>(n), threads, [&](size_t r) {
        const int i = static_cast<int>(r);
        for (int k = 0; k < n; ++k) {
            const PolyZx& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                const PolyZx& bkj = b.at(k, j);
                if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
            }
        }
    });
    return out;
}

PolyMatrix mat_add_xI(const PolyMatrix& a) {
    PolyMatrix out = a;
    for (int i = 0; i < a.dim(); ++i) out.at(i, i) += PolyZx::x();
    return out;
}

mpz_class int_determinant(std::vector<std::vector<mpz_class>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign == 1 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

PolyZx interpolate_at_consecutive(const std::vector<mpz_class>& values) {
    const size_t npts = values.size();
    if (npts == 0) return PolyZx{};
    // Newton forward differences at consecutive integer nodes: the divided
    // difference over 0..k is delta^k f(0) / k!.
    std::vector<mpq_class> dd(npts);
    for (size_t i = 0; i < npts; ++i) dd[i] = mpq_class(values[i]);
    std::vector<mpq_class> coeffs_newton(npts);
    coeffs_newton[0] = dd[0];
    for (size_t level = 1; level < npts; ++level) {
        for (size_t i = 0; i + level < npts; ++i) dd[i] = (dd[i + 1] - dd[i]) / mpq_class(static_cast<long>(level));
        coeffs_newton[level] = dd[0];
    }
    // Expand sum_k dd_k * x(x-1)...(x-k+1) into the monomial basis.
    std::vector<mpq_class> acc(npts, 0), basis(npts, 0);
    basis[0] = 1;
    size_t basis_len = 1;
    for (size_t k = 0; k < npts; ++k) {
        for (size_t i = 0; i < basis_len; ++i) acc[i] += coeffs_newton[k] * basis[i];
        if (k + 1 < npts) {
            // basis *= (x - k)
            for (size_t i = basis_len; i > 0; --i)
                basis[i] = basis[i - 1] - mpq_class(static_cast<long>(k)) * basis[i];
            basis[0] = -mpq_class(static_cast<long>(k)) * basis[0];
            ++basis_len;
        }
    }
    std::vector<mpz_class> out(npts);
    for (size_t i = 0; i < npts; ++i) {
        if (acc[i].get_den() != 1)
            throw std::domain_error("interpolate_at_consecutive: non-integer coefficient");
        out[i] = acc[i].get_num();
    }
    return PolyZx(std::move(out));
}

PolyZx determinant(const PolyMatrix& m, int threads) {
    const int n = m.dim();
    if (n == 0) return PolyZx(1);
    const int npts = n * (m.max_entry_degree() + 1);
    std::vector<mpz_class> values(static_cast<size_t>(npts));
    parallel_for(static_cast<size_t>(npts), threads,
                 [&](size_t c) { values[c] = int_determinant(m.eval_at(mpz_class(static_cast<long>(c)))); });
    return interpolate_at_consecutive(values);
}

PolyZx minor(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor: |rows| != |cols|");
    const int s = static_cast<int>(rows.size());
    if (s > m.dim()) throw std::invalid_argument("minor: selection larger than matrix");
    PolyMatrix sub(s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) sub.at(i, j) = m.at(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]);
    return determinant(sub);
}

}  // namespace snfy
