#include "snfy/snf_paper.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "snfy/partitions.hpp"

namespace snfy {

namespace {

std::string coord(int r, int c) {
    return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

int block_of(const HBasisIndex& idx, int pos) {
    for (int b = idx.t() - 1; b >= 0; --b)
        if (pos >= idx.block_starts[static_cast<size_t>(b)]) return b;
    throw std::logic_error("position outside any block");
}

void require_fs(const HBasisIndex& idx, const std::vector<PolyZx>& fs) {
    if (static_cast<int>(fs.size()) != idx.n)
        throw std::invalid_argument("fs must have length n");
    for (const PolyZx& f : fs)
        if (f.is_zero()) throw std::invalid_argument("fs entries must be nonzero");
}

}  // namespace

bool BetaReport::all_ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const BetaCheck& c) { return c.ok; });
}

std::vector<BetaCheck> BetaReport::failures() const {
    std::vector<BetaCheck> out;
    for (const BetaCheck& c : checks)
        if (!c.ok) out.push_back(c);
    return out;
}

std::vector<StructureIssue> check_block_structure(const PolyMatrix& m, const HBasisIndex& idx) {
    std::vector<StructureIssue> issues;
    const int t = idx.t();
    for (int bk = 0; bk < t; ++bk) {
        int rs = idx.block_starts[static_cast<size_t>(bk)];
        int rn = idx.cardinalities[static_cast<size_t>(bk)];
        for (int bl = 0; bl < t; ++bl) {
            int cs = idx.block_starts[static_cast<size_t>(bl)];
            int cn = idx.cardinalities[static_cast<size_t>(bl)];
            for (int i = 0; i < rn; ++i) {
                for (int j = 0; j < cn; ++j) {
                    const PolyZx& e = m.at(rs + i, cs + j);
                    if (bk > bl) {
                        if (!e.is_zero())
                            issues.push_back({rs + i, cs + j, "nonzero below block diagonal"});
                    } else if (bk == bl) {
                        if (i == j) continue;  // diagonal values checked by callers
                        if (i == j + 1) {
                            if (!e.is_one())
                                issues.push_back({rs + i, cs + j, "subdiagonal entry not 1"});
                        } else if (!e.is_zero()) {
                            issues.push_back({rs + i, cs + j, "diagonal block not bidiagonal"});
                        }
                    } else if (i <= j && !e.is_zero()) {
                        issues.push_back({rs + i, cs + j, "upper block nonzero on or above its diagonal"});
                    }
                }
            }
        }
    }
    return issues;
}

PolyMatrix upper_triangularize(const PolyMatrix& ax, const HBasisIndex& idx,
                               const std::vector<PolyZx>& fs, Transcript& transcript) {
    require_fs(idx, fs);
    if (ax.dim() != idx.dim()) throw std::invalid_argument("matrix dimension mismatch");
    std::vector<StructureIssue> issues = check_block_structure(ax, idx);
    if (!issues.empty())
        throw std::logic_error("block structure violated at " +
                               coord(issues[0].row, issues[0].col) + ": " + issues[0].what);
    for (int b = 0; b < idx.t(); ++b) {
        int start = idx.block_starts[static_cast<size_t>(b)];
        int s = idx.cardinalities[static_cast<size_t>(b)];
        for (int r = 0; r < s; ++r)
            if (!(ax.at(start + r, start + r) == fs[static_cast<size_t>(r)]))
                throw std::logic_error("diagonal of block " + std::to_string(b) +
                                       " does not match fs at local position " + std::to_string(r));
    }

    PolyMatrix m = ax;
    for (int b = 0; b < idx.t(); ++b) {
        int start = idx.block_starts[static_cast<size_t>(b)];
        int s = idx.cardinalities[static_cast<size_t>(b)];
        if (s == 1) continue;
        // rotate the block's first row to the bottom
        for (int r = 0; r < s - 1; ++r) {
            ElementaryOp op = ElementaryOp::swap_rows(start + r, start + r + 1);
            apply_op_inplace(m, op);
            transcript.record(op);
        }
        // eliminate the rotated row against the unit diagonal above it
        int bottom = start + s - 1;
        for (int j = 0; j < s - 1; ++j) {
            const PolyZx cur = m.at(bottom, start + j);
            if (cur.is_zero()) continue;
            ElementaryOp op = ElementaryOp::add_row(bottom, start + j, -cur);
            apply_op_inplace(m, op);
            transcript.record(op);
        }
        PolyZx alpha(1);
        for (int i = 0; i < s; ++i) alpha *= fs[static_cast<size_t>(i)];
        if (!(m.at(bottom, bottom) == alpha))
            throw std::logic_error("block " + std::to_string(b) +
                                   " pivot is not the product of its fs");
        for (int j = 0; j < s - 1; ++j)
            if (!m.at(bottom, start + j).is_zero())
                throw std::logic_error("uneliminated entry at " + coord(bottom, start + j));
    }
    return m;
}

BetaReport verify_beta_divisibility(const PolyMatrix& a1, const HBasisIndex& idx,
                                    const std::vector<PolyZx>& fs) {
    require_fs(idx, fs);
    BetaReport rep;
    for (int k = 0; k + 1 < idx.t(); ++k) {
        int row = block_last_position(idx, k);
        for (int l = k + 1; l < idx.t(); ++l) {
            int cs = idx.block_starts[static_cast<size_t>(l)];
            int cn = idx.cardinalities[static_cast<size_t>(l)];
            PolyZx prefix(1);
            for (int j = 1; j <= cn; ++j) {
                prefix *= fs[static_cast<size_t>(j - 1)];
                const PolyZx& e = a1.at(row, cs + j - 1);
                rep.checks.push_back({k, l, j, row, cs + j - 1, divides(prefix, e)});
            }
        }
    }
    return rep;
}

PolyMatrix cancel_C1_C2(const PolyMatrix& a1, const HBasisIndex& idx, Transcript& transcript) {
    const int dim = idx.dim();
    if (a1.dim() != dim) throw std::invalid_argument("matrix dimension mismatch");
    std::vector<bool> is_alpha(static_cast<size_t>(dim), false);
    for (int b = 0; b < idx.t(); ++b) is_alpha[static_cast<size_t>(block_last_position(idx, b))] = true;

    PolyMatrix m = a1;
    // (C1) column ops cancel each unit-diagonal row, top to bottom
    for (int g = 0; g < dim; ++g) {
        if (is_alpha[static_cast<size_t>(g)]) continue;
        for (int c = g + 1; c < dim; ++c) {
            const PolyZx v = m.at(g, c);
            if (v.is_zero()) continue;
            ElementaryOp op = ElementaryOp::add_col(c, g, -v);
            apply_op_inplace(m, op);
            transcript.record(op);
        }
    }
    // (C2) row ops cancel each unit-diagonal column; those rows are now
    // unit vectors, so each op only removes the one targeted entry
    for (int c = 0; c < dim; ++c) {
        if (is_alpha[static_cast<size_t>(c)]) continue;
        for (int r = 0; r < dim; ++r) {
            if (r == c) continue;
            const PolyZx v = m.at(r, c);
            if (v.is_zero()) continue;
            ElementaryOp op = ElementaryOp::add_row(r, c, -v);
            apply_op_inplace(m, op);
            transcript.record(op);
        }
    }
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            if (r == c || m.at(r, c).is_zero()) continue;
            bool residual = is_alpha[static_cast<size_t>(r)] && is_alpha[static_cast<size_t>(c)] &&
                            block_of(idx, r) < block_of(idx, c);
            if (!residual)
                throw std::logic_error("entry outside the residual pattern at " + coord(r, c));
        }
    }
    return m;
}

PolyMatrix clear_betas(const PolyMatrix& a2, const HBasisIndex& idx, Transcript& transcript) {
    PolyMatrix m = a2;
    for (int l = 1; l < idx.t(); ++l) {
        int cl = block_last_position(idx, l);
        const PolyZx divisor = m.at(cl, cl);
        for (int k = 0; k < l; ++k) {
            int rk = block_last_position(idx, k);
            const PolyZx beta = m.at(rk, cl);
            if (beta.is_zero()) continue;
            if (!divides(divisor, beta))
                throw std::domain_error("divisibility violated at blocks (" + std::to_string(k) +
                                        "," + std::to_string(l) + "), entry " + coord(rk, cl));
            ElementaryOp op = ElementaryOp::add_row(rk, cl, -exact_div(divisor, beta));
            apply_op_inplace(m, op);
            transcript.record(op);
        }
    }
    if (!m.is_diagonal()) throw std::logic_error("matrix not diagonal after beta clearing");
    return m;
}

void sort_diagonal(PolyMatrix& d, const HBasisIndex& idx, Transcript& transcript) {
    const int dim = idx.dim();
    if (d.dim() != dim) throw std::invalid_argument("matrix dimension mismatch");
    if (!d.is_diagonal()) throw std::invalid_argument("input must be diagonal");

    // flip negative-leading entries in pairs; an odd leftover is unfixable
    // inside SL and simply stays
    std::vector<int> negatives;
    for (int i = 0; i < dim; ++i)
        if (!d.at(i, i).is_zero() && d.at(i, i).leading() < 0) negatives.push_back(i);
    for (size_t a = 0; a + 1 < negatives.size(); a += 2) {
        ElementaryOp op = ElementaryOp::negate_rows(negatives[a], negatives[a + 1]);
        apply_op_inplace(d, op);
        transcript.record(op);
    }

    // target order: unit positions first (stable), then alpha positions by
    // weakly increasing block cardinality, ties by block index
    std::vector<long long> key(static_cast<size_t>(dim), 0);
    for (int b = 0; b < idx.t(); ++b) {
        int pos = block_last_position(idx, b);
        key[static_cast<size_t>(pos)] =
            1 + static_cast<long long>(idx.cardinalities[static_cast<size_t>(b)]) * idx.t() + b;
    }
    std::vector<int> desired(static_cast<size_t>(dim));
    std::iota(desired.begin(), desired.end(), 0);
    std::stable_sort(desired.begin(), desired.end(),
                     [&key](int a, int b) { return key[static_cast<size_t>(a)] < key[static_cast<size_t>(b)]; });

    // realize the permutation with paired signed swaps; each pair exchanges
    // two diagonal entries without introducing signs
    std::vector<int> slot(static_cast<size_t>(dim));  // current slot -> original position
    std::vector<int> where(static_cast<size_t>(dim));  // original position -> current slot
    std::iota(slot.begin(), slot.end(), 0);
    std::iota(where.begin(), where.end(), 0);
    for (int p = 0; p < dim; ++p) {
        int want = desired[static_cast<size_t>(p)];
        int q = where[static_cast<size_t>(want)];
        if (q == p) continue;
        ElementaryOp rop = ElementaryOp::swap_rows(p, q);
        ElementaryOp cop = ElementaryOp::swap_cols(p, q);
        apply_op_inplace(d, rop);
        apply_op_inplace(d, cop);
        transcript.record(rop);
        transcript.record(cop);
        int other = slot[static_cast<size_t>(p)];
        std::swap(slot[static_cast<size_t>(p)], slot[static_cast<size_t>(q)]);
        where[static_cast<size_t>(want)] = p;
        where[static_cast<size_t>(other)] = q;
    }

    for (int i = 0; i + 1 < dim; ++i)
        if (!divides(d.at(i, i), d.at(i + 1, i + 1)))
            throw std::logic_error("diagonal is not a divisibility chain at position " +
                                   std::to_string(i));
}

std::vector<PolyZx> theorem_diagonal(int n) {
    if (n < 1) throw std::invalid_argument("theorem_diagonal: n must be >= 1");
    ShapeLambdaN sl = shape_lambda_n(n);
    const std::vector<part_t>& cards = sl.conjugate.parts();  // weakly decreasing
    mpz_class pn = partition_count(n);
    int dim = static_cast<int>(pn.get_si());
    std::vector<PolyZx> out(static_cast<size_t>(dim) - cards.size(), PolyZx(1));
    for (auto it = cards.rbegin(); it != cards.rend(); ++it)
        out.push_back(alpha_k(n, static_cast<int>(*it)));
    return out;
}

VerifyOutcome verify_certificate(SnfCertificate& cert, const PolyMatrix& ax, int threads) {
    cert.verified = false;
    const int dim = ax.dim();
    try {
        for (const ElementaryOp& op : cert.transcript.row_ops) validate_op(op, dim);
        for (const ElementaryOp& op : cert.transcript.col_ops) validate_op(op, dim);
    } catch (const std::exception& e) {
        return {false, std::string("invalid transcript op: ") + e.what()};
    }
    if (cert.D.dim() != dim || cert.P.dim() != dim || cert.Q.dim() != dim)
        return {false, "certificate dimension mismatch"};
    if (!cert.D.is_diagonal()) return {false, "D is not diagonal"};
    for (int i = 0; i + 1 < dim; ++i)
        if (!divides(cert.D.at(i, i), cert.D.at(i + 1, i + 1)))
            return {false, "divisibility chain broken at position " + std::to_string(i)};

    PolyMatrix product = mat_mul(mat_mul(cert.P, ax, threads), cert.Q, threads);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            if (!(product.at(r, c) == cert.D.at(r, c)))
                return {false, "P*A*Q differs from D at " + coord(r, c)};

    PolyZx diag_product(1);
    for (int i = 0; i < dim; ++i) diag_product *= cert.D.at(i, i);
    if (diag_product.is_zero()) return {false, "diagonal product is zero"};
    PolyZx det = determinant(ax, threads);
    if (!(det == diag_product))
        return {false, "product of diagonal entries differs from det(A)"};
    // det P * det A * det Q = det D = det A != 0, so det P * det Q = 1 in
    // Z[x]; both are then constant +-1 and the value at 0 decides the sign
    if (int_determinant(cert.P.eval_at(0)) != 1) return {false, "det P != 1"};
    if (int_determinant(cert.Q.eval_at(0)) != 1) return {false, "det Q != 1"};
    cert.verified = true;
    return {true, ""};
}

SnfCertificate run_pipeline(int n, const std::vector<PolyZx>& fs, bool verify, int threads) {
    HBasisIndex idx = HBasisIndex::build(n);
    PolyMatrix a = build_A_h_basis(idx);
    PolyMatrix ax = substitute_diagonal(a, idx, fs);

    SnfCertificate cert;
    cert.input_spec = OperatorMatrixSpec{n, 1, Basis::HStringOrder, fs};
    PolyMatrix a1 = upper_triangularize(ax, idx, fs, cert.transcript);
    BetaReport betas = verify_beta_divisibility(a1, idx, fs);
    if (!betas.all_ok()) {
        const BetaCheck& f = betas.failures().front();
        throw std::domain_error("beta divisibility failed at " + coord(f.row, f.col));
    }
    PolyMatrix a2 = cancel_C1_C2(a1, idx, cert.transcript);
    PolyMatrix diag = clear_betas(a2, idx, cert.transcript);
    sort_diagonal(diag, idx, cert.transcript);
    cert.D = std::move(diag);
    auto [p, q] = compile_transcript(cert.transcript, idx.dim());
    cert.P = std::move(p);
    cert.Q = std::move(q);
    cert.D.row_labels() = idx.order;
    cert.D.col_labels() = idx.order;

    if (verify) {
        VerifyOutcome outcome = verify_certificate(cert, ax, threads);
        if (!outcome.ok)
            throw std::domain_error("certificate verification failed: " + outcome.detail);
    }
    return cert;
}

SnfCertificate run_pipeline(int n, bool verify, int threads) {
    return run_pipeline(n, default_fs(n), verify, threads);
}

}  // namespace snfy
