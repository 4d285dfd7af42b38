#include "snfy/zsnf_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "snfy/divisors.hpp"
#include "snfy/operators.hpp"
#include "snfy/partitions.hpp"
#include "snfy/snf_paper.hpp"

namespace snfy {

namespace {

using Mat = std::vector<std::vector<mpz_class>>;

// reduce v into the symmetric residue range (-d/2, d/2]; class mod d unchanged
void reduce_sym(mpz_class& v, const mpz_class& d) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
    if (2 * v > d) v -= d;
}

// rows t and r <- (s*row_t + u*row_r, -(vr/g)*row_t + (vt/g)*row_r), the
// determinant-(+-1) transform that puts g = gcd(vt, vr) at (t, pivot_col);
// written entries are reduced mod d to keep sizes bounded
void bezout_rows(Mat& a, int t, int r, const mpz_class& vt, const mpz_class& vr,
                 const mpz_class& d) {
    mpz_class g, s, u;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), vt.get_mpz_t(), vr.get_mpz_t());
    mpz_class wt = vt / g, wr = vr / g;
    const size_t cols = a[static_cast<size_t>(t)].size();
    for (size_t j = 0; j < cols; ++j) {
        mpz_class x = a[static_cast<size_t>(t)][j], y = a[static_cast<size_t>(r)][j];
        a[static_cast<size_t>(t)][j] = s * x + u * y;
        a[static_cast<size_t>(r)][j] = wt * y - wr * x;
        reduce_sym(a[static_cast<size_t>(t)][j], d);
        reduce_sym(a[static_cast<size_t>(r)][j], d);
    }
}

void bezout_cols(Mat& a, int t, int c, const mpz_class& vt, const mpz_class& vc,
                 const mpz_class& d) {
    mpz_class g, s, u;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), vt.get_mpz_t(), vc.get_mpz_t());
    mpz_class wt = vt / g, wc = vc / g;
    for (size_t i = 0; i < a.size(); ++i) {
        mpz_class x = a[i][static_cast<size_t>(t)], y = a[i][static_cast<size_t>(c)];
        a[i][static_cast<size_t>(t)] = s * x + u * y;
        a[i][static_cast<size_t>(c)] = wt * y - wc * x;
        reduce_sym(a[i][static_cast<size_t>(t)], d);
        reduce_sym(a[i][static_cast<size_t>(c)], d);
    }
}

// fraction-free elimination with full pivoting; every intermediate entry is a
// minor of (a permutation of) the input, so sizes stay Hadamard-bounded
struct RankMinor {
    int rank = 0;
    mpz_class minor_abs = 1;  // |some nonzero rank-sized minor|; 1 for rank 0
};

RankMinor bareiss_rank_minor(Mat b) {
    const int n = static_cast<int>(b.size());
    RankMinor out;
    mpz_class prev = 1;
    for (int t = 0; t < n; ++t) {
        int pr = -1, pc = -1;
        for (int i = t; i < n && pr < 0; ++i)
            for (int j = t; j < n; ++j)
                if (b[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        std::swap(b[static_cast<size_t>(t)], b[static_cast<size_t>(pr)]);
        if (pc != t)
            for (int i = 0; i < n; ++i)
                std::swap(b[static_cast<size_t>(i)][static_cast<size_t>(t)],
                          b[static_cast<size_t>(i)][static_cast<size_t>(pc)]);
        const mpz_class p = b[static_cast<size_t>(t)][static_cast<size_t>(t)];
        for (int i = t + 1; i < n; ++i)
            for (int j = t + 1; j < n; ++j) {
                mpz_class num = p * b[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                                b[static_cast<size_t>(i)][static_cast<size_t>(t)] *
                                    b[static_cast<size_t>(t)][static_cast<size_t>(j)];
                mpz_divexact(b[static_cast<size_t>(i)][static_cast<size_t>(j)].get_mpz_t(),
                             num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = p;
        out.rank = t + 1;
        out.minor_abs = abs(p);
    }
    return out;
}

}  // namespace

// Invariant factors are computed modulo a nonzero rank-sized minor d. Entries
// are only determined mod d, which is enough: the i-th determinantal divisor
// is fixed by the i-minors mod d times the (i-1)-st, and every invariant
// factor divides d. Reducing each written entry into (-d/2, d/2] keeps all
// intermediates at the bit size of d; naive gcd elimination is exponential.
IntSnf int_snf(Mat a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("int_snf: matrix not square");

    IntSnf out;
    out.diag.assign(static_cast<size_t>(n), 0);
    if (n == 0) return out;

    const RankMinor rm = bareiss_rank_minor(a);
    mpz_class d = rm.minor_abs;

    for (int t = 0; t < rm.rank; ++t) {
        if (d == 1) {  // remaining factors multiply to 1, so each is 1
            for (int i = t; i < rm.rank; ++i) out.diag[static_cast<size_t>(i)] = 1;
            return out;
        }
        for (int i = t; i < n; ++i)
            for (int j = t; j < n; ++j)
                reduce_sym(a[static_cast<size_t>(i)][static_cast<size_t>(j)], d);

        int pr = -1, pc = -1;
        for (int i = t; i < n && pr < 0; ++i)
            for (int j = t; j < n; ++j)
                if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) {
            // everything left is 0 mod d, so the one remaining factor is d
            if (t != rm.rank - 1)
                throw std::logic_error("int_snf: residue matrix vanished early");
            out.diag[static_cast<size_t>(t)] = d;
            return out;
        }
        std::swap(a[static_cast<size_t>(t)], a[static_cast<size_t>(pr)]);
        if (pc != t)
            for (int i = 0; i < n; ++i)
                std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(t)],
                          a[static_cast<size_t>(i)][static_cast<size_t>(pc)]);

        while (true) {
            for (int r = t + 1; r < n; ++r) {
                const mpz_class v = a[static_cast<size_t>(r)][static_cast<size_t>(t)];
                if (v == 0) continue;
                const mpz_class p = a[static_cast<size_t>(t)][static_cast<size_t>(t)];
                if (p != 0 && v % p == 0) {
                    // plain transvection keeps the pivot row intact; the Bezout
                    // block could rotate junk into it when gcd(p, v) = p
                    mpz_class q = v / p;
                    for (int j = t; j < n; ++j) {
                        a[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
                            q * a[static_cast<size_t>(t)][static_cast<size_t>(j)];
                        reduce_sym(a[static_cast<size_t>(r)][static_cast<size_t>(j)], d);
                    }
                } else {
                    bezout_rows(a, t, r, p, v, d);  // pivot shrinks to the gcd
                }
            }
            bool row_clean = true;
            for (int c = t + 1; c < n; ++c) {
                const mpz_class v = a[static_cast<size_t>(t)][static_cast<size_t>(c)];
                if (v == 0) continue;
                row_clean = false;
                const mpz_class p = a[static_cast<size_t>(t)][static_cast<size_t>(t)];
                if (p != 0 && v % p == 0) {
                    mpz_class q = v / p;
                    for (int i = t; i < n; ++i) {
                        a[static_cast<size_t>(i)][static_cast<size_t>(c)] -=
                            q * a[static_cast<size_t>(i)][static_cast<size_t>(t)];
                        reduce_sym(a[static_cast<size_t>(i)][static_cast<size_t>(c)], d);
                    }
                } else {
                    bezout_cols(a, t, c, p, v, d);
                }
            }
            if (!row_clean) continue;  // column ops may have re-dirtied the column
            bool col_clean = true;
            for (int r = t + 1; r < n; ++r)
                if (a[static_cast<size_t>(r)][static_cast<size_t>(t)] != 0) col_clean = false;
            if (!col_clean) continue;
            // the pivot must divide the remaining submatrix for the chain
            const mpz_class p = a[static_cast<size_t>(t)][static_cast<size_t>(t)];
            int bad = -1;
            for (int i = t + 1; i < n && bad < 0; ++i)
                for (int j = t + 1; j < n; ++j) {
                    const mpz_class& v = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    if (p == 0 ? v != 0 : v % p != 0) {
                        bad = i;
                        break;
                    }
                }
            if (bad < 0) break;
            for (int j = t; j < n; ++j) {
                a[static_cast<size_t>(t)][static_cast<size_t>(j)] +=
                    a[static_cast<size_t>(bad)][static_cast<size_t>(j)];
                reduce_sym(a[static_cast<size_t>(t)][static_cast<size_t>(j)], d);
            }
        }
        mpz_class s;
        mpz_gcd(s.get_mpz_t(), a[static_cast<size_t>(t)][static_cast<size_t>(t)].get_mpz_t(),
                d.get_mpz_t());
        out.diag[static_cast<size_t>(t)] = s;
        mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), s.get_mpz_t());
    }
    return out;
}

SpecializeReport specialize_and_check(int n, int k, const mpz_class& c) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("specialize_and_check: need 1 <= k <= n");
    SpecializeReport rep;
    rep.n = n;
    rep.k = k;
    rep.c = c;

    PolyMatrix mk = build_M_k_h_basis(n, k);
    Mat lhs_mat = mk.eval_at(0);  // integer entries; evaluation point is irrelevant
    for (size_t i = 0; i < lhs_mat.size(); ++i) lhs_mat[i][i] += c;
    rep.lhs = int_snf(std::move(lhs_mat)).diag;

    std::vector<PolyZx> predicted =
        (k == 1) ? theorem_diagonal(n) : conjecture_diagonal(n, k).entries;
    Mat rhs_mat(predicted.size(), std::vector<mpz_class>(predicted.size(), 0));
    for (size_t i = 0; i < predicted.size(); ++i) rhs_mat[i][i] = predicted[i].eval_at(c);
    rep.rhs = int_snf(std::move(rhs_mat)).diag;

    rep.match = rep.lhs == rep.rhs;
    return rep;
}

std::vector<long long> eigen_multiset(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("eigen_multiset: need n, k >= 1");
    std::vector<long long> out;
    for (const Partition& lambda : enumerate_partitions(n))
        out.push_back(static_cast<long long>(k) * (m_k(lambda, k) + 1));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace snfy
