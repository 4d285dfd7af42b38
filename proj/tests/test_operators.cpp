#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "snfy/operators.hpp"
#include "snfy/polymat.hpp"

using namespace snfy;

namespace {

Partition P(std::vector<part_t> v) { return Partition(std::move(v)); }

long long entry0(const PolyMatrix& m, int r, int c) {
    return m.at(r, c).eval_at(0).get_si();
}

// all partitions obtained from nu by adding a horizontal strip of m cells:
// lam interlaces nu, i.e. lam_1 >= nu_1 >= lam_2 >= nu_2 >= ...
void add_horizontal_strips(const std::vector<part_t>& nu, int m,
                           std::vector<Partition>& out) {
    // interlacing: lam_1 >= nu_1 >= lam_2 >= nu_2 >= ...
    const size_t rows = nu.size() + 1;
    std::vector<part_t> lam(rows, 0);
    auto rec = [&](auto&& self, size_t row, part_t left) -> void {
        if (row == rows) {
            if (left == 0) {
                std::vector<part_t> clean;
                for (part_t v : lam)
                    if (v > 0) clean.push_back(v);
                out.push_back(Partition(clean));
            }
            return;
        }
        part_t base = row < nu.size() ? nu[row] : 0;
        part_t hi = base + left;
        if (row > 0) hi = std::min(hi, nu[row - 1]);
        for (part_t v = base; v <= hi; ++v) {
            lam[row] = v;
            self(self, row + 1, left - (v - base));
        }
        lam[row] = 0;
    };
    rec(rec, 0, static_cast<part_t>(m));
}

// Kostka numbers K[lam][mu] via the Pieri rule: expand h_mu in Schur terms by
// multiplying one h_part at a time
std::map<Partition, std::map<Partition, long long>> kostka_table(int n) {
    std::map<Partition, std::map<Partition, long long>> table;  // [mu][lam]
    for (const Partition& mu : enumerate_partitions(n)) {
        std::map<Partition, long long> cur;
        cur[Partition()] = 1;
        for (part_t part : mu.parts()) {
            std::map<Partition, long long> next;
            for (const auto& [nu, coeff] : cur) {
                std::vector<Partition> lams;
                add_horizontal_strips(nu.parts(), static_cast<int>(part), lams);
                for (const Partition& lam : lams) next[lam] += coeff;
            }
            cur = std::move(next);
        }
        table[mu] = std::move(cur);
    }
    return table;
}

}  // namespace

TEST_CASE("horizontal strip oracle sanity") {
    // adding 2 cells to (1): (3), (2,1), (1,1) in some order
    std::vector<Partition> out;
    add_horizontal_strips({1}, 2, out);
    std::set<Partition> got(out.begin(), out.end());
    CHECK(got == std::set<Partition>{P({3}), P({2, 1})});
    // (1,1) is not reachable: both new cells would sit in column 1
}

TEST_CASE("kostka numbers match classical values") {
    auto table = kostka_table(4);
    // h_{(1,1,1,1)} = sum over lam of K_{lam,(1^4)} s_lam with K = f^lam counts
    CHECK(table[P({1, 1, 1, 1})][P({4})] == 1);
    CHECK(table[P({1, 1, 1, 1})][P({3, 1})] == 3);
    CHECK(table[P({1, 1, 1, 1})][P({2, 2})] == 2);
    CHECK(table[P({1, 1, 1, 1})][P({2, 1, 1})] == 3);
    CHECK(table[P({1, 1, 1, 1})][P({1, 1, 1, 1})] == 1);
    // K_{lam,mu} = 0 unless lam dominates-or-equals mu
    CHECK(table[P({2, 2})][P({2, 1, 1})] == 0);
    CHECK(table[P({2, 2})][P({2, 2})] == 1);
    CHECK(table[P({2, 2})][P({3, 1})] == 1);
    CHECK(table[P({2, 2})][P({4})] == 1);
}

TEST_CASE("h-basis index layout") {
    HBasisIndex idx = HBasisIndex::build(6);
    CHECK(idx.n == 6);
    CHECK(idx.dim() == 11);
    CHECK(idx.t() == 4);
    CHECK(idx.cardinalities == std::vector<int>{6, 3, 1, 1});
    CHECK(idx.block_starts == std::vector<int>{0, 6, 9, 10});
    CHECK(idx.order[0] == P({6}));
    CHECK(idx.order[6] == P({4, 2}));
    CHECK(idx.order[10] == P({2, 2, 2}));
    for (int i = 0; i < idx.dim(); ++i) CHECK(idx.position.at(idx.order[static_cast<size_t>(i)]) == i);
}

TEST_CASE("operator matrix in h basis, small golden values") {
    PolyMatrix a2 = build_A_h_basis(2);
    REQUIRE(a2.dim() == 2);
    CHECK(entry0(a2, 0, 0) == 1);
    CHECK(entry0(a2, 0, 1) == 0);
    CHECK(entry0(a2, 1, 0) == 1);
    CHECK(entry0(a2, 1, 1) == 3);

    // order (4),(3,1),(2,1,1),(1,1,1,1),(2,2)
    long long expect4[5][5] = {{1, 0, 0, 0, 0},
                               {1, 2, 0, 0, 0},
                               {0, 1, 3, 0, 2},
                               {0, 0, 1, 5, 0},
                               {0, 0, 0, 0, 1}};
    PolyMatrix a4 = build_A_h_basis(4);
    REQUIRE(a4.dim() == 5);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) CHECK(entry0(a4, r, c) == expect4[r][c]);
    CHECK(a4.col_labels()[4] == P({2, 2}));
}

TEST_CASE("each column of the h-basis operator sums to #parts + 1") {
    for (int n = 1; n <= 10; ++n) {
        HBasisIndex idx = HBasisIndex::build(n);
        PolyMatrix a = build_A_h_basis(idx);
        for (int c = 0; c < a.dim(); ++c) {
            long long sum = 0;
            for (int r = 0; r < a.dim(); ++r) sum += entry0(a, r, c);
            CHECK(sum == idx.order[static_cast<size_t>(c)].num_parts() + 1);
        }
    }
}

TEST_CASE("schur-basis matrix golden values") {
    PolyMatrix m2 = build_M_schur(2);
    CHECK(entry0(m2, 0, 0) == 2);
    CHECK(entry0(m2, 0, 1) == 1);
    CHECK(entry0(m2, 1, 0) == 1);
    CHECK(entry0(m2, 1, 1) == 2);

    // order (3),(2,1),(1,1,1): tridiagonal with diagonal 2,3,2
    long long expect3[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 2}};
    PolyMatrix m3 = build_M_schur(3);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(entry0(m3, r, c) == expect3[r][c]);

    // symmetric 0/1 off-diagonal in general
    for (int n = 1; n <= 9; ++n) {
        PolyMatrix m = build_M_schur(n);
        for (int r = 0; r < m.dim(); ++r)
            for (int c = 0; c < m.dim(); ++c) {
                if (r == c) continue;
                long long v = entry0(m, r, c);
                CHECK((v == 0 || v == 1));
                CHECK(v == entry0(m, c, r));
            }
    }
}

TEST_CASE("kostka matrix intertwines the h and schur representations") {
    // with K[lam][mu] the transition h_mu = sum K s_lam, the operator obeys
    // K * A_h = M_schur * K; verified entirely against the Pieri-rule oracle
    for (int n = 2; n <= 8; ++n) {
        auto table = kostka_table(n);
        HBasisIndex idx = HBasisIndex::build(n);
        std::vector<Partition> lex = enumerate_partitions(n);
        int d = static_cast<int>(lex.size());
        std::map<Partition, int> lexpos;
        for (int i = 0; i < d; ++i) lexpos[lex[static_cast<size_t>(i)]] = i;

        std::vector<std::vector<long long>> K(static_cast<size_t>(d),
                                              std::vector<long long>(static_cast<size_t>(d), 0));
        for (int c = 0; c < d; ++c) {
            const Partition& mu = idx.order[static_cast<size_t>(c)];
            for (const auto& [lam, coeff] : table[mu]) K[static_cast<size_t>(lexpos[lam])][static_cast<size_t>(c)] = coeff;
        }

        PolyMatrix a = build_A_h_basis(idx);
        PolyMatrix m = build_M_schur(n);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                long long lhs = 0, rhs = 0;
                for (int k = 0; k < d; ++k) {
                    lhs += K[static_cast<size_t>(r)][static_cast<size_t>(k)] * entry0(a, k, c);
                    rhs += entry0(m, r, k) * K[static_cast<size_t>(k)][static_cast<size_t>(c)];
                }
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("power sums in the h basis") {
    // Newton: p1 = h1; p2 = 2h2 - h1^2; p3 = 3h3 - 3h2h1 + h1^3
    const auto& p1 = power_sum_in_h(1);
    CHECK(p1.size() == 1);
    CHECK(p1.at(P({1})) == 1);

    const auto& p2 = power_sum_in_h(2);
    CHECK(p2.at(P({2})) == 2);
    CHECK(p2.at(P({1, 1})) == -1);
    CHECK(p2.size() == 2);

    const auto& p3 = power_sum_in_h(3);
    CHECK(p3.at(P({3})) == 3);
    CHECK(p3.at(P({2, 1})) == -3);
    CHECK(p3.at(P({1, 1, 1})) == 1);

    // specialization x1 = 1, rest 0: h_i -> 1, p_k -> 1, so coefficients sum to 1
    for (int k = 1; k <= 9; ++k) {
        mpz_class sum = 0;
        for (const auto& [rho, c] : power_sum_in_h(k)) sum += c;
        CHECK(sum == 1);
    }
}

TEST_CASE("general-k operator matrix") {
    // n = 2, k = 2: image of h_2 is 2h_2 + p_2 = 4h_2 - h_1h_1
    PolyMatrix m22 = build_M_k_h_basis(2, 2);
    CHECK(entry0(m22, 0, 0) == 4);
    CHECK(entry0(m22, 0, 1) == 0);
    CHECK(entry0(m22, 1, 0) == -1);
    CHECK(entry0(m22, 1, 1) == 2);

    // k = 1 agrees with the dedicated builder
    for (int n = 1; n <= 9; ++n) CHECK(build_M_k_h_basis(n, 1) == build_A_h_basis(n));

    // diagonal entries are k(m_k + 1)
    for (int n = 1; n <= 9; ++n) {
        HBasisIndex idx = HBasisIndex::build(n);
        for (int k = 1; k <= n; ++k) {
            PolyMatrix m = build_M_k_h_basis(idx, k);
            for (int i = 0; i < m.dim(); ++i) {
                const Partition& lam = idx.order[static_cast<size_t>(i)];
                CHECK(entry0(m, i, i) == static_cast<long long>(k) * (m_k(lam, k) + 1));
            }
        }
    }

    CHECK_THROWS_AS(build_M_k_h_basis(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_M_k_h_basis(4, 5), std::invalid_argument);
}

TEST_CASE("characteristic polynomial factors over the eigenvalue formula") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            PolyMatrix mx = mat_add_xI(build_M_k_h_basis(n, k));
            CHECK(determinant(mx) == char_poly_formula(n, k));
        }
    // schur and h basis give the same characteristic polynomial
    for (int n = 1; n <= 8; ++n)
        CHECK(determinant(mat_add_xI(build_M_schur(n))) ==
              determinant(mat_add_xI(build_A_h_basis(n))));
}

TEST_CASE("diagonal substitution") {
    for (int n = 1; n <= 8; ++n) {
        HBasisIndex idx = HBasisIndex::build(n);
        PolyMatrix a = build_A_h_basis(idx);
        // the default substitutes reproduce A + xI
        CHECK(substitute_diagonal(a, idx, default_fs(n)) == mat_add_xI(a));
    }

    HBasisIndex idx4 = HBasisIndex::build(4);
    PolyMatrix a4 = build_A_h_basis(idx4);
    std::vector<PolyZx> fs{PolyZx(5), PolyZx(-2), PolyZx(7), PolyZx(3)};
    PolyMatrix s = substitute_diagonal(a4, idx4, fs);
    CHECK(s.at(0, 0) == PolyZx(5));   // depth 0 in its block
    CHECK(s.at(1, 1) == PolyZx(-2));  // depth 1
    CHECK(s.at(3, 3) == PolyZx(3));   // depth 3
    CHECK(s.at(4, 4) == PolyZx(5));   // singleton block restarts at depth 0
    CHECK(s.at(1, 0) == a4.at(1, 0));

    CHECK_THROWS_AS(substitute_diagonal(a4, idx4, std::vector<PolyZx>{PolyZx(1)}),
                    std::invalid_argument);
}

TEST_CASE("default substitutes and their product") {
    std::vector<PolyZx> fs = default_fs(6);
    REQUIRE(fs.size() == 6);
    CHECK(fs[0] == PolyZx::linear(1));
    CHECK(fs[4] == PolyZx::linear(5));
    CHECK(fs[5] == PolyZx::linear(7));  // slot n jumps to n + 1
    CHECK(char_poly_formula(2, 1) == PolyZx::linear(1) * PolyZx::linear(3));
}
