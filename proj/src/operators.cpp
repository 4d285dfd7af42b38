#include "snfy/operators.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace snfy {

HBasisIndex HBasisIndex::build(int n) {
    HBasisIndex idx;
    idx.n = n;
    StringDecomposition dec = string_decomposition(n);
    for (const FullString& s : dec.strings) {
        idx.block_starts.push_back(static_cast<int>(idx.order.size()));
        idx.cardinalities.push_back(s.cardinality());
        for (const Partition& lambda : s.elements) {
            idx.position.emplace(lambda, static_cast<int>(idx.order.size()));
            idx.order.push_back(lambda);
        }
    }
    return idx;
}

namespace {

Partition sorted_partition(std::vector<part_t> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<part_t>());
    return Partition(std::move(parts));
}

// lambda with one part equal to v removed; optionally one replacement part added.
std::vector<part_t> remove_one_part(const Partition& lambda, part_t v) {
    std::vector<part_t> parts = lambda.parts();
    auto it = std::find(parts.begin(), parts.end(), v);
    parts.erase(it);
    return parts;
}

}  // namespace

PolyMatrix build_A_h_basis(const HBasisIndex& idx) {
    PolyMatrix a(idx.dim(), idx.order, idx.order);
    for (int c = 0; c < idx.dim(); ++c) {
        const Partition& lambda = idx.order[static_cast<size_t>(c)];
        a.at(c, c) = PolyZx(m_k(lambda, 1) + 1);
        part_t prev = -1;
        for (part_t v : lambda.parts()) {
            if (v == prev || v < 2) continue;  // one contribution per distinct part >= 2
            prev = v;
            std::vector<part_t> parts = remove_one_part(lambda, v);
            parts.push_back(v - 1);
            parts.push_back(1);
            int r = idx.position.at(sorted_partition(std::move(parts)));
            a.at(r, c) += PolyZx(lambda.count_parts_equal(v));
        }
    }
    return a;
}

PolyMatrix build_A_h_basis(int n) { return build_A_h_basis(HBasisIndex::build(n)); }

PolyMatrix build_M_schur(int n) {
    if (n < 1) throw std::invalid_argument("build_M_schur: n must be >= 1");
    std::vector<Partition> order = enumerate_partitions(n);  // descending lexicographic
    const int dim = static_cast<int>(order.size());
    PolyMatrix m(dim, order, order);
    for (int i = 0; i < dim; ++i) {
        m.at(i, i) = PolyZx(order[static_cast<size_t>(i)].num_distinct_parts() + 1);
        for (int j = i + 1; j < dim; ++j) {
            // entries mu != lambda: 1 iff the rowwise max of the two diagrams
            // has exactly n+1 cells (the unique common cover candidate)
            const Partition& x = order[static_cast<size_t>(i)];
            const Partition& y = order[static_cast<size_t>(j)];
            part_t total = 0;
            int len = std::max(x.num_parts(), y.num_parts());
            for (int r = 0; r < len; ++r) total += std::max(x.part(r), y.part(r));
            if (total == static_cast<part_t>(n) + 1) {
                m.at(i, j) = PolyZx(1);
                m.at(j, i) = PolyZx(1);
            }
        }
    }
    return m;
}

const std::map<Partition, mpz_class>& power_sum_in_h(int k) {
    if (k < 1) throw std::invalid_argument("power_sum_in_h: k must be >= 1");
    static std::vector<std::map<Partition, mpz_class>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) < k) {
        // Newton: p_m = m h_m - sum_{i=1}^{m-1} h_{m-i} p_i
        int m = static_cast<int>(cache.size()) + 1;
        std::map<Partition, mpz_class> pm;
        pm[Partition({static_cast<part_t>(m)})] = m;
        for (int i = 1; i < m; ++i) {
            for (const auto& [rho, coef] : cache[static_cast<size_t>(i - 1)]) {
                std::vector<part_t> parts = rho.parts();
                parts.push_back(m - i);
                pm[sorted_partition(std::move(parts))] -= coef;
            }
        }
        std::erase_if(pm, [](const auto& kv) { return kv.second == 0; });
        cache.push_back(std::move(pm));
    }
    return cache[static_cast<size_t>(k - 1)];
}

PolyMatrix build_M_k_h_basis(const HBasisIndex& idx, int k) {
    if (k < 1 || k > idx.n) throw std::invalid_argument("build_M_k_h_basis: need 1 <= k <= n");
    const auto& pk = power_sum_in_h(k);
    PolyMatrix m(idx.dim(), idx.order, idx.order);
    for (int c = 0; c < idx.dim(); ++c) {
        const Partition& lambda = idx.order[static_cast<size_t>(c)];
        m.at(c, c) += PolyZx(k);
        part_t prev = -1;
        for (part_t v : lambda.parts()) {
            if (v == prev || v < k) continue;
            prev = v;
            const mpz_class mult = lambda.count_parts_equal(v);
            std::vector<part_t> reduced = remove_one_part(lambda, v);
            if (v > k) reduced.push_back(v - k);
            for (const auto& [rho, coef] : pk) {
                std::vector<part_t> parts = reduced;
                parts.insert(parts.end(), rho.parts().begin(), rho.parts().end());
                int r = idx.position.at(sorted_partition(std::move(parts)));
                m.at(r, c) += PolyZx(mult * coef);
            }
        }
    }
    return m;
}

PolyMatrix build_M_k_h_basis(int n, int k) { return build_M_k_h_basis(HBasisIndex::build(n), k); }

PolyMatrix substitute_diagonal(const PolyMatrix& a, const HBasisIndex& idx,
                               const std::vector<PolyZx>& fs) {
    if (static_cast<int>(fs.size()) != idx.n)
        throw std::invalid_argument("substitute_diagonal: fs must have length n");
    PolyMatrix out = a;
    for (int b = 0; b < idx.t(); ++b) {
        int start = idx.block_starts[static_cast<size_t>(b)];
        int size = idx.cardinalities[static_cast<size_t>(b)];
        for (int r = 0; r < size; ++r) out.at(start + r, start + r) = fs[static_cast<size_t>(r)];
    }
    return out;
}

std::vector<PolyZx> default_fs(int n) {
    std::vector<PolyZx> fs;
    fs.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) fs.push_back(PolyZx::linear(i == n ? n + 1 : i));
    return fs;
}

PolyZx char_poly_formula(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("char_poly_formula: need n, k >= 1");
    PolyZx acc(1);
    for (const Partition& lambda : enumerate_partitions(n))
        acc *= PolyZx::linear(static_cast<long>(k) * (m_k(lambda, k) + 1));
    return acc;
}

}  // namespace snfy
