#include "snfy/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace snfy {

Partition::Partition(std::vector<part_t> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

int Partition::count_parts_equal(part_t k) const noexcept {
    // parts are sorted descending, so the block of k's is contiguous
    auto lo = std::lower_bound(parts_.begin(), parts_.end(), k, std::greater<part_t>());
    auto hi = std::upper_bound(parts_.begin(), parts_.end(), k, std::greater<part_t>());
    return static_cast<int>(hi - lo);
}

int Partition::num_distinct_parts() const noexcept {
    int d = 0;
    for (size_t i = 0; i < parts_.size(); ++i)
        if (i == 0 || parts_[i] != parts_[i - 1]) ++d;
    return d;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

mpz_class partition_count(int n) {
    if (n < 0) return 0;
    static std::vector<mpz_class> cache{1};  // p(0) = 1
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        mpz_class acc = 0;
        for (int k = 1;; ++k) {
            long g1 = static_cast<long>(k) * (3L * k - 1) / 2;
            long g2 = static_cast<long>(k) * (3L * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            mpz_class term = 0;
            if (g1 <= m) term += cache[static_cast<size_t>(m - g1)];
            if (g2 <= m) term += cache[static_cast<size_t>(m - g2)];
            if (k % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        cache.push_back(acc);
    }
    return cache[static_cast<size_t>(n)];
}

namespace {

void enumerate_rec(part_t remaining, part_t max_part, std::vector<part_t>& prefix,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (part_t p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        enumerate_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<part_t> prefix;
    enumerate_rec(n, n == 0 ? 1 : n, prefix, out);
    return out;
}

int m_k(const Partition& lambda, part_t k) {
    if (k < 1) throw std::invalid_argument("m_k: k must be >= 1");
    return lambda.count_parts_equal(k);
}

Partition conjugate_of(const Partition& lambda) {
    if (lambda.empty()) return Partition{};
    std::vector<part_t> cols(static_cast<size_t>(lambda.parts().front()), 0);
    for (part_t p : lambda.parts())
        for (part_t j = 0; j < p; ++j) ++cols[static_cast<size_t>(j)];
    return Partition(std::move(cols));
}

bool dominance_gt(const Partition& mu, const Partition& lambda) {
    if (mu.n() != lambda.n())
        throw std::invalid_argument("dominance_gt: partitions of different integers");
    if (mu == lambda) return false;
    int len = std::max(mu.num_parts(), lambda.num_parts());
    part_t su = 0, sl = 0;
    for (int i = 0; i < len; ++i) {
        su += mu.part(i);
        sl += lambda.part(i);
        if (su < sl) return false;
    }
    return true;
}

Partition plus_op(const Partition& lambda) {
    if (lambda.num_parts() == 1 && lambda.part(0) == 1)
        throw std::domain_error("plus_op: undefined on (1)");
    if (m_k(lambda, 1) == 0) throw std::domain_error("plus_op: terminal");
    std::vector<part_t> parts = lambda.parts();
    parts.pop_back();  // drop one trailing 1
    parts.front() += 1;
    return Partition(std::move(parts));
}

bool is_initial(const Partition& lambda) {
    if (lambda.num_parts() <= 1) return lambda.n() <= 1;  // (), (1) initial; (k>=2) is (k-1,1)^+
    return lambda.part(0) == lambda.part(1);
}

bool is_terminal(const Partition& lambda) {
    if (lambda.num_parts() == 1 && lambda.part(0) == 1) return true;
    return m_k(lambda, 1) == 0;
}

namespace {

// Inverse of plus_op: defined exactly on non-initial partitions.
Partition predecessor(const Partition& lambda) {
    std::vector<part_t> parts = lambda.parts();
    parts.front() -= 1;
    parts.push_back(1);
    return Partition(std::move(parts));
}

}  // namespace

FullString full_string_of(const Partition& lambda) {
    if (lambda.n() < 1) throw std::invalid_argument("full_string_of: need |lambda| >= 1");
    std::vector<Partition> up;  // lambda, lambda^+, ... up to the terminal
    up.push_back(lambda);
    while (!is_terminal(up.back())) up.push_back(plus_op(up.back()));
    std::vector<Partition> down;  // below lambda, towards the initial element
    {
        Partition cur = lambda;
        while (!is_initial(cur)) {
            cur = predecessor(cur);
            down.push_back(cur);
        }
    }
    FullString s;
    s.elements.assign(up.rbegin(), up.rend());
    s.elements.insert(s.elements.end(), down.begin(), down.end());
    return s;
}

std::vector<Partition> StringDecomposition::flatten() const {
    std::vector<Partition> out;
    for (const auto& s : strings)
        out.insert(out.end(), s.elements.begin(), s.elements.end());
    return out;
}

std::vector<int> StringDecomposition::cardinalities() const {
    std::vector<int> out;
    out.reserve(strings.size());
    for (const auto& s : strings) out.push_back(s.cardinality());
    return out;
}

StringDecomposition string_decomposition(int n) {
    if (n < 1) throw std::invalid_argument("string_decomposition: n must be >= 1");
    StringDecomposition dec;
    for (const Partition& lambda : enumerate_partitions(n))
        if (is_terminal(lambda)) dec.strings.push_back(full_string_of(lambda));
    std::sort(dec.strings.begin(), dec.strings.end(),
              [](const FullString& a, const FullString& b) { return a.terminal() > b.terminal(); });
    return dec;
}

ShapeLambdaN shape_lambda_n(int n) {
    if (n < 1) throw std::invalid_argument("shape_lambda_n: n must be >= 1");
    std::vector<part_t> parts;
    for (int k = n; k >= 1; --k) {
        mpz_class d = partition_count(k) - partition_count(k - 1);
        if (k == 1) d = partition_count(1);
        if (!d.fits_slong_p())
            throw std::overflow_error("shape_lambda_n: difference exceeds part_t");
        parts.push_back(static_cast<part_t>(d.get_si()));
    }
    ShapeLambdaN out;
    out.shape = Partition(std::move(parts));
    out.conjugate = conjugate_of(out.shape);
    return out;
}

}  // namespace snfy
