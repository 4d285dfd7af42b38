#include "snfy/divisors.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>

#include "snfy/parallel.hpp"

namespace snfy {

ConjectureDiagonal conjecture_diagonal(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("conjecture_diagonal: need 1 <= k <= n");
    ConjectureDiagonal out;
    out.n = n;
    out.k = k;
    std::vector<long long> state;
    for (const Partition& lambda : enumerate_partitions(n))
        state.push_back(m_k(lambda, k));
    std::sort(state.begin(), state.end());
    out.initial_multiset = state;

    std::vector<PolyZx> peels;  // extraction order: last diagonal entry first
    while (!state.empty()) {
        PolyZx entry(1);
        std::vector<long long> next;
        for (size_t i = 0; i < state.size();) {
            long long a = state[i];
            entry *= PolyZx::linear(static_cast<long>(k * (a + 1)));
            ++i;  // drop one copy of a
            while (i < state.size() && state[i] == a) next.push_back(state[i++]);
        }
        peels.push_back(entry);
        state = std::move(next);
        out.peel_trace.push_back(state);
    }

    size_t dim = static_cast<size_t>(partition_count(n).get_si());
    out.entries.assign(dim - peels.size(), PolyZx(1));
    for (auto it = peels.rbegin(); it != peels.rend(); ++it) out.entries.push_back(*it);
    for (size_t i = 0; i + 1 < out.entries.size(); ++i)
        if (!divides(out.entries[i], out.entries[i + 1]))
            throw std::logic_error("peeled entries do not form a divisibility chain");
    return out;
}

std::vector<PolyZx> proposition_diagonal(int n, int k) {
    if (n < 1 || k > n) throw std::invalid_argument("proposition_diagonal: need 1 <= k <= n");
    if (2 * k <= n)
        throw std::invalid_argument("proposition_diagonal: requires k > n/2");
    long long ones = partition_count(n - k).get_si();
    long long total = partition_count(n).get_si();
    // the multiplicity of the middle factor is p(n) - 2p(n-k). The lone
    // degenerate point in range is n = k = 1, where it would be -1.
    if (total < 2 * ones)
        throw std::domain_error("proposition_diagonal: closed form degenerates for n = k = 1");
    std::vector<PolyZx> out(static_cast<size_t>(ones), PolyZx(1));
    PolyZx xk = PolyZx::linear(k);
    for (long long i = 0; i < total - 2 * ones; ++i) out.push_back(xk);
    PolyZx pair = xk * PolyZx::linear(2 * k);
    for (long long i = 0; i < ones; ++i) out.push_back(pair);
    return out;
}

int border_strip_count(const Partition& lambda, part_t k) {
    if (k < 1) throw std::invalid_argument("border_strip_count: k must be >= 1");
    const int len = lambda.num_parts();
    std::set<part_t> beads;
    for (int i = 0; i < len; ++i) beads.insert(lambda.part(i) + (len - 1 - i));
    int count = 0;
    for (part_t b : beads)
        if (b >= k && !beads.count(b - k)) ++count;
    return count;
}

std::string to_string(LadderVerdict v) {
    switch (v) {
        case LadderVerdict::Confirmed: return "confirmed";
        case LadderVerdict::Partial: return "partial";
        case LadderVerdict::Refuted: return "refuted";
    }
    return "unknown";
}

std::vector<PolyZx> DivisorLadder::quotients() const {
    std::vector<PolyZx> out;
    PolyZx prev(1);
    for (const LadderLevel& lv : levels) {
        out.push_back(exact_div(prev, lv.gcd));
        prev = lv.gcd;
    }
    return out;
}

LadderVerdict DivisorLadder::verdict() const {
    if (!has_target) return LadderVerdict::Partial;
    bool complete = static_cast<int>(levels.size()) == dim;
    for (const LadderLevel& lv : levels) {
        if (!lv.consistent_with_target) return LadderVerdict::Refuted;
        if (lv.exhaustive && !lv.matches_target) return LadderVerdict::Refuted;
        if (!lv.exhaustive || !lv.matches_target) complete = false;
    }
    return complete ? LadderVerdict::Confirmed : LadderVerdict::Partial;
}

namespace {

// C(n, r) exactly
mpz_class binomial(int n, int r) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

std::vector<std::vector<int>> all_combinations(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) cur[static_cast<size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < r; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<int> random_subset(int n, int r, std::mt19937_64& rng) {
    std::vector<int> pool(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i;
    for (int i = 0; i < r; ++i) {
        std::uniform_int_distribution<int> pick(i, n - 1);
        std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(pick(rng))]);
    }
    pool.resize(static_cast<size_t>(r));
    std::sort(pool.begin(), pool.end());
    return pool;
}

PolyZx normalized(const PolyZx& p) {
    if (p.is_zero() || p.leading() > 0) return p;
    return -p;
}

}  // namespace

DivisorLadder determinantal_ladder(const PolyMatrix& m, const std::vector<PolyZx>& target,
                                   const LadderOptions& opts) {
    const int dim = m.dim();
    if (dim == 0) throw std::invalid_argument("determinantal_ladder: empty matrix");
    if (!target.empty() && static_cast<int>(target.size()) != dim)
        throw std::invalid_argument("determinantal_ladder: target length must equal dim");

    DivisorLadder ladder;
    ladder.dim = dim;
    ladder.has_target = !target.empty();
    int cap = (opts.size_cap <= 0 || opts.size_cap > dim) ? dim : opts.size_cap;

    // cumulative products of the target diagonal
    std::vector<PolyZx> cum;
    if (ladder.has_target) {
        PolyZx acc(1);
        for (const PolyZx& d : target) {
            acc *= d;
            cum.push_back(normalized(acc));
        }
    }

    // evaluate the whole matrix once per interpolation point
    const int maxdeg = m.max_entry_degree();
    const int max_pts = cap * maxdeg + 1;
    std::vector<std::vector<std::vector<mpz_class>>> evals;
    evals.reserve(static_cast<size_t>(max_pts));
    for (int pt = 0; pt < max_pts; ++pt) evals.push_back(m.eval_at(pt));

    for (int r = 1; r <= cap; ++r) {
        LadderLevel level;
        level.order = r;
        const int npts = r * maxdeg + 1;

        auto minor_at = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
            std::vector<mpz_class> vals(static_cast<size_t>(npts));
            for (int pt = 0; pt < npts; ++pt) {
                std::vector<std::vector<mpz_class>> sub(static_cast<size_t>(r));
                for (int i = 0; i < r; ++i) {
                    sub[static_cast<size_t>(i)].reserve(static_cast<size_t>(r));
                    for (int j = 0; j < r; ++j)
                        sub[static_cast<size_t>(i)].push_back(
                            evals[static_cast<size_t>(pt)][static_cast<size_t>(rows[static_cast<size_t>(i)])]
                                 [static_cast<size_t>(cols[static_cast<size_t>(j)])]);
                }
                vals[static_cast<size_t>(pt)] = int_determinant(std::move(sub));
            }
            return interpolate_at_consecutive(vals);
        };

        std::mutex mu;
        PolyZx running;  // zero until the first nonzero minor
        std::atomic<bool> reached{false};
        std::atomic<bool> inconsistent{false};
        std::atomic<long long> processed{0};
        const PolyZx* cum_r = ladder.has_target ? &cum[static_cast<size_t>(r - 1)] : nullptr;

        auto absorb = [&](const PolyZx& det) {
            ++processed;
            if (inconsistent.load(std::memory_order_relaxed)) return;
            if (reached.load(std::memory_order_acquire)) {
                // running gcd equals the target product; it can only stay
                // there if the target divides every remaining minor
                if (!divides(*cum_r, det)) inconsistent.store(true);
                return;
            }
            std::lock_guard<std::mutex> lock(mu);
            if (det.is_zero()) return;
            running = running.is_zero() ? normalized(det) : gcd_zx(running, det);
            if (cum_r && running == *cum_r) reached.store(true, std::memory_order_release);
        };

        mpz_class count_one_side = binomial(dim, r);
        mpz_class pair_count = count_one_side * count_one_side;
        level.exhaustive = pair_count <= mpz_class(static_cast<long>(opts.minor_budget));

        if (level.exhaustive) {
            std::vector<std::vector<int>> subsets = all_combinations(dim, r);
            parallel_for(subsets.size(), opts.threads, [&](std::size_t ri) {
                const std::vector<int>& rows = subsets[ri];
                for (const std::vector<int>& cols : subsets) {
                    if (inconsistent.load(std::memory_order_relaxed)) return;
                    absorb(minor_at(rows, cols));
                }
            });
        } else {
            const long long samples = opts.samples_per_level;
            parallel_for(static_cast<std::size_t>(samples), opts.threads, [&](std::size_t si) {
                if (inconsistent.load(std::memory_order_relaxed)) return;
                std::mt19937_64 rng(opts.seed ^ (static_cast<std::uint64_t>(r) << 32) ^ si);
                std::vector<int> rows = random_subset(dim, r, rng);
                std::vector<int> cols = random_subset(dim, r, rng);
                absorb(minor_at(rows, cols));
            });
        }

        level.minors_processed = processed.load();
        level.gcd = running;
        if (ladder.has_target) {
            if (inconsistent.load()) {
                level.consistent_with_target = false;
            } else if (running.is_zero()) {
                // an exhaustive all-zero level genuinely contradicts a
                // nonzero target; a sampled one is just uninformative
                level.consistent_with_target = !level.exhaustive;
            } else {
                level.consistent_with_target = divides(*cum_r, running);
                level.matches_target = level.consistent_with_target && running == *cum_r;
            }
        }
        ladder.levels.push_back(std::move(level));
        if (inconsistent.load()) break;  // refuted; later levels add nothing
    }
    return ladder;
}

}  // namespace snfy
