#ifndef SNFY_DIVISORS_HPP
#define SNFY_DIVISORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "snfy/partitions.hpp"
#include "snfy/polymat.hpp"
#include "snfy/polyzx.hpp"

namespace snfy {

/// The predicted diagonal for the degree-n matrix of k d/dp_k p_k, built by
/// peeling the multiset of m_k values: each peel takes the distinct elements
/// a (in increasing order), contributes the product of (x + k(a+1)) as the
/// next diagonal entry from the back, and removes one copy of each.
struct ConjectureDiagonal {
    int n = 0;
    int k = 1;
    std::vector<PolyZx> entries;  // length p(n), first to last; ones lead
    std::vector<long long> initial_multiset;  // sorted m_k values
    std::vector<std::vector<long long>> peel_trace;  // state after each peel
};

/// Throws std::logic_error if the peeled entries fail to form a
/// divisibility chain (they cannot for multisets, but it is checked).
ConjectureDiagonal conjecture_diagonal(int n, int k);

/// Closed form for k > n/2: p(n-k) ones, p(n) - 2 p(n-k) copies of (x+k),
/// p(n-k) copies of (x+k)(x+2k). Throws std::invalid_argument for k <= n/2.
std::vector<PolyZx> proposition_diagonal(int n, int k);

/// Number of removable border strips (rim hooks) of size k, via the
/// first-column hook lengths: count beads b >= k whose shift b-k is free.
int border_strip_count(const Partition& lambda, part_t k);

struct LadderLevel {
    int order = 1;  // minor size r; the gcd is the determinantal divisor D_r
    PolyZx gcd;
    bool exhaustive = true;
    long long minors_processed = 0;
    // target-relative outcomes; meaningful only when a target was supplied
    bool matches_target = false;           // gcd equals the target cumulative product
    bool consistent_with_target = false;   // target cumulative product divides gcd
};

enum class LadderVerdict { Confirmed, Partial, Refuted };
std::string to_string(LadderVerdict v);

struct DivisorLadder {
    int dim = 0;
    bool has_target = false;
    std::vector<LadderLevel> levels;

    /// D_r / D_{r-1} per level (D_0 = 1). Throws std::domain_error if a
    /// quotient is not exact, which can only happen on sampled levels.
    std::vector<PolyZx> quotients() const;

    /// Refuted if any exhaustive level disagrees with the target, or any
    /// level's gcd is not a multiple of the target product. Confirmed only
    /// when every level up to the full dimension is exhaustive and matches.
    LadderVerdict verdict() const;
};

struct LadderOptions {
    long long minor_budget = 10'000'000;  // max minor pairs for an exhaustive level
    long long samples_per_level = 400;    // pairs drawn when over budget
    int size_cap = 0;                     // max minor order; <= 0 means the full dimension
    int threads = 1;
    std::uint64_t seed = 0x5eed'c0de'5eed'c0deULL;
};

/// Determinantal divisors of m by direct minor enumeration. Minors are
/// evaluated at integer points (the whole matrix is evaluated once per
/// point) and interpolated. With a target, a level switches from gcd
/// accumulation to plain divisibility checks once the running gcd reaches
/// the target's cumulative product. `target` is the claimed diagonal, first
/// to last; pass an empty vector for no target.
DivisorLadder determinantal_ladder(const PolyMatrix& m, const std::vector<PolyZx>& target,
                                   const LadderOptions& opts = {});

}  // namespace snfy

#endif
