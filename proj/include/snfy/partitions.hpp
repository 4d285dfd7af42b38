#ifndef SNFY_PARTITIONS_HPP
#define SNFY_PARTITIONS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace snfy {

using part_t = long long;

/// Integer partition: weakly decreasing sequence of positive parts.
/// The empty sequence is the unique partition of 0.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<part_t> parts);

    const std::vector<part_t>& parts() const noexcept { return parts_; }
    part_t n() const noexcept { return n_; }
    int num_parts() const noexcept { return static_cast<int>(parts_.size()); }

    /// i-th part, 0-based; missing parts read as 0.
    part_t part(int i) const noexcept {
        return (i >= 0 && i < num_parts()) ? parts_[static_cast<size_t>(i)] : 0;
    }

    /// m_k: number of parts equal to k.
    int count_parts_equal(part_t k) const noexcept;
    int num_distinct_parts() const noexcept;

    bool empty() const noexcept { return parts_.empty(); }

    /// Lexicographic order; missing parts compare as 0, so e.g. (2,2) < (2,2,1).
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const Partition& a, const Partition& b) noexcept = default;

    std::string to_string() const;  // e.g. "(4,2,2,1,1,1)"; "()" for empty

  private:
    std::vector<part_t> parts_;
    part_t n_ = 0;
};

/// Number of partitions of n, by the Euler pentagonal recurrence. Cached.
mpz_class partition_count(int n);

/// All partitions of n in descending lexicographic order; length p(n).
std::vector<Partition> enumerate_partitions(int n);

/// Number of parts of lambda equal to k (k >= 1).
int m_k(const Partition& lambda, part_t k);

/// Transpose of the Young diagram; involution.
Partition conjugate_of(const Partition& lambda);

/// Strict dominance: every prefix sum of mu >= the one of lambda, and mu != lambda.
/// Throws std::invalid_argument if |mu| != |lambda|.
bool dominance_gt(const Partition& mu, const Partition& lambda);

/// lambda^+ : remove one trailing 1, increment the first part.
/// Throws std::domain_error if m_1(lambda) = 0 ("terminal") or lambda = (1).
Partition plus_op(const Partition& lambda);

/// No mu with mu^+ = lambda. True iff the first two parts agree; the
/// single-part partition (1) counts as initial (nothing maps onto it).
bool is_initial(const Partition& lambda);

/// plus_op is not defined: no part equal to 1, or the degenerate (1).
bool is_terminal(const Partition& lambda);

/// Maximal chain under plus_op, listed terminal first, initial last.
struct FullString {
    std::vector<Partition> elements;

    const Partition& terminal() const { return elements.front(); }
    const Partition& initial() const { return elements.back(); }
    int cardinality() const noexcept { return static_cast<int>(elements.size()); }
};

/// The unique full string containing lambda (|lambda| >= 1).
FullString full_string_of(const Partition& lambda);

/// All full strings of partitions of n, sorted by terminal element in
/// descending lexicographic order. Concatenating the strings yields the
/// global descending order used to index matrix rows and columns.
struct StringDecomposition {
    std::vector<FullString> strings;

    int t() const noexcept { return static_cast<int>(strings.size()); }
    std::vector<Partition> flatten() const;
    std::vector<int> cardinalities() const;
};

StringDecomposition string_decomposition(int n);

/// shape = (p(n)-p(n-1), ..., p(2)-p(1), p(1)), a partition of p(n);
/// conjugate lists the string cardinalities in weakly decreasing order.
struct ShapeLambdaN {
    Partition shape;
    Partition conjugate;
};

ShapeLambdaN shape_lambda_n(int n);

}  // namespace snfy

#endif
