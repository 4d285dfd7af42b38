#ifndef SNFY_ZSNF_ORACLE_HPP
#define SNFY_ZSNF_ORACLE_HPP

#include <vector>

#include <gmpxx.h>

namespace snfy {

/// Smith normal form over the integers: nonnegative diagonal with
/// diag[i] | diag[i+1] and any zeros trailing.
struct IntSnf {
    std::vector<mpz_class> diag;
};

/// Bezout row/column reduction carried out modulo a nonzero rank-sized
/// minor, which bounds every intermediate entry; exact arbitrary-precision
/// arithmetic throughout. The input must be square and is consumed.
IntSnf int_snf(std::vector<std::vector<mpz_class>> m);

/// Compares int_snf of the degree-n operator matrix for k d/dp_k p_k,
/// shifted by c on the diagonal, against int_snf of the predicted diagonal
/// evaluated at x = c. The prediction is the constructive diagonal for
/// k = 1 and the peeled conjectural diagonal for k >= 2.
struct SpecializeReport {
    int n = 0;
    int k = 1;
    mpz_class c;
    std::vector<mpz_class> lhs;  // int_snf(M_k + cI)
    std::vector<mpz_class> rhs;  // int_snf(diag(predicted at c))
    bool match = false;
};

SpecializeReport specialize_and_check(int n, int k, const mpz_class& c);

/// The eigenvalue multiset {k (m_k(lambda) + 1) : lambda |- n}, ascending.
std::vector<long long> eigen_multiset(int n, int k);

}  // namespace snfy

#endif
