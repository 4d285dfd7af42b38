#ifndef SNFY_POLYZX_HPP
#define SNFY_POLYZX_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

namespace snfy {

/// Dense univariate polynomial over Z with arbitrary-precision coefficients.
/// Canonical form: no trailing zero coefficients; the zero polynomial is the
/// empty coefficient sequence.
class PolyZx {
  public:
    PolyZx() = default;
    PolyZx(const mpz_class& c);               // constant
    PolyZx(long c) : PolyZx(mpz_class(c)) {}
    explicit PolyZx(std::vector<mpz_class> coeffs);  // lowest degree first

    static PolyZx x() { return PolyZx(std::vector<mpz_class>{0, 1}); }
    /// c + x, the ubiquitous linear factor.
    static PolyZx linear(const mpz_class& c) { return PolyZx(std::vector<mpz_class>{c, 1}); }

    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const mpz_class& coeff(int i) const;  // 0 beyond the degree
    const mpz_class& leading() const;     // throws on zero polynomial

    friend bool operator==(const PolyZx& a, const PolyZx& b) noexcept = default;

    PolyZx operator-() const;
    friend PolyZx operator+(const PolyZx& a, const PolyZx& b);
    friend PolyZx operator-(const PolyZx& a, const PolyZx& b);
    friend PolyZx operator*(const PolyZx& a, const PolyZx& b);
    PolyZx& operator+=(const PolyZx& o) { return *this = *this + o; }
    PolyZx& operator-=(const PolyZx& o) { return *this = *this - o; }
    PolyZx& operator*=(const PolyZx& o) { return *this = *this * o; }

    mpz_class eval_at(const mpz_class& c) const;

    std::string to_string() const;  // human form, e.g. "3+4x+x^2"

  private:
    void normalize();
    std::vector<mpz_class> coeffs_;
};

/// True iff p = d*q for some q in Z[x] (integer coefficients required).
bool divides(const PolyZx& d, const PolyZx& p);

/// The exact quotient p/d in Z[x]. Throws std::domain_error when not divisible.
PolyZx exact_div(const PolyZx& d, const PolyZx& p);

/// gcd in Z[x], normalized to positive leading coefficient:
/// gcd of integer contents times primitive gcd of primitive parts.
/// Throws std::invalid_argument if both inputs are zero.
PolyZx gcd_zx(const PolyZx& p, const PolyZx& q);

/// Content (gcd of coefficients, nonnegative) and primitive part.
mpz_class content(const PolyZx& p);
PolyZx primitive_part(const PolyZx& p);

/// alpha_k(x) = a_1(x)...a_k(x) with a_i(x) = i + x for i < n and
/// a_n(x) = n + 1 + x. Requires 1 <= k <= n.
PolyZx alpha_k(int n, int k);

/// The linear factors of alpha_k(n, k), in order.
std::vector<PolyZx> alpha_factors(int n, int k);

}  // namespace snfy

#endif
