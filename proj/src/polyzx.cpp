#include "snfy/polyzx.hpp"

#include <sstream>
#include <stdexcept>

namespace snfy {

PolyZx::PolyZx(const mpz_class& c) {
    if (c != 0) coeffs_.push_back(c);
}

PolyZx::PolyZx(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void PolyZx::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& PolyZx::coeff(int i) const {
    static const mpz_class zero = 0;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(i)];
}

const mpz_class& PolyZx::leading() const {
    if (is_zero()) throw std::domain_error("PolyZx::leading: zero polynomial");
    return coeffs_.back();
}

PolyZx PolyZx::operator-() const {
    std::vector<mpz_class> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return PolyZx(std::move(c));
}

PolyZx operator+(const PolyZx& a, const PolyZx& b) {
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return PolyZx(std::move(c));
}

PolyZx operator-(const PolyZx& a, const PolyZx& b) {
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return PolyZx(std::move(c));
}

PolyZx operator*(const PolyZx& a, const PolyZx& b) {
    if (a.is_zero() || b.is_zero()) return PolyZx{};
    std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PolyZx(std::move(c));
}

mpz_class PolyZx::eval_at(const mpz_class& c) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * c + *it;
    return acc;
}

std::string PolyZx::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? "+" : "-");
        mpz_class a = abs(c);
        if (first && c < 0) os << "-";
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) {
            if (a != 1) os << "*";
            os << "x";
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Long division of p by d over Z[x], leading coefficients must divide exactly
// at every step. Returns false (without throwing) when p is not a Z[x]
// multiple of d; on success *quot holds the quotient.
bool try_exact_div(const PolyZx& d, const PolyZx& p, PolyZx* quot) {
    if (p.is_zero()) {  // zero is a multiple of everything, zero included
        if (quot) *quot = PolyZx{};
        return true;
    }
    if (d.is_zero()) return false;
    if (p.degree() < d.degree()) return false;
    std::vector<mpz_class> rem = p.coeffs();
    std::vector<mpz_class> q(static_cast<size_t>(p.degree() - d.degree()) + 1, 0);
    const auto& dc = d.coeffs();
    int dd = d.degree();
    for (int k = p.degree() - dd; k >= 0; --k) {
        mpz_class& top = rem[static_cast<size_t>(k + dd)];
        if (top == 0) continue;
        mpz_class qk, r;
        mpz_tdiv_qr(qk.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), dc.back().get_mpz_t());
        if (r != 0) return false;
        q[static_cast<size_t>(k)] = qk;
        for (int i = 0; i <= dd; ++i) rem[static_cast<size_t>(k + i)] -= qk * dc[static_cast<size_t>(i)];
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    if (quot) *quot = PolyZx(std::move(q));
    return true;
}

}  // namespace

bool divides(const PolyZx& d, const PolyZx& p) { return try_exact_div(d, p, nullptr); }

PolyZx exact_div(const PolyZx& d, const PolyZx& p) {
    if (d.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
    PolyZx q;
    if (!try_exact_div(d, p, &q)) throw std::domain_error("exact_div: not divisible");
    return q;
}

mpz_class content(const PolyZx& p) {
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

PolyZx primitive_part(const PolyZx& p) {
    if (p.is_zero()) return p;
    mpz_class g = content(p);
    std::vector<mpz_class> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs()[i] / g;
    PolyZx pp(std::move(c));
    return pp.leading() < 0 ? -pp : pp;
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, degrees small here.
PolyZx pseudo_rem(PolyZx a, const PolyZx& b) {
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        std::vector<mpz_class> m(static_cast<size_t>(shift) + 1, 0);
        m.back() = a.leading();
        a = a * PolyZx(b.leading()) - b * PolyZx(std::move(m));
    }
    return a;
}

}  // namespace

PolyZx gcd_zx(const PolyZx& p, const PolyZx& q) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd_zx: gcd(0, 0)");
    if (p.is_zero()) {
        PolyZx r = primitive_part(q) * PolyZx(content(q));
        return r.leading() < 0 ? -r : r;
    }
    if (q.is_zero()) return gcd_zx(q, p);
    mpz_class cg;
    mpz_class cp = content(p), cq = content(q);
    mpz_gcd(cg.get_mpz_t(), cp.get_mpz_t(), cq.get_mpz_t());
    // primitive PRS
    PolyZx a = primitive_part(p), b = primitive_part(q);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        PolyZx r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    PolyZx g = primitive_part(a) * PolyZx(cg);
    return g.leading() < 0 ? -g : g;
}

std::vector<PolyZx> alpha_factors(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("alpha_k: need 1 <= k <= n");
    std::vector<PolyZx> fs;
    fs.reserve(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i) fs.push_back(PolyZx::linear(i == n ? n + 1 : i));
    return fs;
}

PolyZx alpha_k(int n, int k) {
    PolyZx acc(1);
    for (const PolyZx& f : alpha_factors(n, k)) acc *= f;
    return acc;
}

}  // namespace snfy
