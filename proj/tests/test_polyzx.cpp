#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "snfy/polyzx.hpp"

using namespace snfy;

namespace {
PolyZx C(std::vector<mpz_class> cs) { return PolyZx(std::move(cs)); }

PolyZx random_poly(std::mt19937_64& rng, int max_deg, long coeff_bound) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<long> dc(-coeff_bound, coeff_bound);
    int deg = dd(rng);
    std::vector<mpz_class> cs(static_cast<size_t>(deg) + 1);
    for (auto& c : cs) c = dc(rng);
    return PolyZx(std::move(cs));
}
}  // namespace

TEST_CASE("construction and canonical form") {
    PolyZx zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.coeff(0) == 0);
    CHECK_THROWS(zero.leading());

    CHECK(C({0, 0, 0}).is_zero());  // trailing zeros stripped
    CHECK(C({5, 0, 0}) == PolyZx(5));
    CHECK(PolyZx(1).is_one());
    CHECK_FALSE(PolyZx(-1).is_one());

    PolyZx p = C({3, 4, 1});
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == 3);
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(7) == 0);
    CHECK(p.leading() == 1);
    CHECK(p.to_string() == "3+4*x+x^2");

    CHECK(PolyZx::x() == C({0, 1}));
    CHECK(PolyZx::linear(4) == C({4, 1}));
}

TEST_CASE("arithmetic identities") {
    PolyZx a = C({1, 2, 3}), b = C({-1, 5});
    CHECK(a + b == C({0, 7, 3}));
    CHECK(a - a == PolyZx());
    CHECK(-a == C({-1, -2, -3}));
    CHECK(a * PolyZx() == PolyZx());
    CHECK(a * PolyZx(1) == a);
    CHECK(a * b == b * a);
    CHECK((a + b) * (a - b) == a * a - b * b);

    // (1+x)(3+x) = 3+4x+x^2
    CHECK(PolyZx::linear(1) * PolyZx::linear(3) == C({3, 4, 1}));
    // cancellation of leading terms drops the degree
    CHECK((C({0, 1}) - C({5, 1})).degree() == 0);
}

TEST_CASE("evaluation") {
    PolyZx p = C({3, 4, 1});
    CHECK(p.eval_at(0) == 3);
    CHECK(p.eval_at(1) == 8);
    CHECK(p.eval_at(-1) == 0);
    CHECK(p.eval_at(-3) == 0);
    CHECK(p.eval_at(mpz_class("1000000000000")) == mpz_class("1000000000004000000000003"));
    CHECK(PolyZx().eval_at(17) == 0);
}

TEST_CASE("divides and exact_div") {
    PolyZx f = PolyZx::linear(1), g = PolyZx::linear(2);
    PolyZx prod = f * g;
    CHECK(divides(f, prod));
    CHECK(divides(g, prod));
    CHECK(exact_div(f, prod) == g);
    CHECK(exact_div(g, prod) == f);
    CHECK_FALSE(divides(PolyZx::linear(3), prod));
    CHECK_THROWS_AS(exact_div(PolyZx::linear(3), prod), std::domain_error);

    // integer-coefficient quotients only: (2x) / 2 yes, x / 2 no
    CHECK(divides(PolyZx(2), C({0, 2})));
    CHECK_FALSE(divides(PolyZx(2), C({0, 1})));
    CHECK_FALSE(divides(PolyZx(2), C({1, 2})));

    // everything divides zero; zero divides only zero
    CHECK(divides(f, PolyZx()));
    CHECK(exact_div(f, PolyZx()) == PolyZx());
    CHECK(divides(PolyZx(), PolyZx()));
    CHECK_FALSE(divides(PolyZx(), f));

    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 200; ++rep) {
        PolyZx d = random_poly(rng, 3, 9);
        PolyZx q = random_poly(rng, 3, 9);
        if (d.is_zero()) continue;
        PolyZx pr = d * q;
        CHECK(divides(d, pr));
        CHECK(exact_div(d, pr) == q);
    }
}

TEST_CASE("content and primitive part") {
    PolyZx p = C({6, 9, 12});
    CHECK(content(p) == 3);
    CHECK(primitive_part(p) == C({2, 3, 4}));
    CHECK(p == PolyZx(content(p)) * primitive_part(p));
    CHECK(content(PolyZx()) == 0);
}

TEST_CASE("gcd in Z[x]") {
    PolyZx f = PolyZx::linear(1), g = PolyZx::linear(2), h = PolyZx::linear(5);
    CHECK(gcd_zx(f * g, f * h) == f);
    CHECK(gcd_zx(f, g) == PolyZx(1));
    CHECK(gcd_zx(f * f * g, f * g * g) == f * g);

    // content contributes: gcd(2(1+x), 4(1+x)^2) = 2(1+x)
    CHECK(gcd_zx(PolyZx(2) * f, PolyZx(4) * f * f) == PolyZx(2) * f);

    // sign normalization: positive leading coefficient
    CHECK(gcd_zx(-f, -f * g) == f);
    CHECK(gcd_zx(PolyZx(-4), PolyZx(6)) == PolyZx(2));

    // gcd with zero is the (normalized) other argument
    CHECK(gcd_zx(PolyZx(), -f) == f);
    CHECK(gcd_zx(f * g, PolyZx()) == f * g);
    CHECK_THROWS_AS(gcd_zx(PolyZx(), PolyZx()), std::invalid_argument);

    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 100; ++rep) {
        PolyZx a = random_poly(rng, 3, 6), b = random_poly(rng, 3, 6);
        if (a.is_zero() && b.is_zero()) continue;
        PolyZx g2 = gcd_zx(a, b);
        CHECK(divides(g2, a));
        CHECK(divides(g2, b));
        CHECK(g2.leading() > 0);
        // common factors show up: c divides gcd(c*a, c*b)
        PolyZx c = PolyZx::linear(rep % 5);
        CHECK(divides(c, gcd_zx(c * a, c * b)));
    }
}

TEST_CASE("alpha ladder polynomials") {
    CHECK(alpha_k(6, 1) == PolyZx::linear(1));
    CHECK(alpha_k(6, 3) == PolyZx::linear(1) * PolyZx::linear(2) * PolyZx::linear(3));
    // top factor swaps k for k+1 when k = n
    CHECK(alpha_k(6, 6) == PolyZx::linear(1) * PolyZx::linear(2) * PolyZx::linear(3) *
                               PolyZx::linear(4) * PolyZx::linear(5) * PolyZx::linear(7));
    CHECK(alpha_k(6, 6).eval_at(0) == 840);
    CHECK(alpha_k(1, 1) == PolyZx::linear(2));

    std::vector<PolyZx> fs = alpha_factors(5, 5);
    REQUIRE(fs.size() == 5);
    CHECK(fs[0] == PolyZx::linear(1));
    CHECK(fs[3] == PolyZx::linear(4));
    CHECK(fs[4] == PolyZx::linear(6));

    // successive alphas divide each other
    for (int k = 1; k < 8; ++k) CHECK(divides(alpha_k(8, k), alpha_k(8, k + 1)));

    CHECK_THROWS_AS(alpha_k(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(alpha_k(4, 0), std::invalid_argument);
}
