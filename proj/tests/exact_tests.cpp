#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "romanovski/poly.hpp"
#include "romanovski/rational.hpp"
#include "romanovski/serialize.hpp"

using namespace romanovski;

namespace {

Rational rat(long num, long den = 1) { return Rational(num, den); }

// Small random polynomials for the ring-axiom properties.
Poly random_poly(std::mt19937_64& rng, unsigned max_degree) {
    std::vector<Rational> coeffs(rng() % (max_degree + 2));
    for (auto& c : coeffs)
        c = Rational(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 4) + 1);
    return Poly(std::move(coeffs));
}

}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(-3, -6).str() == "1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK((rat(1, 3) + rat(1, 6)).str() == "1/2");
    CHECK((rat(1, 3) * rat(3)).str() == "1");
    CHECK((rat(1) / rat(-2)).str() == "-1/2");
    CHECK(rat(1, 3) < rat(1, 2));
    CHECK_THROWS_AS(rat(1) / rat(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational parsing round trips") {
    for (const char* s : {"0", "5", "-3/2", "7/3", "-12"}) CHECK(Rational::parse(s).str() == s);
    CHECK(Rational::parse("4/6").str() == "2/3");
    for (const char* s : {"", "x", "+3", "1/", "/2", "1/0", "1/-2", "1.5", "3 / 2", "2/3/4"})
        CHECK_THROWS_AS(Rational::parse(s), std::invalid_argument);
}

TEST_CASE("rational to_long and to_double") {
    CHECK(rat(-12, 4).to_long() == -3);
    CHECK_THROWS_AS(rat(1, 2).to_long(), std::domain_error);
    CHECK(rat(1, 2).to_double() == 0.5);
    CHECK(rat(1, 3).to_double() == doctest::Approx(1.0 / 3).epsilon(1e-15));
}

TEST_CASE("generalized binomial") {
    CHECK(binomial(rat(-1), 0) == rat(1));
    CHECK(binomial(rat(-1), 2) == rat(1));
    CHECK(binomial(rat(-3, 2), 1) == rat(-3, 2));
    CHECK(binomial(rat(5), 2) == rat(10));
    CHECK(binomial(rat(-1), 3) == rat(-1));
    CHECK(binomial(rat(1, 2), 2) == rat(-1, 8));
    CHECK(factorial(5) == rat(120));
}

TEST_CASE("poly addition examples") {
    const Poly sigma{rat(1), rat(0), rat(1)};
    const Poly minus_x2{rat(0), rat(0), rat(-1)};
    CHECK(sigma + minus_x2 == Poly::constant(1));
    const Poly p{rat(3), rat(-2), rat(5)};
    CHECK(Poly() + p == p);
    CHECK(Poly{rat(0), rat(2)} + Poly{rat(-2), rat(0), rat(6)} == Poly{rat(-2), rat(2), rat(6)});
}

TEST_CASE("poly multiplication examples") {
    const Poly sigma{rat(1), rat(0), rat(1)};
    CHECK(sigma * Poly::constant(1) == sigma);
    CHECK(Poly{rat(0), rat(-2)} * Poly{rat(0), rat(-4)} == Poly::monomial(rat(8), 2));
    CHECK((sigma * Poly()).is_zero());
    CHECK(!sigma.is_zero());
}

TEST_CASE("poly differentiation examples") {
    CHECK(sigma_poly().derivative() == Poly{rat(0), rat(2)});
    CHECK(Poly::constant(1).derivative().is_zero());
    CHECK(Poly{rat(-2), rat(0), rat(6)}.derivative() == Poly::monomial(rat(12), 1));
}

TEST_CASE("poly evaluation examples") {
    CHECK(Poly{rat(-2), rat(0), rat(6)}.eval(rat(0)) == rat(-2));
    CHECK(Poly{rat(7), rat(1), rat(3)}.eval(rat(0)) == rat(7));
    CHECK(sigma_poly().eval(rat(2)) == rat(5));
}

TEST_CASE("zero polynomial has no degree; degrees add under product") {
    CHECK(!Poly().degree().has_value());
    CHECK(Poly{rat(0)}.is_zero());
    CHECK(Poly{rat(1), rat(1), rat(0)}.degree() == 1);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const Poly p = random_poly(rng, 6), q = random_poly(rng, 6);
        if (p.is_zero() || q.is_zero()) {
            CHECK((p * q).is_zero());
        } else {
            CHECK(*(p * q).degree() == *p.degree() + *q.degree());
        }
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        const Poly p = random_poly(rng, 6), q = random_poly(rng, 6), r = random_poly(rng, 6);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("derivative satisfies the product rule") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 60; ++i) {
        const Poly p = random_poly(rng, 6), q = random_poly(rng, 6);
        CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 60; ++i) {
        const Poly p = random_poly(rng, 6), q = random_poly(rng, 6);
        const Rational x0(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 3) + 1);
        CHECK((p * q).eval(x0) == p.eval(x0) * q.eval(x0));
        CHECK((p + q).eval(x0) == p.eval(x0) + q.eval(x0));
    }
}

TEST_CASE("exact division") {
    const Poly p{rat(2), rat(0), rat(2)};  // 2 sigma
    auto q = divide_exact(p, sigma_poly());
    REQUIRE(q.has_value());
    CHECK(*q == Poly::constant(2));
    CHECK(!divide_exact(Poly{rat(0), rat(1)}, sigma_poly()).has_value());
    CHECK(divide_exact(Poly(), sigma_poly())->is_zero());
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        const Poly a = random_poly(rng, 5), b = random_poly(rng, 3);
        if (b.is_zero()) continue;
        const auto quotient = divide_exact(a * b, b);
        REQUIRE(quotient.has_value());
        CHECK(*quotient == a);
    }
}

TEST_CASE("reflection") {
    const Poly p{rat(1), rat(2), rat(3), rat(4)};
    CHECK(p.reflected() == Poly{rat(1), rat(-2), rat(3), rat(-4)});
    CHECK(p.reflected().reflected() == p);
}

TEST_CASE("poly JSON round trip uses rational strings") {
    const Poly q2{rat(-2), rat(0), rat(6)};
    const auto j = poly_to_json(q2);
    CHECK(j.dump() == R"(["-2","0","6"])");
    CHECK(poly_from_json(j) == q2);
    CHECK(poly_to_json(Poly()).dump() == "[]");
    CHECK(poly_from_json(nlohmann::json::array()).is_zero());
    const Poly half{rat(-3, 2), rat(5)};
    CHECK(poly_from_json(poly_to_json(half)) == half);
}

TEST_CASE("csv row rendering") {
    CHECK(poly_csv_row(2, Poly{rat(-2), rat(0), rat(6)}) == "2,-2,0,6");
    CHECK(poly_csv_row(0, Poly::constant(1)) == "0,1");
    CHECK(poly_csv_row(0, Poly()) == "0,0");
}

TEST_CASE("17-digit float formatting round trips") {
    for (const double v : {0.1, 1.0 / 3.0, 12345.678901234567, 1e-300, -2.5e17}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}
