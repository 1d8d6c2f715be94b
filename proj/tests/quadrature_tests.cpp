#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "romanovski/quadrature.hpp"

using namespace romanovski;

namespace {

constexpr double kPi = std::numbers::pi;

Rational rat(long num, long den = 1) { return Rational(num, den); }

}  // namespace

TEST_CASE("arccot branch is (0, pi), continuous and decreasing") {
    CHECK(arccot(0.0) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(arccot(1.0) == doctest::Approx(kPi / 4).epsilon(1e-15));
    CHECK(arccot(-1.0) == doctest::Approx(3 * kPi / 4).epsilon(1e-15));
    CHECK(arccot(1e12) > 0.0);
    CHECK(arccot(-1e12) < kPi);
    CHECK(arccot(-1e-9) > arccot(1e-9));
    CHECK(arccot(-1e-9) - arccot(1e-9) == doctest::Approx(2e-9).epsilon(1e-6));
}

TEST_CASE("closed generating function") {
    for (const auto& p : {Params{rat(0), rat(0)}, Params{rat(2), rat(1, 2)}, Params{rat(-3), rat(2)}})
        CHECK(genfun_closed(p, 0.7, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    const Params zero{rat(0), rat(0)};
    CHECK(genfun_closed(zero, 0.0, 0.5) == doctest::Approx(0.8).epsilon(1e-15));
    for (const double x : {-1.5, -0.3, 0.0, 0.4, 2.0})
        for (const double y : {-0.3, 0.1, 0.25}) {
            const double direct = 1.0 / (1.0 + 2 * x * y + y * y * (1.0 + x * x));
            CHECK(genfun_closed(zero, x, y) == doctest::Approx(direct).epsilon(1e-13));
        }
}

TEST_CASE("series against closed form") {
    const Params zero{rat(0), rat(0)};
    const auto at_origin = genfun_series_check(zero, 0.0, 0.0, 10);
    CHECK(at_origin.closed == 1.0);
    CHECK(at_origin.series == 1.0);
    const auto mid = genfun_series_check(zero, 0.0, 0.3, 25);
    CHECK(mid.closed == doctest::Approx(1.0 / 1.09).epsilon(1e-12));
    CHECK(mid.series == doctest::Approx(1.0 / 1.09).epsilon(1e-10));
    const auto general = genfun_series_check(Params{rat(1), rat(1)}, 0.5, 0.1, 30);
    CHECK(general.converged);
    CHECK(std::abs(general.closed - general.series) / std::abs(general.closed) < 1e-10);
    CHECK_THROWS_AS(genfun_series_check(zero, 0.0, 0.0, 3), std::invalid_argument);
}

TEST_CASE("series divergence is flagged, not asserted") {
    // |y| sqrt(sigma) beyond the closed form's singularity radius.
    const auto far = genfun_series_check(Params{rat(0), rat(0)}, 0.0, 1.8, 40);
    CHECK(!far.converged);
}

TEST_CASE("generating function PDE holds to finite-difference accuracy") {
    for (const auto& p : {Params{rat(0), rat(0)}, Params{rat(1), rat(1)}, Params{rat(-2), rat(1, 2)}})
        for (const double x : {-1.2, 0.0, 0.8})
            for (const double y : {-0.15, 0.05, 0.2})
                CHECK(genfun_pde_residual(p, x, y) < 1e-6);
}

TEST_CASE("substitution reproduces known integrals to 1e-12") {
    // int sigma^-2 dx = pi/2 and int sigma^-3 dx = 3 pi/8.
    const auto o_a0 = ortho_integral(Params{rat(0), rat(0)}, 0, 0, false);
    CHECK(o_a0.value == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(o_a0.abs_error_estimate >= 0.0);
    CHECK(o_a0.nodes_used > 0);
    const auto o_a1 = ortho_integral(Params{rat(0), rat(1)}, 0, 0, false);
    CHECK(o_a1.value == doctest::Approx(3 * kPi / 8).epsilon(1e-12));
    const auto o_a2 = ortho_integral(Params{rat(0), rat(2)}, 0, 0, false);
    CHECK(o_a2.value == doctest::Approx(5 * kPi / 16).epsilon(1e-12));
}

TEST_CASE("even-index orthogonality at alpha = 0") {
    CHECK(std::abs(ortho_integral(Params{rat(0), rat(0)}, 2, 0, false).value) < 1e-10);
    CHECK(std::abs(ortho_integral(Params{rat(0), rat(1)}, 2, 4, false).value) < 1e-9);
    CHECK(std::abs(ortho_integral(Params{rat(0), rat(1, 2)}, 0, 4, false).value) < 1e-9);
}

TEST_CASE("odd index sums vanish with the extra sqrt(sigma)") {
    CHECK(std::abs(ortho_integral(Params{rat(0), rat(0)}, 1, 0, true).value) < 1e-10);
    CHECK(std::abs(ortho_integral(Params{rat(0), rat(1)}, 3, 2, true).value) < 1e-9);
}

TEST_CASE("the two subsets stay orthogonal for nonzero alpha") {
    const Params p{rat(1), rat(0)};
    CHECK(std::abs(ortho_integral(p, 2, 0, false).value) < 1e-12);
    CHECK(std::abs(ortho_integral(p, 3, 1, false).value) < 1e-12);
    CHECK(std::abs(ortho_integral(p, 1, 0, true).value) < 1e-12);
    CHECK(std::abs(ortho_integral(Params{rat(2), rat(1, 2)}, 5, 1, false).value) < 1e-11);
    // Contrast: the same odd pair without the matching weight is far from zero.
    CHECK(std::abs(ortho_integral(p, 3, 1, true).value) > 1.0);
}

TEST_CASE("integrable endpoint singularities keep honest error estimates") {
    // a = -5/4 puts sin^(-1/2) at both endpoints; the folded substitution
    // still resolves it and the estimate brackets the true error.
    const auto r = ortho_integral(Params{rat(0), rat(-5, 4)}, 0, 0, false);
    const double exact = i0_reference(-1.25);
    CHECK(std::abs(r.value - exact) < 1e-8);
    CHECK(std::abs(r.value - exact) < 10 * r.abs_error_estimate + 1e-12);
}

TEST_CASE("divergent exponent combinations are rejected up front") {
    CHECK_THROWS_AS(ortho_integral(Params{rat(0), rat(-2)}, 0, 0, false), std::domain_error);
    CHECK_THROWS_AS(ortho_integral(Params{rat(0), rat(-3, 2)}, 0, 0, false), std::domain_error);
    CHECK_THROWS_AS(i0_scan(rat(-2), std::vector<double>{0.0}), std::domain_error);
    CHECK_THROWS_AS(i0_reference(-1.5), std::domain_error);
    // Just inside the admissible range still integrates.
    CHECK(ortho_integral(Params{rat(0), rat(-5, 4)}, 0, 0, false).value > 0.0);
}

TEST_CASE("I0 reference constants from the gamma formula") {
    CHECK(i0_reference(0) == doctest::Approx(kPi / 2).epsilon(1e-14));
    CHECK(i0_reference(1) == doctest::Approx(3 * kPi / 8).epsilon(1e-14));
    CHECK(i0_reference(2) == doctest::Approx(5 * kPi / 16).epsilon(1e-14));
    CHECK(i0_reference(3) == doctest::Approx(35 * kPi / 128).epsilon(1e-14));
    CHECK(i0_reference(4) == doctest::Approx(63 * kPi / 256).epsilon(1e-14));
    // Two-route check: the y = 0 integral is the same constant.
    for (const long a : {0L, 1L, 2L, 3L, 4L}) {
        const auto direct = ortho_integral(Params{rat(0), rat(a)}, 0, 0, false);
        CHECK(direct.value ==
              doctest::Approx(i0_reference(static_cast<double>(a))).epsilon(1e-11));
    }
}

TEST_CASE("I0 is flat inside the unit window") {
    const std::vector<double> grid{-0.9, 0.0, 0.9};
    const auto at0 = i0_scan(rat(0), grid);
    for (const auto& r : at0) CHECK(std::abs(r.value - kPi / 2) < 1e-8);
    const std::vector<double> half{0.5};
    const auto at3 = i0_scan(rat(3), half);
    CHECK(std::abs(at3[0].value - 35 * kPi / 128) < 1e-8);
}

TEST_CASE("I0 leaves the plateau outside the unit window") {
    const std::vector<double> outside{1.5};
    const auto r = i0_scan(rat(0), outside);
    CHECK(std::abs(r[0].value - kPi / 2) > 1e-3);
}

TEST_CASE("I1 reduces to I0 at alpha = 0") {
    const std::vector<double> grid{-0.6, 0.2, 0.8};
    const auto a = i0_scan(rat(1), grid);
    const auto b = i1_scan(Params{rat(0), rat(1)}, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
        CHECK(a[i].value == doctest::Approx(b[i].value).epsilon(1e-14));
}

TEST_CASE("I1 is asymmetric in y once alpha is switched on") {
    const std::vector<double> grid{-0.5, 0.0, 0.5};
    const auto r = i1_scan(Params{rat(1), rat(0)}, grid);
    CHECK(std::abs(r[2].value - r[0].value) > 1e-4);
    const auto o00 = ortho_integral(Params{rat(1), rat(0)}, 0, 0, false);
    CHECK(r[1].value == doctest::Approx(o00.value).epsilon(1e-10));
}

TEST_CASE("I(y) detects the missing even/odd split") {
    const std::vector<double> grid{-0.4, 0.0, 0.4};
    const auto skewed = i_scan(Params{rat(1), rat(0)}, grid);
    CHECK(std::abs(skewed[2].value - skewed[0].value) > 1e-4);
    CHECK(skewed[1].value ==
          doctest::Approx(ortho_integral(Params{rat(1), rat(0)}, 0, 0, false).value)
              .epsilon(1e-10));
    const auto even = i_scan(Params{rat(0), rat(0)}, grid);
    CHECK(std::abs(even[2].value - even[0].value) < 1e-9);
}

TEST_CASE("halving the tolerance moves the value less than the reported error") {
    const auto f = [](double t) { return std::exp(-t) * std::cos(8 * t); };
    const auto coarse = integrate_adaptive(f, 0.0, kPi, 1e-8);
    const auto fine = integrate_adaptive(f, 0.0, kPi, 1e-8 / 4);
    CHECK(std::abs(coarse.value - fine.value) <= coarse.abs_error_estimate + 1e-15);
    CHECK(fine.nodes_used >= coarse.nodes_used);
    const double exact = (1.0 - std::exp(-kPi)) / 65.0;
    CHECK(coarse.value == doctest::Approx(exact).epsilon(1e-10));
}
