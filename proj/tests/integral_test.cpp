#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grtoda/integral.hpp"
#include "grtoda/realization.hpp"

using namespace grtoda;

namespace {
// test-only small-argument series for K_0, independent of the cosh-integral
// route: K_0(z) = -(ln(z/2) + gamma_E) I_0(z) + sum_{k>=1} (z^2/4)^k/(k!)^2 H_k
double bessel_k0_series(double z) {
    const double euler = 0.57721566490153286;
    double q = z * z / 4.0;
    double i0 = 1.0, term = 1.0;
    double corr = 0.0, hk = 0.0;
    for (int k = 1; k <= 30; ++k) {
        term *= q / (k * k);
        i0 += term;
        hk += 1.0 / k;
        corr += term * hk;
    }
    return -(std::log(z / 2.0) + euler) * i0 + corr;
}
} // namespace

TEST_CASE("build_phase small cases") {
    // (1,2): F = i l2 x + i(l1-l2) x11 - (1/hbar)(e^{-x11} + e^{x11-x})
    PhaseData p = build_phase(1, 2, {0.7, -0.3}, 2.0, 0.5);
    REQUIRE(p.vars.size() == 1);
    CHECK(p.vars[0] == VarId::gz(1, 1));
    CHECK(p.linear[0].imag() == doctest::Approx(0.7 - (-0.3)));
    CHECK(p.linear_const.imag() == doctest::Approx(-0.3 * 0.5));
    REQUIRE(p.terms.size() == 2);
    // F at t = 0.2
    std::vector<double> t{0.2};
    std::complex<double> F = p.eval(t);
    double expect_decay = (std::exp(-0.2) + std::exp(0.2 - 0.5)) / 2.0;
    CHECK(F.real() == doctest::Approx(-expect_decay));
    CHECK(F.imag() == doctest::Approx(-0.3 * 0.5 + 1.0 * 0.2));

    // (1,3): three exponential terms, two variables
    PhaseData p13 = build_phase(1, 3, {0, 0, 0}, 1.0, 0.0);
    CHECK(p13.vars.size() == 2);
    CHECK(p13.terms.size() == 3);

    CHECK_THROWS_AS(build_phase(2, 2, {0, 0}, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_phase(1, 2, {0.0}, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_phase(1, 2, {0, 0}, -1.0, 0.0), std::invalid_argument);
}

TEST_CASE("phase term count and graph equivalence") {
    for (int N = 2; N <= 6; ++N)
        for (int m = 1; m < N; ++m) {
            PhaseData p = build_phase(m, N, std::vector<double>(N, 0.0), 1.0, 0.0);
            CHECK(p.terms.size() ==
                  static_cast<size_t>(2 + m * (N - 1 - m) + (N - m) * (m - 1)));
            CHECK(p.vars.size() == static_cast<size_t>(m * (N - m)));
            // exponential part at lambda = 0, hbar = 1 equals the graph sum
            // (phase variables treat x_{N,1} as a variable, not zero)
            ExpPoly formula = action_exponential_part(m, N);
            ExpPoly graph = phase_from_graph(m, N);
            INFO("(m,N)=(", m, ",", N, ")");
            CHECK(formula == graph);
        }
}

TEST_CASE("decay certificates") {
    for (int N = 2; N <= 6; ++N)
        for (int m = 1; m < N; ++m) {
            DecayCertificate c = decay_certificate(m, N);
            INFO("(m,N)=(", m, ",", N, ")");
            CHECK(c.coordinate_rays_ok);
            CHECK(c.circulation_ok);
            CHECK(c.full_rank);
        }
}

TEST_CASE("contour validation") {
    PhaseData p = build_phase(1, 2, {0, 0}, 1.0, 0.0);
    CHECK_NOTHROW(ContourSpec::validated(p, {8.0}, {0.5}));
    CHECK_THROWS_AS(ContourSpec::validated(p, {8.0}, {2.0}), std::invalid_argument);
}

TEST_CASE("gamma oracle") {
    CHECK(std::abs(gamma_lanczos(1.0) - 1.0) < 1e-13);
    CHECK(std::abs(gamma_lanczos(5.0) - 24.0) < 1e-12);
    CHECK(std::abs(gamma_lanczos(0.5) - std::sqrt(M_PI)) < 1e-13);
    // complex argument sanity: |Gamma(1+i)| = sqrt(pi / sinh(pi))
    std::complex<double> g = gamma_lanczos(std::complex<double>(1.0, 1.0));
    CHECK(std::abs(std::abs(g) - std::sqrt(M_PI / std::sinh(M_PI))) < 1e-12);
}

TEST_CASE("gamma identity residuals") {
    // nu = -1: Gamma(1) = 1; nu = -2: Gamma(2) = 1; hbar scaling hbar^{-nu}
    CHECK(gamma_identity_check({-1.0, 0.0}, 1.0) < 1e-10);
    CHECK(gamma_identity_check({-2.0, 0.0}, 1.0) < 1e-10);
    CHECK(gamma_identity_check({-1.0, 0.0}, 2.0) < 1e-10);
    CHECK_THROWS_AS(gamma_identity_check({0.5, 0.0}, 1.0), std::invalid_argument);
}

TEST_CASE("bessel oracle") {
    // frozen reference and the half-integer closed form
    CHECK(std::abs(bessel_k(0.0, 2.0).real() - 0.11389387274953343) < 1e-10);
    double k_half = std::sqrt(M_PI / 2.0) * std::exp(-1.0);
    CHECK(std::abs(bessel_k(0.5, 1.0).real() - k_half) < 1e-10);
    // symmetry in the order
    CHECK(std::abs(bessel_k(0.7, 1.3) - bessel_k(-0.7, 1.3)) < 1e-12);
    // independent series cross-check at small argument
    CHECK(std::abs(bessel_k(0.0, 0.1).real() - bessel_k0_series(0.1)) < 1e-10);
    CHECK(std::abs(bessel_k(0.0, 0.5).real() - bessel_k0_series(0.5)) < 1e-10);
}

TEST_CASE("whittaker integral (1,2) equals the Bessel value") {
    QuadratureResult r = evaluate_whittaker(1, 2, {0.0, 0.0}, 1.0, 0.0, 1e-9);
    CHECK(std::abs(r.value.real() - 0.22778774549906685) <
          1e-8 * 0.2278);
    CHECK(std::abs(r.value.imag()) < 1e-10);
    CHECK(r.abs_error < 1e-8);
    CHECK(r.evaluations > 0);
}

TEST_CASE("whittaker integral parametric identity") {
    // value = e^{i l2 x} e^{i nu x / 2} 2 K_{i nu}(2 e^{-x/2} / hbar), nu = l1 - l2
    for (double nu : {0.0, 0.5}) {
        for (double x : {0.0, 1.0}) {
            QuadratureResult r = evaluate_whittaker(1, 2, {nu, 0.0}, 1.0, x, 1e-9);
            std::complex<double> want =
                std::exp(std::complex<double>(0.0, nu * x / 2)) * 2.0 *
                bessel_k(std::complex<double>(0.0, nu), 2.0 * std::exp(-x / 2));
            INFO("nu=", nu, " x=", x);
            CHECK(std::abs(r.value - want) <= 1e-7 * std::max(std::abs(want), 1.0));
        }
    }
}

TEST_CASE("lambda shift covariance") {
    double c = 0.7, x = 0.5;
    QuadratureResult a = evaluate_whittaker(1, 2, {0.3, -0.2}, 1.0, x, 1e-9);
    QuadratureResult b = evaluate_whittaker(1, 2, {0.3 + c, -0.2 + c}, 1.0, x, 1e-9);
    std::complex<double> want = a.value * std::exp(std::complex<double>(0.0, c * x));
    CHECK(std::abs(b.value - want) < 1e-7 * std::abs(want));
}

TEST_CASE("quadrature determinism") {
    QuadratureResult a = evaluate_whittaker(1, 3, {0, 0, 0}, 1.0, 0.0, 1e-7);
    QuadratureResult b = evaluate_whittaker(1, 3, {0, 0, 0}, 1.0, 0.0, 1e-7);
    CHECK(a.value.real() == b.value.real());
    CHECK(a.value.imag() == b.value.imag());
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("two refinement policies agree") {
    QuadraturePolicy trap{};
    QuadraturePolicy mid{.h0 = 0.8, .t0 = 10.0, .midpoint = true};
    QuadratureResult a = evaluate_whittaker(1, 3, {0, 0, 0}, 1.0, 0.0, 1e-8, trap);
    QuadratureResult b = evaluate_whittaker(1, 3, {0, 0, 0}, 1.0, 0.0, 1e-8, mid);
    CHECK(std::abs(a.value - b.value) < 1e-6);
}

TEST_CASE("budget error carries the best estimate") {
    QuadraturePolicy tiny{.max_levels = 1, .max_evaluations = 100000};
    try {
        evaluate_whittaker(2, 4, {0, 0, 0, 0}, 1.0, 0.0, 1e-10, tiny);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.best.evaluations >= 0);
    }
    CHECK_THROWS_AS(evaluate_whittaker(1, 6, {0, 0, 0, 0, 0, 0}, 1.0, 0.0, 1e-8),
                    std::invalid_argument);
    CHECK_THROWS_AS(evaluate_whittaker(1, 2, {0, 0}, 1.0, 0.0, 1e-14), std::invalid_argument);
}
