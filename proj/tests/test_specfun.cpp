#include <doctest.h>

#include <stdexcept>

#include <zkern/quadrature.hpp>
#include <zkern/specfun.hpp>

#include <cmath>
#include <complex>
#include <random>

using namespace zkern;

TEST_SUITE("specfun.erf")
{
    TEST_CASE("pinned values")
    {
        CHECK(zkern::erf(0.0) == 0.0);
        CHECK(std::abs(zkern::erf(1.0) - 0.84270079294971486934) <= 1e-15);
        CHECK(std::abs(zkern::erf(6.0) - 1.0) <= 1e-14);
    }

    TEST_CASE("odd to the last bit")
    {
        std::mt19937 rng(100);
        std::uniform_real_distribution<double> u(-6.0, 6.0);
        for (int i = 0; i < 100; ++i) {
            double x = u(rng);
            CHECK(zkern::erf(-x) == -zkern::erf(x));
        }
    }
}

TEST_SUITE("specfun.gaussian_tail")
{
    TEST_CASE("leading term at zeta 3")
    {
        double want = 1.0 - std::exp(-9.0) / 6.0;
        CHECK(std::abs(gaussian_det_asymptotic(3.0, 0) - want) <= 1e-15);
    }

    TEST_CASE("matches the closed-form determinant at zeta 3")
    {
        // rank-one determinant of the half-line operator: 1 - int_z^inf exp(-x^2) dx
        double truth = 1.0 - std::sqrt(M_PI) / 2.0 * (1.0 - zkern::erf(3.0));
        CHECK(std::abs(gaussian_det_asymptotic(3.0, 0) - truth) <= 2e-6);
        CHECK(std::abs(gaussian_det_asymptotic(3.0, 3) - truth) <= 1e-6);
        CHECK(std::abs(gaussian_det_asymptotic(3.0, 3) - truth) <=
              std::abs(gaussian_det_asymptotic(3.0, 0) - truth));
    }

    TEST_CASE("stays finite where the series diverges")
    {
        double v = gaussian_det_asymptotic(0.1, 5);
        CHECK(std::isfinite(v));
    }

    TEST_CASE("rejects bad arguments")
    {
        CHECK_THROWS_AS((void)gaussian_det_asymptotic(0.0, 2), std::domain_error);
        CHECK_THROWS_AS((void)gaussian_det_asymptotic(-1.0, 2), std::domain_error);
        CHECK_THROWS_AS((void)gaussian_det_asymptotic(3.0, -1), std::domain_error);
    }
}

TEST_SUITE("specfun.airy")
{
    TEST_CASE("values at the origin")
    {
        auto p = airy(0.0);
        CHECK(std::abs(p.Ai - 0.3550280538878172) <= 1e-15);
        CHECK(std::abs(p.AiPrime + 0.2588194037928068) <= 1e-15);
    }

    TEST_CASE("pinned values across the three evaluation regimes")
    {
        CHECK(std::abs(airy(1.0).Ai - 0.13529241631288141552) <= 1e-14);
        CHECK(std::abs(airy(1.0).AiPrime + 0.15914744129679321279) <= 1e-14);
        CHECK(std::abs(airy(-5.0).Ai - 0.35076100902411431979) <= 1e-12);
        CHECK(std::abs(airy(10.0).Ai - 1.1047532552898685934e-10) <= 1e-22);
        CHECK(std::abs(airy(20.0).Ai - 1.6916728686705403136e-27) <= 1e-39);
    }

    TEST_CASE("decay envelope at x = 10")
    {
        double x = 10.0;
        double envelope = std::exp(-2.0 / 3.0 * std::pow(x, 1.5)) /
                          (2.0 * std::sqrt(M_PI) * std::pow(x, 0.25));
        double ratio = std::abs(airy(x).Ai) / envelope;
        CHECK(ratio >= 0.5);
        CHECK(ratio <= 2.0);
    }

    TEST_CASE("second derivative matches x Ai(x) on [-5, 5]")
    {
        double h = 1e-4;
        for (double x = -5.0; x <= 5.0 + 1e-12; x += 0.25) {
            double fd = (airy(x + h).AiPrime - airy(x - h).AiPrime) / (2.0 * h);
            CHECK(std::abs(fd - x * airy(x).Ai) <= 1e-6);
        }
    }

    TEST_CASE("series and asymptotic branches agree at the positive switchover")
    {
        auto lo = airy(8.0);
        auto hi = airy(std::nextafter(8.0, 9.0));
        CHECK(std::abs(lo.Ai - hi.Ai) <= 1e-12);
        CHECK(std::abs(lo.AiPrime - hi.AiPrime) <= 1e-12);
    }

    TEST_CASE("series and asymptotic branches agree at the negative switchover")
    {
        auto lo = airy(std::nextafter(-12.0, -13.0));
        auto hi = airy(-12.0);
        CHECK(std::abs(lo.Ai - hi.Ai) <= 1e-11);
        CHECK(std::abs(lo.AiPrime - hi.AiPrime) <= 1e-11);
    }
}

TEST_SUITE("specfun.bessel")
{
    TEST_CASE("values at the origin")
    {
        CHECK(bessel_j(0.0, 0.0) == 1.0);
        CHECK(bessel_j(1.0, 0.0) == 0.0);
        CHECK(bessel_j(2.5, 0.0) == 0.0);
    }

    TEST_CASE("half-integer order closed form")
    {
        CHECK(std::abs(bessel_j(0.5, 1.0) - 0.67139670714180309042) <= 1e-14);
        for (double x : {0.3, 2.0, 9.0, 25.0}) {
            double want = std::sqrt(2.0 / (M_PI * x)) * std::sin(x);
            CHECK(std::abs(bessel_j(0.5, x) - want) <= 1e-12);
        }
    }

    TEST_CASE("three-term recurrence holds across the series and recurrence regimes")
    {
        for (double nu : {0.75, 1.0, 2.5, 7.0}) {
            for (double x = 0.5; x <= 50.0 + 1e-9; x += 1.375) {
                double lhs = bessel_j(nu - 1.0, x) + bessel_j(nu + 1.0, x);
                double rhs = 2.0 * nu / x * bessel_j(nu, x);
                CHECK(std::abs(lhs - rhs) <= 1e-9);
            }
        }
    }

    TEST_CASE("rejects out-of-range arguments")
    {
        CHECK_THROWS_AS((void)bessel_j(-0.5, 1.0), std::domain_error);
        CHECK_THROWS_AS((void)bessel_j(-1.0, 1.0), std::domain_error);
        CHECK_THROWS_AS((void)bessel_j(0.5, -1.0), std::domain_error);
    }
}

TEST_SUITE("specfun.ln_gamma")
{
    using cplx = std::complex<double>;

    TEST_CASE("pinned values")
    {
        CHECK(std::abs(ln_gamma(cplx(1.0, 0.0))) <= 1e-15);
        CHECK(std::abs(ln_gamma(cplx(2.0, 0.0))) <= 1e-14);
        double mod = std::abs(std::exp(ln_gamma(cplx(1.0, 1.0))));
        CHECK(std::abs(mod - 0.52156404686493984116) <= 1e-14);
    }

    TEST_CASE("reflection product on the imaginary direction")
    {
        // Gamma(1+ia) Gamma(1-ia) = pi a / sinh(pi a)
        for (double a : {0.3, 1.0, 2.0}) {
            cplx prod = std::exp(ln_gamma(cplx(1.0, a)) + ln_gamma(cplx(1.0, -a)));
            double want = M_PI * a / std::sinh(M_PI * a);
            CHECK(std::abs(prod - want) <= 1e-12 * want);
        }
    }

    TEST_CASE("functional equation on random points in the working band")
    {
        std::mt19937 rng(2024);
        std::uniform_real_distribution<double> re(0.5, 11.0);
        std::uniform_real_distribution<double> im(-10.0, 10.0);
        for (int i = 0; i < 100; ++i) {
            cplx z(re(rng), im(rng));
            cplx ratio = std::exp(ln_gamma(z + 1.0) - ln_gamma(z));
            CHECK(std::abs(ratio - z) <= 1e-12 * std::abs(z));
        }
    }

    TEST_CASE("throws at the poles")
    {
        CHECK_THROWS_AS((void)ln_gamma(cplx(0.0, 0.0)), std::domain_error);
        CHECK_THROWS_AS((void)ln_gamma(cplx(-1.0, 0.0)), std::domain_error);
        CHECK_THROWS_AS((void)ln_gamma(cplx(-7.0, 0.0)), std::domain_error);
    }
}
