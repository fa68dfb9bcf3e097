#include <doctest.h>

#include <stdexcept>

#include <zkern/kernels.hpp>
#include <zkern/specfun.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <random>

using namespace zkern;
using cplx = std::complex<double>;

namespace {

double mnorm(const Eigen::Matrix2cd& m) { return m.cwiseAbs().maxCoeff(); }

cplx random_psi(std::mt19937& rng)
{
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    return {u(rng), u(rng)};
}

std::string write_temp_csv(const char* tag, const std::string& body)
{
    std::string path = std::string("/tmp/zkern_test_") + tag + ".csv";
    std::ofstream out(path);
    out << body;
    return path;
}

}  // namespace

TEST_SUITE("kernels.jmodule")
{
    TEST_CASE("signature matrix")
    {
        Eigen::Matrix2cd J = jmatrix();
        CHECK(J(0, 0) == cplx(-1.0, 0.0));
        CHECK(J(1, 1) == cplx(1.0, 0.0));
        CHECK(J(0, 1) == cplx(0.0, 0.0));
        CHECK(J(1, 0) == cplx(0.0, 0.0));
    }

    TEST_CASE("trivial module at psi = 0")
    {
        auto m = zclass_jmodule(0.0);
        Eigen::Matrix2cd I = Eigen::Matrix2cd::Identity();
        CHECK(mnorm(m.R - I) == 0.0);
        CHECK(mnorm(m.Rsq - I) == 0.0);
        CHECK(mnorm(m.Rinv - I) == 0.0);
        CHECK(mnorm(m.D) == 0.0);
    }

    TEST_CASE("worked half case")
    {
        auto m = zclass_jmodule(cplx(0.5, 0.0));
        CHECK(m.R(0, 0) == cplx(0.5, 0.0));
        CHECK(m.R(0, 1) == cplx(0.5, 0.0));
        CHECK(m.R(1, 0) == cplx(-0.5, 0.0));
        CHECK(m.R(1, 1) == cplx(1.5, 0.0));
        Eigen::Matrix2cd n = m.R - Eigen::Matrix2cd::Identity();
        CHECK(mnorm(n * n) <= 1e-16);
    }

    TEST_CASE("algebraic identities on random symbols")
    {
        std::mt19937 rng(11);
        Eigen::Matrix2cd I = Eigen::Matrix2cd::Identity();
        Eigen::Matrix2cd J = jmatrix();
        for (int i = 0; i < 50; ++i) {
            auto m = zclass_jmodule(random_psi(rng));
            Eigen::Matrix2cd n = m.R - I;
            CHECK(mnorm(n * n) <= 1e-13);
            CHECK(std::abs(m.R.determinant() - 1.0) <= 1e-13);
            CHECK(mnorm(m.Rsq - m.R * m.R) <= 1e-13);
            CHECK(mnorm(m.Rinv * m.R - I) <= 1e-13);
            CHECK(mnorm(J * m.R - m.R.adjoint() * J) <= 1e-13);
            CHECK(mnorm(m.D - J * (m.R - m.Rinv)) <= 1e-13);
            // D is Hermitian with nonnegative trace
            CHECK(mnorm(m.D - m.D.adjoint()) <= 1e-13);
            CHECK(m.D.trace().real() >= -1e-13);
            // R J R^* - J is positive semidefinite
            Eigen::Matrix2cd gram = m.R * J * m.R.adjoint() - J;
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(gram);
            CHECK(es.eigenvalues().minCoeff() >= -1e-12);
        }
    }

    TEST_CASE("rejects non-finite symbols")
    {
        CHECK_THROWS_AS((void)zclass_jmodule(cplx(HUGE_VAL, 0.0)), std::domain_error);
        CHECK_THROWS_AS((void)zclass_jmodule(cplx(0.0, NAN)), std::domain_error);
    }
}

TEST_SUITE("kernels.f1")
{
    TEST_CASE("full-coupling value at the origin")
    {
        auto p = sine_profile(1.0);
        Eigen::Vector2cd v = f1_vector(p, 0.0);
        CHECK(std::abs(v(0) - cplx(0.0, 1.0)) <= 1e-15);
        CHECK(std::abs(v(1) - cplx(0.0, 1.0)) <= 1e-15);
    }

    TEST_CASE("isotropy and dyad identities along the line")
    {
        auto p = sine_profile(0.7);
        Eigen::Matrix2cd J = jmatrix();
        std::mt19937 rng(21);
        std::uniform_real_distribution<double> u(-8.0, 8.0);
        for (int i = 0; i < 100; ++i) {
            double x = u(rng);
            Eigen::Vector2cd v = f1_vector(p, x);
            cplx iso = (v.adjoint() * J * v)(0);
            CHECK(std::abs(iso) <= 1e-13);

            cplx psi = 0.5 * p.phi(x) * p.phi(x);
            auto m = zclass_jmodule(psi);
            Eigen::Matrix2cd dyad = v * v.adjoint();
            CHECK(mnorm(dyad - J * (m.R - m.Rinv)) <= 1e-12);

            // normalized local factor {I + (1/4)(F* J F)^2}^{1/2} collapses to I
            double l = std::sqrt(1.0 + std::norm(iso) / 4.0);
            CHECK(std::abs(l - 1.0) <= 1e-13);
        }
    }

    TEST_CASE("requires a symbol-bearing profile and an in-domain point")
    {
        CHECK_THROWS_AS((void)f1_vector(gaussian_profile(), 1.0), std::domain_error);
        auto p = custom_profile([](double) { return 0.0; }, [](double) { return 0.0; },
                                [](double) { return 0.0; }, [](double) { return 0.0; },
                                0.0, 1.0);
        CHECK_THROWS_AS((void)f1_vector(p, 2.0), std::domain_error);
    }
}

TEST_SUITE("kernels.eval")
{
    TEST_CASE("sine closed form on and off the diagonal")
    {
        double g = 0.65;
        auto p = sine_profile(g);
        std::mt19937 rng(31);
        std::uniform_real_distribution<double> u(-4.0, 4.0);
        for (int i = 0; i < 50; ++i) {
            double x = u(rng), t = u(rng);
            if (std::abs(x - t) < 1e-6) continue;
            double want = -g * std::sin(x - t) / (M_PI * (x - t));
            CHECK(std::abs(kernel_eval(p, x, t) - want) <= 1e-13);
            CHECK(kernel_eval(p, x, t) == kernel_eval(p, t, x));
        }
        CHECK(std::abs(kernel_eval(p, 1.3, 1.3) + g / M_PI) <= 1e-15);
    }

    TEST_CASE("symbol modulus equals the coupling")
    {
        auto p = sine_profile(0.42);
        for (double x = -3.0; x <= 3.0; x += 0.37)
            CHECK(std::abs(std::norm(p.phi(x)) - 0.42) <= 1e-13);
    }

    TEST_CASE("gaussian values")
    {
        auto p = gaussian_profile();
        CHECK(kernel_eval(p, 0.0, 0.0) == 1.0);
        CHECK(std::abs(kernel_eval(p, 1.0, 1.0) - std::exp(-1.0)) <= 1e-15);
        CHECK(std::abs(kernel_eval(p, 0.5, 1.5) - std::exp(-(0.25 + 2.25) / 2.0)) <= 1e-15);
    }

    TEST_CASE("airy diagonal matches the derivative form")
    {
        auto p = airy_profile();
        for (double x : {-1.0, 0.0, 0.7, 2.0}) {
            auto ai = airy(x);
            double want = ai.AiPrime * ai.AiPrime - x * ai.Ai * ai.Ai;
            CHECK(std::abs(kernel_eval(p, x, x) - want) <= 1e-13);
        }
    }

    TEST_CASE("half-integer order reduces to a sine symbol")
    {
        auto p = bessel_profile(0.5, 1.0);
        for (double x : {0.4, 1.0, 2.7, 6.0}) {
            double want = std::sqrt(2.0 / x) * std::sin(x);
            CHECK(std::abs(p.A(x) - want) <= 1e-10);
        }
    }

    TEST_CASE("kernel is continuous up to the diagonal")
    {
        // off-diagonal value approaches the diagonal limit linearly in h
        for (auto& p : {sine_profile(0.8), bessel_sqrtarg_profile(0.7, 0.9)}) {
            double x = 1.3;
            double d = kernel_eval(p, x, x);
            double e4 = std::abs(kernel_eval(p, x, x + 1e-4) - d);
            double e5 = std::abs(kernel_eval(p, x, x + 1e-5) - d);
            CHECK(e4 <= 1e-3);
            CHECK(e5 <= 1.5e-5);
        }
    }

    TEST_CASE("factory guards")
    {
        CHECK_THROWS_AS((void)sine_profile(-0.1), std::domain_error);
        CHECK_THROWS_AS((void)sine_profile(1.5), std::domain_error);
        CHECK_NOTHROW((void)sine_profile(0.0));
        CHECK_THROWS_AS((void)bessel_profile(-0.5, 0.5), std::domain_error);
        CHECK_THROWS_AS((void)bessel_sqrtarg_profile(-0.6, 0.5), std::domain_error);
        CHECK_THROWS_AS((void)bessel_profile(0.5, 1.2), std::domain_error);
        CHECK_THROWS_AS((void)custom_profile([](double) { return 0.0; },
                                             [](double) { return 0.0; },
                                             [](double) { return 0.0; },
                                             [](double) { return 0.0; }, 1.0, 1.0),
                        std::domain_error);
    }
}

TEST_SUITE("kernels.csv_profile")
{
    TEST_CASE("interpolated profile reproduces a sampled symbol")
    {
        // dense samples of the full-coupling sine symbol
        std::string body = "x,A,B,Aprime,Bprime\n";
        char buf[160];
        for (int i = 0; i <= 120; ++i) {
            double x = 2.4 * i / 120.0;
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", x,
                          -std::sin(x), std::cos(x), -std::cos(x), -std::sin(x));
            body += buf;
        }
        auto path = write_temp_csv("profile_ok", body);
        auto p = custom_profile_csv(path);
        auto ref = sine_profile(1.0);
        for (double x : {0.11, 0.9, 1.57, 2.3}) {
            CHECK(std::abs(p.A(x) - ref.A(x)) <= 1e-6);
            CHECK(std::abs(kernel_eval(p, x, 0.4) - kernel_eval(ref, x, 0.4)) <= 1e-5);
        }
        std::remove(path.c_str());
    }

    TEST_CASE("rejects malformed files with the offending row")
    {
        auto bad_header = write_temp_csv("profile_h", "x,A,B\n0,0,0\n");
        CHECK_THROWS_WITH_AS((void)custom_profile_csv(bad_header),
                             "custom_profile_csv: expected header x,A,B,Aprime,Bprime",
                             std::runtime_error);
        std::remove(bad_header.c_str());

        auto bad_value = write_temp_csv(
            "profile_v", "x,A,B,Aprime,Bprime\n0,0,1,1,0\n0.5,oops,1,1,0\n");
        try {
            (void)custom_profile_csv(bad_value);
            CHECK(false);
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find("row 3") != std::string::npos);
        }
        std::remove(bad_value.c_str());

        auto not_ascending = write_temp_csv(
            "profile_a",
            "x,A,B,Aprime,Bprime\n0,0,1,1,0\n0.5,0,1,1,0\n0.4,0,1,1,0\n0.9,0,1,1,0\n");
        try {
            (void)custom_profile_csv(not_ascending);
            CHECK(false);
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find("row 4") != std::string::npos);
        }
        std::remove(not_ascending.c_str());

        auto too_short = write_temp_csv("profile_s", "x,A,B,Aprime,Bprime\n0,0,1,1,0\n");
        CHECK_THROWS_AS((void)custom_profile_csv(too_short), std::runtime_error);
        std::remove(too_short.c_str());

        CHECK_THROWS_AS((void)custom_profile_csv("/tmp/zkern_no_such_file.csv"),
                        std::runtime_error);
    }
}

TEST_SUITE("kernels.cd_forms")
{
    TEST_CASE("truncation scan at the origin")
    {
        CHECK(airy_truncation_length(0.0) == 9.5);
        CHECK(airy_truncation_length(5.0) < airy_truncation_length(0.0));
    }

    TEST_CASE("airy integral form matches the diagonal derivative form")
    {
        auto p = airy_profile();
        for (double x : {0.0, 1.0, 2.0})
            CHECK(std::abs(airy_cd(x, x) - kernel_eval(p, x, x)) <= 1e-8);
        CHECK(std::abs(airy_cd(0.3, 1.1) - kernel_eval(p, 0.3, 1.1)) <= 1e-8);
    }

    TEST_CASE("general integral form specializes to the airy kernel")
    {
        auto A = [](double u) { return std::sqrt(M_PI) * airy(u).Ai; };
        auto v = [](double u) { return u; };
        double got = general_cd(0.5, 1.2, A, v, airy_truncation_length(0.0) + 1.3);
        CHECK(std::abs(got - airy_cd(0.5, 1.2)) <= 1e-8);
    }

    TEST_CASE("general integral form rejects an undecayed truncation")
    {
        auto A = [](double u) { return std::sqrt(M_PI) * airy(u).Ai; };
        auto v = [](double u) { return u; };
        CHECK_THROWS_AS((void)general_cd(0.5, 1.2, A, v, 1.0), std::runtime_error);
    }

    TEST_CASE("bessel integral form is symmetric and positive on the diagonal")
    {
        for (double x : {0.5, 1.0, 3.0}) CHECK(bessel_cd(x, x, 0.4, 0.8) > 0.0);
        CHECK(std::abs(bessel_cd(1.0, 2.0, 0.4, 0.8) - bessel_cd(2.0, 1.0, 0.4, 0.8)) <=
              1e-14);
        CHECK_THROWS_AS((void)bessel_cd(-1.0, 2.0, 0.4, 0.8), std::domain_error);
    }
}
