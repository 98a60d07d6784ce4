#include "doctest.h"
#include "oracles.hpp"

#include "rlwstab/elliptic.hpp"
#include "rlwstab/errors.hpp"

#include <limits>
#include <random>

using namespace rlwstab;
using elliptic::Parameter;

TEST_CASE("parameter rejects the closed endpoints")
{
    CHECK_THROWS_AS(Parameter(0.0), DomainError);
    CHECK_THROWS_AS(Parameter(1.0), DomainError);
    CHECK_THROWS_AS(Parameter(-0.2), DomainError);
    CHECK_THROWS_AS(Parameter(std::numeric_limits<double>::quiet_NaN()), DomainError);
    CHECK(Parameter(0.3).complement() == doctest::Approx(0.7));
}

TEST_CASE("K and E against theta quadrature and Boost")
{
    for (double m : {1e-8, 0.1, 0.5, 0.9, 0.9568, 0.995, 0.999999}) {
        CAPTURE(m);
        CHECK(elliptic::complete_K(Parameter(m)) == doctest::Approx(oracle::K(m)).epsilon(1e-13));
        CHECK(elliptic::complete_E(Parameter(m)) == doctest::Approx(oracle::E(m)).epsilon(1e-13));
        // Boost takes k = √m; near m = 1 the rounding of k costs digits in K
        const double tol = m > 0.99 ? 1e-10 : 1e-13;
        CHECK(elliptic::complete_K(Parameter(m)) == doctest::Approx(oracle::K_boost(m)).epsilon(tol));
        CHECK(elliptic::complete_E(Parameter(m)) == doctest::Approx(oracle::E_boost(m)).epsilon(tol));
    }
    CHECK(elliptic::complete_K(Parameter(0.5)) == doctest::Approx(1.854074677301372).epsilon(1e-14));
    CHECK(elliptic::complete_E(Parameter(0.5)) == doctest::Approx(1.350643881047676).epsilon(1e-14));
    CHECK(elliptic::complete_K(Parameter(1e-12)) == doctest::Approx(oracle::pi / 2).epsilon(1e-11));
    CHECK(elliptic::complete_E(Parameter(1 - 1e-15)) == doctest::Approx(1.0).epsilon(1e-12));
    // K increasing in m
    CHECK(elliptic::complete_K(Parameter(0.9568)) > elliptic::complete_K(Parameter(0.9)));
}

TEST_CASE("Legendre relation")
{
    for (double m : {0.05, 0.3, 0.5, 0.77, 0.98}) {
        const Parameter p(m), pc(1 - m);
        const double K = elliptic::complete_K(p), E = elliptic::complete_E(p);
        const double Kc = elliptic::complete_K(pc), Ec = elliptic::complete_E(pc);
        CHECK(E * Kc + Ec * K - K * Kc == doctest::Approx(oracle::pi / 2).epsilon(1e-14));
    }
}

TEST_CASE("sn cn dn against Boost, identities, special values")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> um(1e-6, 1 - 1e-6), ux(-200.0, 200.0);
    double worst = 0.0, worst_id = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double m = um(rng), x = ux(rng);
        const auto r = elliptic::jacobi_sn_cn_dn(x, Parameter(m));
        const auto o = oracle::jacobi(x, m);
        worst = std::max({worst, std::abs(r.sn - o.sn), std::abs(r.cn - o.cn), std::abs(r.dn - o.dn)});
        worst_id = std::max({worst_id, std::abs(r.sn * r.sn + r.cn * r.cn - 1),
                             std::abs(r.dn * r.dn + m * r.sn * r.sn - 1)});
    }
    CHECK(worst < 1e-11);
    CHECK(worst_id < 1e-14);

    const auto z = elliptic::jacobi_sn_cn_dn(0.0, Parameter(0.4));
    CHECK(z.sn == 0.0);
    CHECK(z.cn == 1.0);
    CHECK(z.dn == 1.0);
    for (double m : {0.1, 0.5, 0.95}) {
        const double K = elliptic::complete_K(Parameter(m));
        const auto q = elliptic::jacobi_sn_cn_dn(K, Parameter(m));
        CHECK(q.sn == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(q.cn) < 1e-7); // cn vanishes linearly; sn is flat there
        CHECK(q.dn == doctest::Approx(std::sqrt(1 - m)).epsilon(1e-12));
    }
}

TEST_CASE("mean of sn^2")
{
    CHECK(elliptic::mean_M(Parameter(1e-9)) == doctest::Approx(0.5).epsilon(1e-8));
    // no cancellation at small m (reference value from 40-digit arithmetic)
    CHECK(elliptic::mean_M(Parameter(1e-6)) == doctest::Approx(0.50000006250003125002).epsilon(1e-15));
    for (double m : {0.01, 0.4, 0.9})
        CHECK(elliptic::mean_M(Parameter(m)) ==
              doctest::Approx((oracle::K(m) - oracle::E(m)) / (m * oracle::K(m))).epsilon(1e-12));
    const double K = oracle::K(0.5);
    const double direct = oracle::mean([](double x) { return oracle::sn2(x, 0.5); }, 2 * K);
    CHECK(elliptic::mean_M(Parameter(0.5)) == doctest::Approx(direct).epsilon(1e-12));
    // 1 + m − 3mM changes sign near 0.961
    const double m = 0.961;
    CHECK(std::abs(1 + m - 3 * m * elliptic::mean_M(Parameter(m))) < 5e-3);
}

TEST_CASE("nome")
{
    CHECK(elliptic::nome(Parameter(0.5)) == doctest::Approx(std::exp(-oracle::pi)).epsilon(1e-14));
    CHECK(elliptic::nome(Parameter(0.5)) == doctest::Approx(0.0432139).epsilon(1e-6));
    for (double m : {0.2, 0.9}) {
        const double q = std::exp(-oracle::pi * oracle::K(1 - m) / oracle::K(m));
        CHECK(elliptic::nome(Parameter(m)) == doctest::Approx(q).epsilon(1e-13));
    }
}

TEST_CASE("sn^2 Fourier series")
{
    const double m = 0.9568;
    const auto s = elliptic::sn2_fourier(Parameter(m), 64);
    CHECK(s.mean == doctest::Approx(elliptic::mean_M(Parameter(m))).epsilon(1e-15));
    CHECK_FALSE(s.truncation_warning);
    const double K = oracle::K(m);
    double worst = 0.0;
    for (int j = 0; j < 512; ++j) {
        const double x = 2 * K * j / 512;
        worst = std::max(worst, std::abs(s(x) - oracle::sn2(x, m)));
    }
    CHECK(worst < 1e-9);
    CHECK(std::abs(s(0.0)) < 1e-12);
    // coefficients against trapezoid DFT of Boost's sn²
    for (int k = 1; k <= 20; ++k) {
        const double a = oracle::cosine_coefficient([m](double x) { return oracle::sn2(x, m); }, 2 * K, k);
        CHECK(s.coefficients[static_cast<std::size_t>(k - 1)] == doctest::Approx(a).epsilon(1e-10).scale(1e-3));
    }
    for (std::size_t k = 4; k + 1 < s.coefficients.size(); ++k)
        CHECK(std::abs(s.coefficients[k + 1]) < std::abs(s.coefficients[k]));
}
