#include "doctest.h"
#include "oracles.hpp"

#include "rlwstab/errors.hpp"
#include "rlwstab/rbou.hpp"

#include <random>

using namespace rlwstab;

TEST_CASE("admissible roots")
{
    CHECK_NOTHROW(rbou::check_roots({-1.246, -1.149, 1}));
    CHECK_THROWS_WITH_AS(rbou::check_roots({0.5, 0.5, 1}), doctest::Contains("alpha < beta"), DomainError);
    CHECK_THROWS_WITH_AS(rbou::check_roots({0, 1, 1}), doctest::Contains("beta < gamma"), DomainError);
    CHECK_THROWS_WITH_AS(rbou::check_roots({-3, -2, 1}), doctest::Contains("-3/2"), DomainError);
    CHECK_THROWS_AS(rbou::make_wave({0.5, 0.5, 1}), DomainError);
}

TEST_CASE("wave constants from the root formulas")
{
    const rbou::Roots r{-2.034, 0.7131, 1};
    const auto w = rbou::make_wave(r);
    const double s = r.alpha + r.beta + r.gamma;
    CHECK(w.c * w.c == doctest::Approx(1 + 2 * s / 3).epsilon(1e-14));
    CHECK(w.c * w.c == doctest::Approx(0.78607).epsilon(1e-5));
    CHECK(w.m.value() == doctest::Approx(0.094562).epsilon(1e-5));
    CHECK(w.E == doctest::Approx(r.alpha * r.beta * r.gamma / 3));
    CHECK(w.b_combo == doctest::Approx((r.alpha * r.beta + r.beta * r.gamma + r.alpha * r.gamma) / 3));
    const double a = std::sqrt((r.gamma - r.alpha) / (4 * s + 6));
    CHECK(w.a == doctest::Approx(a).epsilon(1e-14));
    CHECK(w.T == doctest::Approx(2 * oracle::K(w.m.value()) / a).epsilon(1e-13));
    CHECK(w.u(0) == doctest::Approx(r.gamma));
    CHECK(w.u(w.T / 2) == doctest::Approx(r.beta).epsilon(1e-13));
    CHECK(w.u(0.37) == doctest::Approx(w.u(-0.37)).epsilon(1e-15));

    const auto g2 = rbou::make_wave({-1.246, -1.149, 1});
    CHECK(g2.m.value() == doctest::Approx(0.95681).epsilon(1e-5));
    CHECK(rbou::make_wave(r, rbou::SpeedBranch::negative).c == doctest::Approx(-w.c));
}

TEST_CASE("profile solves the stationary equation; analytic and integrated coefficients agree")
{
    for (rbou::Roots r : {rbou::Roots{-2.034, 0.7131, 1}, rbou::Roots{-1.246, -1.149, 1},
                          rbou::Roots{-0.7872, -0.006403, 1}}) {
        const auto w = rbou::make_wave(r);
        CHECK(w.profile_residual() < 1e-9);
        const auto a = w.u_series(64), q = w.u_series_by_quadrature(64);
        double worst = 0.0;
        for (int k = 0; k <= 64; ++k)
            worst = std::max(worst, std::abs(a.cosine(k) - q.cosine(k)));
        CHECK(worst < 1e-8);
        // independent check of the analytic series against Boost's sn
        for (int k : {0, 1, 5})
            CHECK(a.cosine(k) == doctest::Approx(oracle::cosine_coefficient(
                                     [&](double x) { return r.gamma - (r.gamma - r.beta) * oracle::sn2(w.a * x, w.m.value()); },
                                     w.T, k)).epsilon(1e-10).scale(1e-3));
    }
}

TEST_CASE("v profile")
{
    const rbou::Roots r{-2.034, 0.7131, 1};
    const auto w = rbou::make_wave(r);
    const double b2 = 0.0;
    const auto u = w.u_series(64);
    const auto v = rbou::v_profile(w, b2, 64);
    // u + u² + cv + b₁ is constant, b₁ = b_combo + b₂c
    double lo = 1e300, hi = -1e300;
    for (int j = 0; j < 200; ++j) {
        const double x = w.T * j / 200;
        const double e = u(x) + u(x) * u(x) + w.c * v(x) + w.b_combo + b2 * w.c;
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    CHECK(hi - lo < 1e-8);
    CHECK(v(0.3) == doctest::Approx(v(-0.3)).epsilon(1e-12));

    // constant u: v = −cu₀ − b₂
    const CosineSeries flat(w.T, {0.4});
    const auto vflat = flat.scaled(-w.c, -0.25);
    CHECK(vflat(1.0) == doctest::Approx(-w.c * 0.4 - 0.25));
}

TEST_CASE("ell")
{
    CHECK(rbou::ell({-2.034, 0.7131, 1}) == doctest::Approx(18.0 / 3.034).epsilon(1e-14));
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.4, 1.0);
    int checked = 0;
    while (checked < 100) {
        double a = u(rng), b = u(rng);
        if (a > b)
            std::swap(a, b);
        const rbou::Roots r{a, b, 1.0};
        if (!(a < b && a + b + 1 > -1.5))
            continue;
        const auto w = rbou::make_wave(r);
        CHECK(rbou::ell(r) == doctest::Approx(4 + 4 * w.m.value() + 1 / (w.a * w.a)).epsilon(1e-12));
        ++checked;
    }
    double prev = 0.0;
    for (double alpha : {0.5, 0.9, 0.99, 0.999}) {
        const double l = rbou::ell({alpha - 1.0, alpha - 0.5, 1.0});
        (void)l;
        const double grow = rbou::ell({alpha, (alpha + 1) / 2, 1.0});
        CHECK(grow > prev);
        prev = grow;
    }
}
