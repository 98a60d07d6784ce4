#include "doctest.h"
#include "oracles.hpp"

#include "rlwstab/errors.hpp"
#include "rlwstab/floquet.hpp"
#include "rlwstab/linalg.hpp"

using namespace rlwstab;
using cplx = std::complex<double>;

TEST_CASE("tau grid")
{
    const auto t = floquet::default_tau_grid(200);
    REQUIRE(t.size() == 200);
    for (std::size_t i = 0; i < t.size(); ++i)
        CHECK(t[i] == doctest::Approx(-t[t.size() - 1 - i]).epsilon(1e-15));
    CHECK(t.front() > -0.5);
}

TEST_CASE("collocation matrix structure")
{
    const auto w = rbou::make_wave({-2.034, 0.7131, 1});
    floquet::SpectrumRequest req{w, 12, {0.1}};
    const auto A = floquet::build_collocation_matrix(req, 0.1);
    REQUIRE(A.rows() == 2 * (2 * 12 + 1));
    CHECK(A.real().cwiseAbs().maxCoeff() == 0.0);

    // (1,2) block is the multiplier ik̃/(1 + k̃²)
    const int n = 25;
    for (int k : {-3, 0, 5}) {
        const double kt = 2 * oracle::pi * (k + 0.1) / w.T;
        const cplx z = A(k + 12, n + k + 12);
        CHECK(z.imag() == doctest::Approx(kt / (1 + kt * kt)).epsilon(1e-13));
    }
}

TEST_CASE("spectrum of a wave whose profile vanishes")
{
    // u ≡ 0: each mode gives λ = ik̃(c ± 1/√(1+k̃²))
    const auto w = rbou::make_wave({-2.034, 0.7131, 1});
    const double c = w.c, T = w.T;
    const int Nk = 10;
    const double tau = 0.23;
    floquet::SpectrumRequest req{w, Nk, {tau}, false};
    Eigen::MatrixXcd A = floquet::build_collocation_matrix(req, tau);
    // strip the u-dependence: rebuild the (2,1) block as ik̃ only
    for (int k = -Nk; k <= Nk; ++k)
        for (int j = -Nk; j <= Nk; ++j)
            A(2 * Nk + 1 + k + Nk, j + Nk) = k == j ? cplx(0, 2 * oracle::pi * (k + tau) / T) : cplx(0);
    auto ev = linalg::eigenvalues(A);
    CHECK(std::all_of(ev.begin(), ev.end(), [](cplx z) { return std::abs(z.real()) < 1e-12; }));
    std::vector<double> want;
    for (int k = -Nk; k <= Nk; ++k) {
        const double kt = 2 * oracle::pi * (k + tau) / T;
        want.push_back(kt * (c + 1 / std::sqrt(1 + kt * kt)));
        want.push_back(kt * (c - 1 / std::sqrt(1 + kt * kt)));
    }
    std::vector<double> got;
    for (auto z : ev)
        got.push_back(z.imag());
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    for (std::size_t i = 0; i < got.size(); ++i)
        CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12).scale(1));
}

TEST_CASE("dual path coefficients for all figure waves")
{
    for (floquet::WaveVariant w : {floquet::WaveVariant(rbou::make_wave({-0.7872, -0.006403, 1})),
                                   floquet::WaveVariant(bl::make_wave({0.6872, 1.584})),
                                   floquet::WaveVariant(bbm::make_wave({3, 15.97, -1.5}))})
        CHECK(floquet::dual_path_defect(w) < 1e-8);
}

TEST_CASE("small spectra: symmetry, gap offset, band axis")
{
    const auto g2 = rbou::make_wave({-1.246, -1.149, 1});
    const auto s = floquet::compute_spectrum({g2, 60, floquet::default_tau_grid(8)}, 2);
    CHECK(s.points.size() == 8u * 2 * (2 * 60 + 1));
    CHECK(floquet::symmetry_defect(s) < 1e-6);
    for (std::size_t i = 1; i < s.points.size(); ++i)
        CHECK(s.points[i - 1].lambda.imag() <= s.points[i].lambda.imag());
    CHECK(floquet::top_decile_mean_abs_real(s) == doctest::Approx(0.4548).epsilon(0.02));

    const auto curve = floquet::asymptote(g2, true);
    CHECK(curve.off_axis);
    CHECK(curve.lambda1.real() == 0.0);
    CHECK(curve.lambda1.imag() == doctest::Approx(2 * oracle::pi * g2.c / g2.T));

    const auto b3 = rbou::make_wave({-2.034, 0.7131, 1});
    CHECK_THROWS_AS(floquet::asymptote(b3, true), DomainError);
    const auto sb = floquet::compute_spectrum({b3, 60, floquet::default_tau_grid(8)}, 2);
    CHECK(floquet::max_abs_real_above(sb, 1.0) <= 1e-6);
}

TEST_CASE("BBM asymptote coefficients")
{
    const auto w = bbm::make_wave({3, 0, -2});
    const auto a = floquet::asymptote(w);
    CHECK(a.off_axis);
    CHECK(std::abs(a.lambda_minus1[0].real()) == doctest::Approx(3.56).epsilon(0.01 / 3.56));
    CHECK(a.lambda1.imag() == doctest::Approx(4.25).epsilon(0.01 / 4.25));
    CHECK(std::abs(a.lambda_minus1[0].real()) ==
          doctest::Approx(3 * w.T / oracle::pi * std::sqrt(0.70875)).epsilon(1e-4));

    const auto b = floquet::asymptote(bbm::make_wave({3, 15.97, -1.5}));
    CHECK(std::abs(b.lambda_minus1[0].real()) == doctest::Approx(1.80099).epsilon(1e-3));
    CHECK(b.lambda1.imag() == doctest::Approx(4.44989).epsilon(1e-3));
    CHECK(std::abs(b.lambda_minus1[0].imag()) == doctest::Approx(18.4791).epsilon(1e-3));

    const auto stable = floquet::asymptote(bbm::make_wave({4, 0, 0}));
    CHECK_FALSE(stable.off_axis);
    CHECK(stable.lambda_minus1[0].real() == 0.0);
}

TEST_CASE("BBM isolated loops")
{
    const auto s = floquet::compute_spectrum({bbm::make_wave({3, 0, -2}), 100, floquet::default_tau_grid(40)}, 2);
    for (cplx center : {cplx(1.47, 1.39), cplx(-1.47, 1.39), cplx(1.47, -1.39), cplx(-1.47, -1.39)}) {
        double best = 1e300;
        for (const auto& p : s.points)
            best = std::min(best, std::abs(p.lambda - center));
        CAPTURE(center);
        CHECK(best < 0.15);
    }
    const auto r = floquet::asymptote_residual(s, floquet::asymptote(bbm::make_wave({3, 0, -2})), 20);
    CHECK(r.re_exponent > -1.3);
    CHECK(r.re_exponent < -0.7);
    CHECK_THROWS_AS(floquet::asymptote_residual(s, floquet::asymptote(bbm::make_wave({3, 0, -2})), 10000),
                    NumericalError);
}
