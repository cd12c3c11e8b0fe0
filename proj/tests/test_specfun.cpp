#include "qcx/specfun.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gegenbauer.hpp>
#include <boost/math/special_functions/hermite.hpp>
#include <boost/math/special_functions/laguerre.hpp>
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace qcx;

namespace {

double horner(const std::vector<double>& c, double x) {
    double s = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
    return s;
}

double gk(const std::function<double(double)>& f, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-13);
}

}  // namespace

TEST_CASE("classical polynomials match Boost") {
    for (int n = 0; n <= 12; ++n) {
        for (double x : {-2.3, -0.4, 0.0, 0.7, 1.9}) {
            const double h = boost::math::hermite(n, x);
            CHECK(eval_poly(OrthoPolySpec::hermite(n, Norm::classical), x) ==
                  doctest::Approx(h).epsilon(1e-12).scale(1.0));
        }
        for (unsigned a : {0u, 1u, 5u}) {
            for (double x : {0.1, 1.3, 4.0, 9.5}) {
                const double l = boost::math::laguerre(n, a, x);
                CHECK(eval_poly(OrthoPolySpec::laguerre(n, a, Norm::classical), x) ==
                      doctest::Approx(l).epsilon(1e-11).scale(1.0));
            }
        }
        for (double lam : {0.5, 1.5, 3.0}) {
            for (double x : {-0.9, -0.2, 0.35, 0.8}) {
                const double g = boost::math::gegenbauer(n, lam, x);
                CHECK(eval_poly(OrthoPolySpec::gegenbauer(n, lam, Norm::classical), x) ==
                      doctest::Approx(g).epsilon(1e-11).scale(1.0));
            }
        }
    }
}

TEST_CASE("orthonormal families are orthonormal under their weights") {
    auto inner = [](const OrthoPolySpec& a, const OrthoPolySpec& b) {
        auto f = [&](double x) { return std::exp(log_weight(a, x)) * eval_poly(a, x) * eval_poly(b, x); };
        const double lo = std::isfinite(support_lo(a)) ? support_lo(a) : -std::numeric_limits<double>::infinity();
        const double hi = std::isfinite(support_hi(a)) ? support_hi(a) : std::numeric_limits<double>::infinity();
        return gk(f, lo, hi);
    };
    for (int n = 0; n <= 6; ++n) {
        for (int m = n; m <= 6; m += 2) {
            const double d = n == m ? 1.0 : 0.0;
            CHECK(inner(OrthoPolySpec::hermite(n), OrthoPolySpec::hermite(m)) == doctest::Approx(d).epsilon(1e-10));
            CHECK(inner(OrthoPolySpec::laguerre(n, 2.0), OrthoPolySpec::laguerre(m, 2.0)) ==
                  doctest::Approx(d).epsilon(1e-10));
            CHECK(inner(OrthoPolySpec::gegenbauer(n, 1.5), OrthoPolySpec::gegenbauer(m, 1.5)) ==
                  doctest::Approx(d).epsilon(1e-10));
        }
    }
}

TEST_CASE("classical squared norms") {
    const double lpi = std::log(std::numbers::pi);
    CHECK(log_norm_sq(OrthoPolySpec::hermite(4, Norm::classical)) ==
          doctest::Approx(4 * std::log(2.0) + std::log(24.0) + 0.5 * lpi));
    CHECK(log_norm_sq(OrthoPolySpec::laguerre(3, 1.5, Norm::classical)) ==
          doctest::Approx(std::lgamma(5.5) - std::log(6.0)));
}

TEST_CASE("monomial coefficients reproduce the orthonormal polynomials") {
    for (int n = 0; n <= 15; ++n) {
        const auto hc = hermite_coeffs(n);
        const auto lc = laguerre_coeffs(n, 2.5);
        REQUIRE(hc.size() == static_cast<std::size_t>(n + 1));
        for (double x : {-1.2, 0.3, 2.1}) {
            CHECK(horner(hc, x) == doctest::Approx(eval_poly(OrthoPolySpec::hermite(n), x)).epsilon(1e-9).scale(1.0));
            const double y = std::fabs(x) * 2.0;
            CHECK(horner(lc, y) ==
                  doctest::Approx(eval_poly(OrthoPolySpec::laguerre(n, 2.5), y)).epsilon(1e-9).scale(1.0));
        }
    }
}

TEST_CASE("zeros are sorted roots inside the support") {
    for (int n : {1, 5, 20, 60}) {
        for (const auto& s : {OrthoPolySpec::hermite(n), OrthoPolySpec::laguerre(n, 0.5),
                              OrthoPolySpec::gegenbauer(n, 2.0)}) {
            const auto z = zeros(s);
            REQUIRE(z.size() == static_cast<std::size_t>(n));
            for (std::size_t i = 0; i < z.size(); ++i) {
                if (i) CHECK(z[i] > z[i - 1]);
                CHECK(z[i] > support_lo(s));
                CHECK(z[i] < support_hi(s));
                const auto v = eval_poly_scaled(s, z[i]);
                // relative to the local size of the polynomial, measured by the derivative scale
                const auto v2 = eval_poly_scaled(s, z[i] * (1 + 1e-6) + 1e-6);
                CHECK(std::fabs(v.value()) <= 1e-4 * std::fabs(v2.value()) + 1e-300);
            }
        }
    }
    CHECK(zeros(OrthoPolySpec::hermite(0)).empty());
}

TEST_CASE("three-term recurrence of the classical Hermite family (property)") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double x = U(rng);
        for (int n = 1; n < 20; ++n) {
            const double hp = eval_poly(OrthoPolySpec::hermite(n + 1, Norm::classical), x);
            const double h = eval_poly(OrthoPolySpec::hermite(n, Norm::classical), x);
            const double hm = eval_poly(OrthoPolySpec::hermite(n - 1, Norm::classical), x);
            CHECK(hp == doctest::Approx(2 * x * h - 2 * n * hm).epsilon(1e-10).scale(std::fabs(2 * x * h) + 2 * n * std::fabs(hm)));
        }
    }
}

TEST_CASE("scaled evaluation survives high degree") {
    const auto v = eval_poly_scaled(OrthoPolySpec::laguerre(180, 0.0), 300.0);
    CHECK(std::isfinite(v.log_abs()));
    const auto w = eval_poly_scaled(OrthoPolySpec::hermite(150), 3.0);
    CHECK(std::isfinite(w.log_abs()));
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(validate(OrthoPolySpec::laguerre(2, -1.0)), std::invalid_argument);
    CHECK_THROWS_AS(validate(OrthoPolySpec::gegenbauer(2, -0.5)), std::invalid_argument);
    CHECK_THROWS_AS(validate(OrthoPolySpec::gegenbauer(2, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(validate(OrthoPolySpec::hermite(-1)), std::invalid_argument);
    CHECK_THROWS_AS(validate(OrthoPolySpec::hermite(kMaxDegree + 1)), std::invalid_argument);
}

TEST_CASE("gamma-family helpers") {
    for (double x : {0.3, 1.0, 2.5, 17.25}) {
        CHECK(digamma(x + 1.0) == doctest::Approx(digamma(x) + 1.0 / x).epsilon(1e-13));
        CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
    }
    CHECK(digamma(1.0) == doctest::Approx(-0.57721566490153286));
    CHECK(log_factorial(10) == doctest::Approx(std::log(3628800.0)));
    CHECK(log_binomial(10, 3) == doctest::Approx(std::log(120.0)));
}

TEST_CASE("Wigner 3j symbols") {
    CHECK(wigner3j(1, 1, 0, 0, 0, 0) == doctest::Approx(-1.0 / std::sqrt(3.0)));
    for (int j = 0; j <= 4; ++j)
        for (int m = -j; m <= j; ++m)
            CHECK(wigner3j(j, j, 0, m, -m, 0) == doctest::Approx(((j - m) % 2 ? -1.0 : 1.0) / std::sqrt(2.0 * j + 1)));
    CHECK(wigner3j(1, 1, 1, 0, 0, 0) == doctest::Approx(0.0));  // odd sum of l with m = 0
    CHECK(wigner3j(2, 2, 2, 1, 1, 1) == doctest::Approx(0.0));  // m's do not sum to zero
    // orthogonality: sum over m1, m2 of two symbols with equal j3 and m3
    const int j1 = 2, j2 = 3;
    for (int j3 = 1; j3 <= 5; ++j3) {
        for (int j3p = 1; j3p <= 5; ++j3p) {
            double s = 0.0;
            for (int m1 = -j1; m1 <= j1; ++m1)
                for (int m2 = -j2; m2 <= j2; ++m2) {
                    const int m3 = -m1 - m2;
                    if (std::abs(m3) > std::min(j3, j3p) || m3 != 0) continue;
                    s += wigner3j(j1, j2, j3, m1, m2, m3) * wigner3j(j1, j2, j3p, m1, m2, m3);
                }
            CHECK(s == doctest::Approx(j3 == j3p ? 1.0 / (2 * j3 + 1) : 0.0).epsilon(1e-12));
        }
    }
}
