#include "qcx/polyspread.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/hermite.hpp>
#include <boost/math/special_functions/laguerre.hpp>
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

using namespace qcx;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Rakhmanov densities from Boost's classical polynomials.
double hermite_rho(int n, double x) {
    if (std::fabs(x) > 40.0) return 0.0;
    const double h = boost::math::hermite(n, x);
    return std::exp(-x * x - n * std::log(2.0) - std::lgamma(n + 1.0)) * h * h / std::sqrt(kPi);
}

double laguerre_rho(int n, double a, double x) {
    if (x <= 0.0 || x > 1400.0) return 0.0;
    const double L = boost::math::laguerre(n, static_cast<unsigned>(a), x);
    return std::exp(a * std::log(x) - x + std::lgamma(n + 1.0) - std::lgamma(n + a + 1.0)) * L * L;
}

double gk_line(const std::function<double(double)>& f) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -kInf, kInf, 20, 1e-14);
}

double es_half(const std::function<double(double)>& f) {
    boost::math::quadrature::exp_sinh<double> es;
    return es.integrate(f, 1e-14);
}

}  // namespace

TEST_CASE("Hermite moments against Boost-based quadrature") {
    for (int n = 0; n <= 8; ++n) {
        for (int k = 0; k <= 6; ++k) {
            const double ref = gk_line([&](double x) { return std::pow(x, k) * hermite_rho(n, x); });
            CHECK(hermite_moment(n, k) == doctest::Approx(ref).epsilon(1e-10).scale(1e-12));
        }
        CHECK(hermite_stddev(n) * hermite_stddev(n) == doctest::Approx(hermite_moment(n, 2)).epsilon(1e-13));
    }
}

TEST_CASE("Hermite entropic moments: Bell route against two quadratures") {
    for (int n = 0; n <= 8; ++n) {
        for (int q = 2; q <= 4; ++q) {
            const double bell = hermite_entropic_moment(n, q, WqMethod::bell);
            const double ref = gk_line([&](double x) { return std::pow(hermite_rho(n, x), q); });
            CHECK(bell == doctest::Approx(ref).epsilon(1e-9));
            CHECK(bell == doctest::Approx(hermite_entropic_moment(n, q, WqMethod::quadrature)).epsilon(1e-8));
        }
    }
    // heavy cancellation near the cap
    for (const auto& [n, q] : {std::pair{20, 2}, std::pair{30, 2}, std::pair{20, 3}, std::pair{12, 5}, std::pair{2, 30}})
        CHECK(hermite_entropic_moment(n, q, WqMethod::bell) ==
              doctest::Approx(hermite_entropic_moment(n, q, WqMethod::quadrature)).epsilon(1e-10));
    CHECK_THROWS_AS(hermite_entropic_moment(31, 2, WqMethod::bell), std::invalid_argument);
    CHECK_THROWS_AS(hermite_entropic_moment(3, 2.5, WqMethod::bell), std::invalid_argument);
    CHECK_THROWS_AS(hermite_entropic_moment(3, 2, WqMethod::lauricella), std::invalid_argument);
}

TEST_CASE("Hermite closed values") {
    const double s = std::sqrt(2 * kPi);
    CHECK(hermite_renyi_length(0, 2) == doctest::Approx(s).epsilon(1e-12));
    CHECK(hermite_renyi_length(1, 2) == doctest::Approx(4.0 / 3.0 * s).epsilon(1e-12));
    CHECK(hermite_renyi_length(2, 2) == doctest::Approx(64.0 / 41.0 * s).epsilon(1e-12));
    CHECK(hermite_shannon_length(0) == doctest::Approx(std::sqrt(kPi * kE)).epsilon(1e-10));
    for (int n = 0; n <= 100; ++n) {
        CHECK(hermite_fisher(n).delta_x * hermite_stddev(n) == doctest::Approx(0.5).epsilon(1e-14));
    }
    CHECK_THROWS_AS(hermite_wq_asymptotic_constant(1.5), std::invalid_argument);
    CHECK(hermite_wq_asymptotic_constant(1.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Shannon bound dominates the Shannon length (property)") {
    for (int n = 0; n <= 20; ++n) {
        const double N = hermite_shannon_length(n);
        for (int k = 2; k <= 30; k += 2) CHECK(hermite_shannon_bound(n, k) >= N * (1 - 1e-10));
        CHECK(hermite_optimal_bound(n).bound >= N);
    }
    CHECK_THROWS_AS(hermite_shannon_bound(2, 3), std::invalid_argument);
}

TEST_CASE("optimal Hermite bound table") {
    const int k_opt[] = {2, 6, 8, 10, 12, 14, 16, 16, 18, 20, 22, 22, 24};
    const double c[] = {2.92, 4.54, 5.57, 6.40, 7.11, 7.75, 8.33, 8.86, 9.36, 9.83, 10.30, 10.70, 11.10};
    for (int n = 0; n <= 12; ++n) {
        const auto b = hermite_optimal_bound(n);
        CHECK(static_cast<int>(b.b) == k_opt[n]);
        // The reference 10.30 at n = 10 is off; an independent 50-digit evaluation gives 10.2738.
        if (n == 10)
            CHECK(b.bound == doctest::Approx(10.2738).epsilon(1e-5));
        else
            CHECK(std::fabs(b.bound - c[n]) <= 0.01);
    }
}

TEST_CASE("oscillator rescaling keeps dimensionless products") {
    const auto r = hermite_report(4, {2.0, 3.0});
    for (double lam : {0.25, 3.0}) {
        const auto o = oscillator_rescale(r, lam);
        CHECK(o.std_dev == doctest::Approx(r.std_dev / std::sqrt(lam)));
        CHECK(o.fisher_info.value * o.std_dev * o.std_dev == doctest::Approx(r.fisher_info.value * r.std_dev * r.std_dev));
        CHECK(o.shannon_length / o.renyi_lengths.at(2.0) == doctest::Approx(r.shannon_length / r.renyi_lengths.at(2.0)));
        CHECK(o.entropic_moments.at(2.0) * o.renyi_lengths.at(2.0) == doctest::Approx(1.0));
    }
    CHECK_THROWS_AS(oscillator_rescale(r, 0.0), std::invalid_argument);
}

TEST_CASE("Laguerre moments and standard deviation") {
    for (double a : {0.0, 1.0, 5.0}) {
        for (int n = 0; n <= 6; ++n) {
            for (int k = 0; k <= 4; ++k) {
                const double ref = es_half([&](double x) {
                    const double r = laguerre_rho(n, a, x);
                    return r == 0.0 ? 0.0 : std::pow(x, k) * r;
                });
                CHECK(laguerre_moment(n, a, k) == doctest::Approx(ref).epsilon(1e-10));
            }
            const double m1 = laguerre_moment(n, a, 1), m2 = laguerre_moment(n, a, 2);
            CHECK(laguerre_stddev(n, a) == doctest::Approx(std::sqrt(m2 - m1 * m1)).epsilon(1e-12));
            CHECK(m1 == doctest::Approx(2.0 * n + a + 1.0).epsilon(1e-13));
        }
    }
}

TEST_CASE("Laguerre Fisher information cases") {
    for (int n = 0; n <= 10; ++n) {
        CHECK(laguerre_fisher(n, 0.0).F.value == 4.0 * n + 1.0);
        CHECK(laguerre_fisher(n, 5.0).F.value == doctest::Approx(((2.0 * n + 1) * 5 + 1) / 24.0).epsilon(1e-15));
        for (double a : {-0.5, 0.5, 1.0}) {
            const auto f = laguerre_fisher(n, a);
            CHECK(f.F.divergent);
            CHECK(f.delta_x == 0.0);
        }
    }
    // alpha > 1 against quadrature of rho'^2 / rho, rho' by central differences
    for (int n = 0; n <= 3; ++n) {
        const double a = 3.0;
        const double ref = es_half([&](double x) {
            const double r = laguerre_rho(n, a, x);
            if (r <= 1e-250 || x > 200.0) return 0.0;
            const double h = 1e-5 * x;
            const double d = (laguerre_rho(n, a, x + h) - laguerre_rho(n, a, x - h)) / (2 * h);
            return d * d / r;
        });
        CHECK(laguerre_fisher(n, a).F.value == doctest::Approx(ref).epsilon(1e-5));
    }
}

TEST_CASE("Laguerre entropic moments: Bell, Lauricella and quadrature agree") {
    for (double a : {0.0, 1.0, 5.0}) {
        for (int n = 0; n <= 3; ++n) {
            for (int q : {2, 3}) {
                const double b = laguerre_entropic_moment(n, a, q, WqMethod::bell);
                const double l = laguerre_entropic_moment(n, a, q, WqMethod::lauricella);
                const double g = laguerre_entropic_moment(n, a, q, WqMethod::quadrature);
                const double ref = es_half([&](double x) { return std::pow(laguerre_rho(n, a, x), q); });
                CHECK(b == doctest::Approx(l).epsilon(1e-10));
                CHECK(b == doctest::Approx(g).epsilon(1e-9));
                CHECK(b == doctest::Approx(ref).epsilon(1e-9));
            }
        }
        // n = 0: W_q = Gamma(alpha q + 1) / (Gamma(alpha + 1)^q q^{alpha q + 1})
        for (int q : {2, 3, 4}) {
            const double closed = std::exp(std::lgamma(a * q + 1) - q * std::lgamma(a + 1) - (a * q + 1) * std::log(q));
            CHECK(laguerre_entropic_moment(0, a, q, WqMethod::bell) == doctest::Approx(closed).epsilon(1e-12));
        }
    }
}

TEST_CASE("Laguerre Shannon length") {
    CHECK(laguerre_shannon_length(0, 0.0).N == doctest::Approx(kE).epsilon(1e-11));
    for (double a : {0.0, 1.0, 5.0}) {
        for (int n : {0, 2, 5}) {
            const auto s = laguerre_shannon_length(n, a);
            const double J = laguerre_moment(n, a, 1) - a * laguerre_log_mean(n, a);
            CHECK(s.J_part == doctest::Approx(J).epsilon(1e-9));
            // -rho ln rho has log kinks at the nodes, which exp_sinh resolves poorly
            const double S = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
                [&](double x) {
                    const double r = laguerre_rho(n, a, x);
                    return r > 0 ? -r * std::log(r) : 0.0;
                },
                0.0, 150.0, 18, 1e-15);
            CHECK(std::log(s.N) == doctest::Approx(S).epsilon(1e-8));
        }
    }
}

TEST_CASE("Laguerre bounds: saturation and domination") {
    for (double a : {0.0, 2.0, 5.0}) {
        const double N = laguerre_shannon_length(0, a).N;
        CHECK(laguerre_shannon_bound(0, a, 1.0, a) == doctest::Approx(N).epsilon(1e-10));
        const auto opt = laguerre_optimal_bound(0, a, false);
        CHECK(opt.b == 1.0);
        CHECK(std::fabs(opt.m - a) <= 1e-4);
        for (int n = 0; n <= 6; ++n) {
            const double Nn = laguerre_shannon_length(n, a).N;
            for (double b : {1.0, 2.0, 5.0})
                for (double m : {0.0, 0.5, 2.0}) CHECK(laguerre_shannon_bound(n, a, b, m) >= Nn * (1 - 1e-9));
        }
    }
}

TEST_CASE("optimal Laguerre bound tables") {
    const int b42[] = {1, 3, 4, 6, 7, 8, 9, 10, 11, 12, 13};
    const int b43[] = {1, 4, 6, 7, 9, 10, 11, 12, 14, 15, 16};
    const double m43[] = {0, -.332, -.338, -.322, -.332, -.327, -.324, -.321, -.322, -.320, -.319};
    const int b44[] = {5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 16};
    const int b45[] = {1, 5, 7, 9, 10, 11, 13, 14, 15, 16, 17};
    const double m45[] = {5, .288, .053, -.049, -.098, -.131, -.160, -.177, -.190, -.201, -.210};
    for (int n = 0; n <= 10; ++n) {
        CHECK(laguerre_optimal_bound(n, 0.0, true).b == b42[n]);
        const auto t3 = laguerre_optimal_bound(n, 0.0, false);
        CHECK(t3.b == b43[n]);
        // The reference n = 3 entry pairs b = 7 with the optimum m of b = 6 (-0.3217);
        // an independent 30-digit minimization at b = 7 gives m = -0.33010.
        if (n == 3)
            CHECK(t3.m == doctest::Approx(-0.33010).epsilon(1e-4));
        else
            CHECK(std::fabs(t3.m - m43[n]) <= 0.005);
        CHECK(laguerre_optimal_bound(n, 5.0, true).b == b44[n]);
        const auto t5 = laguerre_optimal_bound(n, 5.0, false);
        CHECK(t5.b == b45[n]);
        CHECK(std::fabs(t5.m - m45[n]) <= 0.005);
    }
}

TEST_CASE("least squares") {
    const std::vector<double> x{1, 2, 3, 4, 5};
    std::vector<double> y;
    for (double v : x) y.push_back(2.5 * v - 1.0);
    const auto f = least_squares(x, y);
    CHECK(f.slope == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(f.intercept == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(f.correlation == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(least_squares({1.0, 2.0}, {2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(hermite_moment(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(laguerre_stddev(2, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(hermite_renyi_length(2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(laguerre_renyi_length(2, 0.0, 1.0), std::invalid_argument);
}
