#include "qcx/hydrogen3d.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/laguerre.hpp>
#include <boost/math/special_functions/spherical_harmonic.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace qcx;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

// Textbook radial function from Boost's associated Laguerre polynomial.
double radial_oracle(int n, int l, double Z, double r) {
    const double x = 2.0 * Z * r / n;
    if (x > 1400.0) return 0.0;
    const double norm = std::sqrt(std::pow(2.0 * Z / n, 3) * std::tgamma(n - l) / (2.0 * n * std::tgamma(n + l + 1.0)));
    return norm * std::exp(-x / 2) * std::pow(x, l) * boost::math::laguerre(n - l - 1, 2 * l + 1, x);
}

double radial_integral(const std::function<double(double)>& f) {
    boost::math::quadrature::exp_sinh<double> es;
    return es.integrate(f, 1e-14);
}

double ylm2(int l, int m, double theta) { return std::norm(boost::math::spherical_harmonic(l, m, theta, 0.3)); }

double angular_integral(const std::function<double(double)>& f) {
    return 2 * kPi * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
                         [&](double t) { return f(t) * std::sin(t); }, 0.0, kPi, 15, 1e-14);
}

std::vector<Orbital3D> states(int n_max, double Z) {
    std::vector<Orbital3D> v;
    for (int n = 1; n <= n_max; ++n)
        for (int l = 0; l < n; ++l)
            for (int m = -l; m <= l; ++m) v.push_back({Z, n, l, m});
    return v;
}

}  // namespace

TEST_CASE("radial and angular factors match textbook forms") {
    for (const auto& o : states(4, 1.7)) {
        for (double r : {0.05, 0.8, 3.0, 11.0}) {
            const double a = radial_function(o, r), b = radial_oracle(o.n, o.l, o.Z, r);
            CHECK(a * a == doctest::Approx(b * b).epsilon(1e-11).scale(1e-14));
        }
        for (double t : {0.2, 1.1, 2.5}) CHECK(angular_abs2(o.l, o.m, std::cos(t)) == doctest::Approx(ylm2(o.l, o.m, t)).epsilon(1e-12).scale(1e-14));
    }
}

TEST_CASE("closed-form V, I, <r>, disequilibrium against independent quadrature") {
    for (const auto& o : states(4, 2.0)) {
        auto R2 = [&](double r) { const double R = radial_oracle(o.n, o.l, o.Z, r); return R * R * r * r; };
        const double norm = radial_integral(R2);
        const double r1 = radial_integral([&](double r) { return r * R2(r); });
        const double r2 = radial_integral([&](double r) { return r * r * R2(r); });
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-11));
        CHECK(r_expectation(o) == doctest::Approx(r1).epsilon(1e-10));
        CHECK(variance(o) == doctest::Approx(r2 - r1 * r1).epsilon(1e-9));

        const double K1 = radial_integral([&](double r) { const double R = radial_oracle(o.n, o.l, o.Z, r); return std::pow(R, 4) * r * r; });
        const double K2 = angular_integral([&](double t) { return std::pow(ylm2(o.l, o.m, t), 2); });
        const auto d = disequilibrium(o);
        CHECK(d.total == doctest::Approx(K1 * K2).epsilon(1e-9));
        CHECK(d.total == doctest::Approx(std::pow(o.Z, 3) * D_nlm(o.n, o.l, o.m)).epsilon(1e-12));
        const auto dq = disequilibrium_quadrature(o);
        CHECK(dq.total == doctest::Approx(d.total).epsilon(1e-8));
    }
}

TEST_CASE("Fisher information: closed form vs quadrature") {
    for (const auto& o : states(4, 1.0)) {
        CHECK(fisher_quadrature(o) == doctest::Approx(fisher(o)).epsilon(1e-7));
        CHECK(fisher(o) == doctest::Approx(4.0 * (o.n - std::abs(o.m)) / std::pow(o.n, 3)));
    }
    CHECK(fisher_quadrature(Orbital3D{3.0, 2, 1, 1}) == doctest::Approx(fisher(Orbital3D{3.0, 2, 1, 1})).epsilon(1e-7));
}

TEST_CASE("Shannon decomposition equals -int rho ln rho") {
    for (double Z : {1.0, 5.0}) {
        for (const auto& o : states(4, Z)) {
            const auto a = shannon(o), b = shannon_direct(o);
            CHECK(a.S == doctest::Approx(b.S).epsilon(1e-8));
            CHECK(a.S_R == doctest::Approx(b.S_R).epsilon(1e-8));
            CHECK(a.S_Y == doctest::Approx(b.S_Y).epsilon(1e-8));
        }
    }
}

TEST_CASE("ground state closed forms") {
    const Orbital3D gs{};
    CHECK(variance(gs) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(fisher(gs) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(disequilibrium(gs).total == doctest::Approx(1.0 / (8 * kPi)).epsilon(1e-14));
    CHECK(shannon(gs).S == doctest::Approx(3 + std::log(kPi)).epsilon(1e-12));
    const auto c = complexities(gs);
    CHECK(c.C_CR == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(c.C_FS == doctest::Approx(2 * kE / std::cbrt(kPi)).epsilon(1e-12));
    CHECK(c.C_SC == doctest::Approx(kE * kE * kE / 8).epsilon(1e-12));
    CHECK(energy(Orbital3D{2.0, 2, 1, 0}) == doctest::Approx(-0.5));
}

TEST_CASE("complexities are Z invariant and obey their lower bounds (property)") {
    for (const auto& o : states(5, 1.0)) {
        const auto c1 = complexities(o);
        for (double Z : {0.3, 7.0, 137.0}) {
            const auto cz = complexities(Orbital3D{Z, o.n, o.l, o.m});
            CHECK(cz.C_CR == doctest::Approx(c1.C_CR).epsilon(1e-12));
            CHECK(cz.C_FS == doctest::Approx(c1.C_FS).epsilon(1e-9));
            CHECK(cz.C_SC == doctest::Approx(c1.C_SC).epsilon(1e-9));
        }
        // closed form of the Cramer-Rao product with the radial variance
        const double n = o.n, l = o.l, am = std::abs(o.m);
        CHECK(c1.C_CR == doctest::Approx((n - am) / (n * n * n) * (n * n * (n * n + 2) - l * l * (l + 1) * (l + 1))).epsilon(1e-13));
        // the 3D Cramer-Rao and Stam inequalities use the full second moment <r^2>
        const double r2 = variance(o) + r_expectation(o) * r_expectation(o);
        CHECK(fisher(o) * r2 >= 9.0 * (1 - 1e-12));
        CHECK(c1.C_FS >= 3.0 - 1e-12);
        const auto b = complexity_bounds(o);
        CHECK(b.B_FS >= c1.C_FS * (1 - 1e-12));
        CHECK(b.B_SC >= c1.C_SC * (1 - 1e-12));
        CHECK(b.xi_FS >= -1e-12);
        CHECK(b.xi_SC >= -1e-12);
    }
}

TEST_CASE("the radial-variance Cramer-Rao product drops below 3 on |m| = l = n - 1") {
    for (int n = 2; n <= 6; ++n) {
        const auto c = complexities(Orbital3D{1.0, n, n - 1, n - 1});
        CHECK(c.C_CR == doctest::Approx((2.0 * n + 1) / n).epsilon(1e-13));
        CHECK(c.C_CR < 3.0);
    }
}

TEST_CASE("m-parity: measures depend on |m| only") {
    for (int m = 1; m <= 3; ++m) {
        const auto a = hydrogen_measures(Orbital3D{1.0, 5, 3, m});
        const auto b = hydrogen_measures(Orbital3D{1.0, 5, 3, -m});
        CHECK(a.shannon.S == doctest::Approx(b.shannon.S).epsilon(1e-12));
        CHECK(a.complexities.C_FS == doctest::Approx(b.complexities.C_FS).epsilon(1e-12));
        CHECK(a.disequilibrium.total == doctest::Approx(b.disequilibrium.total).epsilon(1e-12));
    }
}

TEST_CASE("invalid orbitals") {
    CHECK_THROWS_AS(Orbital3D({1.0, 0, 0, 0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(Orbital3D({1.0, 2, 2, 0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(Orbital3D({1.0, 2, 1, 2}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(Orbital3D({0.0, 1, 0, 0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(variance(Orbital3D{1.0, 1, 1, 0}), std::invalid_argument);
}
