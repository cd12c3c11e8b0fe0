#include "qcx/hydrod.hpp"
#include "qcx/hydrogen3d.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace qcx;

namespace {

constexpr double kE = std::numbers::e;

double half_line(const std::function<double(double)>& f, double scale) {
    boost::math::quadrature::exp_sinh<double> es;
    return scale * es.integrate([&](double t) { return f(scale * t); }, 1e-13);
}

DOrbital state(int D, int n, int l, double Z = 1.0) {
    std::vector<int> mu(static_cast<std::size_t>(D - 1), 0);
    for (int j = 0; j < D - 2; ++j) mu[static_cast<std::size_t>(j)] = l;
    if (D >= 2) mu.back() = D == 2 ? l : 0;
    return DOrbital{D, Z, n, mu};
}

}  // namespace

TEST_CASE("radial factors are normalized in both spaces") {
    for (int D : {2, 3, 5, 8}) {
        for (int n = 1; n <= 4; ++n) {
            for (int l = 0; l < n; ++l) {
                const auto o = state(D, n, l, 1.5);
                const double rn = half_line([&](double r) { const double v = radial_abs2_d(o, r); return v == 0.0 ? 0.0 : std::pow(r, D - 1) * v; }, o.eta());
                const double pn = half_line([&](double p) { const double v = momentum_abs2_d(o, p); return v == 0.0 ? 0.0 : std::pow(p, D - 1) * v; }, 1.0 / o.eta());
                CHECK(rn == doctest::Approx(1.0).epsilon(1e-10));
                CHECK(pn == doctest::Approx(1.0).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("D = 3 reproduces the three-dimensional position complexity") {
    for (int n = 1; n <= 4; ++n)
        for (int l = 0; l < n; ++l)
            for (int m = -l; m <= l; ++m) {
                const DOrbital o{3, 1.0, n, {l, m}};
                const auto c3 = complexities(Orbital3D{1.0, n, l, m});
                CHECK(lmc_position_quadrature(o).complexity == doctest::Approx(c3.C_SC).epsilon(1e-8));
                CHECK(energy_d(o) == doctest::Approx(energy(Orbital3D{1.0, n, l, m})));
            }
}

TEST_CASE("entropy decomposition matches the direct evaluation") {
    for (int D : {2, 3, 4, 6}) {
        for (int n = 1; n <= 3; ++n) {
            for (int l = 0; l < n; ++l) {
                const auto o = state(D, n, l);
                CHECK(shannon_position_d(o).S == doctest::Approx(shannon_position_direct(o).S).epsilon(1e-8));
                CHECK(shannon_momentum_d(o).S == doctest::Approx(shannon_momentum_direct(o).S).epsilon(1e-8));
                CHECK(hyperangular_shannon(o) == doctest::Approx(hyperangular_shannon_direct(o)).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("closed forms agree with quadrature") {
    for (int D = 2; D <= 6; ++D) {
        const auto g = DOrbital::ground(D);
        CHECK(ground_position_closed(D).complexity == doctest::Approx(lmc_position_quadrature(g).complexity).epsilon(1e-7));
        CHECK(ground_momentum_closed(D).complexity == doctest::Approx(lmc_momentum_quadrature(g).complexity).epsilon(1e-7));
        for (int n = 1; n <= 4; ++n) {
            const auto c = DOrbital::circular(D, n);
            CHECK(circular_position_closed(D, n).complexity ==
                  doctest::Approx(lmc_position_quadrature(c).complexity).epsilon(1e-7));
            CHECK(circular_momentum_closed(D, n).complexity ==
                  doctest::Approx(lmc_momentum_quadrature(c).complexity).epsilon(1e-7));
        }
        CHECK(circular_position_closed(D, 1).complexity == doctest::Approx(ground_position_closed(D).complexity).epsilon(1e-12));
        CHECK(circular_momentum_closed(D, 1).complexity == doctest::Approx(ground_momentum_closed(D).complexity).epsilon(1e-12));
    }
}

TEST_CASE("ground-state values") {
    for (int D = 2; D <= 10; ++D) CHECK(ground_position_closed(D).complexity == doctest::Approx(std::pow(kE / 2, D)).epsilon(1e-12));
    CHECK(std::fabs(ground_momentum_closed(2).complexity - 1.7926) < 5e-4);
    CHECK(std::fabs(ground_momentum_closed(3).complexity - 2.3545) < 5e-4);
    CHECK(std::fabs(ground_momentum_closed(4).complexity - 3.0799) < 5e-4);
}

TEST_CASE("charge scaling: entropies shift by D ln Z, complexities are invariant (property)") {
    for (int D : {2, 4, 7}) {
        for (double Z : {0.5, 3.0, 40.0}) {
            const auto o1 = state(D, 3, 1), oz = state(D, 3, 1, Z);
            const auto p1 = lmc_position_d(o1), pz = lmc_position_d(oz);
            const auto m1 = lmc_momentum_d(o1), mz = lmc_momentum_d(oz);
            CHECK(pz.shannon == doctest::Approx(p1.shannon - D * std::log(Z)).epsilon(1e-10));
            CHECK(mz.shannon == doctest::Approx(m1.shannon + D * std::log(Z)).epsilon(1e-10));
            CHECK(pz.complexity == doctest::Approx(p1.complexity).epsilon(1e-9));
            CHECK(mz.complexity == doctest::Approx(m1.complexity).epsilon(1e-9));
        }
    }
}

TEST_CASE("position-momentum product stays above e/2 (property)") {
    for (int D = 2; D <= 8; ++D)
        for (int n = 1; n <= 4; ++n)
            for (int l = 0; l < n; ++l) CHECK(dual_complexity(state(D, n, l)).product() >= kE / 2);
}

TEST_CASE("asymptotic regimes") {
    const double big = ground_momentum_closed(200).complexity;
    CHECK(big / asymptotics_d(AsymKind::ground, AsymRegime::large_D, Space::momentum, 200) == doctest::Approx(1.0).epsilon(0.01));
    CHECK(asymptotics_d(AsymKind::ground, AsymRegime::large_D, Space::position, 7) == doctest::Approx(std::pow(kE / 2, 7)));
    const double ry = kE / 2;
    CHECK(circular_position_closed(3, 200).complexity / ry == doctest::Approx(1.0).epsilon(0.01));
    CHECK(circular_momentum_closed(3, 200).complexity / ry == doctest::Approx(1.0).epsilon(0.01));
    CHECK_THROWS_AS(asymptotics_d(AsymKind::ground, AsymRegime::rydberg, Space::position, 3), std::invalid_argument);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(DOrbital::ground(1), std::invalid_argument);
    CHECK_THROWS_AS((DOrbital{3, 1.0, 2, {0}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((DOrbital{4, 1.0, 3, {1, 2, 0}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((DOrbital{3, 1.0, 2, {2, 0}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((DOrbital{3, -1.0, 2, {1, 0}}.validate()), std::invalid_argument);
    CHECK_NOTHROW((DOrbital{4, 1.0, 3, {2, 1, -1}}.validate()));
}
