#include "qcx/hydrod.hpp"

#include "qcx/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qcx {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
constexpr double kLn2 = std::numbers::ln2;
constexpr double kInf = std::numeric_limits<double>::infinity();

// One polar factor of the hyperspherical harmonic: Gegenbauer C_deg^(lambda)(x)
// times (1-x^2)^{power/2}, against the measure (1-x^2)^{alpha_j - 1/2} dx.
struct PolarFactor {
    int degree = 0;
    double lambda = 0.5;
    int power = 0;  // |mu_{j+1}|
    OrthoPolySpec spec() const { return OrthoPolySpec::gegenbauer(degree, lambda); }
};

std::vector<PolarFactor> polar_factors(const DOrbital& o) {
    std::vector<PolarFactor> out;
    for (int j = 1; j <= o.D - 2; ++j) {
        const int mj = std::abs(o.mu[j - 1]), mj1 = std::abs(o.mu[j]);
        const double alpha = 0.5 * (o.D - j - 1);
        out.push_back({mj - mj1, alpha + mj1, mj1});
    }
    return out;
}

OrthoPolySpec radial_poly(const DOrbital& o) {
    return OrthoPolySpec::laguerre(o.n - o.l() - 1, 2.0 * o.grand_L() + 1.0);
}

OrthoPolySpec momentum_poly(const DOrbital& o) {
    return OrthoPolySpec::gegenbauer(o.n - o.l() - 1, o.grand_L() + 1.0);
}

// Radial position density in x = r/lambda, lambda = eta/(2Z):
// x^{2L+2} e^{-x} L~^2 / (2 eta).
Density1D radial_density_x(const DOrbital& o) {
    const OrthoPolySpec sp = radial_poly(o);
    const double eta = o.eta(), L = o.grand_L();
    Density1D d;
    d.log_eval = [sp, eta, L](double x) {
        if (x <= 0.0) return -kInf;
        const double lp = eval_poly_scaled(sp, x).log_abs();
        if (lp == -kInf) return -kInf;
        return -std::log(2.0 * eta) + (2.0 * L + 2.0) * std::log(x) - x + 2.0 * lp;
    };
    d.eval = [f = d.log_eval](double x) { return std::exp(f(x)); };
    d.lo = 0.0;
    d.hi = kInf;
    d.singular_points = zeros(sp);
    d.scale = 1.0;
    return d;
}

double log_R2_x(const DOrbital& o, double x) {
    const double lp = eval_poly_scaled(radial_poly(o), x).log_abs();
    if (lp == -kInf || x <= 0.0) return -kInf;
    const double lam = o.eta() / (2.0 * o.Z);
    return -o.D * std::log(lam) - std::log(2.0 * o.eta()) + 2.0 * o.l() * std::log(x) - x + 2.0 * lp;
}

// Radial momentum density in y = (1 - t^2)/(1 + t^2), t = eta p / Z:
// (1-y^2)^{L+1/2} (1+y) C~^2.
Density1D momentum_density_y(const DOrbital& o) {
    const OrthoPolySpec sp = momentum_poly(o);
    const double L = o.grand_L();
    Density1D d;
    d.log_eval = [sp, L](double y) {
        if (y <= -1.0 || y >= 1.0) return -kInf;
        const double lp = eval_poly_scaled(sp, y).log_abs();
        if (lp == -kInf) return -kInf;
        return (L + 0.5) * std::log1p(-y * y) + std::log1p(y) + 2.0 * lp;
    };
    d.eval = [f = d.log_eval](double y) { return std::exp(f(y)); };
    d.lo = -1.0;
    d.hi = 1.0;
    d.singular_points = zeros(sp);
    d.scale = 1.0;
    return d;
}

double log_M2_y(const DOrbital& o, double y) {
    const double lp = eval_poly_scaled(momentum_poly(o), y).log_abs();
    if (lp == -kInf || y <= -1.0 || y >= 1.0) return -kInf;
    const double L = o.grand_L();
    return (2.0 * L + 4.0) * kLn2 + o.D * std::log(o.eta() / o.Z) + o.l() * (std::log1p(-y) - std::log1p(y)) +
           (2.0 * L + 4.0) * std::log(0.5 * (1.0 + y)) + 2.0 * lp;
}

// ln of int (1-x^2)^{lambda-1/2} dx over [-1, 1]
double log_h0(double lambda) { return 0.5 * std::log(kPi) + log_gamma(lambda + 0.5) - log_gamma(lambda + 1.0); }

// K2 of a state whose polar factors all have degree 0.
double K2_degree_zero(const DOrbital& o) {
    double lk = -std::log(2.0 * kPi);
    for (const auto& f : polar_factors(o)) lk += log_h0(f.lambda + f.power) - 2.0 * log_h0(f.lambda);
    return std::exp(lk);
}

double polar_value_abs2(const PolarFactor& f, double x) {
    const double c = eval_poly(f.spec(), x);
    return c * c * std::pow(1.0 - x * x, f.power);
}

SpaceComplexity assemble(double dis, double S, double C, double K2, const char* method) {
    SpaceComplexity s;
    s.disequilibrium = dis;
    s.shannon = S;
    s.complexity = C;
    s.K2 = K2;
    s.K_radial = dis / K2;
    s.method = method;
    return s;
}

}  // namespace

void DOrbital::validate() const {
    if (D < 2) throw std::invalid_argument("dimension D must be an integer >= 2");
    if (!(Z > 0.0)) throw std::invalid_argument("nuclear charge Z must be positive");
    if (n < 1) throw std::invalid_argument("principal quantum number n must be >= 1");
    if (static_cast<int>(mu.size()) != D - 1)
        throw std::invalid_argument("hyperangular quantum numbers must have D-1 entries");
    for (int j = 0; j + 1 < D - 1; ++j) {
        if (mu[j] < 0) throw std::invalid_argument("mu_j must be non-negative for j < D-1");
        if (mu[j] < std::abs(mu[j + 1])) throw std::invalid_argument("hyperangular quantum numbers must not increase");
    }
    if (D > 2 && mu.back() > mu[D - 3]) throw std::invalid_argument("hyperangular quantum numbers must not increase");
    if (l() > n - 1) throw std::invalid_argument("l = mu_1 must not exceed n-1");
    if (n - l() - 1 > kMaxDegree) throw std::invalid_argument("radial degree exceeds polynomial cap");
}

int DOrbital::l() const { return mu.empty() ? 0 : std::abs(mu[0]); }
double DOrbital::eta() const { return n + 0.5 * (D - 3); }
double DOrbital::grand_L() const { return l() + 0.5 * (D - 3); }

bool DOrbital::is_ground() const {
    if (n != 1) return false;
    for (int m : mu)
        if (m != 0) return false;
    return true;
}

bool DOrbital::is_circular() const {
    for (int m : mu)
        if (std::abs(m) != n - 1) return false;
    return true;
}

DOrbital DOrbital::ground(int D, double Z) {
    DOrbital o{D, Z, 1, std::vector<int>(std::max(D - 1, 0), 0)};
    o.validate();
    return o;
}

DOrbital DOrbital::circular(int D, int n, double Z) {
    DOrbital o{D, Z, n, std::vector<int>(std::max(D - 1, 0), n - 1)};
    o.validate();
    return o;
}

double energy_d(const DOrbital& o) {
    o.validate();
    const double eta = o.eta();
    return -o.Z * o.Z / (2.0 * eta * eta);
}

double radial_abs2_d(const DOrbital& o, double r) {
    o.validate();
    if (r < 0.0) throw std::invalid_argument("radius must be non-negative");
    const double x = 2.0 * o.Z * r / o.eta();
    if (!std::isfinite(x)) return 0.0;
    if (x == 0.0) {
        if (o.l() > 0) return 0.0;
        const double L0 = eval_poly(radial_poly(o), 0.0);
        const double lam = o.eta() / (2.0 * o.Z);
        return std::pow(lam, -o.D) / (2.0 * o.eta()) * L0 * L0;
    }
    return std::exp(log_R2_x(o, x));
}

double momentum_abs2_d(const DOrbital& o, double p) {
    o.validate();
    if (p < 0.0) throw std::invalid_argument("momentum must be non-negative");
    const double t = o.eta() * p / o.Z;
    if (!std::isfinite(t * t)) return 0.0;  // y -> -1, where the density vanishes
    const double y = (1.0 - t * t) / (1.0 + t * t);
    if (y >= 1.0) {
        if (o.l() > 0) return 0.0;
        const double c = eval_poly(momentum_poly(o), 1.0);
        const double L = o.grand_L();
        return std::exp((2.0 * L + 4.0) * kLn2 + o.D * std::log(o.eta() / o.Z)) * c * c;
    }
    return std::exp(log_M2_y(o, y));
}

double hyperangular_abs2(const DOrbital& o, const std::vector<double>& angles) {
    o.validate();
    if (static_cast<int>(angles.size()) != o.D - 1)
        throw std::invalid_argument("expected D-1 hyperspherical angles");
    double v = 1.0 / (2.0 * kPi);
    const auto fs = polar_factors(o);
    for (std::size_t j = 0; j < fs.size(); ++j) v *= polar_value_abs2(fs[j], std::cos(angles[j]));
    return v;
}

double position_density_d(const DOrbital& o, double r, const std::vector<double>& angles) {
    return radial_abs2_d(o, r) * hyperangular_abs2(o, angles);
}

double momentum_density_d(const DOrbital& o, double p, const std::vector<double>& angles) {
    return momentum_abs2_d(o, p) * hyperangular_abs2(o, angles);
}

double hyperangular_disequilibrium(const DOrbital& o, const QuadConfig& cfg) {
    o.validate();
    double K2 = 1.0 / (2.0 * kPi);
    for (const auto& f : polar_factors(o)) {
        const Density1D d = rakhmanov_density(f.spec());
        const auto pts = density_breakpoints(d, cfg);
        K2 *= density_expectation(d, [f](double x) { return polar_value_abs2(f, x); }, pts, cfg,
                                  "hyperangular disequilibrium");
    }
    return K2;
}

DisequilibriumD disequilibrium_position(const DOrbital& o, const QuadConfig& cfg) {
    o.validate();
    const Density1D d = radial_density_x(o);
    const auto pts = density_breakpoints(d, cfg);
    DisequilibriumD out;
    out.radial = density_expectation(d, [&o](double x) { return std::exp(log_R2_x(o, x)); }, pts, cfg,
                                     "radial disequilibrium K1");
    out.K2 = hyperangular_disequilibrium(o, cfg);
    out.total = out.radial * out.K2;
    return out;
}

DisequilibriumD disequilibrium_momentum(const DOrbital& o, const QuadConfig& cfg) {
    o.validate();
    const Density1D d = momentum_density_y(o);
    const auto pts = density_breakpoints(d, cfg);
    DisequilibriumD out;
    out.radial = density_expectation(d, [&o](double y) { return std::exp(log_M2_y(o, y)); }, pts, cfg,
                                     "momentum disequilibrium K3");
    out.K2 = hyperangular_disequilibrium(o, cfg);
    out.total = out.radial * out.K2;
    return out;
}

double shannon_constant_A_d(int n, int l, int D) {
    const double eta = n + 0.5 * (D - 3), L = l + 0.5 * (D - 3);
    return -2.0 * l * ((2.0 * eta - 2.0 * L - 1.0) / (2.0 * eta) + digamma(eta + L + 1.0)) +
           (3.0 * eta * eta - L * (L + 1.0)) / eta - ((D - 1) * kLn2 - (D + 1) * std::log(eta));
}

double shannon_constant_B_d(const DOrbital& o) {
    o.validate();
    double B = std::log(2.0 * kPi);
    for (int j = 1; j <= o.D - 2; ++j) {
        const double a = 0.5 * (o.D - j - 1);
        const double mj = std::abs(o.mu[j - 1]), mj1 = std::abs(o.mu[j]);
        if (mj1 == 0.0) continue;
        B -= 2.0 * mj1 * (digamma(2.0 * a + mj + mj1) - digamma(a + mj) - kLn2 - 1.0 / (2.0 * (a + mj)));
    }
    return B;
}

double shannon_constant_F_d(int n, int l, int D) {
    const double eta = n + 0.5 * (D - 3), L = l + 0.5 * (D - 3);
    // (2L+1)/(2 eta-1) is 0/0 at D=2, n=1; its limit in D is 1
    const double ratio = (2.0 * eta - 1.0 == 0.0) ? 1.0 : (2.0 * L + 1.0) / (2.0 * eta - 1.0);
    return -(D * std::log(eta) - (2.0 * L + 4.0) * kLn2) -
           (2.0 * L + 4.0) * (digamma(eta + L + 1.0) - digamma(eta)) + (L + 2.0) / eta -
           (D + 1.0) * (1.0 - 2.0 * eta * ratio / (2.0 * eta + 1.0));
}

double hyperangular_shannon(const DOrbital& o, const QuadConfig& cfg) {
    double S = shannon_constant_B_d(o);
    for (const auto& f : polar_factors(o)) S -= entropic_integral_E(f.spec(), 0, cfg);
    return S;
}

double hyperangular_shannon_direct(const DOrbital& o, const QuadConfig& cfg) {
    o.validate();
    double S = std::log(2.0 * kPi);
    for (const auto& f : polar_factors(o)) {
        const Density1D d = rakhmanov_density(f.spec());
        const auto pts = density_breakpoints(d, cfg);
        S -= density_expectation(
            d,
            [f](double x) {
                const double v = polar_value_abs2(f, x);
                return v > 0.0 ? std::log(v) : 0.0;
            },
            pts, cfg, "hyperangular entropy");
    }
    return S;
}

ShannonD shannon_position_d(const DOrbital& o, const QuadConfig& cfg) {
    o.validate();
    // sign-free entropic integrals enter with a minus
    const double E1 = entropic_integral_E(radial_poly(o), 1, cfg);
    ShannonD s;
    s.radial = shannon_constant_A_d(o.n, o.l(), o.D) - E1 / (2.0 * o.eta()) - o.D * std::log(o.Z);
    s.angular = hyperangular_shannon(o, cfg);
    s.S = s.radial + s.angular;
    return s;
}

ShannonD shannon_position_direct(const DOrbital& o, const QuadConfig& cfg) {
    o.validate();
    const Density1D d = radial_density_x(o);
    const auto pts = density_breakpoints(d, cfg);
    ShannonD s;
    s.radial = density_expectation(
        d,
        [&o](double x) {
            const double v = log_R2_x(o, x);
            return v == -kInf ? 0.0 : -v;
        },
        pts, cfg, "radial entropy");
    s.angular = hyperangular_shannon_direct(o, cfg);
    s.S = s.radial + s.angular;
    return s;
}

ShannonD shannon_momentum_d(const DOrbital& o, const QuadConfig& cfg) {
    o.validate();
    const double E0 = entropic_integral_E(momentum_poly(o), 0, cfg);
    ShannonD s;
    s.radial = shannon_constant_F_d(o.n, o.l(), o.D) - E0 + o.D * std::log(o.Z);
    s.angular = hyperangular_shannon(o, cfg);
    s.S = s.radial + s.angular;
    return s;
}

ShannonD shannon_momentum_direct(const DOrbital& o, const QuadConfig& cfg) {
    o.validate();
    const Density1D d = momentum_density_y(o);
    const auto pts = density_breakpoints(d, cfg);
    ShannonD s;
    s.radial = density_expectation(
        d,
        [&o](double y) {
            const double v = log_M2_y(o, y);
            return v == -kInf ? 0.0 : -v;
        },
        pts, cfg, "momentum radial entropy");
    s.angular = hyperangular_shannon_direct(o, cfg);
    s.S = s.radial + s.angular;
    return s;
}

SpaceComplexity lmc_position_quadrature(const DOrbital& o, const QuadConfig& cfg) {
    const DisequilibriumD d = disequilibrium_position(o, cfg);
    const double S = shannon_position_d(o, cfg).S;
    SpaceComplexity s = assemble(d.total, S, d.total * std::exp(S), d.K2, "quadrature");
    s.K_radial = d.radial;
    return s;
}

SpaceComplexity lmc_momentum_quadrature(const DOrbital& o, const QuadConfig& cfg) {
    const DisequilibriumD d = disequilibrium_momentum(o, cfg);
    const double S = shannon_momentum_d(o, cfg).S;
    SpaceComplexity s = assemble(d.total, S, d.total * std::exp(S), d.K2, "quadrature");
    s.K_radial = d.radial;
    return s;
}

SpaceComplexity ground_position_closed(int D, double Z) {
    const DOrbital o = DOrbital::ground(D, Z);
    const double lg = log_gamma(0.5 * (D + 1));
    const double ldis = D * std::log(Z) - D * std::log(D - 1.0) - 0.5 * (D - 1) * std::log(kPi) - lg;
    const double S = D * std::log(D - 1.0) - D * kLn2 + 0.5 * (D - 1) * std::log(kPi) + lg + D - D * std::log(Z);
    return assemble(std::exp(ldis), S, std::pow(0.5 * kE, D), K2_degree_zero(o), "closed-form");
}

SpaceComplexity ground_momentum_closed(int D, double Z) {
    const DOrbital o = DOrbital::ground(D, Z);
    const double lg = log_gamma(0.5 * (D + 1)), lg3 = log_gamma(2.0 + 1.5 * D), lg2 = log_gamma(2.0 * D + 2.0);
    const double ldis = D * std::log((2.0 * D - 2.0) / Z) - 0.5 * (D + 2) * std::log(kPi) + 2.0 * lg + lg3 - lg2;
    const double psi = (D + 1.0) * (digamma(D + 1.0) - digamma(0.5 * D + 1.0));
    const double S = 0.5 * (D + 1) * std::log(kPi) - D * std::log(D - 1.0) - lg + psi + D * std::log(Z);
    const double C = std::exp(D * kLn2 + lg + lg3 - 0.5 * std::log(kPi) - lg2 + psi);
    return assemble(std::exp(ldis), S, C, K2_degree_zero(o), "closed-form");
}

SpaceComplexity circular_position_closed(int D, int n, double Z) {
    const DOrbital o = DOrbital::circular(D, n, Z);
    const double h = 0.5 * (D - 1);  // (D-1)/2
    const double c = 2.0 * n + D - 3.0;
    const double ldis = D * std::log(Z) + log_gamma(n - 0.5) + log_gamma(2.0 * n + 0.5 * (D - 3)) -
                        (2.0 * n - 2.0) * kLn2 - 0.5 * D * std::log(kPi) - D * std::log(c) - log_gamma(n) -
                        2.0 * log_gamma(n + h);
    const double core = 2.0 * n + D - 2.0 - (n - 1.0) * (digamma(n) + digamma(n + h));
    const double S = core - D * kLn2 + D * std::log(c) + (D - 1) * 0.5 * std::log(kPi) + log_gamma(n) +
                     log_gamma(n + h) - D * std::log(Z);
    const double C = std::exp(log_gamma(n - 0.5) + log_gamma(2.0 * n + 0.5 * (D - 3)) - (2.0 * n + D - 2.0) * kLn2 -
                              0.5 * std::log(kPi) - log_gamma(n + h) + core);
    return assemble(std::exp(ldis), S, C, K2_degree_zero(o), "closed-form");
}

namespace {

double circular_A(int n, int D) {
    return (2.0 * n + D - 1.0) / (2.0 * n + D - 3.0) - (D + 1.0) / (2.0 * n + D - 2.0) - (n - 1.0) * digamma(n) -
           0.5 * (D + 1) * digamma(n + 0.5 * (D - 2)) + (n + 0.5 * (D - 1)) * digamma(n + 0.5 * (D - 3));
}

}  // namespace

SpaceComplexity circular_momentum_closed(int D, int n, double Z) {
    const DOrbital o = DOrbital::circular(D, n, Z);
    const double h = 0.5 * (D - 1);
    const double c = 2.0 * n + D - 3.0;
    const double ldis = (4.0 * n + D - 4.0) * kLn2 + D * std::log(c) + 2.0 * log_gamma(n + h) +
                        log_gamma(2.0 * n - 1.0) + log_gamma(2.0 * n + 1.5 * D) - D * std::log(Z) -
                        0.5 * (D + 2) * std::log(kPi) - 2.0 * log_gamma(n) - log_gamma(4.0 * n + 2.0 * D - 2.0);
    const double A = circular_A(n, D);
    const double S = A + (D + 1) * kLn2 + D * std::log(Z) + 0.5 * (D + 1) * std::log(kPi) + log_gamma(n) -
                     D * std::log(c) - log_gamma(n + h);
    const double C = std::exp((4.0 * n + 2.0 * D - 3.0) * kLn2 + log_gamma(n + h) + log_gamma(2.0 * n - 1.0) +
                              log_gamma(2.0 * n + 1.5 * D) - 0.5 * std::log(kPi) - log_gamma(n) -
                              log_gamma(4.0 * n + 2.0 * D - 2.0) + A);
    return assemble(std::exp(ldis), S, C, K2_degree_zero(o), "closed-form");
}

SpaceComplexity lmc_position_d(const DOrbital& o, const QuadConfig& cfg) {
    o.validate();
    if (o.is_ground()) return ground_position_closed(o.D, o.Z);
    if (o.is_circular()) return circular_position_closed(o.D, o.n, o.Z);
    return lmc_position_quadrature(o, cfg);
}

SpaceComplexity lmc_momentum_d(const DOrbital& o, const QuadConfig& cfg) {
    o.validate();
    if (o.is_ground()) return ground_momentum_closed(o.D, o.Z);
    if (o.is_circular()) return circular_momentum_closed(o.D, o.n, o.Z);
    return lmc_momentum_quadrature(o, cfg);
}

DualComplexity dual_complexity(const DOrbital& o, const QuadConfig& cfg) {
    return {lmc_position_d(o, cfg), lmc_momentum_d(o, cfg)};
}

double asymptotics_d(AsymKind kind, AsymRegime regime, Space space, int D, int n) {
    if (D < 2) throw std::invalid_argument("dimension D must be >= 2");
    if (n < 1) throw std::invalid_argument("principal quantum number n must be >= 1");
    if (kind == AsymKind::ground) {
        if (regime != AsymRegime::large_D) throw std::invalid_argument("the ground state has no Rydberg regime");
        if (space == Space::position) return std::pow(0.5 * kE, D);
        // Stirling on the exact form gives 3^{3(D+1)/2} / (2^{2D+3/2} sqrt(e)), the n = 1
        // case of the circular large-D law
        return std::exp(1.5 * (D + 1) * std::log(3.0) - (2.0 * D + 1.5) * kLn2 - 0.5);
    }
    if (regime == AsymRegime::rydberg) return std::pow(0.5 * kE, 0.5 * (D - 1));
    const double lpsi = (1.0 - n) * digamma(n);
    if (space == Space::position)
        return std::exp((D + 2.0 * n - 2.0) * std::log(0.5 * kE) + lpsi + log_gamma(n - 0.5) - 0.5 * std::log(kPi));
    return std::exp(D * std::log(std::pow(3.0, 1.5) / 4.0) + (2.0 * n - 0.5) * std::log(3.0) +
                    log_gamma(2.0 * n - 1.0) - (4.0 * n - 2.5) * kLn2 - log_gamma(n) + lpsi - 0.5);
}

}  // namespace qcx
