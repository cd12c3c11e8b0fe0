#include "qcx/hydrogen3d.hpp"

#include "qcx/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qcx {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
constexpr double kInf = std::numeric_limits<double>::infinity();

OrthoPolySpec radial_poly(const Orbital3D& o) { return OrthoPolySpec::laguerre(o.n - o.l - 1, 2.0 * o.l + 1.0); }

OrthoPolySpec angular_poly(int l, int m) {
    const int am = std::abs(m);
    return OrthoPolySpec::gegenbauer(l - am, am + 0.5);
}

// ln R^2 at scaled radius x = 2Zr/n
double log_R2(const Orbital3D& o, double x) {
    const double lp = eval_poly_scaled(radial_poly(o), x).log_abs();
    if (lp == -kInf) return -kInf;
    return std::log(4.0 * o.Z * o.Z * o.Z) - 4.0 * std::log(o.n) + 2.0 * o.l * std::log(x) - x + 2.0 * lp;
}

// radial density in the scaled variable: x^{2l+2} e^{-x} L^2 / (2n)
Density1D scaled_radial_density(const Orbital3D& o) {
    const OrthoPolySpec sp = radial_poly(o);
    Density1D d;
    const int n = o.n, l = o.l;
    d.log_eval = [sp, n, l](double x) {
        if (x <= 0.0) return -kInf;
        const double lp = eval_poly_scaled(sp, x).log_abs();
        if (lp == -kInf) return -kInf;
        return -std::log(2.0 * n) + (2.0 * l + 2.0) * std::log(x) - x + 2.0 * lp;
    };
    d.eval = [f = d.log_eval](double x) { return std::exp(f(x)); };
    d.lo = 0.0;
    d.hi = kInf;
    d.singular_points = zeros(sp);
    d.tail = TailDecay::exponential;
    d.scale = 1.0;
    return d;
}

// |Y|^2 on x in [-1, 1] as a density (includes the 2 pi of the azimuth)
Density1D angular_density_x(int l, int m) {
    Density1D d;
    d.eval = [l, m](double x) { return 2.0 * kPi * angular_abs2(l, m, x); };
    d.lo = -1.0;
    d.hi = 1.0;
    d.singular_points = zeros(angular_poly(l, m));
    return d;
}

double angular_amplitude(int l, int m, double x) {
    const int am = std::abs(m);
    const double c = eval_poly(angular_poly(l, m), x);
    return std::pow(1.0 - x * x, 0.5 * am) * c / std::sqrt(2.0 * kPi);
}

}  // namespace

void Orbital3D::validate() const {
    if (!(Z > 0.0)) throw std::invalid_argument("nuclear charge Z must be positive");
    if (n < 1) throw std::invalid_argument("principal quantum number n must be >= 1");
    if (l < 0 || l > n - 1) throw std::invalid_argument("orbital quantum number must satisfy 0 <= l <= n-1");
    if (std::abs(m) > l) throw std::invalid_argument("magnetic quantum number must satisfy |m| <= l");
    if (n - l - 1 > kMaxDegree) throw std::invalid_argument("radial degree exceeds polynomial cap");
}

double energy(const Orbital3D& o) {
    o.validate();
    return -o.Z * o.Z / (2.0 * o.n * o.n);
}

double variance(const Orbital3D& o) {
    o.validate();
    const double n2 = static_cast<double>(o.n) * o.n;
    const double ll = static_cast<double>(o.l) * (o.l + 1);
    return (n2 * (n2 + 2.0) - ll * ll) / (4.0 * o.Z * o.Z);
}

double fisher(const Orbital3D& o) {
    o.validate();
    return 4.0 * o.Z * o.Z / std::pow(o.n, 3) * (o.n - std::abs(o.m));
}

double r_expectation(const Orbital3D& o) {
    o.validate();
    return (3.0 * o.n * o.n - o.l * (o.l + 1.0)) / (2.0 * o.Z);
}

double radial_function(const Orbital3D& o, double r) {
    o.validate();
    const double x = 2.0 * o.Z * r / o.n;
    const double L = eval_poly(radial_poly(o), x);
    return 2.0 * std::pow(o.Z, 1.5) / (o.n * o.n) * std::pow(x, o.l) * std::exp(-0.5 * x) * L;
}

double radial_density(const Orbital3D& o, double r) {
    const double R = radial_function(o, r);
    return r * r * R * R;
}

double angular_abs2(int l, int m, double x) {
    const double a = angular_amplitude(l, m, x);
    return a * a;
}

double angular_density(const Orbital3D& o, double theta) {
    o.validate();
    return 2.0 * kPi * angular_abs2(o.l, o.m, std::cos(theta)) * std::sin(theta);
}

double D_nlm(int n, int l, int m) {
    Orbital3D{1.0, n, l, m}.validate();
    const int nr = n - l - 1;
    // radial sum; every term is positive
    double rs = 0.0;
    for (int k = 0; k <= nr; ++k) {
        const double lt = 2.0 * log_binomial(2 * nr - 2 * k, nr - k) + log_binomial(2 * k, k) +
                          log_gamma(4.0 * l + 2.0 * k + 3.0) - 2.0 * log_gamma(2.0 * l + k + 2.0);
        rs += std::exp(lt);
    }
    // odd l' vanish through (l l l'; 0 0 0)
    double as = 0.0;
    for (int lp = 0; lp <= 2 * l; lp += 2) {
        const double a = wigner3j(l, l, lp, 0, 0, 0), b = wigner3j(l, l, lp, m, m, -2 * m);
        as += (2.0 * lp + 1.0) * a * a * b * b;
    }
    return std::exp(2.0 * std::log(2.0 * l + 1.0) - 4.0 * n * std::numbers::ln2 - std::log(kPi) - 5.0 * std::log(n)) *
           rs * as;
}

Disequilibrium disequilibrium(const Orbital3D& o) {
    o.validate();
    const int n = o.n, l = o.l, m = o.m, nr = n - l - 1;
    Disequilibrium d;
    double rs = 0.0;
    for (int k = 0; k <= nr; ++k)
        rs += std::exp(2.0 * log_binomial(2 * nr - 2 * k, nr - k) + log_binomial(2 * k, k) +
                       log_gamma(4.0 * l + 2.0 * k + 3.0) - 2.0 * log_gamma(2.0 * l + k + 2.0));
    d.radial = std::pow(o.Z, 3) * std::exp((2.0 - 4.0 * n) * std::numbers::ln2 - 5.0 * std::log(n)) * rs;
    double as = 0.0;
    for (int lp = 0; lp <= 2 * l; lp += 2) {
        const double a = wigner3j(l, l, lp, 0, 0, 0), b = wigner3j(l, l, lp, m, m, -2 * m);
        as += (2.0 * lp + 1.0) * a * a * b * b;
    }
    d.angular = (2.0 * l + 1.0) * (2.0 * l + 1.0) / (4.0 * kPi) * as;
    d.total = d.radial * d.angular;
    return d;
}

double angular_disequilibrium(int l, int m, const QuadConfig& cfg) {
    const Density1D d = angular_density_x(l, m);
    const auto pts = density_breakpoints(d, cfg);
    // int |Y|^4 dOmega = int (2 pi |Y|^2) |Y|^2 dx
    return density_expectation(d, [l, m](double x) { return angular_abs2(l, m, x); }, pts, cfg,
                               "angular disequilibrium");
}

double angular_shannon(int l, int m, const QuadConfig& cfg) {
    const Density1D d = angular_density_x(l, m);
    const auto pts = density_breakpoints(d, cfg);
    return density_expectation(
        d,
        [l, m](double x) {
            const double y = angular_abs2(l, m, x);
            return y > 0.0 ? -std::log(y) : 0.0;
        },
        pts, cfg, "angular entropy");
}

Disequilibrium disequilibrium_quadrature(const Orbital3D& o, const QuadConfig& cfg) {
    o.validate();
    const Density1D d = scaled_radial_density(o);
    const auto pts = density_breakpoints(d, cfg);
    Disequilibrium out;
    out.radial = density_expectation(d, [&o](double x) { return std::exp(log_R2(o, x)); }, pts, cfg,
                                     "radial disequilibrium");
    out.angular = angular_disequilibrium(o.l, o.m, cfg);
    out.total = out.radial * out.angular;
    return out;
}

double shannon_constant_A(int n, int l, int m) {
    Orbital3D{1.0, n, l, m}.validate();
    const int am = std::abs(m);
    return std::log(std::pow(2.0, 2 * am - 1) * kPi * std::pow(n, 4)) + (3.0 * n * n - l * (l + 1.0)) / n -
           2.0 * l * ((2.0 * n - 2.0 * l - 1.0) / (2.0 * n) + digamma(n + l + 1.0)) -
           2.0 * am * (digamma(l + am + 1.0) - digamma(l + 0.5) - 1.0 / (2.0 * l + 1.0));
}

ShannonParts shannon(const Orbital3D& o, const QuadConfig& cfg) {
    o.validate();
    const int n = o.n, l = o.l, am = std::abs(o.m);
    // The entropic integrals are sign-free, so they enter the entropy with a minus.
    const double E1 = entropic_integral_E(radial_poly(o), 1, cfg);
    const double E0 = entropic_integral_E(angular_poly(l, o.m), 0, cfg);
    const double A1 = std::log(std::pow(n, 4) / 4.0) + (3.0 * n * n - l * (l + 1.0)) / n -
                      2.0 * l * ((2.0 * n - 2.0 * l - 1.0) / (2.0 * n) + digamma(n + l + 1.0));
    const double A2 = std::log(2.0 * kPi) + 2.0 * am * std::numbers::ln2 -
                      2.0 * am * (digamma(l + am + 1.0) - digamma(l + 0.5) - 1.0 / (2.0 * l + 1.0));
    ShannonParts s;
    s.S_R = A1 - E1 / (2.0 * n) - 3.0 * std::log(o.Z);
    s.S_Y = A2 - E0;
    s.S = s.S_R + s.S_Y;
    return s;
}

ShannonParts shannon_direct(const Orbital3D& o, const QuadConfig& cfg) {
    o.validate();
    const Density1D d = scaled_radial_density(o);
    const auto pts = density_breakpoints(d, cfg);
    ShannonParts s;
    s.S_R = density_expectation(
        d,
        [&o](double x) {
            const double v = log_R2(o, x);
            return v == -kInf ? 0.0 : -v;
        },
        pts, cfg, "radial entropy");
    s.S_Y = angular_shannon(o.l, o.m, cfg);
    s.S = s.S_R + s.S_Y;
    return s;
}

Complexities complexities(const Orbital3D& o, const QuadConfig& cfg) {
    const double V = variance(o), I = fisher(o);
    const double S = shannon(o, cfg).S;
    const double rho = disequilibrium(o).total;
    Complexities c;
    c.C_CR = V * I;
    c.C_FS = I * std::exp(2.0 * S / 3.0) / (2.0 * kPi * kE);
    c.C_SC = rho * std::exp(S);
    return c;
}

ComplexityBounds complexity_bounds(const Orbital3D& o, const QuadConfig& cfg) {
    o.validate();
    const int n = o.n, l = o.l, am = std::abs(o.m);
    const double t = 3.0 * n * n - l * (l + 1.0);
    ComplexityBounds b;
    b.B_FS = 2.0 * kE / (9.0 * std::cbrt(kPi)) * (n - am) / std::pow(n, 3) * t * t;
    b.B_SC = kPi * std::pow(kE, 3) / 27.0 * t * t * t * D_nlm(n, l, o.m);
    const Complexities c = complexities(o, cfg);
    b.xi_FS = (b.B_FS - c.C_FS) / c.C_FS;
    b.xi_SC = (b.B_SC - c.C_SC) / c.C_SC;
    return b;
}

HydroMeasures hydrogen_measures(const Orbital3D& o, const QuadConfig& cfg) {
    HydroMeasures h;
    h.energy = energy(o);
    h.variance = variance(o);
    h.fisher = fisher(o);
    h.r_mean = r_expectation(o);
    h.shannon = shannon(o, cfg);
    h.disequilibrium = disequilibrium(o);
    h.D_nlm = D_nlm(o.n, o.l, o.m);
    h.complexities = complexities(o, cfg);
    h.bounds = complexity_bounds(o, cfg);
    return h;
}

double radial_fisher_term(const Func& F, const std::vector<double>& pts, double scale, const QuadConfig& cfg) {
    Func g = [&F, scale](double r) {
        const double h = 1e-5 * std::min(scale, r);
        const double d = (F(r + h) - F(r - h)) / (2.0 * h);
        return 4.0 * d * d * r * r;
    };
    return integrate_breaks(g, pts, cfg, "radial fisher information").value;
}

double angular_fisher_term(int l, int m, const QuadConfig& cfg) {
    Orbital3D{1.0, l + 1, l, m}.validate();
    // d/dtheta = -sin(theta) d/dx, so the integrand is (1-x^2) (dy/dx)^2 over dx dphi
    Func g = [l, m](double x) {
        const double h = 1e-5 * std::min(1.0, 1.0 - std::fabs(x));
        const double d = (angular_amplitude(l, m, x + h) - angular_amplitude(l, m, x - h)) / (2.0 * h);
        return 4.0 * 2.0 * kPi * (1.0 - x * x) * d * d;
    };
    std::vector<double> pts{-1.0};
    for (double z : zeros(angular_poly(l, m))) pts.push_back(z);
    pts.push_back(1.0);
    return integrate_breaks(g, pts, cfg, "angular fisher information").value;
}

double fisher_quadrature(const Orbital3D& o, const QuadConfig& cfg) {
    o.validate();
    const double len = o.n / (2.0 * o.Z);  // r = len * x
    const Density1D d = scaled_radial_density(o);
    auto pts = density_breakpoints(d, cfg);
    const double inv_r2 = density_expectation(d, [len](double x) { return 1.0 / (len * len * x * x); }, pts, cfg,
                                              "<r^-2>");
    for (double& p : pts) p *= len;
    const double radial = radial_fisher_term([&o](double r) { return radial_function(o, r); }, pts, len, cfg);
    return radial + inv_r2 * angular_fisher_term(o.l, o.m, cfg);
}

}  // namespace qcx
