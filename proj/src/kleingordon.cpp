#include "qcx/kleingordon.hpp"

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
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

OrthoPolySpec kg_poly(const KGOrbital& o, double lp) { return OrthoPolySpec::laguerre(o.n - o.l - 1, 2.0 * lp + 1.0); }

// ln of the charge density in s = beta r, without the polynomial factor
double log_prefactor(const KGOrbital& o, const KGDerived& d, double s) {
    const double mc2 = o.mass * kSpeedOfLight * kSpeedOfLight;
    return std::log(d.N2 / mc2) + std::log(d.eps_over_beta * s + o.Z) - std::log(s) + (2.0 * d.l_prime + 2.0) * std::log(s) -
           s;
}

double log_charge_s(const KGOrbital& o, const KGDerived& d, double s) {
    if (s <= 0.0) return -kInf;
    const double lp = eval_poly_scaled(kg_poly(o, d.l_prime), s).log_abs();
    if (lp == -kInf) return -kInf;
    return log_prefactor(o, d, s) + 2.0 * lp;
}

Density1D charge_density_s(const KGOrbital& o, const KGDerived& d) {
    Density1D den;
    den.log_eval = [o, d](double s) { return log_charge_s(o, d, s); };
    den.eval = [f = den.log_eval](double s) { return std::exp(f(s)); };
    den.lo = 0.0;
    den.hi = kInf;
    den.singular_points = zeros(kg_poly(o, d.l_prime));
    den.scale = 1.0;
    return den;
}

// Integrands exp(lg(s)) * mild(s) behave like s^p at the origin with
// non-integer p > -1.  The first panel is mapped by s = t^{1/(p+1)}, which turns
// the power into a constant, and handed to tanh-sinh for the remaining
// logarithmic factors.
double integrate_s(const Func& lg, const Func& mild, double p, const Density1D& den, const QuadConfig& cfg,
                   const std::string& name) {
    if (!(p > -1.0)) throw std::invalid_argument("non-integrable power at the origin in " + name);
    Func f = [&](double s) {
        const double v = lg(s);
        return v == -kInf ? 0.0 : std::exp(v) * mild(s);
    };
    std::vector<double> pts = density_breakpoints(den, cfg);
    const double q = 1.0 / (p + 1.0);
    Func g = [&, q](double t) {
        const double lt = std::log(t), s = std::exp(q * lt);
        if (!(s > 0.0)) return 0.0;
        const double v = lg(s);
        return v == -kInf ? 0.0 : q * std::exp(v + (q - 1.0) * lt) * mild(s);
    };
    double v = integrate_endpoint_singular(g, 0.0, std::pow(pts[1], 1.0 / q), cfg, name).value;
    pts.erase(pts.begin());
    if (pts.size() > 1) v += integrate_breaks(f, pts, cfg, name).value;
    return v;
}

double one(double) { return 1.0; }

}  // namespace

void KGOrbital::validate() const {
    if (!(Z > 0.0)) throw std::invalid_argument("nuclear charge Z must be positive");
    if (!(mass > 0.0)) throw std::invalid_argument("particle mass must be positive");
    if (n < 1) throw std::invalid_argument("principal quantum number n must be >= 1");
    if (l < 0 || l > n - 1) throw std::invalid_argument("orbital quantum number must satisfy 0 <= l <= n-1");
    if (std::abs(m) > l) throw std::invalid_argument("magnetic quantum number must satisfy |m| <= l");
    if (n - l - 1 > kMaxDegree) throw std::invalid_argument("radial degree exceeds polynomial cap");
    const double g = Z * kFineStructure;
    if (!(g < l + 0.5)) throw std::invalid_argument("supercritical coupling: Z alpha must be below l + 1/2");
}

KGDerived kg_derived(const KGOrbital& o) {
    o.validate();
    const double c = kSpeedOfLight;
    KGDerived d;
    d.gamma = o.Z * kFineStructure;
    const double a = o.l + 0.5;
    d.l_prime = std::sqrt((a - d.gamma) * (a + d.gamma)) - 0.5;
    const double nq = o.n - o.l + d.l_prime;
    const double g = d.gamma / nq;
    const double root = std::sqrt(1.0 + g * g);
    d.epsilon = o.mass * c * c / root;
    // 1 - (eps/m0c^2)^2 = g^2/(1+g^2), written to avoid cancellation
    d.beta = 2.0 * o.mass * c * g / root;
    d.eps_over_beta = d.epsilon / d.beta;
    const double target = c * nq / (2.0 * d.gamma);
    d.identity_residual = std::fabs(d.eps_over_beta - target) / target;
    d.N2 = o.mass * c * c / (2.0 * d.eps_over_beta * nq + o.Z);
    return d;
}

double kg_charge_density(const KGOrbital& o, double r) {
    const KGDerived d = kg_derived(o);
    if (r <= 0.0) return 0.0;
    return d.beta * std::exp(log_charge_s(o, d, d.beta * r));
}

double kg_density_3d(const KGOrbital& o, double r, double theta) {
    if (r <= 0.0) throw std::invalid_argument("radius must be positive");
    return kg_charge_density(o, r) / (r * r) * angular_abs2(o.l, o.m, std::cos(theta));
}

double kg_nli_density(const KGOrbital& o, double r) {
    const KGDerived d = kg_derived(o);
    if (r <= 0.0) return 0.0;
    const double s = d.beta * r;
    const double lp = eval_poly_scaled(kg_poly(o, d.l_prime), s).log_abs();
    if (lp == -kInf) return 0.0;
    return std::exp(std::log(d.N2) + (2.0 * d.l_prime + 2.0) * std::log(s) - s + 2.0 * lp);
}

double kg_nli_norm(const KGOrbital& o) {
    const KGDerived d = kg_derived(o);
    return d.N2 * kg_I_integral(o.n, o.l, d.l_prime, 0) / d.beta;
}

double kg_I_integral(int n, int l, double lp, int k) {
    if (k < -1) throw std::invalid_argument("k must be >= -1");
    if (n < 1 || l < 0 || l > n - 1) throw std::invalid_argument("invalid (n, l)");
    if (!(lp > -1.0)) throw std::invalid_argument("l' must exceed -1");
    const int nr = n - l - 1;
    const double pre = log_factorial(nr) - log_gamma(nr + 2.0 * lp + 2.0);
    double s = 0.0;
    for (int j = std::max(0, nr - k - 1); j <= nr; ++j)
        s += std::exp(pre + 2.0 * log_binomial(k + 1.0, nr - j) + log_gamma(2.0 * lp + k + j + 3.0) - log_factorial(j));
    return s;
}

double kg_r_moment(const KGOrbital& o, int k) {
    if (k < 0) throw std::invalid_argument("moment order must be >= 0");
    const KGDerived d = kg_derived(o);
    const double mc2 = o.mass * kSpeedOfLight * kSpeedOfLight;
    return d.N2 / mc2 * std::pow(d.beta, -k) *
           (d.eps_over_beta * kg_I_integral(o.n, o.l, d.l_prime, k) + o.Z * kg_I_integral(o.n, o.l, d.l_prime, k - 1));
}

double kg_variance(const KGOrbital& o) {
    const double r1 = kg_r_moment(o, 1);
    return kg_r_moment(o, 2) - r1 * r1;
}

KGCircular kg_circular_closed(const KGOrbital& o) {
    if (o.l != o.n - 1) throw std::invalid_argument("circular closed forms need l = n - 1");
    const KGDerived d = kg_derived(o);
    const double g = d.gamma, g2 = g * g, lp1 = d.l_prime + 1.0;
    const double len = 1.0 / (o.mass * kSpeedOfLight);  // hbar c / m0 c^2
    KGCircular c;
    c.r1 = len / 4.0 / (g * std::sqrt(1.0 + g2 / (lp1 * lp1))) * ((2.0 * lp1) * (2.0 * lp1 + 1.0) + 4.0 * g2);
    c.r2 = len * len / (2.0 * g2) * lp1 * (2.0 * lp1 + 1.0) * (lp1 * (lp1 + 1.0) + g2);
    c.variance = len * len * lp1 / (4.0 * g2) * (lp1 * (2.0 * lp1 + 1.0) * (lp1 * lp1 + 2.0 * g2) + 2.0 * g2 * g2) /
                 (lp1 * lp1 + g2);
    return c;
}

double kg_charge_norm_quadrature(const KGOrbital& o, const QuadConfig& cfg) {
    return kg_r_moment_quadrature(o, 0.0, cfg);
}

double kg_r_moment_quadrature(const KGOrbital& o, double k, const QuadConfig& cfg) {
    const KGDerived d = kg_derived(o);
    const Density1D den = charge_density_s(o, d);
    const double v = integrate_s([&](double s) { return log_charge_s(o, d, s) + k * std::log(s); }, one,
                                 2.0 * d.l_prime + 1.0 + k, den, cfg, "charge moment");
    return v * std::pow(d.beta, -k);
}

KGShannon kg_shannon(const KGOrbital& o, const QuadConfig& cfg) {
    const KGDerived d = kg_derived(o);
    const Density1D den = charge_density_s(o, d);
    const double lb3 = 3.0 * std::log(d.beta);
    // rho_radial(r) = beta^3 P(s) / s^2
    Func lg = [&](double s) { return log_charge_s(o, d, s); };
    Func mild = [&](double s) { return -(lb3 + log_charge_s(o, d, s) - 2.0 * std::log(s)); };
    KGShannon out;
    out.radial = integrate_s(lg, mild, 2.0 * d.l_prime + 1.0, den, cfg, "charge radial entropy");
    out.angular = angular_shannon(o.l, o.m, cfg);
    out.S = out.radial + out.angular;
    out.N = std::exp(2.0 * out.S / 3.0) / (2.0 * kPi * kE);
    return out;
}

FisherValue kg_fisher(const KGOrbital& o, const QuadConfig& cfg) {
    const KGDerived d = kg_derived(o);
    // integrand ~ s^{2l'-1} at the origin
    if (d.l_prime <= 0.0) return {kInf, true};
    const Density1D den = charge_density_s(o, d);
    const OrthoPolySpec on = kg_poly(o, d.l_prime);
    const int k = on.degree;
    const double alpha = on.param;
    const double inv_sqrt_h = std::exp(-0.5 * log_norm_sq(OrthoPolySpec::laguerre(k, alpha, Norm::classical)));
    // (d/ds) ln(P/s^2) = a(s) + 2 L~'/L~
    Func radial = [&](double s) {
        // scaled by s to stay finite near the origin
        const double sa = d.eps_over_beta * s / (d.eps_over_beta * s + o.Z) + (2.0 * d.l_prime - 1.0) - s;
        const double Lt = eval_poly(on, s);
        const double dLt =
            k == 0 ? 0.0
                   : -eval_poly(OrthoPolySpec::laguerre(k - 1, alpha + 1.0, Norm::classical), s) * inv_sqrt_h;
        const double t = sa * Lt + 2.0 * s * dLt;
        return t * t;
    };
    const double b2 = d.beta * d.beta;
    double I = b2 * integrate_s([&](double s) { return log_prefactor(o, d, s) - 2.0 * std::log(s); }, radial,
                                2.0 * d.l_prime - 1.0, den, cfg, "charge radial fisher information");
    if (o.l > 0) {
        const double inv_s2 = integrate_s([&](double s) { return log_charge_s(o, d, s) - 2.0 * std::log(s); }, one,
                                          2.0 * d.l_prime - 1.0, den, cfg, "<r^-2>");
        I += b2 * inv_s2 * angular_fisher_term(o.l, o.m, cfg);
    }
    return {I, false};
}

FisherValue kg_disequilibrium(const KGOrbital& o, const QuadConfig& cfg) {
    const KGDerived d = kg_derived(o);
    // integrand ~ s^{4l'} at the origin
    if (4.0 * d.l_prime <= -1.0) return {kInf, true};
    const Density1D den = charge_density_s(o, d);
    const double radial = integrate_s(
        [&](double s) { return 2.0 * (log_charge_s(o, d, s) - std::log(s)); }, one, 4.0 * d.l_prime, den, cfg,
        "charge disequilibrium");
    const double angular = disequilibrium(Orbital3D{1.0, o.l + 1, o.l, o.m}).angular;
    return {std::pow(d.beta, 3) * radial * angular, false};
}

Orbital3D schrodinger_reference(const KGOrbital& o) {
    o.validate();
    return Orbital3D{o.Z * o.mass, o.n, o.l, o.m};
}

KGComplexities kg_complexities(const KGOrbital& o, const QuadConfig& cfg) {
    KGComplexities c;
    const KGShannon sh = kg_shannon(o, cfg);
    c.N = sh.N;
    c.fisher = kg_fisher(o, cfg);
    c.disequilibrium = kg_disequilibrium(o, cfg);
    c.C_FS = c.fisher.divergent ? kNaN : c.fisher.value * sh.N;
    c.C_SC = c.disequilibrium.divergent ? kNaN : c.disequilibrium.value * std::exp(sh.S);
    const Orbital3D ref = schrodinger_reference(o);
    const double S_sch = shannon(ref, cfg).S;
    c.sch_C_FS = fisher(ref) * std::exp(2.0 * S_sch / 3.0) / (2.0 * kPi * kE);
    c.sch_C_SC = disequilibrium(ref).total * std::exp(S_sch);
    c.zeta_FS = 1.0 - c.sch_C_FS / c.C_FS;
    c.zeta_SC = 1.0 - c.sch_C_SC / c.C_SC;
    return c;
}

KGReport kg_report(const KGOrbital& o, const QuadConfig& cfg) {
    KGReport r;
    r.derived = kg_derived(o);
    for (int k = 0; k <= 4; ++k) r.moments[k] = kg_r_moment(o, k);
    r.centroid = r.moments[1];
    r.variance = r.moments[2] - r.moments[1] * r.moments[1];
    r.shannon = kg_shannon(o, cfg);
    r.complexities = kg_complexities(o, cfg);
    const Orbital3D ref = schrodinger_reference(o);
    r.sch_centroid = r_expectation(ref);
    r.sch_variance = variance(ref);
    r.sch_N = std::exp(2.0 * shannon(ref, cfg).S / 3.0) / (2.0 * kPi * kE);
    r.sch_fisher = fisher(ref);
    r.ratio_centroid = r.centroid / r.sch_centroid;
    r.ratio_variance = r.variance / r.sch_variance;
    r.ratio_N = r.shannon.N / r.sch_N;
    r.ratio_fisher = r.complexities.fisher.divergent ? kNaN : r.sch_fisher / r.complexities.fisher.value;
    return r;
}

}  // namespace qcx
