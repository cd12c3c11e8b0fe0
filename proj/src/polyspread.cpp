#include "qcx/polyspread.hpp"

#include "qcx/bellpoly.hpp"
#include "qcx/specfun.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qcx {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

void check_n(int n) {
    if (n < 0) throw std::invalid_argument("degree must be non-negative");
    if (n > kMaxDegree) throw std::invalid_argument("degree exceeds cap " + std::to_string(kMaxDegree));
}

void check_alpha(double alpha) {
    if (!(alpha > -1.0)) throw std::invalid_argument("Laguerre alpha must exceed -1");
}

bool is_integer(double q) { return q == std::floor(q); }

// Integer-normalized coefficients of H_n: (-1)^m n! / (m! (n-2m)!) 2^{n-2m}.
std::vector<WideFloat> hermite_coeffs_wide(int n) {
    std::vector<WideFloat> c(n + 1);
    WideFloat nf = 1;
    for (int i = 2; i <= n; ++i) nf *= i;
    for (int m = 0; 2 * m <= n; ++m) {
        const int p = n - 2 * m;
        WideFloat den = 1;
        for (int i = 2; i <= m; ++i) den *= i;
        for (int i = 2; i <= p; ++i) den *= i;
        WideFloat t = nf / den * boost::multiprecision::pow(WideFloat(2), p);
        c[p] = m % 2 ? WideFloat(-t) : t;
    }
    return c;
}

// Coefficients of L_n^alpha: (-1)^k Gamma(n+alpha+1) / (Gamma(alpha+k+1) (n-k)! k!).
std::vector<WideFloat> laguerre_coeffs_wide(int n, double alpha) {
    std::vector<WideFloat> c(n + 1);
    const WideFloat a = alpha;
    const WideFloat top = boost::math::tgamma(a + n + 1);
    for (int k = 0; k <= n; ++k) {
        WideFloat den = boost::math::tgamma(a + k + 1);
        for (int i = 2; i <= n - k; ++i) den *= i;
        for (int i = 2; i <= k; ++i) den *= i;
        c[k] = k % 2 ? WideFloat(-top / den) : WideFloat(top / den);
    }
    return c;
}

double quadrature_wq(const OrthoPolySpec& spec, double q, const QuadConfig& cfg) {
    const Density1D d = rakhmanov_density(spec);
    return density_entropic_moment(d, q, density_breakpoints(d, cfg), cfg);
}

double shannon_of(const OrthoPolySpec& spec, const QuadConfig& cfg) {
    const Density1D d = rakhmanov_density(spec);
    return density_shannon(d, density_breakpoints(d, cfg), cfg);
}

}  // namespace

// ---------------------------------------------------------------- Hermite

double hermite_moment(int n, int k) {
    check_n(n);
    if (k < 0) throw std::invalid_argument("moment order must be non-negative");
    if (k % 2) return 0.0;
    // k!/(2^k Gamma(k/2+1)) 2F1(-n, -k/2; 1; 2); all terms of the terminating series are positive
    const int h = k / 2;
    double sum = 0.0;
    for (int j = 0; j <= std::min(n, h); ++j)
        sum += std::exp(log_binomial(n, j) + log_binomial(h, j) + j * std::numbers::ln2);
    return std::exp(log_factorial(k) - k * std::numbers::ln2 - log_factorial(h)) * sum;
}

double hermite_stddev(int n) {
    check_n(n);
    return std::sqrt(n + 0.5);
}

double hermite_entropic_moment(int n, double q, WqMethod method, const QuadConfig& cfg) {
    check_n(n);
    if (!(q > 0.0)) throw std::invalid_argument("entropic moment order must be positive");
    if (method == WqMethod::quadrature) return quadrature_wq(OrthoPolySpec::hermite(n), q, cfg);
    if (method == WqMethod::lauricella) throw std::invalid_argument("Lauricella route is defined for Laguerre only");
    if (!is_integer(q)) throw std::invalid_argument("Bell route requires integer q");
    const int qi = static_cast<int>(q);
    if (n * qi > kBellCap) throw std::invalid_argument("Bell route cap n*q <= 60 exceeded");
    const auto A = poly_power_coeffs_wide(hermite_coeffs_wide(n), 2 * qi);
    // W_q = (2^n n! sqrt(pi))^{-q} sum_j A_{2j} Gamma(j+1/2) / q^{j+1/2}
    const WideFloat wq = qi;
    WideFloat sum = 0;
    for (std::size_t k = 0; k < A.size(); k += 2) {
        if (A[k] == 0) continue;
        const WideFloat j = static_cast<int>(k / 2);
        sum += A[k] * boost::math::tgamma(j + WideFloat(0.5)) / pow(wq, j + WideFloat(0.5));
    }
    WideFloat norm = pow(WideFloat(2), n) * sqrt(boost::math::constants::pi<WideFloat>());
    for (int i = 2; i <= n; ++i) norm *= i;
    return static_cast<double>(sum / pow(norm, qi));
}

double hermite_renyi_length(int n, double q, WqMethod method, const QuadConfig& cfg) {
    if (q == 1.0) throw std::invalid_argument("Renyi length needs q != 1");
    return std::pow(hermite_entropic_moment(n, q, method, cfg), -1.0 / (q - 1.0));
}

double hermite_shannon_length(int n, const QuadConfig& cfg) {
    check_n(n);
    return std::exp(shannon_of(OrthoPolySpec::hermite(n), cfg));
}

double hermite_shannon_bound(int n, int k) {
    check_n(n);
    if (k <= 0 || k % 2) throw std::invalid_argument("bound order k must be a positive even integer");
    const double kk = k;
    // (ek)^{1/k}/k Gamma(1/k) [k!/Gamma(k/2+1) 2F1]^{1/k} = 2 (ek)^{1/k}/k Gamma(1/k) <x^k>^{1/k}
    return std::exp(std::log(2.0) + (1.0 + std::log(kk)) / kk - std::log(kk) + log_gamma(1.0 / kk) +
                    std::log(hermite_moment(n, k)) / kk);
}

ShannonBound hermite_optimal_bound(int n, int k_max) {
    ShannonBound best{0, 0, std::numeric_limits<double>::infinity()};
    for (int k = 2; k <= k_max; k += 2) {
        const double c = hermite_shannon_bound(n, k);
        if (c < best.bound) best = {static_cast<double>(k), 0.0, c};
    }
    return best;
}

FisherPair hermite_fisher(int n) {
    check_n(n);
    const double F = 4.0 * n + 2.0;
    return {{F, false}, 1.0 / std::sqrt(F)};
}

double hermite_wq_asymptotic_constant(double q) {
    if (!(q >= 0.0 && q <= 4.0 / 3.0)) throw std::invalid_argument("asymptotic form holds for q in [0, 4/3]");
    return std::pow(2.0 / kPi, q) * std::tgamma(q + 0.5) * std::tgamma(1.0 - q / 2.0) /
           (std::tgamma(q + 1.0) * std::tgamma(1.5 - q / 2.0));
}

SpreadingReport hermite_report(int n, const std::vector<double>& qs, const QuadConfig& cfg) {
    SpreadingReport r;
    r.n = n;
    for (int k = 0; k <= 4; k += 2) r.moments[k] = hermite_moment(n, k);
    r.std_dev = hermite_stddev(n);
    r.method["moments"] = "closed-form";
    r.method["std_dev"] = "closed-form";
    r.entropic_moments[1.0] = 1.0;
    for (double q : qs) {
        const bool bell = is_integer(q) && n * q <= kBellCap;
        const double w = hermite_entropic_moment(n, q, bell ? WqMethod::bell : WqMethod::quadrature, cfg);
        r.entropic_moments[q] = w;
        if (q != 1.0) r.renyi_lengths[q] = std::pow(w, -1.0 / (q - 1.0));
        r.method["W_" + std::to_string(q)] = bell ? "bell" : "quadrature";
    }
    r.shannon_length = hermite_shannon_length(n, cfg);
    r.method["shannon_length"] = "quadrature";
    r.shannon_asymptotic = kPi * std::sqrt(2.0) / kE * r.std_dev;
    r.shannon_bounds.push_back(hermite_optimal_bound(n));
    const auto f = hermite_fisher(n);
    r.fisher_info = f.F;
    r.fisher_length = f.delta_x;
    r.method["fisher"] = "closed-form";
    return r;
}

SpreadingReport oscillator_rescale(const SpreadingReport& r, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("oscillator frequency lambda must be positive");
    SpreadingReport o = r;
    const double s = 1.0 / std::sqrt(lambda);
    for (auto& [k, v] : o.moments) v *= std::pow(lambda, -0.5 * k);
    o.std_dev *= s;
    for (auto& [q, w] : o.entropic_moments) w *= std::pow(lambda, 0.5 * (q - 1.0));
    for (auto& [q, l] : o.renyi_lengths) l *= s;
    o.shannon_length *= s;
    o.shannon_asymptotic *= s;
    for (auto& b : o.shannon_bounds) b.bound *= s;
    if (!o.fisher_info.divergent) o.fisher_info.value *= lambda;
    o.fisher_length *= s;
    return o;
}

// ---------------------------------------------------------------- Laguerre

double laguerre_moment(int n, double alpha, int k) {
    check_n(n);
    check_alpha(alpha);
    if (k < 0) throw std::invalid_argument("moment order must be non-negative");
    // n! Gamma(k+a+1)/Gamma(n+a+1) sum_r C(k, n-r)^2 C(k+a+r, r); positive terms
    double sum = 0.0;
    for (int r = std::max(0, n - k); r <= n; ++r)
        sum += std::exp(2.0 * log_binomial(k, n - r) + log_binomial(k + alpha + r, r));
    return std::exp(log_factorial(n) + log_gamma(k + alpha + 1.0) - log_gamma(n + alpha + 1.0)) * sum;
}

double laguerre_stddev(int n, double alpha) {
    check_n(n);
    check_alpha(alpha);
    return std::sqrt(2.0 * n * n + 2.0 * (alpha + 1.0) * n + alpha + 1.0);
}

FisherPair laguerre_fisher(int n, double alpha) {
    check_n(n);
    check_alpha(alpha);
    if (alpha == 0.0) return {{4.0 * n + 1.0, false}, 1.0 / std::sqrt(4.0 * n + 1.0)};
    if (alpha > 1.0) {
        const double F = ((2.0 * n + 1.0) * alpha + 1.0) / (alpha * alpha - 1.0);
        return {{F, false}, 1.0 / std::sqrt(F)};
    }
    return {{std::numeric_limits<double>::infinity(), true}, 0.0};
}

namespace {

double laguerre_wq_bell(int n, double alpha, int q) {
    if (n * q > kBellCap) throw std::invalid_argument("Bell route cap n*q <= 60 exceeded");
    const auto A = poly_power_coeffs_wide(laguerre_coeffs_wide(n, alpha), 2 * q);
    // W_q = (n! / Gamma(n+alpha+1))^q sum_k A_k Gamma(alpha q + k + 1) / q^{alpha q + k + 1}
    const WideFloat wq = q, aq = WideFloat(alpha) * q;
    WideFloat sum = 0;
    for (std::size_t k = 0; k < A.size(); ++k) {
        if (A[k] == 0) continue;
        const WideFloat e = aq + static_cast<int>(k) + 1;
        sum += A[k] * boost::math::tgamma(e) / pow(wq, e);
    }
    WideFloat nf = 1;
    for (int i = 2; i <= n; ++i) nf *= i;
    return static_cast<double>(sum * pow(nf / boost::math::tgamma(WideFloat(alpha) + n + 1), q));
}

double laguerre_wq_lauricella(int n, double alpha, int q) {
    if (n > 3 || q > 3) throw std::invalid_argument("Lauricella route is restricted to n <= 3, q <= 3");
    const int vars = 2 * q;  // the (2q+1)-th index is pinned to 0
    const WideFloat a = alpha, wq = q, aq1 = a * q + 1;
    // per-index factor (-n)_m / ((alpha+1)_m m!) q^{-m}
    std::vector<WideFloat> f(n + 1);
    f[0] = 1;
    for (int m = 1; m <= n; ++m) f[m] = f[m - 1] * (m - 1 - n) / ((a + m) * m * wq);
    // (alpha q + 1)_t for t <= vars n
    std::vector<WideFloat> poch(vars * n + 1);
    poch[0] = 1;
    for (int t = 1; t <= vars * n; ++t) poch[t] = poch[t - 1] * (aq1 + t - 1);
    std::vector<int> idx(vars, 0);
    WideFloat FA = 0;
    while (true) {
        int tot = 0;
        WideFloat t = 1;
        for (int v : idx) {
            tot += v;
            t *= f[v];
        }
        FA += t * poch[tot];
        int p = 0;
        while (p < vars && ++idx[p] > n) idx[p++] = 0;
        if (p == vars) break;
    }
    const double lpre = q * (log_factorial(n) - log_gamma(alpha + n + 1.0)) - (alpha * q + 1.0) * std::log(q) +
                        log_gamma(alpha * q + 1.0) + 2.0 * q * log_binomial(n + alpha, n);
    return std::exp(lpre) * static_cast<double>(FA);
}

}  // namespace

double laguerre_entropic_moment(int n, double alpha, double q, WqMethod method, const QuadConfig& cfg) {
    check_n(n);
    check_alpha(alpha);
    if (!(q > 0.0)) throw std::invalid_argument("entropic moment order must be positive");
    if (method == WqMethod::quadrature) return quadrature_wq(OrthoPolySpec::laguerre(n, alpha), q, cfg);
    if (!is_integer(q)) throw std::invalid_argument("algebraic routes require integer q");
    const int qi = static_cast<int>(q);
    return method == WqMethod::bell ? laguerre_wq_bell(n, alpha, qi) : laguerre_wq_lauricella(n, alpha, qi);
}

double laguerre_renyi_length(int n, double alpha, double q, WqMethod method, const QuadConfig& cfg) {
    if (q == 1.0) throw std::invalid_argument("Renyi length needs q != 1");
    return std::pow(laguerre_entropic_moment(n, alpha, q, method, cfg), -1.0 / (q - 1.0));
}

LaguerreShannon laguerre_shannon_length(int n, double alpha, const QuadConfig& cfg) {
    check_n(n);
    check_alpha(alpha);
    LaguerreShannon s;
    s.J_part = 2.0 * n + alpha + 1.0 - alpha * digamma(alpha + n + 1.0);
    s.E_part = -entropic_integral_E(OrthoPolySpec::laguerre(n, alpha), 0, cfg);
    s.N = std::exp(s.E_part + s.J_part);
    return s;
}

// <ln x> = psi(n + alpha + 1): the s-derivative at 0 of the Mellin moment below
double laguerre_log_mean(int n, double alpha) {
    check_n(n);
    check_alpha(alpha);
    return boost::math::digamma(n + alpha + 1.0);
}

namespace {

double log_bound(double b, double m, double log_xb, double log_mean) {
    const double beta = (1.0 + m) / b;
    return log_gamma(beta) + beta - std::log(b) - beta * std::log(beta) + beta * log_xb - m * log_mean;
}

// <x^s> = n!/Gamma(n+alpha+1) sum_k C(n-k-s-1, n-k)^2 Gamma(alpha+s+k+1)/k!, all terms non-negative
double laguerre_general_moment(int n, double alpha, double s) {
    if (is_integer(s)) return laguerre_moment(n, alpha, static_cast<int>(s));
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        double c = 1.0;
        for (int i = 1; i <= n - k; ++i) c *= (i - s - 1.0) / i;
        sum += c * c * std::exp(log_gamma(alpha + s + k + 1.0) - log_factorial(k) + log_factorial(n) -
                                log_gamma(n + alpha + 1.0));
    }
    return sum;
}

}  // namespace

double laguerre_shannon_bound(int n, double alpha, double b, double m) {
    if (!(b > 0.0) || !(m > -1.0)) throw std::invalid_argument("bound requires b > 0 and m > -1");
    const double lm = m == 0.0 ? 0.0 : laguerre_log_mean(n, alpha);
    return std::exp(log_bound(b, m, std::log(laguerre_general_moment(n, alpha, b)), lm));
}

ShannonBound laguerre_optimal_bound(int n, double alpha, bool fix_m, int b_max) {
    check_n(n);
    check_alpha(alpha);
    const double lm = fix_m ? 0.0 : laguerre_log_mean(n, alpha);
    ShannonBound best{0, 0, std::numeric_limits<double>::infinity()};
    double best_log = std::numeric_limits<double>::infinity();
    for (int b = 1; b <= b_max; ++b) {
        const double lxb = std::log(laguerre_moment(n, alpha, b));
        if (fix_m) {
            const double v = log_bound(b, 0.0, lxb, 0.0);
            if (v < best_log) {
                best_log = v;
                best = {static_cast<double>(b), 0.0, 0.0};
            }
            continue;
        }
        // grid in m, then golden-section on the bracketing cell
        int arg = 0;
        double vmin = std::numeric_limits<double>::infinity();
        const int steps = 6900;  // [-0.9, 6] at 0.001
        for (int i = 0; i <= steps; ++i) {
            const double m = -0.9 + 0.001 * i;
            const double v = log_bound(b, m, lxb, lm);
            if (v < vmin) {
                vmin = v;
                arg = i;
            }
        }
        double lo = -0.9 + 0.001 * std::max(arg - 1, 0), hi = -0.9 + 0.001 * std::min(arg + 1, steps);
        const double g = 0.5 * (std::sqrt(5.0) - 1.0);
        for (int it = 0; it < 60; ++it) {
            const double c = hi - g * (hi - lo), d = lo + g * (hi - lo);
            if (log_bound(b, c, lxb, lm) < log_bound(b, d, lxb, lm))
                hi = d;
            else
                lo = c;
        }
        const double m = 0.5 * (lo + hi);
        const double v = std::min(vmin, log_bound(b, m, lxb, lm));
        if (v < best_log) {
            best_log = v;
            best = {static_cast<double>(b), v == vmin ? -0.9 + 0.001 * arg : m, 0.0};
        }
    }
    best.bound = std::exp(best_log);
    return best;
}

double laguerre_shannon_asymptotic(int n, double alpha) {
    check_n(n);
    check_alpha(alpha);
    if (n == 0) throw std::invalid_argument("asymptotic Shannon length needs n >= 1");
    return 2.0 * kPi * std::pow(n, alpha + 1.0) * std::exp(-alpha * digamma(alpha + n + 1.0) - 1.0);
}

SpreadingReport laguerre_report(int n, double alpha, const std::vector<double>& qs, const QuadConfig& cfg) {
    SpreadingReport r;
    r.n = n;
    r.alpha = alpha;
    r.laguerre = true;
    for (int k = 0; k <= 4; ++k) r.moments[k] = laguerre_moment(n, alpha, k);
    r.std_dev = laguerre_stddev(n, alpha);
    r.method["moments"] = "closed-form";
    r.method["std_dev"] = "closed-form";
    r.entropic_moments[1.0] = 1.0;
    for (double q : qs) {
        const bool bell = is_integer(q) && n * q <= kBellCap;
        const double w = laguerre_entropic_moment(n, alpha, q, bell ? WqMethod::bell : WqMethod::quadrature, cfg);
        r.entropic_moments[q] = w;
        if (q != 1.0) r.renyi_lengths[q] = std::pow(w, -1.0 / (q - 1.0));
        r.method["W_" + std::to_string(q)] = bell ? "bell" : "quadrature";
    }
    r.shannon_length = laguerre_shannon_length(n, alpha, cfg).N;
    r.method["shannon_length"] = "closed-form+quadrature";
    r.shannon_asymptotic = n > 0 ? laguerre_shannon_asymptotic(n, alpha) : 0.0;
    r.shannon_bounds.push_back(laguerre_optimal_bound(n, alpha, true));
    r.shannon_bounds.push_back(laguerre_optimal_bound(n, alpha, false));
    const auto f = laguerre_fisher(n, alpha);
    r.fisher_info = f.F;
    r.fisher_length = f.delta_x;
    r.method["fisher"] = "closed-form";
    return r;
}

// ---------------------------------------------------------------- fits

LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 3) throw std::invalid_argument("least squares needs >= 3 paired points");
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("degenerate abscissae in least squares");
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.correlation = syy > 0.0 ? sxy / std::sqrt(sxx * syy) : 1.0;
    return f;
}

LinearFit fit_shannon_vs_stddev(PolyFamily family, double alpha, const std::vector<int>& ns, const QuadConfig& cfg) {
    if (ns.size() < 3) throw std::invalid_argument("fit needs at least 3 degrees");
    std::vector<double> x(ns.size()), y(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (family == PolyFamily::hermite) {
            x[i] = hermite_stddev(ns[i]);
            y[i] = hermite_shannon_length(ns[i], cfg);
        } else {
            x[i] = laguerre_stddev(ns[i], alpha);
            y[i] = laguerre_shannon_length(ns[i], alpha, cfg).N;
        }
    }
    return least_squares(x, y);
}

}  // namespace qcx
