#include "qcx/specfun.hpp"

#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qcx {

namespace {

constexpr double kBig = 1e150;
constexpr double kSmall = 1e-150;
const double kLogBig = std::log(kBig);

// x p_k = b_{k+1} p_{k+1} + a_k p_k + b_k p_{k-1} for the orthonormal families.
double jacobi_diag(const OrthoPolySpec& s, int k) {
    return s.family == Family::Laguerre ? 2.0 * k + 1.0 + s.param : 0.0;
}

double jacobi_off(const OrthoPolySpec& s, int k) {
    switch (s.family) {
        case Family::Hermite:
            return std::sqrt(0.5 * k);
        case Family::Laguerre:
            return -std::sqrt(k * (k + s.param));  // negative keeps the classical sign convention
        case Family::Gegenbauer: {
            const double lam = s.param;
            if (k == 1) return 0.5 * std::sqrt(2.0 / (1.0 + lam));
            return 0.5 * std::sqrt(k * (k + 2.0 * lam - 1.0) / ((k + lam) * (k + lam - 1.0)));
        }
    }
    return 0.0;
}

// Runs a three-term recurrence p_{k+1} = A_k(x) p_k - B_k p_{k-1}, rescaling
// when values leave the comfortable double range.
template <class Step>
ScaledValue run_recurrence(int n, double p0, double p1, Step step) {
    ScaledValue out;
    if (n == 0) {
        out.mantissa = p0;
        return out;
    }
    double prev = p0, cur = p1, shift = 0.0;
    for (int k = 1; k < n; ++k) {
        const double next = step(k, cur, prev);
        prev = cur;
        cur = next;
        const double mag = std::max(std::fabs(cur), std::fabs(prev));
        if (mag > kBig) {
            cur /= kBig;
            prev /= kBig;
            shift += kLogBig;
        } else if (mag < kSmall && mag > 0.0) {
            cur *= kBig;
            prev *= kBig;
            shift -= kLogBig;
        }
    }
    out.mantissa = cur;
    out.log_scale = shift;
    return out;
}

ScaledValue classical_scaled(const OrthoPolySpec& s, double x) {
    const int n = s.degree;
    switch (s.family) {
        case Family::Hermite:
            return run_recurrence(n, 1.0, 2.0 * x, [x](int k, double c, double p) { return 2.0 * x * c - 2.0 * k * p; });
        case Family::Laguerre: {
            const double a = s.param;
            return run_recurrence(n, 1.0, 1.0 + a - x, [x, a](int k, double c, double p) {
                return ((2.0 * k + 1.0 + a - x) * c - (k + a) * p) / (k + 1.0);
            });
        }
        case Family::Gegenbauer: {
            const double lam = s.param;
            return run_recurrence(n, 1.0, 2.0 * lam * x, [x, lam](int k, double c, double p) {
                return (2.0 * (k + lam) * x * c - (k + 2.0 * lam - 1.0) * p) / (k + 1.0);
            });
        }
    }
    return {};
}

ScaledValue orthonormal_scaled(const OrthoPolySpec& s, double x) {
    const int n = s.degree;
    const double p0 = std::exp(-0.5 * log_norm_sq({s.family, s.param, 0, Norm::classical}));
    const double a0 = jacobi_diag(s, 0);
    const double b1 = jacobi_off(s, 1);
    const double p1 = (x - a0) * p0 / b1;
    return run_recurrence(n, p0, p1, [&s, x](int k, double c, double p) {
        return ((x - jacobi_diag(s, k)) * c - jacobi_off(s, k) * p) / jacobi_off(s, k + 1);
    });
}

}  // namespace

double ScaledValue::value() const { return mantissa * std::exp(log_scale); }

double ScaledValue::log_abs() const {
    if (mantissa == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(std::fabs(mantissa)) + log_scale;
}

void validate(const OrthoPolySpec& s) {
    if (s.degree < 0) throw std::invalid_argument("polynomial degree must be non-negative");
    if (s.degree > kMaxDegree)
        throw std::invalid_argument("polynomial degree " + std::to_string(s.degree) + " exceeds cap " +
                                    std::to_string(kMaxDegree));
    if (s.family == Family::Laguerre && !(s.param > -1.0))
        throw std::invalid_argument("Laguerre alpha must exceed -1");
    if (s.family == Family::Gegenbauer) {
        if (!(s.param > -0.5)) throw std::invalid_argument("Gegenbauer lambda must exceed -1/2");
        if (s.param == 0.0) throw std::invalid_argument("Gegenbauer lambda = 0 is not supported");
    }
}

double log_norm_sq(const OrthoPolySpec& s) {
    const int n = s.degree;
    switch (s.family) {
        case Family::Hermite:
            // 2^n n! sqrt(pi)
            return n * std::numbers::ln2 + log_factorial(n) + 0.5 * std::log(std::numbers::pi);
        case Family::Laguerre:
            return log_gamma(n + s.param + 1.0) - log_factorial(n);
        case Family::Gegenbauer: {
            const double lam = s.param;
            if (n == 0)
                return 0.5 * std::log(std::numbers::pi) + log_gamma(lam + 0.5) - log_gamma(lam + 1.0);
            // pi 2^{1-2lam} Gamma(n+2lam) / (n! (n+lam) Gamma(lam)^2); Gamma(lam)^2 > 0 for lam in (-1/2, 0)
            return std::log(std::numbers::pi) + (1.0 - 2.0 * lam) * std::numbers::ln2 + log_gamma(n + 2.0 * lam) -
                   log_factorial(n) - std::log(n + lam) - 2.0 * boost::math::lgamma(lam);
        }
    }
    return 0.0;
}

ScaledValue eval_poly_scaled(const OrthoPolySpec& spec, double x) {
    validate(spec);
    return spec.norm == Norm::classical ? classical_scaled(spec, x) : orthonormal_scaled(spec, x);
}

double eval_poly(const OrthoPolySpec& spec, double x) { return eval_poly_scaled(spec, x).value(); }

double log_weight(const OrthoPolySpec& s, double x) {
    constexpr double ninf = -std::numeric_limits<double>::infinity();
    switch (s.family) {
        case Family::Hermite:
            return -x * x;
        case Family::Laguerre:
            if (x < 0.0) return ninf;
            if (x == 0.0) return s.param == 0.0 ? 0.0 : (s.param > 0.0 ? ninf : -ninf);
            return s.param * std::log(x) - x;
        case Family::Gegenbauer:
            if (x <= -1.0 || x >= 1.0) return ninf;
            return (s.param - 0.5) * std::log1p(-x * x);
    }
    return ninf;
}

double support_lo(const OrthoPolySpec& s) {
    switch (s.family) {
        case Family::Hermite:
            return -std::numeric_limits<double>::infinity();
        case Family::Laguerre:
            return 0.0;
        case Family::Gegenbauer:
            return -1.0;
    }
    return 0.0;
}

double support_hi(const OrthoPolySpec& s) {
    return s.family == Family::Gegenbauer ? 1.0 : std::numeric_limits<double>::infinity();
}

std::vector<double> zeros(const OrthoPolySpec& spec) {
    validate(spec);
    const int n = spec.degree;
    if (n == 0) return {};
    Eigen::VectorXd diag(n), sub(std::max(n - 1, 1));
    for (int k = 0; k < n; ++k) diag[k] = jacobi_diag(spec, k);
    for (int k = 1; k < n; ++k) sub[k - 1] = jacobi_off(spec, k);
    if (n == 1) return {diag[0]};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::EigenvaluesOnly);
    std::vector<double> z(es.eigenvalues().data(), es.eigenvalues().data() + n);
    return z;
}

std::vector<double> hermite_coeffs(int n) {
    validate(OrthoPolySpec::hermite(n));
    std::vector<double> c(n + 1, 0.0);
    const double lnorm = -0.5 * log_norm_sq(OrthoPolySpec::hermite(n));
    // H_n(x) = sum_m (-1)^m n!/(m!(n-2m)!) (2x)^{n-2m}
    for (int m = 0; 2 * m <= n; ++m) {
        const int p = n - 2 * m;
        const double lmag = log_factorial(n) - log_factorial(m) - log_factorial(p) + p * std::numbers::ln2 + lnorm;
        c[p] = (m % 2 ? -1.0 : 1.0) * std::exp(lmag);
    }
    return c;
}

std::vector<double> laguerre_coeffs(int n, double alpha) {
    validate(OrthoPolySpec::laguerre(n, alpha));
    std::vector<double> c(n + 1);
    const double lpre = 0.5 * (log_gamma(n + alpha + 1.0) - log_factorial(n));
    for (int k = 0; k <= n; ++k) {
        const double lmag = lpre + log_factorial(n) - log_factorial(k) - log_factorial(n - k) - log_gamma(alpha + k + 1.0);
        c[k] = (k % 2 ? -1.0 : 1.0) * std::exp(lmag);
    }
    return c;
}

double wigner3j(int j1, int j2, int j3, int m1, int m2, int m3) {
    if (j1 < 0 || j2 < 0 || j3 < 0) return 0.0;
    if (m1 + m2 + m3 != 0) return 0.0;
    if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(m3) > j3) return 0.0;
    if (j3 > j1 + j2 || j3 < std::abs(j1 - j2)) return 0.0;

    const double ldelta = log_factorial(j1 + j2 - j3) + log_factorial(j1 - j2 + j3) + log_factorial(-j1 + j2 + j3) -
                          log_factorial(j1 + j2 + j3 + 1);
    const double lpre = 0.5 * (ldelta + log_factorial(j1 + m1) + log_factorial(j1 - m1) + log_factorial(j2 + m2) +
                               log_factorial(j2 - m2) + log_factorial(j3 + m3) + log_factorial(j3 - m3));

    const int kmin = std::max({0, j2 - j3 - m1, j1 - j3 + m2});
    const int kmax = std::min({j1 + j2 - j3, j1 - m1, j2 + m2});
    long double sum = 0.0L;
    for (int k = kmin; k <= kmax; ++k) {
        const double lt = lpre - (log_factorial(k) + log_factorial(j3 - j2 + k + m1) + log_factorial(j3 - j1 + k - m2) +
                                  log_factorial(j1 + j2 - j3 - k) + log_factorial(j1 - k - m1) +
                                  log_factorial(j2 - k + m2));
        const long double term = std::exp(static_cast<long double>(lt));
        sum += (k % 2 ? -term : term);
    }
    const int phase = j1 - j2 - m3;
    return static_cast<double>((phase % 2 != 0 ? -1.0L : 1.0L) * sum);
}

double digamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("digamma requires a positive argument");
    return boost::math::digamma(x);
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma requires a positive argument");
    return boost::math::lgamma(x);
}

double log_factorial(int n) {
    if (n < 0) throw std::domain_error("log_factorial of a negative integer");
    static const std::vector<double> table = [] {
        std::vector<double> t(1024);
        for (int i = 0; i < 1024; ++i) t[i] = boost::math::lgamma(i + 1.0);
        return t;
    }();
    if (n < 1024) return table[n];
    return boost::math::lgamma(n + 1.0);
}

double log_binomial(double a, double b) {
    return log_gamma(a + 1.0) - log_gamma(b + 1.0) - log_gamma(a - b + 1.0);
}

}  // namespace qcx
