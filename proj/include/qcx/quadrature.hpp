#pragma once

#include "qcx/specfun.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcx {

struct QuadConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 2000;      // per integration segment
    double tail_cutoff_ratio = 1e-18;  // density/peak threshold for tail truncation

    void check() const;
    // Defaults overridden by QCX_TOL_ABS / QCX_TOL_REL when set.
    static QuadConfig from_env();
};

class NonConvergence : public std::runtime_error {
public:
    NonConvergence(std::string integral, double partial, double error);
    const std::string& integral() const { return integral_; }
    double partial() const { return partial_; }
    double error_estimate() const { return error_; }

private:
    std::string integral_;
    double partial_;
    double error_;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
};

using Func = std::function<double(double)>;

// Adaptive order-40 Gauss-Legendre with bisection.  Infinite endpoints are
// mapped onto a finite interval.
QuadResult integrate(const Func& f, double a, double b, const QuadConfig& cfg = {},
                     const std::string& name = "integral");

// Tanh-sinh on a finite interval; for integrable power or log singularities at
// either endpoint.
QuadResult integrate_endpoint_singular(const Func& f, double a, double b, const QuadConfig& cfg = {},
                                       const std::string& name = "integral");

// Integrates over consecutive segments [p_0,p_1], [p_1,p_2], ...  Segments run
// in parallel when OpenMP is available; the sum is always taken in segment
// order so the result does not depend on the thread count.
QuadResult integrate_breaks(const Func& f, const std::vector<double>& points, const QuadConfig& cfg = {},
                            const std::string& name = "integral");
// Single-threaded reference of integrate_breaks, kept for tests and benchmarks.
QuadResult integrate_breaks_serial(const Func& f, const std::vector<double>& points, const QuadConfig& cfg = {},
                                   const std::string& name = "integral");

enum class TailDecay { exponential, gaussian, rational };

struct Density1D {
    Func eval;                // rho(x) >= 0
    Func log_eval;            // optional ln rho(x); -inf at zeros
    Func amplitude;           // optional signed sqrt(rho) used for Fisher
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> singular_points;  // zeros of the density, ascending
    TailDecay tail = TailDecay::exponential;
    double scale = 1.0;  // characteristic length; sets finite-difference steps and tail marching

    double log_at(double x) const;
    double at(double x) const;
};

// Breakpoints covering the support, with infinite tails truncated where the
// density drops below cfg.tail_cutoff_ratio times its peak.
std::vector<double> density_breakpoints(const Density1D& d, const QuadConfig& cfg);

struct FisherValue {
    double value = 0.0;
    bool divergent = false;
};

struct MeasureSet {
    double norm = 0.0;
    double mean = 0.0;
    double variance = 0.0;
    double shannon = 0.0;
    double shannon_power = 0.0;  // exp(S)
    FisherValue fisher;
    double disequilibrium = 0.0;
    std::map<double, double> renyi;
    std::map<double, double> tsallis;
};

MeasureSet density_measures(const Density1D& d, const std::vector<double>& q_list, const QuadConfig& cfg = {});

// Individual definitional integrals, shared with the physics modules.
double density_shannon(const Density1D& d, const std::vector<double>& pts, const QuadConfig& cfg);
double density_entropic_moment(const Density1D& d, double q, const std::vector<double>& pts, const QuadConfig& cfg);
FisherValue density_fisher(const Density1D& d, const std::vector<double>& pts, const QuadConfig& cfg);
double density_expectation(const Density1D& d, const Func& g, const std::vector<double>& pts, const QuadConfig& cfg,
                           const std::string& name = "expectation");

// Rakhmanov density w(x) p_n(x)^2 of an orthonormal polynomial.
Density1D rakhmanov_density(const OrthoPolySpec& spec);

// int x^i w(x) p_n(x)^2 ln p_n(x)^2 dx, sign-free (no leading minus).
double entropic_integral_E(const OrthoPolySpec& spec, int weight_power, const QuadConfig& cfg = {});
// Same integrand with an extra factor x^i replaced by an arbitrary g(x).
double weighted_entropic_integral(const OrthoPolySpec& spec, const Func& g, const QuadConfig& cfg = {});

}  // namespace qcx
