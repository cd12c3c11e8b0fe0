#pragma once

#include "qcx/quadrature.hpp"

#include <map>
#include <string>
#include <vector>

namespace qcx {

enum class WqMethod { bell, lauricella, quadrature };

// Largest n*q accepted by the Bell route.
inline constexpr int kBellCap = 60;

struct ShannonBound {
    double b = 0.0;  // k for the Hermite family
    double m = 0.0;
    double bound = 0.0;
};

struct SpreadingReport {
    int n = 0;
    double alpha = 0.0;
    bool laguerre = false;
    std::map<int, double> moments;
    double std_dev = 0.0;
    std::map<double, double> entropic_moments;
    std::map<double, double> renyi_lengths;
    double shannon_length = 0.0;
    double shannon_asymptotic = 0.0;
    std::vector<ShannonBound> shannon_bounds;
    FisherValue fisher_info;
    double fisher_length = 0.0;
    std::map<std::string, std::string> method;  // field name -> "closed-form" | "bell" | "quadrature" ...
};

// Hermite (Rakhmanov density e^{-x^2} H_n(x)^2 with orthonormal H_n).
double hermite_moment(int n, int k);
double hermite_stddev(int n);
double hermite_entropic_moment(int n, double q, WqMethod method, const QuadConfig& cfg = {});
double hermite_renyi_length(int n, double q, WqMethod method = WqMethod::bell, const QuadConfig& cfg = {});
double hermite_shannon_length(int n, const QuadConfig& cfg = {});
double hermite_shannon_bound(int n, int k);
ShannonBound hermite_optimal_bound(int n, int k_max = 40);
struct FisherPair {
    FisherValue F;
    double delta_x = 0.0;
};
FisherPair hermite_fisher(int n);
// Large-n form of W_q (2n+1)^{(q-1)/2} for q in [0, 4/3].
double hermite_wq_asymptotic_constant(double q);

SpreadingReport hermite_report(int n, const std::vector<double>& qs, const QuadConfig& cfg = {});
SpreadingReport oscillator_rescale(const SpreadingReport& r, double lambda);

// Laguerre (Rakhmanov density x^alpha e^{-x} L_n(x)^2 with orthonormal L_n).
double laguerre_moment(int n, double alpha, int k);
double laguerre_stddev(int n, double alpha);
FisherPair laguerre_fisher(int n, double alpha);
double laguerre_entropic_moment(int n, double alpha, double q, WqMethod method, const QuadConfig& cfg = {});
double laguerre_renyi_length(int n, double alpha, double q, WqMethod method = WqMethod::bell,
                             const QuadConfig& cfg = {});
struct LaguerreShannon {
    double N = 0.0;
    double E_part = 0.0;
    double J_part = 0.0;
};
LaguerreShannon laguerre_shannon_length(int n, double alpha, const QuadConfig& cfg = {});
double laguerre_log_mean(int n, double alpha);
double laguerre_shannon_bound(int n, double alpha, double b, double m);
// Optimizer over integer b in [1, b_max] and m on [-0.9, 6]; with fix_m the
// m = 0 family is searched.
ShannonBound laguerre_optimal_bound(int n, double alpha, bool fix_m, int b_max = 40);
double laguerre_shannon_asymptotic(int n, double alpha);

SpreadingReport laguerre_report(int n, double alpha, const std::vector<double>& qs, const QuadConfig& cfg = {});

enum class PolyFamily { hermite, laguerre };

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double correlation = 0.0;
};

LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y);
// Ordinary least squares of the Shannon length against the standard deviation.
LinearFit fit_shannon_vs_stddev(PolyFamily family, double alpha, const std::vector<int>& ns, const QuadConfig& cfg = {});

}  // namespace qcx
