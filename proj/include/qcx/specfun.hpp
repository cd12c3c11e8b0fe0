#pragma once

#include <vector>

namespace qcx {

// Hard cap on polynomial degree; every caller in the library stays well below.
inline constexpr int kMaxDegree = 200;

enum class Family { Hermite, Laguerre, Gegenbauer };
enum class Norm { classical, orthonormal };

// Hermite: weight e^{-x^2} on R.  Laguerre(alpha): x^alpha e^{-x} on [0,inf).
// Gegenbauer(lambda): (1-x^2)^{lambda-1/2} on [-1,1].
struct OrthoPolySpec {
    Family family = Family::Hermite;
    double param = 0.0;  // alpha for Laguerre, lambda for Gegenbauer, unused for Hermite
    int degree = 0;
    Norm norm = Norm::orthonormal;

    static OrthoPolySpec hermite(int n, Norm nm = Norm::orthonormal) { return {Family::Hermite, 0.0, n, nm}; }
    static OrthoPolySpec laguerre(int n, double alpha, Norm nm = Norm::orthonormal) {
        return {Family::Laguerre, alpha, n, nm};
    }
    static OrthoPolySpec gegenbauer(int n, double lambda, Norm nm = Norm::orthonormal) {
        return {Family::Gegenbauer, lambda, n, nm};
    }
};

// Throws std::invalid_argument for alpha <= -1, lambda <= -1/2, lambda == 0,
// negative degree or degree above kMaxDegree.
void validate(const OrthoPolySpec& spec);

// p(x) = mantissa * exp(log_scale).  Lets high-degree values be combined with
// tiny weights without overflow.
struct ScaledValue {
    double mantissa = 0.0;
    double log_scale = 0.0;
    double value() const;
    double log_abs() const;  // -inf at exact zeros
};

double eval_poly(const OrthoPolySpec& spec, double x);
ScaledValue eval_poly_scaled(const OrthoPolySpec& spec, double x);

// ln of the orthogonality weight at x (-inf outside the support).
double log_weight(const OrthoPolySpec& spec, double x);
// ln of the classical squared norm h_n = int w p_n^2.
double log_norm_sq(const OrthoPolySpec& spec);
// Support endpoints (may be infinite).
double support_lo(const OrthoPolySpec& spec);
double support_hi(const OrthoPolySpec& spec);

// Real zeros in ascending order, from the Jacobi matrix eigenvalues.
std::vector<double> zeros(const OrthoPolySpec& spec);

// Monomial coefficients c_0..c_n of the orthonormal polynomials.
std::vector<double> hermite_coeffs(int n);
std::vector<double> laguerre_coeffs(int n, double alpha);

double wigner3j(int l1, int l2, int l3, int m1, int m2, int m3);

double digamma(double x);
double log_gamma(double x);
double log_factorial(int n);
// ln C(a, b) for real a >= b >= 0 via log-gamma.
double log_binomial(double a, double b);

}  // namespace qcx
