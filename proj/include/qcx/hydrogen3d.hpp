#pragma once

#include "qcx/quadrature.hpp"

namespace qcx {

struct Orbital3D {
    double Z = 1.0;
    int n = 1;
    int l = 0;
    int m = 0;

    void validate() const;
};

struct Disequilibrium {
    double total = 0.0;
    double radial = 0.0;   // int r^2 R^4 dr
    double angular = 0.0;  // int |Y|^4 dOmega
};

struct ShannonParts {
    double S = 0.0;
    double S_R = 0.0;
    double S_Y = 0.0;
};

struct Complexities {
    double C_CR = 0.0;
    double C_FS = 0.0;
    double C_SC = 0.0;
};

struct ComplexityBounds {
    double B_FS = 0.0;
    double B_SC = 0.0;
    double xi_FS = 0.0;
    double xi_SC = 0.0;
};

struct HydroMeasures {
    double energy = 0.0;
    double variance = 0.0;
    double fisher = 0.0;
    double r_mean = 0.0;
    ShannonParts shannon;
    Disequilibrium disequilibrium;
    double D_nlm = 0.0;
    Complexities complexities;
    ComplexityBounds bounds;
};

double energy(const Orbital3D& o);
double variance(const Orbital3D& o);
double fisher(const Orbital3D& o);
double r_expectation(const Orbital3D& o);

// r^2 R_{nl}(r)^2, normalized on [0, inf).
double radial_density(const Orbital3D& o, double r);
// Theta(theta) = 2 pi |Y_lm|^2 sin(theta), normalized on [0, pi].
double angular_density(const Orbital3D& o, double theta);
// R_{nl}(r), |Y_lm|^2 as a function of x = cos(theta).
double radial_function(const Orbital3D& o, double r);
double angular_abs2(int l, int m, double x);

double D_nlm(int n, int l, int m);
Disequilibrium disequilibrium(const Orbital3D& o);
Disequilibrium disequilibrium_quadrature(const Orbital3D& o, const QuadConfig& cfg = {});

// Closed-form constant of the entropy decomposition at Z = 1.
double shannon_constant_A(int n, int l, int m);
// Decomposition route: A + E-integrals - 3 ln Z.
ShannonParts shannon(const Orbital3D& o, const QuadConfig& cfg = {});
// Definitional route: -int rho ln rho split into radial and angular integrals.
ShannonParts shannon_direct(const Orbital3D& o, const QuadConfig& cfg = {});

Complexities complexities(const Orbital3D& o, const QuadConfig& cfg = {});
ComplexityBounds complexity_bounds(const Orbital3D& o, const QuadConfig& cfg = {});
HydroMeasures hydrogen_measures(const Orbital3D& o, const QuadConfig& cfg = {});

// Generic pieces for densities rho = F(r)^2 |Y_lm|^2 (shared with the
// Klein-Gordon module).
// 4 int (dF/dr)^2 r^2 dr by finite differences of F.
double radial_fisher_term(const Func& F, const std::vector<double>& pts, double scale, const QuadConfig& cfg);
// 4 int (d|Y_lm|/dtheta)^2 dOmega.
double angular_fisher_term(int l, int m, const QuadConfig& cfg = {});
// -int |Y|^2 ln |Y|^2 dOmega and int |Y|^4 dOmega by quadrature.
double angular_shannon(int l, int m, const QuadConfig& cfg = {});
double angular_disequilibrium(int l, int m, const QuadConfig& cfg = {});
// Full Fisher information of the hydrogenic density by quadrature.
double fisher_quadrature(const Orbital3D& o, const QuadConfig& cfg = {});

}  // namespace qcx
