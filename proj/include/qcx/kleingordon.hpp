#pragma once

#include "qcx/hydrogen3d.hpp"
#include "qcx/quadrature.hpp"

#include <map>

namespace qcx {

inline constexpr double kFineStructure = 7.2973525693e-3;
inline constexpr double kSpeedOfLight = 1.0 / kFineStructure;  // atomic units
inline constexpr double kPionMass = 273.132054;                 // in electron masses

// Spinless particle of mass m0 bound by a Coulomb potential -Z/r (atomic units).
struct KGOrbital {
    double Z = 1.0;
    int n = 1;
    int l = 0;
    int m = 0;
    double mass = kPionMass;

    void validate() const;
};

struct KGDerived {
    double gamma = 0.0;       // Z alpha
    double l_prime = 0.0;
    double epsilon = 0.0;     // total energy including the rest energy
    double beta = 0.0;        // s = beta r
    double eps_over_beta = 0.0;
    double N2 = 0.0;          // squared normalization of u(s)
    double identity_residual = 0.0;  // relative gap between eps/beta and c(n+l'-l)/(2 gamma)
};

KGDerived kg_derived(const KGOrbital& o);

// Radial charge density (epsilon - V) u^2 / (m0 c^2) in r; integrates to 1.
double kg_charge_density(const KGOrbital& o, double r);
// 3D charge density at (r, theta).
double kg_density_3d(const KGOrbital& o, double r, double theta);
// u(r)^2 without the (epsilon - V) weight.  Diagnostic only: its integral
// differs from 1, which is the point of comparing it with the charge density.
double kg_nli_density(const KGOrbital& o, double r);
double kg_nli_norm(const KGOrbital& o);

// int_0^inf x^{2l'+k+2} e^{-x} L~^2 dx with the orthonormal Laguerre L~ of
// parameter 2l'+1, by its finite sum.  k >= -1.
double kg_I_integral(int n, int l, double l_prime, int k);

double kg_r_moment(const KGOrbital& o, int k);
double kg_variance(const KGOrbital& o);

struct KGCircular {
    double r1 = 0.0;
    double r2 = 0.0;
    double variance = 0.0;
};
// Closed forms for l = n - 1.
KGCircular kg_circular_closed(const KGOrbital& o);

struct KGShannon {
    double S = 0.0;
    double radial = 0.0;
    double angular = 0.0;
    double N = 0.0;  // exp(2S/3) / (2 pi e)
};

KGShannon kg_shannon(const KGOrbital& o, const QuadConfig& cfg = {});
// Divergent for l = 0 (l' < 0), flagged without integrating.
FisherValue kg_fisher(const KGOrbital& o, const QuadConfig& cfg = {});
// int rho^2 d^3r; divergent when l' <= -1/4 (S-states with Z alpha >= sqrt(3)/4).
FisherValue kg_disequilibrium(const KGOrbital& o, const QuadConfig& cfg = {});
// Radial charge moment by quadrature, as an oracle for the finite-sum route.
double kg_r_moment_quadrature(const KGOrbital& o, double k, const QuadConfig& cfg = {});
double kg_charge_norm_quadrature(const KGOrbital& o, const QuadConfig& cfg = {});

// Schrodinger state of the same mass: hydrogen with length scale 1/(m0 Z).
Orbital3D schrodinger_reference(const KGOrbital& o);

struct KGComplexities {
    FisherValue fisher;
    FisherValue disequilibrium;
    double N = 0.0;
    double C_FS = 0.0;  // NaN when the Fisher information diverges
    double C_SC = 0.0;  // NaN when the disequilibrium diverges
    double sch_C_FS = 0.0;
    double sch_C_SC = 0.0;
    double zeta_FS = 0.0;  // 1 - C_Sch / C_KG; NaN where C_KG is undefined
    double zeta_SC = 0.0;
};

KGComplexities kg_complexities(const KGOrbital& o, const QuadConfig& cfg = {});

struct KGReport {
    KGDerived derived;
    std::map<int, double> moments;  // k = 0..4
    double centroid = 0.0;
    double variance = 0.0;
    KGShannon shannon;
    KGComplexities complexities;
    double sch_centroid = 0.0;
    double sch_variance = 0.0;
    double sch_N = 0.0;
    double sch_fisher = 0.0;
    double ratio_centroid = 0.0;  // KG / Sch
    double ratio_variance = 0.0;  // KG / Sch
    double ratio_N = 0.0;         // KG / Sch
    double ratio_fisher = 0.0;    // Sch / KG, NaN when divergent
};

KGReport kg_report(const KGOrbital& o, const QuadConfig& cfg = {});

}  // namespace qcx
