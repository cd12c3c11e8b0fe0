#pragma once

#include "qcx/quadrature.hpp"

#include <string>
#include <vector>

namespace qcx {

// Hydrogenic state in D dimensions with hyperangular quantum numbers
// mu = (mu_1, ..., mu_{D-1}), l = mu_1.
struct DOrbital {
    int D = 3;
    double Z = 1.0;
    int n = 1;
    std::vector<int> mu;

    void validate() const;
    int l() const;
    double eta() const;      // n + (D-3)/2
    double grand_L() const;  // l + (D-3)/2
    bool is_ground() const;
    bool is_circular() const;

    static DOrbital ground(int D, double Z = 1.0);
    static DOrbital circular(int D, int n, double Z = 1.0);
};

double energy_d(const DOrbital& o);

// Hyperspherical angles are (theta_1, ..., theta_{D-2}, phi).
double position_density_d(const DOrbital& o, double r, const std::vector<double>& angles);
double momentum_density_d(const DOrbital& o, double p, const std::vector<double>& angles);
double radial_abs2_d(const DOrbital& o, double r);    // R_{nl}(r)^2
double momentum_abs2_d(const DOrbital& o, double p);  // M_{nl}(p)^2
double hyperangular_abs2(const DOrbital& o, const std::vector<double>& angles);

struct DisequilibriumD {
    double total = 0.0;
    double radial = 0.0;  // K1 = int r^{D-1} R^4 dr, or the momentum analogue K3
    double K2 = 0.0;      // int |Y|^4 dOmega
};

DisequilibriumD disequilibrium_position(const DOrbital& o, const QuadConfig& cfg = {});
DisequilibriumD disequilibrium_momentum(const DOrbital& o, const QuadConfig& cfg = {});
double hyperangular_disequilibrium(const DOrbital& o, const QuadConfig& cfg = {});

struct ShannonD {
    double S = 0.0;
    double radial = 0.0;
    double angular = 0.0;
};

double shannon_constant_A_d(int n, int l, int D);
double shannon_constant_B_d(const DOrbital& o);
double shannon_constant_F_d(int n, int l, int D);

// Constants plus entropic integrals of the Laguerre/Gegenbauer polynomials.
ShannonD shannon_position_d(const DOrbital& o, const QuadConfig& cfg = {});
ShannonD shannon_momentum_d(const DOrbital& o, const QuadConfig& cfg = {});
// -int rho ln rho evaluated factor by factor.
ShannonD shannon_position_direct(const DOrbital& o, const QuadConfig& cfg = {});
ShannonD shannon_momentum_direct(const DOrbital& o, const QuadConfig& cfg = {});
double hyperangular_shannon(const DOrbital& o, const QuadConfig& cfg = {});
double hyperangular_shannon_direct(const DOrbital& o, const QuadConfig& cfg = {});

struct SpaceComplexity {
    double disequilibrium = 0.0;
    double shannon = 0.0;
    double complexity = 0.0;
    double K_radial = 0.0;  // K1 in position space, K3 in momentum space
    double K2 = 0.0;
    std::string method;  // "closed-form" or "quadrature"
};

struct DualComplexity {
    SpaceComplexity position;
    SpaceComplexity momentum;
    double product() const { return position.complexity * momentum.complexity; }
};

// Ground and circular states use the closed forms; other states the quadrature pipeline.
SpaceComplexity lmc_position_d(const DOrbital& o, const QuadConfig& cfg = {});
SpaceComplexity lmc_momentum_d(const DOrbital& o, const QuadConfig& cfg = {});
SpaceComplexity lmc_position_quadrature(const DOrbital& o, const QuadConfig& cfg = {});
SpaceComplexity lmc_momentum_quadrature(const DOrbital& o, const QuadConfig& cfg = {});
DualComplexity dual_complexity(const DOrbital& o, const QuadConfig& cfg = {});

SpaceComplexity ground_position_closed(int D, double Z = 1.0);
SpaceComplexity ground_momentum_closed(int D, double Z = 1.0);
SpaceComplexity circular_position_closed(int D, int n, double Z = 1.0);
SpaceComplexity circular_momentum_closed(int D, int n, double Z = 1.0);

enum class AsymKind { ground, circular };
enum class AsymRegime { large_D, rydberg };
enum class Space { position, momentum };

// Leading-order complexity in the large-D or large-n regime.  n is ignored for
// the ground state; D is ignored nowhere.
double asymptotics_d(AsymKind kind, AsymRegime regime, Space space, int D, int n = 1);

}  // namespace qcx
