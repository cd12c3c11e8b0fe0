#include "presets.hpp"

#include "qcx/hydrod.hpp"
#include "qcx/hydrogen3d.hpp"
#include "qcx/kleingordon.hpp"
#include "qcx/parallel.hpp"
#include "qcx/polyspread.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcx::cli {

namespace {

Cell I(int v) { return static_cast<std::int64_t>(v); }
Cell flag(bool b) { return I(b ? 1 : 0); }
double nan_if(bool divergent, double v) { return divergent ? std::nan("") : v; }

std::vector<int> range(int a, int b, int step = 1) {
    std::vector<int> v;
    for (int i = a; i <= b; i += step) v.push_back(i);
    return v;
}

// Pionic charges for the Z sweeps of the relativistic figures.
std::vector<int> z_grid() { return range(1, 68); }

// ------------------------------------------------------------ chapter 1

Row zeta_row(const Orbital3D& o, const QuadConfig& cfg) {
    const auto gs = complexities(Orbital3D{o.Z, 1, 0, 0}, cfg);
    const auto h = hydrogen_measures(o, cfg);
    const auto& c = h.complexities;
    return {{"n", I(o.n)},
            {"l", I(o.l)},
            {"m", I(o.m)},
            {"V", h.variance},
            {"I", h.fisher},
            {"S", h.shannon.S},
            {"disequilibrium", h.disequilibrium.total},
            {"C_FS", c.C_FS},
            {"C_CR", c.C_CR},
            {"C_SC", c.C_SC},
            {"zeta_FS", c.C_FS / gs.C_FS},
            {"zeta_CR", c.C_CR / gs.C_CR},
            {"zeta_SC", c.C_SC / gs.C_SC}};
}

Table zeta_table(const std::vector<Orbital3D>& states, const QuadConfig& cfg) {
    Table t;
    fill_rows(t, states.size(), [&](std::size_t i) { return zeta_row(states[i], cfg); });
    return t;
}

// Quadratic least squares y = a n^2 + b n + c with the correlation coefficient
// between data and fit.
struct QuadFit {
    double a, b, c, R;
};

QuadFit quadratic_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const auto N = static_cast<Eigen::Index>(x.size());
    Eigen::MatrixXd A(N, 3);
    Eigen::VectorXd Y(N);
    for (Eigen::Index i = 0; i < N; ++i) {
        A(i, 0) = x[i] * x[i];
        A(i, 1) = x[i];
        A(i, 2) = 1.0;
        Y(i) = y[i];
    }
    const Eigen::Vector3d p = A.colPivHouseholderQr().solve(Y);
    const Eigen::VectorXd res = Y - A * p;
    const double mean = Y.mean();
    const double ss_tot = (Y.array() - mean).square().sum();
    return {p(0), p(1), p(2), std::sqrt(1.0 - res.squaredNorm() / ss_tot)};
}

// Fits zeta_FS = C_FS / C_FS(1,0,0) as a quadratic in n.
Table table_1_1(const QuadConfig& cfg) {
    struct Family {
        std::string label;
        int l, m, n_min, n_max;
    };
    const std::vector<Family> fams{{"(n,0,0)", 0, 0, 1, 20}, {"(n,3,1)", 3, 1, 4, 20}};
    const double gs = complexities(Orbital3D{}, cfg).C_FS;
    Table t;
    for (const auto& f : fams) {
        const auto ns = range(f.n_min, f.n_max);
        const auto cs = ordered_map<double>(ns.size(), [&](std::size_t i) {
            return complexities(Orbital3D{1.0, ns[i], f.l, f.m}, cfg).C_FS / gs;
        });
        std::vector<double> x(ns.begin(), ns.end());
        const auto q = quadratic_fit(x, cs);
        t.add({{"state", f.label},
               {"n_min", I(f.n_min)},
               {"n_max", I(f.n_max)},
               {"a", q.a},
               {"b", q.b},
               {"c", q.c},
               {"R", q.R}});
    }
    return t;
}

// ------------------------------------------------------------ chapter 2

Table fig_2_1(const QuadConfig&) {
    const auto Ds = range(2, 15);
    Table t;
    fill_rows(t, Ds.size(), [&](std::size_t i) {
        const int D = Ds[i];
        Row r{{"D", I(D)}};
        for (int n = 1; n <= 3; ++n)
            r.emplace_back("C_position_n" + std::to_string(n), circular_position_closed(D, n).complexity);
        for (int n = 1; n <= 3; ++n)
            r.emplace_back("C_momentum_n" + std::to_string(n), circular_momentum_closed(D, n).complexity);
        r.emplace_back("C_product_n1",
                       ground_position_closed(D).complexity * ground_momentum_closed(D).complexity);
        return r;
    });
    return t;
}

Table fig_2_2(const QuadConfig&) {
    const auto Ds = range(2, 15);
    Table t;
    fill_rows(t, Ds.size(), [&](std::size_t i) {
        const auto p = ground_position_closed(Ds[i]);
        const auto q = ground_momentum_closed(Ds[i]);
        return Row{{"D", I(Ds[i])},
                   {"S_position", p.shannon},
                   {"S_momentum", q.shannon},
                   {"log_disequilibrium_position", std::log(p.disequilibrium)},
                   {"log_disequilibrium_momentum", std::log(q.disequilibrium)}};
    });
    return t;
}

Table fig_2_3(const QuadConfig&) {
    const auto ns = range(1, 15);
    Table t;
    fill_rows(t, ns.size(), [&](std::size_t i) {
        Row r{{"n", I(ns[i])}};
        for (int D : {2, 5, 15})
            r.emplace_back("C_position_D" + std::to_string(D), circular_position_closed(D, ns[i]).complexity);
        return r;
    });
    return t;
}

// ------------------------------------------------------------ chapter 3

struct KGPoint {
    std::string panel;
    std::string series;
    KGOrbital o;
};

KGOrbital kg(double Z, int n, int l, int m = 0) { return KGOrbital{Z, n, l, m, kPionMass}; }

Row kg_head(const KGPoint& p, bool with_panel) {
    Row r;
    if (with_panel) r.emplace_back("panel", p.panel);
    r.emplace_back("series", p.series);
    r.emplace_back("Z", p.o.Z);
    r.emplace_back("n", I(p.o.n));
    r.emplace_back("l", I(p.o.l));
    r.emplace_back("m", I(p.o.m));
    return r;
}

using KGColumns = std::function<void(Row&, const KGReport&)>;

Table kg_table(const std::vector<KGPoint>& pts, bool with_panel, const KGColumns& cols, const QuadConfig& cfg) {
    Table t;
    fill_rows(t, pts.size(), [&](std::size_t i) {
        Row r = kg_head(pts[i], with_panel);
        cols(r, kg_report(pts[i].o, cfg));
        return r;
    });
    return t;
}

void moments_cols(Row& r, const KGReport& k) {
    r.emplace_back("centroid_KG", k.centroid);
    r.emplace_back("centroid_Sch", k.sch_centroid);
    r.emplace_back("centroid_ratio", k.ratio_centroid);
    r.emplace_back("variance_KG", k.variance);
    r.emplace_back("variance_Sch", k.sch_variance);
    r.emplace_back("variance_ratio", k.ratio_variance);
}

void shannon_cols(Row& r, const KGReport& k) {
    r.emplace_back("N_KG", k.shannon.N);
    r.emplace_back("N_Sch", k.sch_N);
    r.emplace_back("N_ratio", k.ratio_N);
}

void fisher_cols(Row& r, const KGReport& k) {
    const auto& f = k.complexities.fisher;
    r.emplace_back("I_KG", nan_if(f.divergent, f.value));
    r.emplace_back("I_Sch", k.sch_fisher);
    r.emplace_back("I_ratio", k.ratio_fisher);
    r.emplace_back("I_divergent", flag(f.divergent));
}

void fs_cols(Row& r, const KGReport& k) {
    const auto& c = k.complexities;
    r.emplace_back("C_FS_KG", c.C_FS);
    r.emplace_back("C_FS_Sch", c.sch_C_FS);
    r.emplace_back("C_FS_ratio", c.C_FS / c.sch_C_FS);
    r.emplace_back("zeta_FS", c.zeta_FS);
    r.emplace_back("I_divergent", flag(c.fisher.divergent));
}

void sc_cols(Row& r, const KGReport& k) {
    const auto& c = k.complexities;
    r.emplace_back("C_SC_KG", c.C_SC);
    r.emplace_back("C_SC_Sch", c.sch_C_SC);
    r.emplace_back("C_SC_ratio", c.C_SC / c.sch_C_SC);
    r.emplace_back("zeta_SC", c.zeta_SC);
    r.emplace_back("disequilibrium_divergent", flag(c.disequilibrium.divergent));
}

// 1S-like (l = 0) and circular series against n at fixed Z.
std::vector<KGPoint> s_and_circular(double Z, int n_max, const std::string& panel = "") {
    std::vector<KGPoint> v;
    for (int n = 1; n <= n_max; ++n) v.push_back({panel, "S", kg(Z, n, 0)});
    for (int n = 1; n <= n_max; ++n) v.push_back({panel, "circular", kg(Z, n, n - 1)});
    return v;
}

std::vector<KGPoint> z_series(const std::vector<std::pair<std::string, std::array<int, 2>>>& states,
                              const std::string& panel = "") {
    std::vector<KGPoint> v;
    for (const auto& [name, nl] : states)
        for (int Z : z_grid()) v.push_back({panel, name, kg(Z, nl[0], nl[1])});
    return v;
}

std::vector<KGPoint> l_series(double Z, int n_min, int n_max, int l_min, const std::string& panel = "") {
    std::vector<KGPoint> v;
    for (int n = n_min; n <= n_max; ++n)
        for (int l = l_min; l < n; ++l) v.push_back({panel, "n=" + std::to_string(n), kg(Z, n, l)});
    return v;
}

template <class... Vs>
std::vector<KGPoint> join(Vs... vs) {
    std::vector<KGPoint> out;
    (out.insert(out.end(), vs.begin(), vs.end()), ...);
    return out;
}

const std::vector<std::pair<std::string, std::array<int, 2>>> kLowStates{{"1S", {1, 0}}, {"2S", {2, 0}}, {"2P", {2, 1}}};

// ------------------------------------------------------------ chapter 4

Table table_4_1(const QuadConfig& cfg) {
    const auto ns = range(0, 12);
    Table t;
    fill_rows(t, ns.size(), [&](std::size_t i) {
        const auto b = hermite_optimal_bound(ns[i]);
        return Row{{"n", I(ns[i])},
                   {"k_opt", I(static_cast<int>(b.b))},
                   {"c", b.bound},
                   {"N", hermite_shannon_length(ns[i], cfg)}};
    });
    return t;
}

double hermite_renyi_auto(int n, int q, const QuadConfig& cfg) {
    return hermite_renyi_length(n, q, n * q <= kBellCap ? WqMethod::bell : WqMethod::quadrature, cfg);
}

double laguerre_renyi_auto(int n, double alpha, int q, const QuadConfig& cfg) {
    return laguerre_renyi_length(n, alpha, q, n * q <= kBellCap ? WqMethod::bell : WqMethod::quadrature, cfg);
}

Table hermite_renyi_table(bool with_stddev, const QuadConfig& cfg) {
    const auto ns = range(0, 100);
    Table t;
    fill_rows(t, ns.size(), [&](std::size_t i) {
        Row r{{"n", I(ns[i])}};
        if (with_stddev) r.emplace_back("std_dev", hermite_stddev(ns[i]));
        for (int q = 2; q <= 5; ++q) r.emplace_back("L" + std::to_string(q), hermite_renyi_auto(ns[i], q, cfg));
        return r;
    });
    return t;
}

Table fig_4_2(const QuadConfig& cfg) {
    const auto ns = range(0, 100);
    Table t;
    fill_rows(t, ns.size(), [&](std::size_t i) {
        const int n = ns[i];
        const auto b = hermite_optimal_bound(n, std::max(40, 4 * n + 40));
        return Row{{"n", I(n)}, {"N", hermite_shannon_length(n, cfg)}, {"c_opt", b.bound}, {"k_opt", I(static_cast<int>(b.b))}};
    });
    return t;
}

Table fig_4_4(const QuadConfig& cfg) {
    const auto ns = range(0, 100);
    Table t;
    fill_rows(t, ns.size(), [&](std::size_t i) {
        const double dx = hermite_stddev(ns[i]);
        return Row{{"n", I(ns[i])},
                   {"std_dev", dx},
                   {"N", hermite_shannon_length(ns[i], cfg)},
                   {"N_asymptotic", std::numbers::pi * std::sqrt(2.0) / std::numbers::e * dx}};
    });
    return t;
}

Table laguerre_bounds_fig(double alpha, const QuadConfig& cfg) {
    const auto ns = range(0, 10);
    Table t;
    fill_rows(t, ns.size(), [&](std::size_t i) {
        const int n = ns[i];
        const double N = laguerre_shannon_length(n, alpha, cfg).N;
        const auto b0 = laguerre_optimal_bound(n, alpha, true);
        const auto bm = laguerre_optimal_bound(n, alpha, false);
        return Row{{"n", I(n)},
                   {"N", N},
                   {"bound_m0", b0.bound},
                   {"bound_opt", bm.bound},
                   {"rel_gap_m0", (b0.bound - N) / N},
                   {"rel_gap_opt", (bm.bound - N) / N}};
    });
    return t;
}

Table laguerre_bounds_table(double alpha, bool fix_m) {
    const auto ns = range(0, 10);
    Table t;
    fill_rows(t, ns.size(), [&](std::size_t i) {
        const auto b = laguerre_optimal_bound(ns[i], alpha, fix_m);
        Row r{{"n", I(ns[i])}, {"b_opt", I(static_cast<int>(b.b))}};
        if (!fix_m) r.emplace_back("m_opt", b.m);
        r.emplace_back("bound", b.bound);
        return r;
    });
    return t;
}

Table laguerre_lengths_fig(double alpha, const QuadConfig& cfg) {
    const auto ns = range(0, 10);
    Table t;
    fill_rows(t, ns.size(), [&](std::size_t i) {
        const int n = ns[i];
        const auto f = laguerre_fisher(n, alpha);
        return Row{{"n", I(n)},
                   {"std_dev", laguerre_stddev(n, alpha)},
                   {"delta_x", f.delta_x},
                   {"L2", laguerre_renyi_auto(n, alpha, 2, cfg)},
                   {"N", laguerre_shannon_length(n, alpha, cfg).N}};
    });
    return t;
}

Table fig_4_9(const QuadConfig& cfg) {
    const auto ns = range(0, 20);
    Table t;
    fill_row_groups(t, ns.size() * 2, [&](std::size_t i) {
        const double alpha = i < ns.size() ? 0.0 : 5.0;
        const int n = ns[i % ns.size()];
        return std::vector<Row>{{{"alpha", alpha},
                                 {"n", I(n)},
                                 {"std_dev", laguerre_stddev(n, alpha)},
                                 {"N", laguerre_shannon_length(n, alpha, cfg).N}}};
    });
    return t;
}

std::vector<Preset> make_presets() {
    std::vector<Preset> p;
    auto add = [&](std::string name, std::string title, std::string x, std::vector<std::string> ys,
                   std::function<Table(const QuadConfig&)> build) {
        p.push_back({std::move(name), std::move(title), std::move(x), std::move(ys), std::move(build)});
    };

    // chapter 1
    add("fig-1.1", "relative complexities of ns states", "n", {"zeta_FS", "zeta_CR", "zeta_SC"},
        [](const QuadConfig& cfg) {
            std::vector<Orbital3D> s;
            for (int n = 1; n <= 10; ++n) s.push_back({1.0, n, 0, 0});
            return zeta_table(s, cfg);
        });
    add("fig-1.4", "relative complexities of (20,17,m)", "m", {"zeta_FS", "zeta_CR", "zeta_SC"},
        [](const QuadConfig& cfg) {
            std::vector<Orbital3D> s;
            for (int m = 0; m <= 17; ++m) s.push_back({1.0, 20, 17, m});
            return zeta_table(s, cfg);
        });
    add("fig-1.5", "relative complexities of (20,l,1)", "l", {"zeta_FS", "zeta_CR", "zeta_SC"},
        [](const QuadConfig& cfg) {
            std::vector<Orbital3D> s;
            for (int l = 1; l <= 19; ++l) s.push_back({1.0, 20, l, 1});
            return zeta_table(s, cfg);
        });
    add("table-1.1", "quadratic fit of zeta_FS in n", "n_max", {"a", "b", "c"}, table_1_1);

    // chapter 2
    add("fig-2.1", "position LMC complexity of circular states vs D", "D",
        {"C_position_n1", "C_position_n2", "C_position_n3"}, fig_2_1);
    add("fig-2.2", "ground-state entropies and log disequilibria vs D", "D",
        {"S_position", "S_momentum", "log_disequilibrium_position", "log_disequilibrium_momentum"}, fig_2_2);
    add("fig-2.3", "position LMC complexity of circular states vs n", "n",
        {"C_position_D2", "C_position_D5", "C_position_D15"}, fig_2_3);

    // chapter 3
    add("fig-3.3", "KG/Sch centroid and variance vs n, Z=68", "n", {"centroid_ratio", "variance_ratio"},
        [](const QuadConfig& cfg) { return kg_table(s_and_circular(68, 8), false, moments_cols, cfg); });
    add("fig-3.4", "KG/Sch centroid and variance vs l, Z=68", "l", {"centroid_ratio", "variance_ratio"},
        [](const QuadConfig& cfg) { return kg_table(l_series(68, 1, 5, 0), false, moments_cols, cfg); });
    add("fig-3.5", "KG/Sch centroid and variance vs Z", "Z", {"centroid_ratio", "variance_ratio"},
        [](const QuadConfig& cfg) { return kg_table(z_series(kLowStates), false, moments_cols, cfg); });
    add("fig-3.6", "KG/Sch Shannon power vs n (Z=68) and vs Z", "n", {"N_ratio"}, [](const QuadConfig& cfg) {
        return kg_table(join(s_and_circular(68, 8, "n"), z_series(kLowStates, "Z")), true, shannon_cols, cfg);
    });
    add("fig-3.7", "Sch/KG Fisher information vs n (Z=68) and vs Z", "n", {"I_ratio"}, [](const QuadConfig& cfg) {
        std::vector<KGPoint> left;
        for (int n = 2; n <= 8; ++n) left.push_back({"n", "P", kg(68, n, 1)});
        for (int n = 2; n <= 8; ++n) left.push_back({"n", "circular", kg(68, n, n - 1)});
        return kg_table(join(left, z_series({{"2P", {2, 1}}, {"3P", {3, 1}}, {"3D", {3, 2}}}, "Z")), true,
                        fisher_cols, cfg);
    });
    add("fig-3.8", "KG/Sch Shannon power and Sch/KG Fisher vs l, Z=68", "l", {"N_ratio", "I_ratio"},
        [](const QuadConfig& cfg) {
            return kg_table(join(l_series(68, 1, 6, 0, "N"), l_series(68, 2, 6, 1, "I")), true,
                            [](Row& r, const KGReport& k) {
                                shannon_cols(r, k);
                                fisher_cols(r, k);
                            },
                            cfg);
        });
    add("fig-3.9", "Sch/KG Fisher information vs m, Z=68", "m", {"I_ratio"}, [](const QuadConfig& cfg) {
        std::vector<KGPoint> v;
        for (int l = 1; l <= 4; ++l)
            for (int m = 0; m <= l; ++m) v.push_back({"", "l=" + std::to_string(l), kg(68, 5, l, m)});
        return kg_table(v, false, fisher_cols, cfg);
    });
    add("fig-3.10", "ground-state Fisher-Shannon complexity KG vs Sch", "Z", {"C_FS_KG", "C_FS_Sch"},
        [](const QuadConfig& cfg) { return kg_table(z_series({{"1S", {1, 0}}}), false, fs_cols, cfg); });
    add("fig-3.11", "Fisher-Shannon ratio of S states", "n", {"zeta_FS"}, [](const QuadConfig& cfg) {
        std::vector<KGPoint> v;
        for (int Z : {1, 30, 50, 68})
            for (int n = 1; n <= 8; ++n) v.push_back({"", "Z=" + std::to_string(Z), kg(Z, n, 0)});
        return kg_table(v, false, fs_cols, cfg);
    });
    add("fig-3.12", "Fisher-Shannon ratio of (n,l,0) at Z=68 and Z=30", "n", {"zeta_FS"},
        [](const QuadConfig& cfg) {
            return kg_table(join(l_series(68, 1, 6, 0), l_series(30, 1, 6, 0)), false, fs_cols, cfg);
        });
    add("fig-3.13", "ground-state LMC complexity KG vs Sch", "Z", {"C_SC_KG", "C_SC_Sch"},
        [](const QuadConfig& cfg) { return kg_table(z_series({{"1S", {1, 0}}}), false, sc_cols, cfg); });
    add("fig-3.14", "LMC ratio of S states at Z=1,30,50,68", "n", {"zeta_SC"}, [](const QuadConfig& cfg) {
        std::vector<KGPoint> v;
        for (int Z : {1, 30, 50, 68})
            for (int n = 1; n <= 8; ++n) v.push_back({"", "Z=" + std::to_string(Z), kg(Z, n, 0)});
        return kg_table(v, false, sc_cols, cfg);
    });
    add("fig-3.15", "LMC complexity of (n,l,0) at Z=68 and Z=30", "n", {"C_SC_KG", "C_SC_Sch"},
        [](const QuadConfig& cfg) {
            return kg_table(join(l_series(68, 1, 6, 0), l_series(30, 1, 6, 0)), false, sc_cols, cfg);
        });

    // chapter 4
    add("table-4.1", "optimal Hermite Shannon-length bound", "n", {"c", "N"}, table_4_1);
    add("fig-4.1", "Hermite Renyi lengths vs n", "n", {"L2", "L3", "L4", "L5"},
        [](const QuadConfig& cfg) { return hermite_renyi_table(false, cfg); });
    add("fig-4.2", "Hermite Shannon length and optimal bound vs n", "n", {"N", "c_opt"}, fig_4_2);
    add("fig-4.3", "Hermite Renyi lengths vs standard deviation", "std_dev", {"L2", "L3", "L4", "L5"},
        [](const QuadConfig& cfg) { return hermite_renyi_table(true, cfg); });
    add("fig-4.4", "Hermite Shannon length vs standard deviation", "std_dev", {"N", "N_asymptotic"}, fig_4_4);
    add("fig-4.5", "Laguerre alpha=0 Shannon length and bounds", "n", {"N", "bound_m0", "bound_opt"},
        [](const QuadConfig& cfg) { return laguerre_bounds_fig(0.0, cfg); });
    add("table-4.2", "Laguerre alpha=0 optimal b with m=0", "n", {"b_opt"},
        [](const QuadConfig&) { return laguerre_bounds_table(0.0, true); });
    add("table-4.3", "Laguerre alpha=0 optimal (b, m)", "n", {"b_opt", "m_opt"},
        [](const QuadConfig&) { return laguerre_bounds_table(0.0, false); });
    add("fig-4.6", "Laguerre alpha=5 Shannon length and bounds", "n", {"N", "bound_m0", "bound_opt"},
        [](const QuadConfig& cfg) { return laguerre_bounds_fig(5.0, cfg); });
    add("table-4.4", "Laguerre alpha=5 optimal b with m=0", "n", {"b_opt"},
        [](const QuadConfig&) { return laguerre_bounds_table(5.0, true); });
    add("table-4.5", "Laguerre alpha=5 optimal (b, m)", "n", {"b_opt", "m_opt"},
        [](const QuadConfig&) { return laguerre_bounds_table(5.0, false); });
    add("fig-4.7", "Laguerre alpha=0 spreading lengths", "n", {"std_dev", "delta_x", "L2", "N"},
        [](const QuadConfig& cfg) { return laguerre_lengths_fig(0.0, cfg); });
    add("fig-4.8", "Laguerre alpha=5 spreading lengths", "n", {"std_dev", "delta_x", "L2", "N"},
        [](const QuadConfig& cfg) { return laguerre_lengths_fig(5.0, cfg); });
    add("fig-4.9", "Laguerre Shannon length vs standard deviation", "std_dev", {"N"}, fig_4_9);
    return p;
}

}  // namespace

const std::vector<Preset>& presets() {
    static const std::vector<Preset> p = make_presets();
    return p;
}

const Preset& find_preset(const std::string& name) {
    for (const auto& p : presets())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown preset '" + name + "' (see preset --list)");
}

}  // namespace qcx::cli
