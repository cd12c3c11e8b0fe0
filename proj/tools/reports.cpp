#include "reports.hpp"

#include "qcx/hydrod.hpp"
#include "qcx/hydrogen3d.hpp"
#include "qcx/kleingordon.hpp"
#include "qcx/polyspread.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qcx::cli {

namespace {

const std::string* lookup(const Params& p, const std::string& key) {
    const auto it = p.find(key);
    return it == p.end() ? nullptr : &it->second;
}

double to_double(const std::string& key, const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("parameter " + key + ": '" + s + "' is not a number");
    }
    if (pos != s.size()) throw std::invalid_argument("parameter " + key + ": '" + s + "' is not a number");
    return v;
}

void check_known(const std::string& target, const Params& p) {
    const auto& known = target_params(target);
    for (const auto& [k, _] : p)
        if (std::find(known.begin(), known.end(), k) == known.end())
            throw std::invalid_argument("parameter '" + k + "' does not apply to " + target);
}

Cell flag(bool b) { return static_cast<std::int64_t>(b ? 1 : 0); }
Cell i64(int v) { return static_cast<std::int64_t>(v); }

std::string q_label(double q) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", q);
    return buf;
}

}  // namespace

int param_int(const Params& p, const std::string& key, std::optional<int> fallback) {
    const auto* s = lookup(p, key);
    if (!s) {
        if (fallback) return *fallback;
        throw std::invalid_argument("missing parameter " + key);
    }
    const double v = to_double(key, *s);
    if (v != std::floor(v) || std::fabs(v) > 1e9) throw std::invalid_argument("parameter " + key + " must be an integer");
    return static_cast<int>(v);
}

double param_double(const Params& p, const std::string& key, std::optional<double> fallback) {
    const auto* s = lookup(p, key);
    if (!s) {
        if (fallback) return *fallback;
        throw std::invalid_argument("missing parameter " + key);
    }
    return to_double(key, *s);
}

std::string param_str(const Params& p, const std::string& key, std::optional<std::string> fallback) {
    const auto* s = lookup(p, key);
    if (!s) {
        if (fallback) return *fallback;
        throw std::invalid_argument("missing parameter " + key);
    }
    return *s;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        out.push_back(to_double("list", item));
    }
    return out;
}

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const std::vector<std::string>& report_targets() {
    static const std::vector<std::string> t{"hydrogen", "hydrod", "kleingordon", "hermite", "laguerre"};
    return t;
}

const std::vector<std::string>& target_params(const std::string& target) {
    static const std::map<std::string, std::vector<std::string>> m{
        {"hydrogen", {"Z", "n", "l", "m"}},
        {"hydrod", {"D", "Z", "n", "l", "mu", "state", "space"}},
        {"kleingordon", {"Z", "n", "l", "m", "mass"}},
        {"hermite", {"n", "q", "method"}},
        {"laguerre", {"n", "alpha", "q", "method"}},
    };
    const auto it = m.find(target);
    if (it == m.end()) throw std::invalid_argument("unknown target '" + target + "'");
    return it->second;
}

Row report_row(const std::string& target, const Params& p, const QuadConfig& cfg) {
    if (target == "hydrogen") return hydrogen_row(p, cfg);
    if (target == "hydrod") return hydrod_row(p, cfg);
    if (target == "kleingordon") return kleingordon_row(p, cfg);
    if (target == "hermite" || target == "laguerre") return polylen_row(target, p, cfg);
    throw std::invalid_argument("unknown target '" + target + "'");
}

Row hydrogen_row(const Params& p, const QuadConfig& cfg) {
    check_known("hydrogen", p);
    const Orbital3D o{param_double(p, "Z", 1.0), param_int(p, "n"), param_int(p, "l", 0), param_int(p, "m", 0)};
    o.validate();
    const auto h = hydrogen_measures(o, cfg);
    return {
        {"Z", o.Z},
        {"n", i64(o.n)},
        {"l", i64(o.l)},
        {"m", i64(o.m)},
        {"E", h.energy},
        {"V", h.variance},
        {"I", h.fisher},
        {"r_mean", h.r_mean},
        {"S", h.shannon.S},
        {"S_R", h.shannon.S_R},
        {"S_Y", h.shannon.S_Y},
        {"disequilibrium", h.disequilibrium.total},
        {"D_nlm", h.D_nlm},
        {"C_CR", h.complexities.C_CR},
        {"C_FS", h.complexities.C_FS},
        {"C_SC", h.complexities.C_SC},
        {"B_FS", h.bounds.B_FS},
        {"B_SC", h.bounds.B_SC},
        {"xi_FS", h.bounds.xi_FS},
        {"xi_SC", h.bounds.xi_SC},
    };
}

namespace {

DOrbital hydrod_orbital(const Params& p) {
    const int D = param_int(p, "D");
    const double Z = param_double(p, "Z", 1.0);
    const std::string state = param_str(p, "state", "general");
    if (state == "ground") {
        if (p.count("mu") || p.count("l")) throw std::invalid_argument("ground state takes no mu or l");
        return DOrbital::ground(D, Z);
    }
    const int n = param_int(p, "n");
    if (state == "circular") {
        if (p.count("mu") || p.count("l")) throw std::invalid_argument("circular state takes no mu or l");
        return DOrbital::circular(D, n, Z);
    }
    if (state != "general") throw std::invalid_argument("state must be ground, circular or general");
    if (D < 2) throw std::invalid_argument("dimension D must be >= 2");
    DOrbital o;
    o.D = D;
    o.Z = Z;
    o.n = n;
    if (p.count("mu")) {
        if (p.count("l")) throw std::invalid_argument("give either mu or l, not both");
        for (double v : parse_list(p.at("mu"))) {
            if (v != std::floor(v)) throw std::invalid_argument("mu entries must be integers");
            o.mu.push_back(static_cast<int>(v));
        }
    } else {
        o.mu.assign(static_cast<std::size_t>(D - 1), 0);
        o.mu[0] = param_int(p, "l", 0);
    }
    o.validate();
    return o;
}

std::string mu_text(const DOrbital& o) {
    std::string s;
    for (std::size_t i = 0; i < o.mu.size(); ++i) s += (i ? ";" : "") + std::to_string(o.mu[i]);
    return s;
}

}  // namespace

Row hydrod_row(const Params& p, const QuadConfig& cfg) {
    check_known("hydrod", p);
    const DOrbital o = hydrod_orbital(p);
    const std::string space = param_str(p, "space", "both");
    Row r{{"D", i64(o.D)}, {"Z", o.Z}, {"n", i64(o.n)}, {"mu", mu_text(o)}, {"space", space}};
    auto append = [&](const SpaceComplexity& c, const std::string& suffix) {
        r.emplace_back("disequilibrium" + suffix, c.disequilibrium);
        r.emplace_back("S" + suffix, c.shannon);
        r.emplace_back("C" + suffix, c.complexity);
        r.emplace_back("method" + suffix, c.method);
    };
    if (space == "position") {
        append(lmc_position_d(o, cfg), "");
    } else if (space == "momentum") {
        append(lmc_momentum_d(o, cfg), "");
    } else if (space == "both") {
        const auto pos = lmc_position_d(o, cfg);
        const auto mom = lmc_momentum_d(o, cfg);
        append(pos, "_position");
        append(mom, "_momentum");
        r.emplace_back("C_product", pos.complexity * mom.complexity);
    } else {
        throw std::invalid_argument("space must be position, momentum or both");
    }
    return r;
}

Row kleingordon_row(const Params& p, const QuadConfig& cfg) {
    check_known("kleingordon", p);
    const KGOrbital o{param_double(p, "Z"), param_int(p, "n"), param_int(p, "l", 0), param_int(p, "m", 0),
                      param_double(p, "mass", kPionMass)};
    o.validate();
    const auto k = kg_report(o, cfg);
    const auto& c = k.complexities;
    return {
        {"Z", o.Z},
        {"n", i64(o.n)},
        {"l", i64(o.l)},
        {"m", i64(o.m)},
        {"mass", o.mass},
        {"epsilon_over_mc2", k.derived.epsilon / (o.mass * kSpeedOfLight * kSpeedOfLight)},
        {"l_prime", k.derived.l_prime},
        {"r_mean", k.centroid},
        {"r2_mean", k.moments.at(2)},
        {"variance", k.variance},
        {"S", k.shannon.S},
        {"N", k.shannon.N},
        {"I", c.fisher.divergent ? std::nan("") : c.fisher.value},
        {"I_divergent", flag(c.fisher.divergent)},
        {"disequilibrium", c.disequilibrium.divergent ? std::nan("") : c.disequilibrium.value},
        {"disequilibrium_divergent", flag(c.disequilibrium.divergent)},
        {"C_FS", c.C_FS},
        {"C_SC", c.C_SC},
        {"sch_C_FS", c.sch_C_FS},
        {"sch_C_SC", c.sch_C_SC},
        {"zeta_FS", c.zeta_FS},
        {"zeta_SC", c.zeta_SC},
        {"ratio_centroid", k.ratio_centroid},
        {"ratio_variance", k.ratio_variance},
        {"ratio_N", k.ratio_N},
        {"ratio_fisher", k.ratio_fisher},
    };
}

Row polylen_row(const std::string& family, const Params& p, const QuadConfig& cfg) {
    check_known(family, p);
    const bool lag = family == "laguerre";
    if (!lag && family != "hermite") throw std::invalid_argument("family must be hermite or laguerre");
    const int n = param_int(p, "n");
    const double alpha = lag ? param_double(p, "alpha", 0.0) : 0.0;
    const std::vector<double> qs = parse_list(param_str(p, "q", "2"));
    const std::string method = param_str(p, "method", "auto");
    if (qs.empty()) throw std::invalid_argument("at least one q is required");

    Row r{{"family", family}, {"n", i64(n)}};
    if (lag) r.emplace_back("alpha", alpha);
    r.emplace_back("std_dev", lag ? laguerre_stddev(n, alpha) : hermite_stddev(n));
    for (double q : qs) {
        if (!(q > 0.0) || q == 1.0) throw std::invalid_argument("q must be positive and != 1");
        WqMethod m = WqMethod::quadrature;
        std::string used = "quadrature";
        if (method == "auto") {
            if (q == std::floor(q) && n * q <= kBellCap) m = WqMethod::bell, used = "bell";
        } else if (method == "bell") {
            m = WqMethod::bell, used = "bell";
        } else if (method == "lauricella") {
            m = WqMethod::lauricella, used = "lauricella";
        } else if (method != "quadrature") {
            throw std::invalid_argument("method must be auto, bell, lauricella or quadrature");
        }
        const double w = lag ? laguerre_entropic_moment(n, alpha, q, m, cfg) : hermite_entropic_moment(n, q, m, cfg);
        const std::string ql = q_label(q);
        r.emplace_back("W_" + ql, w);
        r.emplace_back("renyi_" + ql, std::pow(w, -1.0 / (q - 1.0)));
        r.emplace_back("method_" + ql, used);
    }
    if (lag) {
        r.emplace_back("N", laguerre_shannon_length(n, alpha, cfg).N);
        const auto b0 = laguerre_optimal_bound(n, alpha, true);
        const auto bm = laguerre_optimal_bound(n, alpha, false);
        r.emplace_back("b_opt_m0", i64(static_cast<int>(b0.b)));
        r.emplace_back("N_bound_m0", b0.bound);
        r.emplace_back("b_opt", i64(static_cast<int>(bm.b)));
        r.emplace_back("m_opt", bm.m);
        r.emplace_back("N_bound", bm.bound);
        const auto f = laguerre_fisher(n, alpha);
        r.emplace_back("I", f.F.divergent ? std::nan("") : f.F.value);
        r.emplace_back("I_divergent", flag(f.F.divergent));
        r.emplace_back("delta_x", f.delta_x);
    } else {
        r.emplace_back("N", hermite_shannon_length(n, cfg));
        const auto b = hermite_optimal_bound(n, std::max(40, 4 * n + 40));
        r.emplace_back("k_opt", i64(static_cast<int>(b.b)));
        r.emplace_back("N_bound", b.bound);
        const auto f = hermite_fisher(n);
        r.emplace_back("I", f.F.value);
        r.emplace_back("I_divergent", flag(false));
        r.emplace_back("delta_x", f.delta_x);
    }
    return r;
}

}  // namespace qcx::cli
