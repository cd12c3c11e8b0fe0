// qcx: single-state reports, parameter sweeps and figure presets as CSV.

#include "presets.hpp"
#include "reports.hpp"
#include "table.hpp"

#include "qcx/parallel.hpp"
#include "qcx/quadrature.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace qcx::cli;

constexpr int kExitArgs = 2;
constexpr int kExitNonConvergence = 3;

struct Globals {
    int workers = 0;
    int precision = 12;
    std::string output;
    bool plot_script = false;
    std::optional<double> tol_abs;
    std::optional<double> tol_rel;
};

qcx::QuadConfig make_config(const Globals& g) {
    qcx::QuadConfig cfg = qcx::QuadConfig::from_env();
    if (g.tol_abs) cfg.abs_tol = *g.tol_abs;
    if (g.tol_rel) cfg.rel_tol = *g.tol_rel;
    cfg.check();
    return cfg;
}

void emit(const Globals& g, const Table& t) {
    std::ostringstream os;
    write_csv(os, t, g.precision);
    if (g.output.empty() || g.output == "-") {
        std::cout << os.str();
        std::cout.flush();
        return;
    }
    std::ofstream f(g.output, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + g.output);
    f << os.str();
}

void emit_plot(const Globals& g, const Table& t, const std::string& x, const std::vector<std::string>& ys,
               const std::string& title) {
    if (!g.plot_script) return;
    std::ofstream f(g.output + ".gp", std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open " + g.output + ".gp");
    write_plot_script(f, g.output, t, x, ys, title);
}

// "a:b" or "a:b:step" (inclusive), or a comma list.  Returned sorted and unique.
std::vector<double> parse_axis_values(const std::string& spec) {
    std::vector<double> v;
    if (spec.find(':') != std::string::npos) {
        std::string s = spec;
        std::replace(s.begin(), s.end(), ':', ';');
        const auto parts = parse_list(s);
        if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument("range must be a:b or a:b:step");
        const double a = parts[0], b = parts[1], step = parts.size() == 3 ? parts[2] : 1.0;
        if (!(step > 0.0) || b < a) throw std::invalid_argument("range needs a <= b and step > 0");
        const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
        if (count > 100000) throw std::invalid_argument("range has too many points");
        for (long i = 0; i < count; ++i) v.push_back(a + static_cast<double>(i) * step);
    } else {
        std::string s = spec;
        std::replace(s.begin(), s.end(), ',', ';');
        v = parse_list(s);
    }
    if (v.empty()) throw std::invalid_argument("axis has no values");
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::string commas_to_list(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    return s;
}

void put(Params& p, const std::string& key, const std::string& value) {
    if (!value.empty()) p[key] = value;
}

void require_no_plot(const Globals& g) {
    if (g.plot_script) throw std::invalid_argument("--plot-script applies to sweep and preset");
}

void check_plot_output(const Globals& g) {
    if (g.plot_script && (g.output.empty() || g.output == "-"))
        throw std::invalid_argument("--plot-script needs --output FILE");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Information-theoretic spreading and complexity measures"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--workers", g.workers, "Worker threads for sweeps (default: runtime default)")
        ->check(CLI::Range(1, 1024));
    app.add_option("--precision", g.precision, "Significant digits in the CSV (4..17)")->check(CLI::Range(4, 17));
    app.add_option("-o,--output", g.output, "Write the CSV to FILE instead of standard output");
    app.add_flag("--plot-script", g.plot_script, "Also write a gnuplot script FILE.gp next to the CSV");
    app.add_option("--tol-abs", g.tol_abs, "Absolute quadrature tolerance (overrides QCX_TOL_ABS)")
        ->check(CLI::PositiveNumber);
    app.add_option("--tol-rel", g.tol_rel, "Relative quadrature tolerance (overrides QCX_TOL_REL)")
        ->check(CLI::PositiveNumber);

    // hydrogen
    std::string hZ = "1", hn, hl = "0", hm = "0";
    auto* hyd = app.add_subcommand("hydrogen", "3D hydrogenic orbital (n, l, m) with nuclear charge Z");
    hyd->add_option("--Z", hZ, "Nuclear charge");
    hyd->add_option("--n", hn, "Principal quantum number")->required();
    hyd->add_option("--l", hl, "Orbital quantum number");
    hyd->add_option("--m", hm, "Magnetic quantum number");

    // hydrod
    std::string dD, dZ = "1", dn, dl, dmu, dspace = "both";
    bool d_ground = false, d_circular = false;
    auto* hd = app.add_subcommand("hydrod", "D-dimensional hydrogenic state, LMC complexity");
    hd->add_option("--D", dD, "Dimension (>= 2)")->required();
    hd->add_option("--Z", dZ, "Nuclear charge");
    hd->add_option("--n", dn, "Principal quantum number");
    hd->add_option("--l", dl, "Grand orbital number mu_1 (other mu set to 0)");
    hd->add_option("--mu", dmu, "Hyperangular numbers mu_1,...,mu_{D-1}");
    auto* gflag = hd->add_flag("--ground", d_ground, "Ground state");
    hd->add_flag("--circular", d_circular, "Circular state of level n")->excludes(gflag);
    hd->add_option("--space", dspace, "position, momentum or both")
        ->check(CLI::IsMember({"position", "momentum", "both"}));

    // kleingordon
    std::string kZ, kn, kl = "0", km = "0", kmass;
    auto* kgc = app.add_subcommand("kleingordon", "Klein-Gordon Coulomb state of a spinless particle");
    kgc->add_option("--Z", kZ, "Nuclear charge")->required();
    kgc->add_option("--n", kn, "Principal quantum number")->required();
    kgc->add_option("--l", kl, "Orbital quantum number");
    kgc->add_option("--m", km, "Magnetic quantum number");
    kgc->add_option("--mass", kmass, "Particle mass in electron masses (default: pion)");

    // polylen
    std::string pfam, pn, palpha, pq = "2", pmethod = "auto";
    auto* pl = app.add_subcommand("polylen", "Spreading lengths of Hermite/Laguerre Rakhmanov densities");
    pl->add_option("family", pfam, "hermite or laguerre")->required()->check(CLI::IsMember({"hermite", "laguerre"}));
    pl->add_option("--n", pn, "Degree")->required();
    pl->add_option("--alpha", palpha, "Laguerre parameter (> -1)");
    pl->add_option("--q", pq, "Renyi orders, comma separated");
    pl->add_option("--method", pmethod, "W_q route")
        ->check(CLI::IsMember({"auto", "bell", "lauricella", "quadrature"}));

    // sweep
    std::string starget, saxis, svalues, scolumns;
    std::vector<std::string> sset;
    auto* sw = app.add_subcommand("sweep", "One report per axis value, as a CSV table");
    sw->add_option("target", starget, "hydrogen, hydrod, kleingordon, hermite or laguerre")->required();
    sw->add_option("--axis", saxis, "Swept parameter name")->required();
    sw->add_option("--values", svalues, "a:b[:step] or v1,v2,...")->required();
    sw->add_option("--set", sset, "Fixed parameter name=value (repeatable)");
    sw->add_option("--columns", scolumns, "Measure columns to keep, comma separated");

    // preset
    std::string pname;
    bool plist = false;
    auto* pr = app.add_subcommand("preset", "Reproduce a figure or table by name");
    pr->add_option("name", pname, "Preset name");
    pr->add_flag("--list", plist, "List the presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitArgs;
    }

    try {
        if (g.workers > 0) qcx::set_worker_count(g.workers);
        const qcx::QuadConfig cfg = make_config(g);
        check_plot_output(g);

        if (*hyd) {
            require_no_plot(g);
            Params p;
            put(p, "Z", hZ);
            put(p, "n", hn);
            put(p, "l", hl);
            put(p, "m", hm);
            Table t;
            t.add(hydrogen_row(p, cfg));
            emit(g, t);
        } else if (*hd) {
            require_no_plot(g);
            Params p;
            put(p, "D", dD);
            put(p, "Z", dZ);
            put(p, "n", dn);
            put(p, "l", dl);
            put(p, "mu", commas_to_list(dmu));
            put(p, "space", dspace);
            if (d_ground) p["state"] = "ground";
            if (d_circular) p["state"] = "circular";
            Table t;
            t.add(hydrod_row(p, cfg));
            emit(g, t);
        } else if (*kgc) {
            require_no_plot(g);
            Params p;
            put(p, "Z", kZ);
            put(p, "n", kn);
            put(p, "l", kl);
            put(p, "m", km);
            put(p, "mass", kmass);
            Table t;
            t.add(kleingordon_row(p, cfg));
            emit(g, t);
        } else if (*pl) {
            require_no_plot(g);
            Params p;
            put(p, "n", pn);
            if (pfam == "laguerre") put(p, "alpha", palpha);
            else if (!palpha.empty()) throw std::invalid_argument("--alpha applies to laguerre only");
            put(p, "q", commas_to_list(pq));
            put(p, "method", pmethod);
            Table t;
            t.add(polylen_row(pfam, p, cfg));
            emit(g, t);
        } else if (*sw) {
            const auto& known = target_params(starget);
            if (std::find(known.begin(), known.end(), saxis) == known.end())
                throw std::invalid_argument("axis '" + saxis + "' is not a parameter of " + starget);
            Params fixed;
            for (const auto& kv : sset) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos || eq == 0) throw std::invalid_argument("--set expects name=value");
                const std::string key = kv.substr(0, eq);
                if (key == saxis) throw std::invalid_argument("axis '" + saxis + "' is also fixed by --set");
                fixed[key] = commas_to_list(kv.substr(eq + 1));
            }
            const auto values = parse_axis_values(svalues);
            Table t;
            std::optional<PartialTable> failure;
            try {
                fill_rows(t, values.size(), [&](std::size_t i) {
                    Params p = fixed;
                    p[saxis] = fmt_num(values[i]);
                    return report_row(starget, p, cfg);
                });
            } catch (const PartialTable& e) {
                failure = e;
            }
            std::vector<std::string> cols;
            if (!scolumns.empty()) {
                std::stringstream ss(scolumns);
                std::string c;
                cols.push_back(saxis);
                while (std::getline(ss, c, ','))
                    if (!c.empty() && c != saxis) cols.push_back(c);
            }
            if (failure) {
                Table part = failure->partial;
                if (!cols.empty() && !part.header.empty()) part = select_columns(part, cols);
                emit(g, part);
                throw *failure;
            }
            if (!cols.empty()) t = select_columns(t, cols);
            emit(g, t);
            std::vector<std::string> ys;
            if (!t.rows.empty())
                for (std::size_t i = 0; i < t.header.size(); ++i)
                    if (t.header[i] != saxis && std::holds_alternative<double>(t.rows[0][i]))
                        ys.push_back(t.header[i]);
            emit_plot(g, t, saxis, ys, starget + " sweep over " + saxis);
        } else if (*pr) {
            if (plist) {
                for (const auto& p : presets()) std::cout << p.name << "\t" << p.title << "\n";
                return 0;
            }
            if (pname.empty()) throw std::invalid_argument("preset name required (see preset --list)");
            const Preset& p = find_preset(pname);
            Table t;
            try {
                t = p.build(cfg);
            } catch (const PartialTable& e) {
                emit(g, e.partial);
                throw;
            }
            emit(g, t);
            emit_plot(g, t, p.x, p.ys, p.name + ": " + p.title);
        }
    } catch (const PartialTable& e) {
        std::cerr << "qcx: integral '" << e.integral << "' did not converge: " << e.what() << "\n";
        return kExitNonConvergence;
    } catch (const qcx::NonConvergence& e) {
        std::cerr << "qcx: integral '" << e.integral() << "' did not converge: " << e.what() << "\n";
        return kExitNonConvergence;
    } catch (const std::invalid_argument& e) {
        std::cerr << "qcx: " << e.what() << "\n";
        return kExitArgs;
    } catch (const std::out_of_range& e) {
        std::cerr << "qcx: " << e.what() << "\n";
        return kExitArgs;
    } catch (const std::exception& e) {
        std::cerr << "qcx: internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
