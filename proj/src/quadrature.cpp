#include "qcx/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <queue>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcx {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using GL = boost::math::quadrature::gauss<double, 40>;

double gl40(const Func& f, double a, double b) {
    const auto& x = GL::abscissa();
    const auto& w = GL::weights();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * (f(c - h * x[i]) + f(c + h * x[i]));
    return s * h;
}

struct Leaf {
    double a, b, value, error;
    bool operator<(const Leaf& o) const { return error < o.error; }
};

Leaf make_leaf(const Func& f, double a, double b, double parent) {
    const double m = 0.5 * (a + b);
    const double v = gl40(f, a, m) + gl40(f, m, b);
    return {a, b, v, std::fabs(v - parent)};
}

// Bisection driven by the largest local error, on a finite interval.
QuadResult adaptive(const Func& f, double a, double b, double abs_tol, double rel_tol, int max_sub,
                    const std::string& name) {
    if (a == b) return {};
    std::priority_queue<Leaf> heap;
    const Leaf root = make_leaf(f, a, b, gl40(f, a, b));
    heap.push(root);
    double total = root.value, err = root.error;
    int splits = 0;
    while (err > std::max(abs_tol, rel_tol * std::fabs(total))) {
        if (++splits > max_sub) throw NonConvergence(name, total, err);
        const Leaf top = heap.top();
        heap.pop();
        const double m = 0.5 * (top.a + top.b);
        // each half already has a 40-point estimate inside top.value; recompute it as the parent
        const Leaf left = make_leaf(f, top.a, m, gl40(f, top.a, m));
        const Leaf right = make_leaf(f, m, top.b, gl40(f, m, top.b));
        total += left.value + right.value - top.value;
        err += left.error + right.error - top.error;
        heap.push(left);
        heap.push(right);
        if (!std::isfinite(total)) throw NonConvergence(name, total, kInf);
    }
    // re-sum to shed the drift of the running updates
    double s = 0.0, e = 0.0;
    std::vector<Leaf> leaves;
    while (!heap.empty()) {
        leaves.push_back(heap.top());
        heap.pop();
    }
    std::sort(leaves.begin(), leaves.end(), [](const Leaf& x, const Leaf& y) { return x.a < y.a; });
    for (const auto& l : leaves) {
        s += l.value;
        e += l.error;
    }
    return {s, e};
}

QuadResult segment(const Func& f, double a, double b, const QuadConfig& cfg, double abs_share, const std::string& name) {
    if (std::isfinite(a) && std::isfinite(b)) return adaptive(f, a, b, abs_share, cfg.rel_tol, cfg.max_subdivisions, name);
    if (std::isfinite(a)) {
        Func g = [&f, a](double t) {
            const double u = 1.0 - t;
            return f(a + t / u) / (u * u);
        };
        return adaptive(g, 0.0, 1.0, abs_share, cfg.rel_tol, cfg.max_subdivisions, name);
    }
    if (std::isfinite(b)) {
        Func g = [&f, b](double t) {
            const double u = 1.0 - t;
            return f(b - t / u) / (u * u);
        };
        return adaptive(g, 0.0, 1.0, abs_share, cfg.rel_tol, cfg.max_subdivisions, name);
    }
    const QuadResult l = segment(f, -kInf, 0.0, cfg, 0.5 * abs_share, name);
    const QuadResult r = segment(f, 0.0, kInf, cfg, 0.5 * abs_share, name);
    return {l.value + r.value, l.error + r.error};
}

}  // namespace

NonConvergence::NonConvergence(std::string integral, double partial, double error)
    : std::runtime_error("non-convergent quadrature in " + integral + " (partial value " + std::to_string(partial) +
                         ", error estimate " + std::to_string(error) + ")"),
      integral_(std::move(integral)),
      partial_(partial),
      error_(error) {}

void QuadConfig::check() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw std::invalid_argument("quadrature tolerances must be positive");
    if (max_subdivisions < 1) throw std::invalid_argument("max_subdivisions must be at least 1");
    if (!(tail_cutoff_ratio > 0.0)) throw std::invalid_argument("tail_cutoff_ratio must be positive");
}

QuadConfig QuadConfig::from_env() {
    QuadConfig c;
    auto read = [](const char* name, double& dst) {
        if (const char* v = std::getenv(name)) {
            char* end = nullptr;
            const double x = std::strtod(v, &end);
            if (end == v || *end != '\0' || !(x > 0.0))
                throw std::invalid_argument(std::string(name) + " must be a positive real");
            dst = x;
        }
    };
    read("QCX_TOL_ABS", c.abs_tol);
    read("QCX_TOL_REL", c.rel_tol);
    return c;
}

QuadResult integrate_endpoint_singular(const Func& f, double a, double b, const QuadConfig& cfg,
                                       const std::string& name) {
    cfg.check();
    if (!(std::isfinite(a) && std::isfinite(b) && a < b)) throw std::invalid_argument("finite interval a < b required");
    thread_local boost::math::quadrature::tanh_sinh<double> ts(15);
    double err = 0.0, l1 = 0.0;
    double v = 0.0;
    try {
        v = ts.integrate([&f](double x) { return f(x); }, a, b, cfg.rel_tol * 1e-2, &err, &l1);
    } catch (const std::exception&) {
        throw NonConvergence(name, kInf, kInf);
    }
    if (!std::isfinite(v) || err > std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(v))) throw NonConvergence(name, v, err);
    return {v, err};
}

QuadResult integrate(const Func& f, double a, double b, const QuadConfig& cfg, const std::string& name) {
    cfg.check();
    if (a > b) {
        const QuadResult r = integrate(f, b, a, cfg, name);
        return {-r.value, r.error};
    }
    return segment(f, a, b, cfg, cfg.abs_tol, name);
}

QuadResult integrate_breaks_serial(const Func& f, const std::vector<double>& pts, const QuadConfig& cfg,
                                   const std::string& name) {
    cfg.check();
    if (pts.size() < 2) return {};
    const std::size_t nseg = pts.size() - 1;
    const double share = cfg.abs_tol / static_cast<double>(nseg);
    QuadResult out;
    for (std::size_t i = 0; i < nseg; ++i) {
        const QuadResult r = segment(f, pts[i], pts[i + 1], cfg, share, name);
        out.value += r.value;
        out.error += r.error;
    }
    return out;
}

QuadResult integrate_breaks(const Func& f, const std::vector<double>& pts, const QuadConfig& cfg,
                            const std::string& name) {
    cfg.check();
    if (pts.size() < 2) return {};
    const long nseg = static_cast<long>(pts.size()) - 1;
    const double share = cfg.abs_tol / static_cast<double>(nseg);
    std::vector<QuadResult> parts(nseg);
    std::vector<std::exception_ptr> errors(nseg);
#pragma omp parallel for schedule(dynamic) if (nseg > 8)
    for (long i = 0; i < nseg; ++i) {
        try {
            parts[i] = segment(f, pts[i], pts[i + 1], cfg, share, name);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    QuadResult out;
    for (const auto& p : parts) {
        out.value += p.value;
        out.error += p.error;
    }
    return out;
}

double Density1D::log_at(double x) const {
    if (log_eval) return log_eval(x);
    const double v = eval(x);
    return v > 0.0 ? std::log(v) : -kInf;
}

double Density1D::at(double x) const {
    if (eval) return eval(x);
    return std::exp(log_eval(x));
}

namespace {

// March from x0 in direction dir until the density is below the cutoff and decaying.
void march_tail(const Density1D& d, double x0, double first_step, int dir, double log_cut, double& log_peak,
                std::vector<double>& out) {
    double x = x0, step = first_step, prev = d.log_at(x0);
    for (int it = 0; it < 2000; ++it) {
        x += dir * step;
        const double lv = d.log_at(x);
        log_peak = std::max(log_peak, lv);
        out.push_back(x);
        if (lv < log_cut + log_peak && lv < prev) return;
        prev = lv;
        step *= 1.25;
    }
    throw NonConvergence("tail truncation", x, kInf);
}

}  // namespace

std::vector<double> density_breakpoints(const Density1D& d, const QuadConfig& cfg) {
    std::vector<double> pts;
    if (std::isfinite(d.lo)) pts.push_back(d.lo);
    for (double z : d.singular_points)
        if (z > d.lo && z < d.hi) pts.push_back(z);
    if (std::isfinite(d.hi)) pts.push_back(d.hi);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (std::isfinite(d.lo) && std::isfinite(d.hi)) return pts;
    if (pts.empty()) pts.push_back(0.0);

    // peak over the finite panels: sampling then golden-section around the best sample
    double log_peak = -kInf, best_x = pts.front();
    auto probe = [&](double x) {
        const double lv = d.log_at(x);
        if (lv > log_peak) {
            log_peak = lv;
            best_x = x;
        }
    };
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        for (int k = 1; k < 16; ++k) probe(pts[i] + (pts[i + 1] - pts[i]) * k / 16.0);
    for (double p : pts) probe(p);
    if (pts.size() > 1) {
        const double w = (pts.back() - pts.front()) / (16.0 * static_cast<double>(pts.size() - 1));
        double a = std::max(best_x - w, pts.front()), b = std::min(best_x + w, pts.back());
        const double g = 0.5 * (std::sqrt(5.0) - 1.0);
        for (int it = 0; it < 60; ++it) {
            const double c = b - g * (b - a), e = a + g * (b - a);
            if (d.log_at(c) > d.log_at(e))
                b = e;
            else
                a = c;
        }
        probe(0.5 * (a + b));
    }

    const double log_cut = std::log(cfg.tail_cutoff_ratio);
    std::vector<double> left, right;
    const double w_first = pts.size() > 1 ? std::min(d.scale, pts[1] - pts[0]) : d.scale;
    const double w_last = pts.size() > 1 ? std::min(d.scale, pts.back() - pts[pts.size() - 2]) : d.scale;
    if (!std::isfinite(d.hi)) march_tail(d, pts.back(), w_last, +1, log_cut, log_peak, right);
    if (!std::isfinite(d.lo)) march_tail(d, pts.front(), w_first, -1, log_cut, log_peak, left);
    std::vector<double> out(left.rbegin(), left.rend());
    out.insert(out.end(), pts.begin(), pts.end());
    out.insert(out.end(), right.begin(), right.end());
    return out;
}

double density_expectation(const Density1D& d, const Func& g, const std::vector<double>& pts, const QuadConfig& cfg,
                           const std::string& name) {
    Func f = [&](double x) {
        const double lv = d.log_at(x);
        if (lv == -kInf) return 0.0;
        return std::exp(lv) * g(x);
    };
    return integrate_breaks(f, pts, cfg, name).value;
}

double density_shannon(const Density1D& d, const std::vector<double>& pts, const QuadConfig& cfg) {
    Func f = [&](double x) {
        const double lv = d.log_at(x);
        if (lv == -kInf) return 0.0;  // rho ln rho -> 0 at zeros
        return -std::exp(lv) * lv;
    };
    return integrate_breaks(f, pts, cfg, "shannon entropy").value;
}

double density_entropic_moment(const Density1D& d, double q, const std::vector<double>& pts, const QuadConfig& cfg) {
    Func f = [&](double x) {
        const double lv = d.log_at(x);
        if (lv == -kInf) return 0.0;
        return std::exp(q * lv);
    };
    return integrate_breaks(f, pts, cfg, "entropic moment").value;
}

FisherValue density_fisher(const Density1D& d, const std::vector<double>& pts, const QuadConfig& cfg) {
    auto step = [&d](double x) {
        double h = d.scale;
        if (std::isfinite(d.lo)) h = std::min(h, x - d.lo);
        if (std::isfinite(d.hi)) h = std::min(h, d.hi - x);
        return 1e-5 * h;
    };
    Func f;
    if (d.amplitude) {
        f = [&](double x) {
            const double h = step(x);
            const double da = (d.amplitude(x + h) - d.amplitude(x - h)) / (2.0 * h);
            return 4.0 * da * da;
        };
    } else {
        f = [&](double x) {
            const double r = d.at(x);
            if (r <= 0.0) return 0.0;
            const double h = step(x);
            const double dr = (d.at(x + h) - d.at(x - h)) / (2.0 * h);
            return dr * dr / r;
        };
    }
    try {
        const double v = integrate_breaks(f, pts, cfg, "fisher information").value;
        if (!std::isfinite(v)) return {kInf, true};
        return {v, false};
    } catch (const NonConvergence&) {
        return {kInf, true};
    }
}

MeasureSet density_measures(const Density1D& d, const std::vector<double>& q_list, const QuadConfig& cfg) {
    for (double q : q_list)
        if (!(q > 0.0) || q == 1.0) throw std::invalid_argument("Renyi/Tsallis order must be positive and != 1");
    const auto pts = density_breakpoints(d, cfg);
    MeasureSet m;
    m.norm = density_expectation(d, [](double) { return 1.0; }, pts, cfg, "normalization");
    if (std::fabs(m.norm - 1.0) > 1e-6) throw std::domain_error("density is not normalized to unity");
    m.mean = density_expectation(d, [](double x) { return x; }, pts, cfg, "first moment");
    const double m2 = density_expectation(d, [](double x) { return x * x; }, pts, cfg, "second moment");
    m.variance = m2 - m.mean * m.mean;
    m.shannon = density_shannon(d, pts, cfg);
    m.shannon_power = std::exp(m.shannon);
    m.fisher = density_fisher(d, pts, cfg);
    m.disequilibrium = density_entropic_moment(d, 2.0, pts, cfg);
    for (double q : q_list) {
        const double w = density_entropic_moment(d, q, pts, cfg);
        m.renyi[q] = std::log(w) / (1.0 - q);
        m.tsallis[q] = (1.0 - w) / (q - 1.0);
    }
    return m;
}

Density1D rakhmanov_density(const OrthoPolySpec& spec) {
    validate(spec);
    OrthoPolySpec s = spec;
    s.norm = Norm::orthonormal;
    Density1D d;
    d.log_eval = [s](double x) {
        const double lw = log_weight(s, x);
        if (lw == -kInf) return -kInf;
        return lw + 2.0 * eval_poly_scaled(s, x).log_abs();
    };
    d.eval = [f = d.log_eval](double x) { return std::exp(f(x)); };
    d.amplitude = [s](double x) {
        const double lw = log_weight(s, x);
        if (lw == -kInf) return 0.0;
        const ScaledValue p = eval_poly_scaled(s, x);
        if (p.mantissa == 0.0) return 0.0;
        const double mag = std::exp(0.5 * lw + p.log_abs());
        return p.mantissa < 0 ? -mag : mag;
    };
    d.lo = support_lo(s);
    d.hi = support_hi(s);
    d.singular_points = zeros(s);
    d.tail = s.family == Family::Hermite ? TailDecay::gaussian : TailDecay::exponential;
    d.scale = 1.0;
    return d;
}

double weighted_entropic_integral(const OrthoPolySpec& spec, const Func& g, const QuadConfig& cfg) {
    const Density1D d = rakhmanov_density(spec);
    const auto pts = density_breakpoints(d, cfg);
    OrthoPolySpec s = spec;
    s.norm = Norm::orthonormal;
    Func f = [&](double x) {
        const double lw = log_weight(s, x);
        if (lw == -kInf) return 0.0;
        const double lp = eval_poly_scaled(s, x).log_abs();
        if (lp == -kInf) return 0.0;
        return g(x) * std::exp(lw + 2.0 * lp) * 2.0 * lp;
    };
    return integrate_breaks(f, pts, cfg, "entropic integral").value;
}

double entropic_integral_E(const OrthoPolySpec& spec, int weight_power, const QuadConfig& cfg) {
    if (weight_power != 0 && weight_power != 1) throw std::invalid_argument("weight_power must be 0 or 1");
    if (weight_power == 1 && spec.family != Family::Laguerre)
        throw std::invalid_argument("weight_power 1 is defined for the Laguerre family only");
    if (weight_power == 0) return weighted_entropic_integral(spec, [](double) { return 1.0; }, cfg);
    return weighted_entropic_integral(spec, [](double x) { return x; }, cfg);
}

}  // namespace qcx
