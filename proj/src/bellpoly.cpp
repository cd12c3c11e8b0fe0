#include "qcx/bellpoly.hpp"

#include "qcx/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qcx {

namespace {

struct Enumerator {
    const std::function<bool(int)>& allowed;
    const std::function<void(const PartitionIndex&)>& visit;
    PartitionIndex j;

    // Assign j_i for parts of size i, i-1, ..., 1 with r parts left summing to s.
    void descend(int i, int r, int s) {
        if (i == 1) {
            if (r == s && (r == 0 || allowed(1))) {
                j[0] = r;
                visit(j);
                j[0] = 0;
            }
            return;
        }
        if (!allowed(i)) {
            if (s <= r * (i - 1)) descend(i - 1, r, s);
            return;
        }
        // j_i parts of size i leave r-j_i parts of size <= i-1 summing to s - i j_i
        const int hi = std::min(r, (s - r) / (i - 1));
        for (int ji = hi; ji >= 0; --ji) {
            const int r2 = r - ji, s2 = s - i * ji;
            if (s2 > r2 * (i - 1)) break;
            j[i - 1] = ji;
            descend(i - 1, r2, s2);
        }
        j[i - 1] = 0;
    }
};

}  // namespace

void for_each_partition(int m, int l, const std::function<bool(int)>& allowed,
                        const std::function<void(const PartitionIndex&)>& visit) {
    if (l < 1 || l > m) throw std::invalid_argument("partition requires 1 <= l <= m");
    const int width = m - l + 1;
    Enumerator e{allowed, visit, PartitionIndex(width, 0)};
    e.descend(width, l, m);
}

PartitionSet enumerate_partitions(int m, int l) {
    PartitionSet out{m, l, {}};
    for_each_partition(m, l, [](int) { return true; }, [&out](const PartitionIndex& j) { out.indices.push_back(j); });
    return out;
}

std::uint64_t partition_count(int m, int l) {
    // p(m, l) = p(m-1, l-1) + p(m-l, l)
    if (l < 1 || l > m) return 0;
    std::vector<std::vector<std::uint64_t>> p(m + 1, std::vector<std::uint64_t>(l + 1, 0));
    p[0][0] = 1;
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= std::min(a, l); ++b) p[a][b] = p[a - 1][b - 1] + p[a - b][b];
    return p[m][l];
}

namespace {

// Sum over partitions of lead * prod (x_i/i!)^{j_i} / j_i!, with lx[i] = ln|x_i/i!|
// and sx[i] its sign.  lead is passed as a logarithm.
double bell_sum(int m, int l, const std::vector<double>& lx, const std::vector<double>& sx, double log_lead) {
    const int width = m - l + 1;
    std::vector<double> logs, signs;
    for_each_partition(
        m, l, [&lx](int i) { return std::isfinite(lx[i]); },
        [&](const PartitionIndex& j) {
            double lt = log_lead, sg = 1.0;
            for (int i = 1; i <= width; ++i) {
                const int ji = j[i - 1];
                if (ji == 0) continue;
                lt += ji * lx[i] - log_factorial(ji);
                if (ji % 2) sg *= sx[i];
            }
            logs.push_back(lt);
            signs.push_back(sg);
        });
    if (logs.empty()) return 0.0;

    // Sum in a frame scaled by the largest term, Neumaier-compensated.
    const double top = *std::max_element(logs.begin(), logs.end());
    long double sum = 0.0L, comp = 0.0L;
    for (std::size_t t = 0; t < logs.size(); ++t) {
        const long double term = signs[t] * std::exp(static_cast<long double>(logs[t] - top));
        const long double next = sum + term;
        if (std::fabs(sum) >= std::fabs(term))
            comp += (sum - next) + term;
        else
            comp += (term - next) + sum;
        sum = next;
    }
    return static_cast<double>((sum + comp) * std::exp(static_cast<long double>(top)));
}

}  // namespace

double bell_partial(int m, int l, const std::vector<double>& args) {
    if (l < 1 || l > m) throw std::invalid_argument("bell_partial requires 1 <= l <= m");
    const int width = m - l + 1;
    if (static_cast<int>(args.size()) < width) throw std::invalid_argument("bell_partial: not enough arguments");
    std::vector<double> lx(width + 1), sx(width + 1);
    for (int i = 1; i <= width; ++i) {
        const double v = args[i - 1];
        sx[i] = v < 0 ? -1.0 : 1.0;
        lx[i] = v == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(std::fabs(v)) - log_factorial(i);
    }
    return bell_sum(m, l, lx, sx, log_factorial(m));
}

std::vector<double> poly_power_coeffs(const std::vector<double>& coeffs, int p) {
    if (coeffs.empty()) throw std::invalid_argument("poly_power_coeffs: empty coefficient list");
    if (p < 1) throw std::invalid_argument("poly_power_coeffs: p must be positive");
    const int n = static_cast<int>(coeffs.size()) - 1;
    const int deg = n * p;

    // With x_i = i! c_{i-1} the factor x_i/i! is just c_{i-1}, and p!/(k+p)! cancels
    // the m! of the Bell sum, so everything stays in log space.
    std::vector<double> lx(deg + 2, -std::numeric_limits<double>::infinity()), sx(deg + 2, 1.0);
    for (int i = 1; i <= n + 1; ++i) {
        const double c = coeffs[i - 1];
        sx[i] = c < 0 ? -1.0 : 1.0;
        if (c != 0.0) lx[i] = std::log(std::fabs(c));
    }
    std::vector<double> out(deg + 1);
    const double lpfact = log_factorial(p);
    for (int k = 0; k <= deg; ++k) out[k] = bell_sum(k + p, p, lx, sx, lpfact);
    return out;
}

std::vector<WideFloat> poly_power_coeffs_wide(const std::vector<WideFloat>& coeffs, int p) {
    if (coeffs.empty()) throw std::invalid_argument("poly_power_coeffs: empty coefficient list");
    if (p < 1) throw std::invalid_argument("poly_power_coeffs: p must be positive");
    const int n = static_cast<int>(coeffs.size()) - 1;
    const int deg = n * p;

    // pw[i][j] = c_{i-1}^j / j!, so a partition contributes p! prod pw[i][j_i]
    std::vector<std::vector<WideFloat>> pw(n + 2, std::vector<WideFloat>(p + 1));
    for (int i = 1; i <= n + 1; ++i) {
        pw[i][0] = 1;
        for (int j = 1; j <= p; ++j) pw[i][j] = pw[i][j - 1] * coeffs[i - 1] / j;
    }
    WideFloat pfact = 1;
    for (int j = 2; j <= p; ++j) pfact *= j;

    std::vector<WideFloat> out(deg + 1);
    for (int k = 0; k <= deg; ++k) {
        WideFloat sum = 0;
        for_each_partition(
            k + p, p, [&](int i) { return i <= n + 1 && coeffs[i - 1] != 0; },
            [&](const PartitionIndex& j) {
                WideFloat t = pfact;
                for (std::size_t i = 0; i < j.size(); ++i)
                    if (j[i]) t *= pw[i + 1][j[i]];
                sum += t;
            });
        out[k] = sum;
    }
    return out;
}

}  // namespace qcx
