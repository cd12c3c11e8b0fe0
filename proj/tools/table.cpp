#include "table.hpp"

#include "qcx/parallel.hpp"
#include "qcx/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <stdexcept>

namespace qcx::cli {

void Table::add(const Row& r) {
    if (header.empty()) {
        for (const auto& [name, _] : r) header.push_back(name);
    } else {
        if (r.size() != header.size()) throw std::logic_error("row width differs from header");
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i].first != header[i]) throw std::logic_error("row column '" + r[i].first + "' out of place");
    }
    std::vector<Cell> cells;
    cells.reserve(r.size());
    for (const auto& [_, c] : r) cells.push_back(c);
    rows.push_back(std::move(cells));
}

std::string format_cell(const Cell& c, int precision) {
    if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    if (const auto* s = std::get_if<std::string>(&c)) return *s;
    double v = std::get<double>(c);
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

void write_csv(std::ostream& os, const Table& t, int precision) {
    for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
    os << '\n';
    for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << format_cell(r[i], precision);
        os << '\n';
    }
}

Table select_columns(const Table& t, const std::vector<std::string>& keep) {
    std::vector<std::size_t> idx;
    for (const auto& k : keep) {
        const auto it = std::find(t.header.begin(), t.header.end(), k);
        if (it == t.header.end()) throw std::invalid_argument("unknown column '" + k + "'");
        idx.push_back(static_cast<std::size_t>(it - t.header.begin()));
    }
    Table out;
    out.header = keep;
    for (const auto& r : t.rows) {
        std::vector<Cell> cells;
        for (auto i : idx) cells.push_back(r[i]);
        out.rows.push_back(std::move(cells));
    }
    return out;
}

void fill_row_groups(Table& out, std::size_t count, const std::function<std::vector<Row>(std::size_t)>& fn) {
    std::vector<std::optional<std::vector<Row>>> slots(count);
    std::exception_ptr err;
    try {
        parallel_for_ordered(count, [&](std::size_t i) { slots[i] = fn(i); });
    } catch (...) {
        err = std::current_exception();
    }
    for (auto& s : slots) {
        if (!s) break;
        for (const auto& r : *s) out.add(r);
    }
    if (!err) return;
    try {
        std::rethrow_exception(err);
    } catch (const NonConvergence& e) {
        throw PartialTable(e.what(), e.integral(), out);
    }
}

void fill_rows(Table& out, std::size_t count, const std::function<Row(std::size_t)>& fn) {
    fill_row_groups(out, count, [&](std::size_t i) { return std::vector<Row>{fn(i)}; });
}

void write_plot_script(std::ostream& os, const std::string& csv_path, const Table& t, const std::string& x,
                       const std::vector<std::string>& ys, const std::string& title) {
    auto col = [&](const std::string& name) {
        const auto it = std::find(t.header.begin(), t.header.end(), name);
        if (it == t.header.end()) throw std::invalid_argument("plot column '" + name + "' not in table");
        return static_cast<std::size_t>(it - t.header.begin()) + 1;
    };
    os << "# gnuplot script for " << csv_path << "\n";
    os << "set datafile separator ','\n";
    os << "set datafile missing 'nan'\n";
    os << "set key outside right\n";
    os << "set title '" << title << "'\n";
    os << "set xlabel '" << x << "'\n";
    os << "plot ";
    const auto xi = col(x);
    for (std::size_t i = 0; i < ys.size(); ++i) {
        os << (i ? ", \\\n     " : "") << "'" << csv_path << "' every ::1 using " << xi << ":" << col(ys[i])
           << " with linespoints title '" << ys[i] << "'";
    }
    os << "\n";
}

}  // namespace qcx::cli
