#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qcx::cli {

using Cell = std::variant<std::int64_t, double, std::string>;
using Row = std::vector<std::pair<std::string, Cell>>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    void add(const Row& r);
};

std::string format_cell(const Cell& c, int precision);
void write_csv(std::ostream& os, const Table& t, int precision);

// Keeps the named columns (in the order given) of every row.  Throws
// std::invalid_argument on unknown names.
Table select_columns(const Table& t, const std::vector<std::string>& keep);

// Raised when a row fails to converge; carries the rows computed before it.
class PartialTable : public std::runtime_error {
public:
    PartialTable(const std::string& what, std::string integral, Table partial)
        : std::runtime_error(what), integral(std::move(integral)), partial(std::move(partial)) {}
    std::string integral;
    Table partial;
};

// Evaluates fn(0..count-1) on the worker pool and appends the rows in index
// order.  A NonConvergence in any row becomes a PartialTable holding the rows
// before the first failing index; other exceptions pass through.
void fill_rows(Table& out, std::size_t count, const std::function<Row(std::size_t)>& fn);
// Same, for builders that return several rows per index.
void fill_row_groups(Table& out, std::size_t count, const std::function<std::vector<Row>(std::size_t)>& fn);

// Gnuplot script plotting every named y column against x from the CSV file.
void write_plot_script(std::ostream& os, const std::string& csv_path, const Table& t, const std::string& x,
                       const std::vector<std::string>& ys, const std::string& title);

}  // namespace qcx::cli
