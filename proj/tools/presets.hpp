#pragma once

#include "table.hpp"

#include "qcx/quadrature.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qcx::cli {

struct Preset {
    std::string name;
    std::string title;
    std::string x;                // abscissa column for the plot script
    std::vector<std::string> ys;  // plotted columns
    std::function<Table(const QuadConfig&)> build;
};

const std::vector<Preset>& presets();
// Throws std::invalid_argument for an unknown name.
const Preset& find_preset(const std::string& name);

}  // namespace qcx::cli
