#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace qcx {

// Multi-index (j_1, ..., j_{m-l+1}) with sum j_i = l and sum i*j_i = m.
using PartitionIndex = std::vector<int>;

struct PartitionSet {
    int m = 0;
    int l = 0;
    std::vector<PartitionIndex> indices;
};

PartitionSet enumerate_partitions(int m, int l);

// Visits every multi-index without materializing the set.  Parts i for which
// allowed(i) is false are skipped; bell_partial uses this to prune zero args.
void for_each_partition(int m, int l, const std::function<bool(int)>& allowed,
                        const std::function<void(const PartitionIndex&)>& visit);

// Number of partitions of m into exactly l parts.
std::uint64_t partition_count(int m, int l);

// Partial Bell polynomial B_{m,l}(x_1, ..., x_{m-l+1}); args[0] is x_1.
double bell_partial(int m, int l, const std::vector<double>& args);

// Coefficients of P(x)^p where P has coefficients c_0..c_n, via
// a_k = p!/(k+p)! B_{k+p,p}(c_0, 2! c_1, ..., (k+1)! c_k).
std::vector<double> poly_power_coeffs(const std::vector<double>& coeffs, int p);

// 100-digit float for the alternating sums built from power coefficients;
// double loses every digit there once n*q reaches about 20.
using WideFloat = boost::multiprecision::cpp_bin_float_100;

// Same Bell-sum expansion evaluated in WideFloat.
std::vector<WideFloat> poly_power_coeffs_wide(const std::vector<WideFloat>& coeffs, int p);

}  // namespace qcx
