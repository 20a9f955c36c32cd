#pragma once

#include <vector>

#include "disect/partition_engine.hpp"

namespace disect::detail {

inline constexpr int kCellX1 = -1;
inline constexpr int kCellX2 = -2;
inline constexpr int kCellU = -3;

/// Per-vertex placement cell: fixed side, star index, or independent set.
struct CellMap {
    std::vector<int> cell;        // kCellX1 / kCellX2 / kCellU / star index
    std::vector<char> is_center;
};

/// Builds the cell map and verifies that x1, x2, the stars and the
/// independent set partition all n vertices.
CellMap build_cell_map(int n, const std::vector<int>& x1,
                       const std::vector<int>& x2, const StarDecomposition& dec);

} // namespace disect::detail
