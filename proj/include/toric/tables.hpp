#pragma once

#include <string>
#include <vector>

#include "toric/embedding.hpp"

namespace toric {

/// Directly computed invariants of Q_p^[k] next to their closed forms.
struct TableCell {
    int k = 0;
    Int p = 0;
    TableRow computed;
    TableRow expected;
    Int index = 0;
    Int expected_index = 0;
    std::vector<std::string> mismatches;  ///< one entry per differing quantity
};

/// Quantities compared per cell: degree, delta, beta, genus, boundary, index.
inline constexpr int kTableQuantities = 6;

/// β is taken from the fiber convolution and cross-checked against
/// C(δ+2, 2) - #(2·ℓ·polar); a disagreement there is reported as a mismatch too.
TableCell compute_table_cell(int k, Int p);

/// Cells for p = 1..pmax, k = 1..3 in (p, k) order regardless of `workers`.
std::vector<TableCell> compute_tables(Int pmax, unsigned workers = 1);

}  // namespace toric
