#pragma once

// Exact row echelon form over Q for sparse integer rows, kept fraction-free:
// every stored row is integral, primitive, and has a positive leading entry.

#include <unordered_map>
#include <utility>
#include <vector>

#include "toric/checked.hpp"

namespace toric {

/// (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<Int, Int>>;

class SparseEchelon {
public:
    /// Reduces `row` against the stored pivots. Returns true (and stores the
    /// remainder) if the row was independent of the rows added so far.
    bool add(SparseRow row);

    /// True iff `row` lies in the span of the rows added so far.
    bool contains(SparseRow row) const;

    std::size_t rank() const noexcept { return pivots_.size(); }

private:
    SparseRow reduce(SparseRow row) const;
    std::unordered_map<Int, SparseRow> pivots_;  // keyed by leading column
};

}  // namespace toric
