#include "toric/sparse_rank.hpp"

#include <algorithm>

namespace toric {

namespace {

void normalize(SparseRow& row) {
    if (row.empty()) return;
    Int g = 0;
    for (const auto& [c, v] : row) g = gcd(g, v);
    const Int s = row.front().second < 0 ? -g : g;
    for (auto& [c, v] : row) v /= s;
}

// a*r - b*s, dropping zeros.
SparseRow combine(Int a, const SparseRow& r, Int b, const SparseRow& s) {
    SparseRow out;
    out.reserve(r.size() + s.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < s.size()) {
        Int col, val;
        if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
            col = r[i].first;
            val = checked_mul(a, r[i++].second);
        } else if (i == r.size() || s[j].first < r[i].first) {
            col = s[j].first;
            val = checked_neg(checked_mul(b, s[j++].second));
        } else {
            col = r[i].first;
            val = checked_sub(checked_mul(a, r[i++].second), checked_mul(b, s[j++].second));
        }
        if (val != 0) out.emplace_back(col, val);
    }
    return out;
}

}  // namespace

SparseRow SparseEchelon::reduce(SparseRow row) const {
    std::sort(row.begin(), row.end());
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
    normalize(row);
    // Eliminate leading entries until the lead column has no pivot. Entries
    // left of a stored pivot's lead never reappear, so this terminates.
    while (!row.empty()) {
        const auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) break;
        const SparseRow& piv = it->second;
        row = combine(piv.front().second, row, row.front().second, piv);
        normalize(row);
    }
    return row;
}

bool SparseEchelon::add(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    const Int lead = row.front().first;
    pivots_.emplace(lead, std::move(row));
    return true;
}

bool SparseEchelon::contains(SparseRow row) const { return reduce(std::move(row)).empty(); }

}  // namespace toric
