#include "toric/tables.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace toric {

TableCell compute_table_cell(int k, Int p) {
    TableCell cell;
    cell.k = k;
    cell.p = p;
    cell.expected = table_formulas(k, p);
    cell.expected_index = canonical_index(p);
    try {
        const LdpData ldp = ldp_analyze(canonical_polygon(k, p));
        const EmbeddingData e = embedding_data(ldp);
        const FiberStatistics st = fiber_statistics(e);
        const Int by_formula = checked_sub(choose2(e.delta + 2), minkowski_double(e.dilated_polar));
        cell.computed = {e.degree, e.delta, st.spanning_count, e.interior, e.boundary};
        cell.index = ldp.index;
        if (by_formula != st.spanning_count)
            cell.mismatches.push_back("beta: fiber count " + std::to_string(st.spanning_count) + " vs " +
                                      std::to_string(by_formula) + " from the doubled polygon");
    } catch (const std::exception& ex) {
        cell.mismatches.push_back(std::string("error: ") + ex.what());
        return cell;
    }
    auto cmp = [&](const char* name, Int got, Int want) {
        if (got != want)
            cell.mismatches.push_back(std::string(name) + ": computed " + std::to_string(got) + ", closed form " +
                                      std::to_string(want));
    };
    cmp("degree", cell.computed.degree, cell.expected.degree);
    cmp("delta", cell.computed.delta, cell.expected.delta);
    cmp("beta", cell.computed.beta, cell.expected.beta);
    cmp("genus", cell.computed.genus, cell.expected.genus);
    cmp("boundary", cell.computed.boundary, cell.expected.boundary);
    cmp("index", cell.index, cell.expected_index);
    return cell;
}

std::vector<TableCell> compute_tables(Int pmax, unsigned workers) {
    std::vector<TableCell> cells(static_cast<std::size_t>(std::max<Int>(pmax, 0)) * 3);
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++)
            cells[i] = compute_table_cell(static_cast<int>(i % 3) + 1, static_cast<Int>(i / 3) + 1);
    };
    workers = std::max(1u, workers);
    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }
    return cells;
}

}  // namespace toric
