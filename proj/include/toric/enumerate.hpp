#pragma once

// Exhaustive search for one-singularity LDP-polygons inside a box, used as a
// completeness check for the classifier.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toric/delpezzo.hpp"
#include "toric/graphs.hpp"

namespace toric {

struct EnumerationOptions {
    bool reverse_order = false;  ///< walk candidate vertices in the opposite order
    unsigned workers = 1;        ///< threads; results do not depend on it
};

struct EnumeratedClass {
    int k = 0;
    Int p = 0;
    std::vector<GraphNode> key;   ///< canonical graph key
    LatticePolygon representative; ///< lexicographically first polygon met
    std::size_t count = 0;        ///< polygons in the box falling in this class
};

struct EnumerationResult {
    Int bound = 0;
    std::size_t polygons_found = 0;
    std::vector<EnumeratedClass> classes;  ///< sorted by (k, p)
    std::vector<std::string> failures;     ///< empty when every polygon classified
};

/// All convex polygons with primitive vertices in [-B, B]^2, the origin in the
/// interior and exactly one non-basic cone. Every hit is classified and its
/// fan compared with the canonical target's fan. Throws std::domain_error for B < 1.
EnumerationResult enumerate_one_singularity(Int bound, const EnumerationOptions& options = {});

/// Reads TORIC_WORKERS; 1 when unset or malformed.
unsigned workers_from_env();

}  // namespace toric
