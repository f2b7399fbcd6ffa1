#pragma once

// Circular graphs with integer vertex weights and (p, q) edge weights. Two
// complete toric surfaces are isomorphic exactly when their graphs agree up
// to rotation, possibly after reversing one of them.

#include <compare>
#include <string>
#include <vector>

#include "toric/fans.hpp"

namespace toric {

enum class Direction { anticlockwise, clockwise };

/// Vertex weight plus the weight of the edge leaving the vertex.
struct GraphNode {
    Int weight = 0;  ///< -r_i
    Int p = 0;
    Int q = 1;

    friend auto operator<=>(const GraphNode&, const GraphNode&) = default;
};

class Wve2cGraph {
public:
    /// Throws invalid_input on fewer than three nodes or an invalid edge pair.
    Wve2cGraph(std::vector<GraphNode> nodes, Direction dir = Direction::anticlockwise);

    const std::vector<GraphNode>& nodes() const noexcept { return nodes_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    Direction direction() const noexcept { return dir_; }

    friend bool operator==(const Wve2cGraph&, const Wve2cGraph&) = default;

private:
    std::vector<GraphNode> nodes_;
    Direction dir_;
};

Wve2cGraph graph_of(const CompleteFan& f);
Wve2cGraph graph_of(const FanAnalysis& a);

/// Walks the cycle the other way round; edge weights (p, q) become (p̂, q).
Wve2cGraph reverse_graph(const Wve2cGraph& g);

/// Same cyclic weight sequence up to rotation. The direction flag is a
/// traversal label and is not compared.
bool graphs_isomorphic(const Wve2cGraph& a, const Wve2cGraph& b);

bool surfaces_isomorphic(const CompleteFan& a, const CompleteFan& b);

/// Lexicographically smallest rotation of g or of reverse(g): equal keys iff
/// the surfaces are isomorphic.
std::vector<GraphNode> canonical_key(const Wve2cGraph& g);

/// "[w1] -(p1,q1)- [w2] - ... -", basic edges unlabeled.
std::string render(const Wve2cGraph& g);

}  // namespace toric
