#include "toric/graphs.hpp"

#include <algorithm>

#include "toric/errors.hpp"

namespace toric {

Wve2cGraph::Wve2cGraph(std::vector<GraphNode> nodes, Direction dir) : nodes_(std::move(nodes)), dir_(dir) {
    if (nodes_.size() < 3) throw invalid_input("a circular graph needs at least three vertices");
    for (const auto& n : nodes_)
        if (n.q < 1 || n.p < 0 || n.p >= n.q || gcd(n.p, n.q) != 1)
            throw invalid_input("invalid edge weight (" + std::to_string(n.p) + "," + std::to_string(n.q) + ")");
}

Wve2cGraph graph_of(const FanAnalysis& a) {
    std::vector<GraphNode> nodes;
    nodes.reserve(a.cones.size());
    for (std::size_t i = 0; i < a.cones.size(); ++i) nodes.push_back({checked_neg(a.r[i]), a.cones[i].p, a.cones[i].q});
    return Wve2cGraph(std::move(nodes));
}

Wve2cGraph graph_of(const CompleteFan& f) { return graph_of(analyze_fan(f)); }

Wve2cGraph reverse_graph(const Wve2cGraph& g) {
    const std::size_t nu = g.size();
    const auto& src = g.nodes();
    std::vector<GraphNode> out(nu);
    for (std::size_t j = 0; j < nu; ++j) {
        const std::size_t v = (nu - j) % nu;     // vertex visited j-th going backwards
        const std::size_t e = (v + nu - 1) % nu;  // edge leaving it backwards
        out[j] = {src[v].weight, socius(src[e].p, src[e].q), src[e].q};
    }
    return Wve2cGraph(std::move(out), g.direction() == Direction::anticlockwise ? Direction::clockwise
                                                                                 : Direction::anticlockwise);
}

bool graphs_isomorphic(const Wve2cGraph& a, const Wve2cGraph& b) {
    if (a.size() != b.size()) return false;
    std::vector<GraphNode> doubled(a.nodes());
    doubled.insert(doubled.end(), a.nodes().begin(), a.nodes().end());
    return std::search(doubled.begin(), doubled.end(), b.nodes().begin(), b.nodes().end()) != doubled.end();
}

bool surfaces_isomorphic(const CompleteFan& a, const CompleteFan& b) {
    const auto ga = graph_of(a), gb = graph_of(b);
    return graphs_isomorphic(ga, gb) || graphs_isomorphic(ga, reverse_graph(gb));
}

namespace {

std::vector<GraphNode> min_rotation(const std::vector<GraphNode>& s) {
    std::vector<GraphNode> best = s, cur = s;
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

}  // namespace

std::vector<GraphNode> canonical_key(const Wve2cGraph& g) {
    return std::min(min_rotation(g.nodes()), min_rotation(reverse_graph(g).nodes()));
}

std::string render(const Wve2cGraph& g) {
    std::string s;
    for (const auto& n : g.nodes()) {
        s += "[" + std::to_string(n.weight) + "] ";
        if (n.q == 1)
            s += "- ";
        else
            s += "-(" + std::to_string(n.p) + "," + std::to_string(n.q) + ")- ";
    }
    s.pop_back();
    return s;
}

}  // namespace toric
