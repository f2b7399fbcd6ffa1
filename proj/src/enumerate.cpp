#include "toric/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "toric/errors.hpp"

namespace toric {

namespace {

std::string format_failure(const LatticePolygon& q, const std::string& why) {
    std::string s;
    for (const auto& v : q.vertices()) s += v.str();
    return s + ": " + why;
}

class Search {
public:
    Search(const std::vector<LatticePoint>& cands, std::vector<LatticePolygon>& out) : cands_(cands), out_(out) {}

    void from(const LatticePoint& v1) {
        chain_.assign(1, v1);
        grow(0);
    }

private:
    void grow(int singular) {
        const LatticePoint v1 = chain_.front();
        const LatticePoint last = chain_.back();
        if (chain_.size() >= 3) try_close(singular);
        for (const auto& w : cands_) {
            if (!(v1 < w)) continue;
            const Int d = det(last, w);
            if (d <= 0) continue;
            const int s = singular + (d > 1 ? 1 : 0);
            if (s > 1) continue;
            if (chain_.size() >= 2) {
                const LatticePoint prev = chain_[chain_.size() - 2];
                if (det(last - prev, w - last) <= 0) continue;            // strict left turn
                if (det(chain_[1] - v1, w - v1) <= 0) continue;           // left of the first edge
                if (det(last - v1, w - v1) <= 0) continue;                // angle about v1 increases
            }
            chain_.push_back(w);
            grow(s);
            chain_.pop_back();
        }
    }

    void try_close(int singular) {
        const LatticePoint& v1 = chain_.front();
        const LatticePoint& v2 = chain_[1];
        const LatticePoint& last = chain_.back();
        const LatticePoint& prev = chain_[chain_.size() - 2];
        const Int d = det(last, v1);
        if (d <= 0) return;
        if (singular + (d > 1 ? 1 : 0) != 1) return;
        if (det(last - prev, v1 - last) <= 0) return;
        if (det(v1 - last, v2 - v1) <= 0) return;
        out_.push_back(LatticePolygon::from_vertices(chain_));
    }

    const std::vector<LatticePoint>& cands_;
    std::vector<LatticePolygon>& out_;
    std::vector<LatticePoint> chain_;
};

}  // namespace

unsigned workers_from_env() {
    const char* s = std::getenv("TORIC_WORKERS");
    if (s == nullptr) return 1;
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v < 1 || v > 256) return 1;
    return static_cast<unsigned>(v);
}

EnumerationResult enumerate_one_singularity(Int bound, const EnumerationOptions& options) {
    if (bound < 1) throw std::domain_error("bound must be at least 1");
    std::vector<LatticePoint> cands;
    for (Int x = -bound; x <= bound; ++x)
        for (Int y = -bound; y <= bound; ++y)
            if ((x != 0 || y != 0) && is_primitive({x, y})) cands.push_back({x, y});
    if (options.reverse_order) std::reverse(cands.begin(), cands.end());

    // One bucket per start vertex; buckets are filled independently and merged in
    // candidate order, so the thread count never changes the result.
    std::vector<std::vector<LatticePolygon>> buckets(cands.size());
    const unsigned workers = std::max(1u, options.workers);
    auto run = [&](unsigned w) {
        for (std::size_t i = w; i < cands.size(); i += workers) Search(cands, buckets[i]).from(cands[i]);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    EnumerationResult res;
    res.bound = bound;
    std::map<std::vector<GraphNode>, EnumeratedClass> by_key;
    std::map<std::pair<int, Int>, std::vector<GraphNode>> key_of_class;
    for (const auto& bucket : buckets) {
        for (const auto& poly : bucket) {
            ++res.polygons_found;
            try {
                const Classification c = classify_one_singularity(poly);
                const LatticePolygon target = canonical_polygon(c.k, c.p);
                const CompleteFan fan = fan_from_polygon(poly);
                if (!surfaces_isomorphic(fan, fan_from_polygon(target))) {
                    res.failures.push_back(format_failure(poly, "graph differs from its canonical target"));
                    continue;
                }
                const auto key = canonical_key(graph_of(fan));
                auto [it, fresh] = by_key.try_emplace(key, EnumeratedClass{c.k, c.p, key, poly, 0});
                if (!fresh && (it->second.k != c.k || it->second.p != c.p))
                    res.failures.push_back(format_failure(poly, "same graph key as a different class"));
                ++it->second.count;
                if (poly.vertices() < it->second.representative.vertices()) it->second.representative = poly;
                auto [kt, kfresh] = key_of_class.try_emplace({c.k, c.p}, key);
                if (!kfresh && kt->second != key)
                    res.failures.push_back(format_failure(poly, "one class with two graph keys"));
            } catch (const std::exception& e) {
                res.failures.push_back(format_failure(poly, e.what()));
            }
        }
    }
    for (auto& [key, cls] : by_key) res.classes.push_back(std::move(cls));
    std::sort(res.classes.begin(), res.classes.end(),
              [](const auto& a, const auto& b) { return std::pair(a.k, a.p) < std::pair(b.k, b.p); });
    std::sort(res.failures.begin(), res.failures.end());
    return res;
}

}  // namespace toric
