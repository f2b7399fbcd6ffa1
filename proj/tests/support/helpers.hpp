#pragma once

// Shared helpers for the test binaries: seeded random objects and slow but
// obviously-correct reference computations.

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "toric/delpezzo.hpp"
#include "toric/embedding.hpp"
#include "toric/lattice.hpp"

namespace toric::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng()); }

/// Product of a few elementary shears, optionally composed with a reflection.
inline UnimodularMap random_unimodular(int sign = 0, int steps = 4, Int range = 3) {
    UnimodularMap m = UnimodularMap::identity();
    for (int i = 0; i < steps; ++i) {
        const Int t = uniform(-range, range);
        m = (uniform(0, 1) ? UnimodularMap(1, t, 0, 1) : UnimodularMap(1, 0, t, 1)) * m;
    }
    const bool flip = sign < 0 || (sign == 0 && uniform(0, 1) == 1);
    if (flip) m = UnimodularMap(0, 1, 1, 0) * m;
    return m;
}

inline LatticePoint random_primitive(Int range) {
    for (;;) {
        const LatticePoint v{uniform(-range, range), uniform(-range, range)};
        if ((v.x != 0 || v.y != 0) && is_primitive(v)) return v;
    }
}

/// Hull of a handful of random points; retries on degenerate draws.
inline LatticePolygon random_polygon(Int range = 6, int npoints = 8) {
    for (;;) {
        std::vector<LatticePoint> pts;
        for (int i = 0; i < npoints; ++i) pts.push_back({uniform(-range, range), uniform(-range, range)});
        try {
            return convex_hull(pts);
        } catch (const std::exception&) {
        }
    }
}

/// Random polygon with primitive vertices and the origin strictly inside.
inline LatticePolygon random_ldp(Int range = 4, int npoints = 6) {
    for (;;) {
        std::vector<LatticePoint> pts;
        for (int i = 0; i < npoints; ++i) pts.push_back(random_primitive(range));
        try {
            const LatticePolygon q = convex_hull(pts);
            bool ok = true;
            for (std::size_t i = 0; i < q.size() && ok; ++i) {
                const auto& a = q.vertex(static_cast<std::ptrdiff_t>(i));
                ok = is_primitive(a) && det(a, q.vertex(static_cast<std::ptrdiff_t>(i) + 1)) > 0;
            }
            if (ok) return q;
        } catch (const std::exception&) {
        }
    }
}

/// Random LDP whose index stays small enough for quadratic brute-force oracles
/// on the dilated polar.
inline LdpData random_small_index_ldp(Int range, int npoints, Int max_index) {
    for (;;) {
        LdpData d = ldp_analyze(random_ldp(range, npoints));
        if (d.index <= max_index) return d;
    }
}

/// Bounding-box scan with one sign test per edge.
struct BrutePoints {
    Int boundary = 0;
    Int interior = 0;
};

inline BrutePoints brute_points(const LatticePolygon& q) {
    Int xmin = q.vertex(0).x, xmax = xmin, ymin = q.vertex(0).y, ymax = ymin;
    for (const auto& v : q.vertices()) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    BrutePoints out;
    for (Int x = xmin; x <= xmax; ++x)
        for (Int y = ymin; y <= ymax; ++y) {
            bool inside = true, on_edge = false;
            for (std::size_t i = 0; i < q.size(); ++i) {
                const auto& a = q.vertex(static_cast<std::ptrdiff_t>(i));
                const auto& b = q.vertex(static_cast<std::ptrdiff_t>(i) + 1);
                const Int s = det(b - a, LatticePoint{x, y} - a);
                if (s < 0) inside = false;
                if (s == 0) on_edge = true;
            }
            if (inside) (on_edge ? out.boundary : out.interior) += 1;
        }
    return out;
}

/// Shoelace sum written out independently of the library.
inline Int brute_area2(const LatticePolygon& q) {
    Int s = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const auto& a = q.vertex(static_cast<std::ptrdiff_t>(i));
        const auto& b = q.vertex(static_cast<std::ptrdiff_t>(i) + 1);
        s += a.x * b.y - a.y * b.x;
    }
    return s < 0 ? -s : s;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string fixture(const std::string& name) { return std::string(TORIC_FIXTURE_DIR) + "/" + name; }

/// Reference binomial lists: "# ..." header then one binomial per line.
inline std::vector<std::string> fixture_lines(const std::string& name) {
    std::vector<std::string> out;
    std::istringstream in(read_file(fixture(name)));
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') out.push_back(line);
    return out;
}

}  // namespace toric::testing
