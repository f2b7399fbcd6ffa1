// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "helpers.hpp"
#include "toric/cones.hpp"
#include "toric/delpezzo.hpp"
#include "toric/embedding.hpp"
#include "toric/enumerate.hpp"
#include "toric/fans.hpp"
#include "toric/graphs.hpp"
#include "toric/lattice.hpp"
#include "toric/tables.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

// Pinned tolerances. Every numeric comparison below is exact (tolerance 0).
constexpr Int kPMax = 50;
constexpr double kTablesSeconds = 30.0;
constexpr double kWorkedExamplesSeconds = 5.0;
constexpr double kEnumerationSeconds = 60.0;
constexpr int kClassificationTrials = 200;
constexpr Int kClassificationPMax = 10;
constexpr Int kEnumerationBound = 4;
constexpr int kPropertyInstances = 500;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (pass) detail << why;
        pass = false;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

unsigned hardware_workers() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

// (p^3 + 6p^2 + 9p + 2)/2: interior count of the dilated polar for k = 1, even p.
Int genus_k1_even(Int p) { return (p * p * p + 6 * p * p + 9 * p + 2) / 2; }

void criterion_tables(Outcome& o) {
    const auto t0 = Clock::now();
    const auto cells = compute_tables(kPMax, hardware_workers());
    const double secs = seconds_since(t0);

    std::size_t bad_cells = 0, bad_quantities = 0, genus_only = 0, genus_explained = 0;
    std::vector<std::string> other;
    for (const auto& c : cells) {
        if (c.mismatches.empty()) continue;
        ++bad_cells;
        bad_quantities += c.mismatches.size();
        const bool only_genus =
            c.mismatches.size() == 1 && c.mismatches[0].rfind("genus:", 0) == 0 && c.k == 1 && c.p % 2 == 0;
        if (only_genus) {
            ++genus_only;
            if (c.computed.genus == genus_k1_even(c.p) && c.computed.genus == c.computed.delta - c.computed.boundary + 1)
                ++genus_explained;
        } else {
            for (const auto& m : c.mismatches)
                other.push_back("k=" + std::to_string(c.k) + " p=" + std::to_string(c.p) + " " + m);
        }
    }
    o.detail << cells.size() << " cells x " << kTableQuantities << " quantities, " << secs << " s";
    if (secs > kTablesSeconds) o.fail("; over the time limit");
    if (bad_cells != 0) {
        o.pass = false;
        o.detail << "; " << bad_quantities << " mismatching quantities in " << bad_cells << " cells";
        if (genus_only != 0)
            o.detail << "; " << genus_only << " of them are the genus for k=1, even p, where the closed form"
                     << " (p+2)(p^2+4p-1)/2 disagrees with interior points = delta - boundary + 1 = "
                     << "(p^3+6p^2+9p+2)/2 (" << genus_explained << " cells confirmed, e.g. p=2: 26 vs 22)";
        for (std::size_t i = 0; i < std::min<std::size_t>(other.size(), 5); ++i) o.detail << "; " << other[i];
    }
}

void criterion_worked_examples(Outcome& o) {
    struct Case {
        int k;
        Int p;
        Int beta;
        const char* file;
    };
    const auto t0 = Clock::now();
    std::size_t total = 0, in_span = 0;
    std::vector<std::string> missing;
    for (const auto& c : {Case{2, 1, 14, "k2_p1_reference.txt"}, Case{3, 1, 9, "k3_p1_reference.txt"},
                          Case{3, 3, 182, "k3_p3_reference.txt"}}) {
        MinimalSystemOptions opt;
        opt.verify_rank = true;
        const auto r = minimal_system(embedding_data(ldp_analyze(canonical_polygon(c.k, c.p))), opt);
        if (r.beta != c.beta || !r.rank || *r.rank != c.beta)
            o.fail("(" + std::to_string(c.k) + "," + std::to_string(c.p) + ") has " + std::to_string(r.beta) +
                   " generators, expected " + std::to_string(c.beta) + "; ");
        const SpanChecker span(r);
        const auto lines = fixture_lines(c.file);
        if (static_cast<Int>(lines.size()) != c.beta) o.fail(std::string(c.file) + " has the wrong line count; ");
        for (const auto& line : lines) {
            ++total;
            bool ok = false;
            try {
                ok = span.contains(parse_binomial(line));
            } catch (const std::exception& ex) {
                missing.push_back(line + " (" + ex.what() + ")");
                continue;
            }
            if (ok)
                ++in_span;
            else
                missing.push_back(line);
        }
    }
    const double secs = seconds_since(t0);
    o.detail << "generator counts 14/9/182 checked, " << in_span << " of " << total
             << " reference binomials in the span, " << secs << " s";
    if (secs > kWorkedExamplesSeconds) o.fail("; over the time limit");
    if (!missing.empty()) {
        o.pass = false;
        o.detail << "; not in span:";
        for (const auto& m : missing) o.detail << " [" << m << "]";
    }
}

void criterion_index(Outcome& o) {
    for (int k = 1; k <= 3; ++k)
        for (Int p = 1; p <= kPMax; ++p) {
            const LdpData d = ldp_analyze(canonical_polygon(k, p));
            const Int want = p % 2 == 1 ? (p + 1) / 2 : p + 1;
            if (d.index != want || d.index_by_dilation != want)
                o.fail("k=" + std::to_string(k) + " p=" + std::to_string(p) + ": lcm " + std::to_string(d.index) +
                       ", dilation " + std::to_string(d.index_by_dilation) + ", expected " + std::to_string(want));
        }
    o.detail << (o.pass ? "150 polygons, both index definitions agree with the parity law" : "");
}

void criterion_k2(Outcome& o) {
    for (int k = 1; k <= 3; ++k)
        for (Int p = 1; p <= kPMax; ++p) {
            const LdpData d = ldp_analyze(canonical_polygon(k, p));
            const Rational closed = Rational(6 - k + p) + Rational(4, p + 1);
            const Rational area2 = polygon_area2(d.polar);
            const Int degree = embedding_data(d).degree;
            const Rational by_degree(degree, d.index * d.index);
            if (d.analysis.k2 != closed || area2 != closed || by_degree != closed)
                o.fail("k=" + std::to_string(k) + " p=" + std::to_string(p) + ": K^2 " + d.analysis.k2.str() +
                       ", 2*area " + area2.str() + ", d/l^2 " + by_degree.str() + ", closed form " + closed.str());
        }
    o.detail << (o.pass ? "150 polygons, four expressions equal" : "");
}

// Rays of Q_p^[k] listed from (1,-1) anticlockwise.
CompleteFan listed_order_fan(int k, Int p) {
    switch (k) {
        case 1: return CompleteFan({{1, -1}, {p, 1}, {-1, 0}});
        case 2: return CompleteFan({{1, -1}, {p, 1}, {p - 1, 1}, {-1, 0}});
        default: return CompleteFan({{1, -1}, {p, 1}, {p - 1, 1}, {-1, 0}, {0, -1}});
    }
}

std::vector<Int> expected_r(int k, Int p) {
    switch (k) {
        case 1: return {0, 0, -(p + 1)};
        case 2: return {0, 1, 1, -p};
        default: return {1, 1, 1, -(p - 1), 1};
    }
}

bool rotation_of(std::vector<Int> a, const std::vector<Int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a == b) return true;
        std::rotate(a.begin(), a.begin() + 1, a.end());
    }
    return false;
}

void criterion_weights(Outcome& o) {
    for (int k = 1; k <= 3; ++k)
        for (Int p = 1; p <= kPMax; ++p) {
            const std::string tag = "k=" + std::to_string(k) + " p=" + std::to_string(p);
            const auto want = expected_r(k, p);
            std::vector<Int> r;
            const auto listed = graph_of(listed_order_fan(k, p));
            for (const auto& n : listed.nodes()) r.push_back(-n.weight);
            if (r != want) {
                std::string got;
                for (const Int x : r) got += " " + std::to_string(x);
                o.fail(tag + ": r-values" + got + " in the listed order; ");
            }
            const auto g = graph_of(fan_from_polygon(canonical_polygon(k, p)));
            std::vector<Int> rc;
            for (const auto& n : g.nodes()) rc.push_back(-n.weight);
            if (!rotation_of(rc, want)) o.fail(tag + ": r-values differ for the canonical storage order; ");
            const auto edges = std::count_if(g.nodes().begin(), g.nodes().end(), [](const GraphNode& n) { return n.q > 1; });
            const auto target = std::count_if(g.nodes().begin(), g.nodes().end(),
                                               [p](const GraphNode& n) { return n.p == p && n.q == p + 1; });
            if (edges != 1 || target != 1) o.fail(tag + ": edge weight (p,p+1) not the single non-basic edge; ");
        }
    o.detail << (o.pass ? "150 graphs" : "");
}

void criterion_classification(Outcome& o) {
    int failures = 0, negative = 0;
    for (int i = 0; i < kClassificationTrials; ++i) {
        const int sign = i % 2 == 0 ? 1 : -1;
        const int k = static_cast<int>(uniform(1, 3));
        const Int p = uniform(1, kClassificationPMax);
        const bool checked = k == 2 && uniform(0, 1) == 1;
        const LatticePolygon base = checked ? checked_q2_polygon(p) : canonical_polygon(k, p);
        const UnimodularMap m = random_unimodular(sign, 4, 3);
        if (m.det() < 0) ++negative;
        const LatticePolygon q = apply_map(m, base);
        try {
            const Classification c = classify_one_singularity(q);
            const bool ok = c.k == k && c.p == p && apply_map(c.transform, q) == canonical_polygon(k, p) &&
                            surfaces_isomorphic(fan_from_polygon(q), fan_from_polygon(canonical_polygon(k, p)));
            if (!ok) ++failures;
        } catch (const std::exception& ex) {
            ++failures;
            if (o.pass) o.detail << "exception " << ex.what() << "; ";
        }
    }
    if (failures != 0) o.fail(std::to_string(failures) + " failures; ");
    o.detail << kClassificationTrials << " trials, " << negative << " with det -1";
}

void criterion_enumeration(Outcome& o) {
    const auto t0 = Clock::now();
    const auto res = enumerate_one_singularity(kEnumerationBound, {.reverse_order = false, .workers = hardware_workers()});
    const double secs = seconds_since(t0);
    for (const auto& c : res.classes)
        if (c.k < 1 || c.k > 3 || c.p < 1) o.fail("class outside the trichotomy; ");
    if (!res.failures.empty()) o.fail(std::to_string(res.failures.size()) + " polygons failed: " + res.failures[0] + "; ");
    if (res.polygons_found == 0) o.fail("nothing found; ");
    if (secs > kEnumerationSeconds) o.fail("over the time limit; ");
    o.detail << "B=" << kEnumerationBound << ": " << res.polygons_found << " polygons in " << res.classes.size()
             << " classes, " << secs << " s";
}

// Fixed Euclid, independent of the library.
Int plain_gcd(Int a, Int b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        const Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void criterion_properties(Outcome& o) {
    std::vector<std::string> bad;
    auto suite = [&](const char* name, const std::function<bool()>& trial) {
        int fails = 0;
        for (int i = 0; i < kPropertyInstances; ++i) {
            try {
                if (!trial()) ++fails;
            } catch (const std::exception&) {
                ++fails;
            }
        }
        if (fails != 0) bad.push_back(std::string(name) + ": " + std::to_string(fails) + " failures");
    };

    suite("pick", [] {
        const LatticePolygon q = random_polygon(6, 8);
        const auto pts = lattice_points(q);
        const auto brute = brute_points(q);
        const Int b = static_cast<Int>(pts.boundary.size()), in = static_cast<Int>(pts.interior.size());
        return b == brute.boundary && in == brute.interior && b == boundary_point_count(q) &&
               brute_area2(q) == 2 * in + b - 2;
    });
    suite("ehrhart doubling", [] {
        const LatticePolygon q = random_polygon(5, 7);
        const auto brute = brute_points(dilate(q, 2));
        const Int twice = brute.boundary + brute.interior;
        return minkowski_double(q) == twice && twice == 2 * brute_area2(q) + boundary_point_count(q) + 1;
    });
    suite("graph equivalence laws", [] {
        const LatticePolygon q = random_ldp();
        const auto a = graph_of(fan_from_polygon(q));
        const auto b = graph_of(fan_from_polygon(apply_map(random_unimodular(1), q)));
        const auto c = graph_of(fan_from_polygon(apply_map(random_unimodular(1), q)));
        const auto other = graph_of(fan_from_polygon(random_ldp()));
        const bool refl = graphs_isomorphic(a, a);
        const bool sym = graphs_isomorphic(a, other) == graphs_isomorphic(other, a);
        const bool trans = graphs_isomorphic(a, b) && graphs_isomorphic(b, c) && graphs_isomorphic(a, c);
        const bool flipped = surfaces_isomorphic(fan_from_polygon(q), fan_from_polygon(apply_map(random_unimodular(-1), q)));
        return refl && sym && trans && flipped && reverse_graph(reverse_graph(a)) == a;
    });
    suite("socius involution", [] {
        const Int q = uniform(2, 400);
        Int p;
        do p = uniform(1, q - 1);
        while (plain_gcd(p, q) != 1);
        Int brute = 0;
        while ((p * brute) % q != 1) ++brute;
        const Int s = socius(p, q);
        return s == brute && socius(s, q) == p;
    });
    suite("hj chain determinant", [] {
        const LatticePoint n = random_primitive(9);
        LatticePoint n2;
        do n2 = random_primitive(9);
        while (det(n, n2) <= 0);
        const ConeData c = cone_invariants(Cone2(n, n2));
        const auto& u = c.u_chain;
        if (u.front() != n || u.back() != n2 || u.size() != c.hj.size() + 2) return false;
        for (std::size_t j = 0; j + 1 < u.size(); ++j)
            if (det(u[j], u[j + 1]) != 1) return false;
        for (std::size_t j = 1; j + 1 < u.size(); ++j)
            if (u[j - 1] + u[j + 1] != c.hj[j - 1] * u[j]) return false;
        if (c.basic()) return c.hj.empty();
        // continued fraction b1 - 1/(b2 - ...) equals q/(q-p)
        Rational v(c.hj.back());
        for (std::size_t j = c.hj.size() - 1; j-- > 0;) v = Rational(c.hj[j]) - Rational(1) / v;
        return v == Rational(c.q, c.q - c.p);
    });
    for (const auto& b : bad) o.fail(b + "; ");
    o.detail << "5 suites x " << kPropertyInstances << " instances";
}

void criterion_reflexive(Outcome& o) {
    int found = 0;
    for (int k = 1; k <= 3; ++k)
        for (Int p = 1; p <= kPMax; ++p) {
            const LdpData d = ldp_analyze(canonical_polygon(k, p));
            const bool reflexive = d.index == 1 && d.polar.has_integral_vertices();
            if (reflexive) ++found;
            if (reflexive != (p == 1))
                o.fail("k=" + std::to_string(k) + " p=" + std::to_string(p) + " has the wrong reflexivity; ");
        }
    if (found != 3) o.fail(std::to_string(found) + " reflexive polygons, expected 3; ");
    o.detail << found << " reflexive among 150";
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
        {"table reproduction, p <= 50", criterion_tables},
        {"worked quadric systems 14/9/182 and reference span", criterion_worked_examples},
        {"index parity law, both definitions", criterion_index},
        {"K^2 = 6-k+p+4/(p+1) = 2*area(polar) = d/l^2", criterion_k2},
        {"graph r-values and edge weight (p,p+1)", criterion_weights},
        {"classification invariance under unimodular maps", criterion_classification},
        {"enumeration completeness at B = 4", criterion_enumeration},
        {"property suites", criterion_properties},
        {"reflexive members are exactly p = 1", criterion_reflexive},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& ex) {
            o.fail(std::string("uncaught exception: ") + ex.what());
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " ("
                  << o.detail.str() << ")\n";
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << " of " << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
