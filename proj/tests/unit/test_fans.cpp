#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "toric/delpezzo.hpp"
#include "toric/errors.hpp"
#include "toric/fans.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

// Rays of Q_p^[k] listed from (1,-1) anticlockwise.
CompleteFan listed_order_fan(int k, Int p) {
    switch (k) {
        case 1: return CompleteFan({{1, -1}, {p, 1}, {-1, 0}});
        case 2: return CompleteFan({{1, -1}, {p, 1}, {p - 1, 1}, {-1, 0}});
        default: return CompleteFan({{1, -1}, {p, 1}, {p - 1, 1}, {-1, 0}, {0, -1}});
    }
}

bool same_up_to_rotation(std::vector<Int> a, const std::vector<Int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a == b) return true;
        std::rotate(a.begin(), a.begin() + 1, a.end());
    }
    return false;
}

}  // namespace

TEST_SUITE("fans") {
    TEST_CASE("construction and validation") {
        CHECK(fan_from_polygon(canonical_polygon(1, 1)).rays() ==
              std::vector<LatticePoint>{{-1, 0}, {1, -1}, {1, 1}});
        CHECK(fan_from_polygon(LatticePolygon::from_vertices({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}})).size() == 4);
        CHECK_THROWS_AS(CompleteFan({{1, 0}, {0, 1}}), invalid_input);
        CHECK_THROWS_AS(CompleteFan({{1, 0}, {0, 1}, {-2, 0}, {0, -1}}), invalid_input);
        CHECK_THROWS_AS(CompleteFan({{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}}),
                        invalid_input);  // winds twice
        CHECK_THROWS_AS(CompleteFan({{1, 0}, {-1, 1}, {0, 1}, {-1, -1}}), invalid_input);
        CHECK_THROWS_AS(fan_from_polygon(LatticePolygon::from_vertices({{1, 0}, {2, 1}, {1, 1}})), invalid_input);
        CHECK_THROWS_AS(fan_from_polygon(LatticePolygon::from_vertices({{0, 0}, {1, 0}, {0, 1}})), invalid_input);
        for (int i = 0; i < 100; ++i) {
            const LatticePolygon q = random_ldp();
            CHECK(convex_hull(fan_from_polygon(q).rays()) == q);
        }
    }

    TEST_CASE("r weights of the canonical families") {
        for (Int p = 1; p <= 50; ++p) {
            CHECK(r_weights(listed_order_fan(1, p)) == std::vector<Int>{0, 0, -(p + 1)});
            CHECK(r_weights(listed_order_fan(2, p)) == std::vector<Int>{0, 1, 1, -p});
            CHECK(r_weights(listed_order_fan(3, p)) == std::vector<Int>{1, 1, 1, -(p - 1), 1});
        }
    }

    TEST_CASE("K^2") {
        for (int k = 1; k <= 3; ++k)
            for (Int p = 1; p <= 50; ++p)
                CHECK(canonical_k2(listed_order_fan(k, p)) == Rational(6 - k + p) + Rational(4, p + 1));
        CHECK(canonical_k2(CompleteFan({{1, 0}, {0, 1}, {-1, -1}})) == Rational(9));
        CHECK(canonical_k2(listed_order_fan(1, 1)) == Rational(8));
    }

    TEST_CASE("minimal desingularization examples") {
        for (int k = 1; k <= 3; ++k)
            for (Int p = 1; p <= 20; ++p) {
                const auto d = minimal_desingularization(listed_order_fan(k, p));
                CHECK(d.fan.size() == static_cast<std::size_t>(k + 3));
                REQUIRE(d.exceptional.size() == 1);
                CHECK(d.exceptional[0].ray == LatticePoint{1, 0});
                CHECK(d.exceptional[0].self_intersection == -(p + 1));
            }
        const CompleteFan smooth({{1, 0}, {0, 1}, {-1, -1}});
        CHECK(minimal_desingularization(smooth).fan == smooth);
        CHECK(minimal_desingularization(smooth).exceptional.empty());

        const CompleteFan f25({{1, 0}, {2, 5}, {-1, -1}});
        const auto d = minimal_desingularization(f25);
        std::vector<Int> first;
        for (const auto& e : d.exceptional)
            if (e.cone == 0) first.push_back(e.self_intersection);
        CHECK(first == std::vector<Int>{-2, -3});
    }

    TEST_CASE("star subdivisions") {
        const CompleteFan smooth({{1, 0}, {0, 1}, {-1, -1}});
        const CompleteFan s = star_subdivide(smooth, {1, 1});
        CHECK(s.size() == 4);
        CHECK(picard_number(s) == picard_number(smooth) + 1);
        for (std::size_t i = 0; i < s.size(); ++i) CHECK(det(s.ray(static_cast<std::ptrdiff_t>(i)), s.ray(static_cast<std::ptrdiff_t>(i) + 1)) == 1);
        CHECK_THROWS_AS(star_subdivide(smooth, {0, 1}), invalid_input);
        CHECK_THROWS_AS(star_subdivide(smooth, {2, 2}), invalid_input);

        // Blowing up the Hirzebruch fan D_{p-1} at (p,1) gives the resolution of Q_p^[2].
        for (Int p = 2; p <= 20; ++p) {
            const CompleteFan blown = star_subdivide(hirzebruch_fan(p - 1), {p, 1});
            const auto res = minimal_desingularization(listed_order_fan(2, p)).fan;
            auto a = blown.rays(), b = res.rays();
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            CHECK(a == b);
        }
    }

    TEST_CASE("Hirzebruch fans") {
        for (Int p = 1; p <= 20; ++p) {
            const CompleteFan h = hirzebruch_fan(p);
            const FanAnalysis a = analyze_fan(h);
            CHECK(a.basic.size() == 4);
            CHECK(a.singular.empty());
            CHECK(a.picard == 2);
            CHECK(a.r[1] == p + 1);  // ray (1,0): self-intersection -(p+1)
            CHECK(a.k2 == Rational(8));
        }
        CHECK_THROWS(hirzebruch_fan(0));
    }

    TEST_CASE("property: random LDP fans (500)") {
        for (int i = 0; i < 500; ++i) {
            const LatticePolygon q = random_ldp();
            const CompleteFan f = fan_from_polygon(q);
            const FanAnalysis a = analyze_fan(f);
            CHECK(a.singular.size() + a.basic.size() == f.size());
            CHECK(a.picard == static_cast<Int>(f.size()) - 2);

            // resolution: all cones basic, idempotent
            const auto& d = a.desing.fan;
            for (std::size_t j = 0; j < d.size(); ++j)
                CHECK(det(d.ray(static_cast<std::ptrdiff_t>(j)), d.ray(static_cast<std::ptrdiff_t>(j) + 1)) == 1);
            CHECK(minimal_desingularization(d).fan == d);

            // r of an original ray read off the smooth refinement equals the case rule
            const auto rd = r_weights(d);
            std::size_t pos = 0;
            for (std::size_t j = 0; j < f.size(); ++j) {
                while (d.ray(static_cast<std::ptrdiff_t>(pos)) != f.ray(static_cast<std::ptrdiff_t>(j))) ++pos;
                CHECK(rd[pos] == a.r[j]);
            }

            // K^2 equals twice the area of the polar polygon
            const LdpData ldp = ldp_analyze(q);
            CHECK(a.k2 == polygon_area2(ldp.polar));

            // det(+1) images keep the q and r sequences up to rotation
            const UnimodularMap m = random_unimodular(1);
            const FanAnalysis am = analyze_fan(fan_from_polygon(apply_map(m, q)));
            std::vector<Int> qs, qms;
            for (const auto& c : a.cones) qs.push_back(c.q);
            for (const auto& c : am.cones) qms.push_back(c.q);
            CHECK(same_up_to_rotation(qs, qms));
            CHECK(same_up_to_rotation(a.r, am.r));
        }
    }
}
