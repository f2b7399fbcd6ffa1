#include "toric/fans.hpp"

#include "toric/errors.hpp"

namespace toric {

namespace {

// 0 for angles in [0, π), 1 for [π, 2π).
int half(const LatticePoint& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

// Strict angular order on directions measured from the positive x-axis.
bool angle_less(const LatticePoint& a, const LatticePoint& b) {
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return det(a, b) > 0;
}

}  // namespace

CompleteFan::CompleteFan(std::vector<LatticePoint> rays) : rays_(std::move(rays)) {
    if (rays_.size() < 3) throw invalid_input("a complete fan needs at least three rays");
    for (const auto& r : rays_)
        if ((r.x == 0 && r.y == 0) || !is_primitive(r)) throw invalid_input("ray " + r.str() + " is not primitive");
    std::size_t wraps = 0;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        const auto& a = rays_[i];
        const auto& b = rays_[(i + 1) % rays_.size()];
        if (det(a, b) <= 0)
            throw invalid_input("rays " + a.str() + " and " + b.str() + " do not span a strongly convex cone anticlockwise");
        if (angle_less(b, a)) ++wraps;
    }
    if (wraps != 1) throw invalid_input("rays wind around the origin " + std::to_string(wraps) + " times");
}

const LatticePoint& CompleteFan::ray(std::ptrdiff_t i) const {
    const auto n = static_cast<std::ptrdiff_t>(rays_.size());
    return rays_[static_cast<std::size_t>(((i % n) + n) % n)];
}

CompleteFan fan_from_polygon(const LatticePolygon& q) {
    for (std::size_t i = 0; i < q.size(); ++i) {
        const auto& a = q.vertex(static_cast<std::ptrdiff_t>(i));
        const auto& b = q.vertex(static_cast<std::ptrdiff_t>(i) + 1);
        if (det(a, b) <= 0) throw invalid_input("origin is not strictly inside the polygon; the fan is not complete");
    }
    return CompleteFan(q.vertices());
}

std::vector<ConeData> cone_data(const CompleteFan& f) {
    std::vector<ConeData> out;
    out.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out.push_back(cone_invariants(f.cone(static_cast<std::ptrdiff_t>(i))));
    return out;
}

namespace {

std::vector<Int> r_weights_from(const CompleteFan& f, const std::vector<ConeData>& cones) {
    const auto nu = static_cast<std::ptrdiff_t>(f.size());
    std::vector<Int> r(f.size());
    for (std::ptrdiff_t i = 0; i < nu; ++i) {
        const auto& before = cones[static_cast<std::size_t>((i - 1 + nu) % nu)];
        const auto& after = cones[static_cast<std::size_t>(i)];
        // Neighbour on each side: the last/first refinement ray of a singular
        // cone, the adjacent fan ray of a basic one. For a basic cone the chain
        // is just its two generators, so one expression covers all four cases.
        const LatticePoint left = before.basic() ? f.ray(i - 1) : before.u_chain[before.u_chain.size() - 2];
        const LatticePoint right = after.basic() ? f.ray(i + 1) : after.u_chain[1];
        const LatticePoint sum = left + right;
        const LatticePoint& n = f.ray(i);
        const Int ri = n.x != 0 ? exact_div(sum.x, n.x) : exact_div(sum.y, n.y);
        if (ri * n != sum)
            throw consistency_error("no integer r with r*" + n.str() + " = " + sum.str());
        r[static_cast<std::size_t>(i)] = ri;
    }
    return r;
}

Rational k2_from(const CompleteFan& f, const std::vector<ConeData>& cones) {
    Rational k2(12 - static_cast<Int>(f.size()));
    for (const auto& c : cones) {
        if (c.basic()) continue;
        Rational term = Rational(c.q - c.p + 1, c.q) + Rational(c.q - c.socius + 1, c.q) - Rational(2);
        for (const Int b : c.hj) term += Rational(b - 3);
        k2 += term;
    }
    return k2;
}

Desingularization desing_from(const CompleteFan& f, const std::vector<ConeData>& cones) {
    std::vector<LatticePoint> rays;
    std::vector<ExceptionalCurve> exc;
    for (std::size_t i = 0; i < f.size(); ++i) {
        rays.push_back(f.ray(static_cast<std::ptrdiff_t>(i)));
        const auto& c = cones[i];
        for (std::size_t j = 1; j + 1 < c.u_chain.size(); ++j) {
            rays.push_back(c.u_chain[j]);
            exc.push_back({i, c.u_chain[j], -c.hj[j - 1]});
        }
    }
    return {CompleteFan(std::move(rays)), std::move(exc)};
}

}  // namespace

std::vector<Int> r_weights(const CompleteFan& f) { return r_weights_from(f, cone_data(f)); }

Rational canonical_k2(const CompleteFan& f) { return k2_from(f, cone_data(f)); }

Desingularization minimal_desingularization(const CompleteFan& f) { return desing_from(f, cone_data(f)); }

FanAnalysis analyze_fan(const CompleteFan& f) {
    FanAnalysis a{.cones = cone_data(f), .singular = {}, .basic = {}, .r = {}, .picard = picard_number(f),
                  .k2 = {}, .desing = {CompleteFan(f.rays()), {}}};
    for (std::size_t i = 0; i < a.cones.size(); ++i) (a.cones[i].basic() ? a.basic : a.singular).push_back(i);
    a.r = r_weights_from(f, a.cones);
    a.k2 = k2_from(f, a.cones);
    a.desing = desing_from(f, a.cones);
    return a;
}

CompleteFan star_subdivide(const CompleteFan& f, const LatticePoint& ray) {
    if ((ray.x == 0 && ray.y == 0) || !is_primitive(ray)) throw invalid_input("subdivision ray must be primitive");
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto& a = f.ray(static_cast<std::ptrdiff_t>(i));
        const auto& b = f.ray(static_cast<std::ptrdiff_t>(i) + 1);
        if (det(a, ray) > 0 && det(ray, b) > 0) {
            auto rays = f.rays();
            rays.insert(rays.begin() + static_cast<std::ptrdiff_t>(i) + 1, ray);
            return CompleteFan(std::move(rays));
        }
    }
    throw invalid_input("ray " + ray.str() + " lies on an existing ray of the fan");
}

CompleteFan hirzebruch_fan(Int p) {
    if (p < 1) throw std::domain_error("hirzebruch_fan needs p >= 1");
    return CompleteFan({{1, -1}, {1, 0}, {p, 1}, {-1, 0}});
}

}  // namespace toric
