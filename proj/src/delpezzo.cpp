#include "toric/delpezzo.hpp"

#include <algorithm>

#include "toric/errors.hpp"

namespace toric {

bool is_ldp(const LatticePolygon& q) {
    for (std::size_t i = 0; i < q.size(); ++i) {
        const auto& a = q.vertex(static_cast<std::ptrdiff_t>(i));
        if ((a.x == 0 && a.y == 0) || !is_primitive(a)) return false;
        if (det(a, q.vertex(static_cast<std::ptrdiff_t>(i) + 1)) <= 0) return false;
    }
    return true;
}

LdpData ldp_analyze(const LatticePolygon& q) {
    if (!is_ldp(q)) throw invalid_input("not an LDP-polygon: the origin must be interior and all vertices primitive");
    const CompleteFan fan = fan_from_polygon(q);
    FanAnalysis analysis = analyze_fan(fan);

    std::vector<FacetData> facets;
    std::vector<RationalPoint> polar;
    Int index = 1, by_dilation = 1;
    for (std::size_t i = 0; i < q.size(); ++i) {
        FacetData f;
        f.a = q.vertex(static_cast<std::ptrdiff_t>(i));
        f.b = q.vertex(static_cast<std::ptrdiff_t>(i) + 1);
        const LatticePoint normal{checked_sub(f.b.y, f.a.y), checked_sub(f.a.x, f.b.x)};
        const Int qf = det(f.a, f.b);
        const Int g = gcd(normal.x, normal.y);
        f.eta = {normal.x / g, normal.y / g};
        f.distance = qf / g;
        f.local_index = analysis.cones[i].local_index;
        if (f.distance != f.local_index)
            throw consistency_error("facet " + f.a.str() + "-" + f.b.str() + ": lattice distance " +
                                    std::to_string(f.distance) + " differs from local index " +
                                    std::to_string(f.local_index));
        f.polar_vertex = RationalPoint(Rational(-f.eta.x, f.distance), Rational(-f.eta.y, f.distance));
        index = lcm(index, f.local_index);
        by_dilation = lcm(by_dilation, lcm(f.polar_vertex.x.den(), f.polar_vertex.y.den()));
        polar.push_back(f.polar_vertex);
        facets.push_back(f);
    }
    if (index != by_dilation) throw consistency_error("index by local indices and by dilation disagree");

    LdpData out{.polygon = q,
                .fan = fan,
                .analysis = std::move(analysis),
                .facets = std::move(facets),
                .index = index,
                .index_by_dilation = by_dilation,
                .polar = RationalPolygon::from_vertices(std::move(polar)),
                .singular_count = 0};
    out.singular_count = out.analysis.singular.size();
    if (!out.polar.scaled(index).has_integral_vertices()) throw consistency_error("index dilation of the polar is not integral");
    return out;
}

namespace {

void check_p(Int p) {
    if (p < 1) throw std::domain_error("p must be a positive integer");
}

}  // namespace

LatticePolygon canonical_polygon(int k, Int p) {
    check_p(p);
    switch (k) {
        case 1: return LatticePolygon::from_vertices({{1, -1}, {p, 1}, {-1, 0}});
        case 2: return LatticePolygon::from_vertices({{1, -1}, {p, 1}, {p - 1, 1}, {-1, 0}});
        case 3: return LatticePolygon::from_vertices({{1, -1}, {p, 1}, {p - 1, 1}, {-1, 0}, {0, -1}});
        default: throw std::domain_error("k must be 1, 2 or 3");
    }
}

LatticePolygon checked_q2_polygon(Int p) {
    check_p(p);
    return LatticePolygon::from_vertices({{1, -1}, {p, 1}, {-1, 0}, {0, -1}});
}

UnimodularMap y_map(Int p) { return {1, checked_sub(1, p), 0, -1}; }

Classification classify_one_singularity(const LatticePolygon& q) {
    const LdpData ldp = ldp_analyze(q);
    if (ldp.singular_count != 1)
        throw singularity_count_error(ldp.singular_count, "not a one-singularity LDP input: " +
                                                              std::to_string(ldp.singular_count) + " singular cones");
    const std::size_t i = ldp.analysis.singular.front();
    const ConeData& cone = ldp.analysis.cones[i];
    if (cone.q != cone.p + 1)
        throw consistency_error("singular cone is a (" + std::to_string(cone.p) + "," + std::to_string(cone.q) +
                                ")-cone, expected q = p + 1");

    const UnimodularMap psi2(1, 0, -1, 1);
    Classification c;
    c.p = cone.p;
    c.transform = psi2 * cone.normalizer;
    const auto nu = static_cast<Int>(q.size());
    if (nu < 3 || nu > 5) throw consistency_error("one-singularity polygon with " + std::to_string(nu) + " vertices");
    c.k = static_cast<int>(nu - 2);

    // Walk the images anticlockwise starting at the singular cone's first ray.
    std::vector<LatticePoint> walk;
    for (Int j = 0; j < nu; ++j) walk.push_back(c.transform(q.vertex(static_cast<std::ptrdiff_t>(i) + j)));
    if (walk[0] != LatticePoint{1, -1} || walk[1] != LatticePoint{c.p, 1})
        throw consistency_error("normalization did not send the singular cone to ((1,-1),(p,1))");
    const auto hits = std::count(walk.begin(), walk.end(), LatticePoint{-1, 0});
    if (hits != 1) throw consistency_error("expected exactly one normalized vertex at (-1,0)");
    c.mu = static_cast<std::size_t>(std::find(walk.begin(), walk.end(), LatticePoint{-1, 0}) - walk.begin()) + 1;

    const LatticePolygon image = apply_map(c.transform, q);
    const LatticePolygon target = canonical_polygon(c.k, c.p);
    if (image == target) {
        c.target = ClassTarget::canonical;
    } else if (c.k == 2 && image == checked_q2_polygon(c.p)) {
        c.target = ClassTarget::checked_q2;
        c.transform = y_map(c.p) * c.transform;
    } else {
        throw consistency_error("normal form is not a canonical polygon");
    }
    if (apply_map(c.transform, q) != target) throw consistency_error("classifying map misses the canonical polygon");
    return c;
}

std::vector<std::pair<int, Int>> index_parity_check(Int ell) {
    if (ell < 1) throw std::domain_error("index must be positive");
    std::vector<Int> ps;
    if (ell % 2 == 1 && ell >= 3) ps.push_back(ell - 1);
    ps.push_back(checked_sub(checked_mul(2, ell), 1));
    std::vector<std::pair<int, Int>> out;
    for (int k = 1; k <= 3; ++k)
        for (Int p : ps) out.emplace_back(k, p);
    return out;
}

}  // namespace toric
