#include "toric/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

std::string LatticePoint::str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

LatticePoint RationalPoint::to_lattice() const {
    if (!is_integral()) throw std::domain_error("point " + str() + " is not integral");
    return {x.num(), y.num()};
}

std::string RationalPoint::str() const { return "(" + x.str() + "," + y.str() + ")"; }

UnimodularMap::UnimodularMap(Int a, Int b, Int c, Int d) : a_(a), b_(b), c_(c), d_(d) {
    const Int dt = checked_sub(checked_mul(a, d), checked_mul(b, c));
    if (dt != 1 && dt != -1)
        throw std::invalid_argument("matrix has determinant " + std::to_string(dt) + ", not +-1");
}

LatticePoint UnimodularMap::operator()(const LatticePoint& v) const {
    return {checked_add(checked_mul(a_, v.x), checked_mul(b_, v.y)),
            checked_add(checked_mul(c_, v.x), checked_mul(d_, v.y))};
}

RationalPoint UnimodularMap::operator()(const RationalPoint& v) const {
    return {Rational(a_) * v.x + Rational(b_) * v.y, Rational(c_) * v.x + Rational(d_) * v.y};
}

UnimodularMap UnimodularMap::operator*(const UnimodularMap& r) const {
    return {checked_add(checked_mul(a_, r.a_), checked_mul(b_, r.c_)),
            checked_add(checked_mul(a_, r.b_), checked_mul(b_, r.d_)),
            checked_add(checked_mul(c_, r.a_), checked_mul(d_, r.c_)),
            checked_add(checked_mul(c_, r.b_), checked_mul(d_, r.d_))};
}

UnimodularMap UnimodularMap::inverse() const {
    const Int s = det();  // s == 1/s for units
    return {checked_mul(s, d_), checked_mul(s, checked_neg(b_)), checked_mul(s, checked_neg(c_)),
            checked_mul(s, a_)};
}

std::string UnimodularMap::str() const {
    return "[[" + std::to_string(a_) + "," + std::to_string(b_) + "],[" + std::to_string(c_) + "," +
           std::to_string(d_) + "]]";
}

ExtendedGcd extended_gcd(Int a, Int b) {
    if (a == 0 && b == 0) throw std::domain_error("extended_gcd(0, 0) is undefined");
    // Iterative Euclid on |a|, |b| tracking x*|a| + y*|b| = r.
    Int r0 = checked_abs(a), r1 = checked_abs(b);
    Int x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        const Int q = r0 / r1;
        Int t = checked_sub(r0, checked_mul(q, r1));
        r0 = r1;
        r1 = t;
        t = checked_sub(x0, checked_mul(q, x1));
        x0 = x1;
        x1 = t;
        t = checked_sub(y0, checked_mul(q, y1));
        y0 = y1;
        y1 = t;
    }
    const Int x = a < 0 ? checked_neg(x0) : x0;
    const Int y = b < 0 ? checked_neg(y0) : y0;
    // x*a + y*b = g  <=>  kappa*a - lambda*b = g with kappa = x, lambda = -y
    Int kappa = x, lambda = checked_neg(y);
    // Solutions are (kappa + t*b/g, lambda + t*a/g); take the one with smallest |lambda|.
    if (a != 0) {
        const Int ar = a / r0, br = b / r0, m = checked_abs(ar);
        Int rem = ((lambda % m) + m) % m;
        if (2 * rem > m) rem -= m;
        const Int t = (rem - lambda) / ar;
        lambda = rem;
        kappa = checked_add(kappa, checked_mul(t, br));
    }
    return {r0, kappa, lambda};
}

bool is_primitive(const LatticePoint& v) {
    if (v.x == 0 && v.y == 0) throw std::domain_error("the zero vector has no primitivity");
    return gcd(v.x, v.y) == 1;
}

namespace {

Int cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) { return det(a - o, b - o); }

Rational cross(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

template <class P>
std::vector<P> strict_hull(std::vector<P> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return {};
    std::vector<P> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i - 1]) <= 0) --k;
        h[k++] = pts[i - 1];
    }
    h.resize(k - 1);
    return h;
}

template <class P>
std::vector<P> canonical_vertices(std::vector<P> input) {
    if (input.size() < 3) throw invalid_input("a polygon needs at least three vertices");
    auto sorted = input;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw invalid_input("duplicate vertex " + std::adjacent_find(sorted.begin(), sorted.end())->str());
    auto hull = strict_hull(std::move(input));
    if (hull.size() < 3) throw invalid_input("vertices are collinear");
    if (hull.size() != sorted.size()) {
        for (const auto& p : sorted)
            if (std::find(hull.begin(), hull.end(), p) == hull.end())
                throw invalid_input("point " + p.str() + " is not a vertex of the convex hull");
    }
    return hull;
}

std::size_t wrap(std::ptrdiff_t i, std::size_t n) {
    const auto m = static_cast<std::ptrdiff_t>(n);
    return static_cast<std::size_t>(((i % m) + m) % m);
}

/// Integer half-plane a*x + b*y + c >= 0 (inside), = 0 on the edge line.
struct HalfPlane {
    Int a, b, c;
    Int eval(Int x, Int y) const { return checked_add(checked_add(checked_mul(a, x), checked_mul(b, y)), c); }
};

std::vector<HalfPlane> half_planes(const RationalPolygon& p) {
    std::vector<HalfPlane> out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& u = p.vertex(static_cast<std::ptrdiff_t>(i));
        const auto& v = p.vertex(static_cast<std::ptrdiff_t>(i) + 1);
        const Rational ex = v.x - u.x, ey = v.y - u.y;
        const Rational a = -ey, b = ex, c = ey * u.x - ex * u.y;
        const Int scale = lcm(lcm(a.den(), b.den()), c.den());
        out.push_back({(a * Rational(scale)).num(), (b * Rational(scale)).num(), (c * Rational(scale)).num()});
    }
    return out;
}

}  // namespace

const LatticePoint& LatticePolygon::vertex(std::ptrdiff_t i) const { return vertices_[wrap(i, vertices_.size())]; }

LatticePolygon LatticePolygon::from_vertices(std::vector<LatticePoint> vertices) {
    return LatticePolygon(canonical_vertices(std::move(vertices)));
}

const RationalPoint& RationalPolygon::vertex(std::ptrdiff_t i) const { return vertices_[wrap(i, vertices_.size())]; }

RationalPolygon RationalPolygon::from_vertices(std::vector<RationalPoint> vertices) {
    return RationalPolygon(canonical_vertices(std::move(vertices)));
}

bool RationalPolygon::has_integral_vertices() const {
    return std::all_of(vertices_.begin(), vertices_.end(), [](const RationalPoint& v) { return v.is_integral(); });
}

LatticePolygon RationalPolygon::to_lattice() const {
    std::vector<LatticePoint> v;
    v.reserve(vertices_.size());
    for (const auto& r : vertices_) v.push_back(r.to_lattice());
    return LatticePolygon::from_vertices(std::move(v));
}

RationalPolygon RationalPolygon::scaled(Int factor) const {
    if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
    std::vector<RationalPoint> v;
    v.reserve(vertices_.size());
    for (const auto& r : vertices_) v.emplace_back(r.x * Rational(factor), r.y * Rational(factor));
    return RationalPolygon(std::move(v));
}

RationalPolygon to_rational(const LatticePolygon& p) {
    std::vector<RationalPoint> v;
    v.reserve(p.size());
    for (const auto& q : p.vertices()) v.emplace_back(q);
    return RationalPolygon::from_vertices(std::move(v));
}

LatticePolygon convex_hull(std::span<const LatticePoint> points) {
    auto hull = strict_hull(std::vector<LatticePoint>(points.begin(), points.end()));
    if (hull.size() < 3) throw invalid_input("convex hull is degenerate");
    return LatticePolygon::from_vertices(std::move(hull));
}

LatticePolygon apply_map(const UnimodularMap& m, const LatticePolygon& p) {
    std::vector<LatticePoint> v;
    v.reserve(p.size());
    for (const auto& q : p.vertices()) v.push_back(m(q));
    return LatticePolygon::from_vertices(std::move(v));
}

LatticePolygon dilate(const LatticePolygon& p, Int factor) {
    if (factor <= 0) throw std::invalid_argument("dilation factor must be positive");
    std::vector<LatticePoint> v;
    v.reserve(p.size());
    for (const auto& q : p.vertices()) v.push_back(factor * q);
    return LatticePolygon::from_vertices(std::move(v));
}

Int polygon_area2(const LatticePolygon& p) {
    Int s = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        s = checked_add(s, det(p.vertex(static_cast<std::ptrdiff_t>(i)), p.vertex(static_cast<std::ptrdiff_t>(i) + 1)));
    return s;
}

Rational polygon_area2(const RationalPolygon& p) {
    Rational s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& u = p.vertex(static_cast<std::ptrdiff_t>(i));
        const auto& v = p.vertex(static_cast<std::ptrdiff_t>(i) + 1);
        s += u.x * v.y - u.y * v.x;
    }
    return s;
}

std::vector<LatticeColumn> lattice_columns(const RationalPolygon& p) {
    const auto planes = half_planes(p);
    Rational xmin = p.vertex(0).x, xmax = p.vertex(0).x;
    for (const auto& v : p.vertices()) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
    }
    std::vector<LatticeColumn> out;
    for (Int x = xmin.ceil(); x <= xmax.floor(); ++x) {
        Int lo = 0, hi = -1;
        bool has_lo = false, has_hi = false, empty = false;
        for (const auto& h : planes) {
            // b*y >= -(a*x + c)
            const Int rhs = checked_neg(checked_add(checked_mul(h.a, x), h.c));
            if (h.b > 0) {
                const Int bound = ceil_div(rhs, h.b);
                if (!has_lo || bound > lo) lo = bound;
                has_lo = true;
            } else if (h.b < 0) {
                const Int bound = floor_div(rhs, h.b);
                if (!has_hi || bound < hi) hi = bound;
                has_hi = true;
            } else if (rhs > 0) {
                empty = true;
            }
        }
        if (empty || !has_lo || !has_hi || lo > hi) continue;
        out.push_back({x, lo, hi});
    }
    return out;
}

std::vector<LatticeColumn> lattice_columns(const LatticePolygon& p) { return lattice_columns(to_rational(p)); }

LatticePointSet lattice_points(const RationalPolygon& p) {
    const auto planes = half_planes(p);
    auto on_boundary = [&](Int x, Int y) {
        return std::any_of(planes.begin(), planes.end(), [&](const HalfPlane& h) { return h.eval(x, y) == 0; });
    };
    LatticePointSet out;
    for (const auto& col : lattice_columns(p)) {
        const bool vertical_edge = std::any_of(planes.begin(), planes.end(), [&](const HalfPlane& h) {
            return h.b == 0 && checked_add(checked_mul(h.a, col.x), h.c) == 0;
        });
        for (Int y = col.lo; y <= col.hi; ++y) {
            const bool extreme = (y == col.lo || y == col.hi);
            if (vertical_edge || (extreme && on_boundary(col.x, y)))
                out.boundary.push_back({col.x, y});
            else
                out.interior.push_back({col.x, y});
        }
    }
    return out;
}

LatticePointSet lattice_points(const LatticePolygon& p) { return lattice_points(to_rational(p)); }

Int lattice_point_count(const RationalPolygon& p) {
    Int n = 0;
    for (const auto& c : lattice_columns(p)) n = checked_add(n, c.count());
    return n;
}

Int lattice_point_count(const LatticePolygon& p) { return lattice_point_count(to_rational(p)); }

Int boundary_point_count(const LatticePolygon& p) {
    Int n = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto e = p.vertex(static_cast<std::ptrdiff_t>(i) + 1) - p.vertex(static_cast<std::ptrdiff_t>(i));
        n = checked_add(n, gcd(e.x, e.y));
    }
    return n;
}

Int minkowski_double(const RationalPolygon& p) { return lattice_point_count(p.scaled(2)); }

Int minkowski_double(const LatticePolygon& p) { return minkowski_double(to_rational(p)); }

}  // namespace toric
