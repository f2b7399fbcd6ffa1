#pragma once

// Exact plane geometry over Z^2 and Q^2: points, unimodular maps, strictly
// convex polygons in canonical storage form, areas and lattice-point
// enumeration. Nothing in here touches floating point.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "toric/checked.hpp"
#include "toric/rational.hpp"

namespace toric {

struct LatticePoint {
    Int x = 0;
    Int y = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

    LatticePoint operator+(const LatticePoint& o) const { return {checked_add(x, o.x), checked_add(y, o.y)}; }
    LatticePoint operator-(const LatticePoint& o) const { return {checked_sub(x, o.x), checked_sub(y, o.y)}; }
    LatticePoint operator-() const { return {checked_neg(x), checked_neg(y)}; }
    friend LatticePoint operator*(Int s, const LatticePoint& v) { return {checked_mul(s, v.x), checked_mul(s, v.y)}; }

    std::string str() const;
};

/// det(a, b) = a.x * b.y - a.y * b.x
inline Int det(const LatticePoint& a, const LatticePoint& b) {
    return checked_sub(checked_mul(a.x, b.y), checked_mul(a.y, b.x));
}

inline Int dot(const LatticePoint& a, const LatticePoint& b) {
    return checked_add(checked_mul(a.x, b.x), checked_mul(a.y, b.y));
}

struct RationalPoint {
    Rational x;
    Rational y;

    RationalPoint() = default;
    RationalPoint(Rational x_, Rational y_) : x(x_), y(y_) {}
    explicit RationalPoint(const LatticePoint& p) : x(p.x), y(p.y) {}

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
    friend auto operator<=>(const RationalPoint& a, const RationalPoint& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }

    bool is_integral() const { return x.is_integer() && y.is_integer(); }
    LatticePoint to_lattice() const;  // throws std::domain_error unless integral
    std::string str() const;
};

/// A 2x2 integer matrix with determinant +1 or -1, acting on column vectors.
class UnimodularMap {
public:
    /// Row-major entries [[a, b], [c, d]]; throws std::invalid_argument if
    /// the determinant is not a unit.
    UnimodularMap(Int a, Int b, Int c, Int d);

    static UnimodularMap identity() { return {1, 0, 0, 1}; }

    Int a() const noexcept { return a_; }
    Int b() const noexcept { return b_; }
    Int c() const noexcept { return c_; }
    Int d() const noexcept { return d_; }
    Int det() const noexcept { return a_ * d_ - b_ * c_; }

    LatticePoint operator()(const LatticePoint& v) const;
    RationalPoint operator()(const RationalPoint& v) const;

    /// (this * rhs)(v) == this(rhs(v))
    UnimodularMap operator*(const UnimodularMap& rhs) const;
    UnimodularMap inverse() const;

    friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;

    std::string str() const;

private:
    Int a_, b_, c_, d_;
};

struct ExtendedGcd {
    Int g;       ///< gcd(|a|, |b|) > 0
    Int kappa;   ///< kappa * a - lambda * b == g
    Int lambda;
};

/// Throws std::domain_error when both inputs are zero.
ExtendedGcd extended_gcd(Int a, Int b);

/// gcd(|x|, |y|) == 1. Throws std::domain_error for the zero vector.
bool is_primitive(const LatticePoint& v);

/// Strictly convex lattice polygon stored anticlockwise, lexicographically
/// smallest vertex first. Two polygons are equal iff their vertex lists are.
class LatticePolygon {
public:
    /// Accepts the vertices in any order. Throws invalid_input on fewer than
    /// three points, duplicates, or a point that is not a strict vertex of the
    /// convex hull (collinear or interior points are rejected, not merged).
    static LatticePolygon from_vertices(std::vector<LatticePoint> vertices);

    const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    /// Cyclic access.
    const LatticePoint& vertex(std::ptrdiff_t i) const;

    friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

private:
    explicit LatticePolygon(std::vector<LatticePoint> v) : vertices_(std::move(v)) {}
    std::vector<LatticePoint> vertices_;
};

/// Same storage contract as LatticePolygon, with rational vertices.
class RationalPolygon {
public:
    static RationalPolygon from_vertices(std::vector<RationalPoint> vertices);

    const std::vector<RationalPoint>& vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    const RationalPoint& vertex(std::ptrdiff_t i) const;

    bool has_integral_vertices() const;
    /// Throws std::domain_error unless every vertex is integral.
    LatticePolygon to_lattice() const;
    RationalPolygon scaled(Int factor) const;

    friend bool operator==(const RationalPolygon&, const RationalPolygon&) = default;

private:
    explicit RationalPolygon(std::vector<RationalPoint> v) : vertices_(std::move(v)) {}
    std::vector<RationalPoint> vertices_;
};

RationalPolygon to_rational(const LatticePolygon& p);

/// Convex hull of an arbitrary point set (collinear and interior points
/// dropped). Throws invalid_input if the hull is degenerate.
LatticePolygon convex_hull(std::span<const LatticePoint> points);

LatticePolygon apply_map(const UnimodularMap& m, const LatticePolygon& p);
LatticePolygon dilate(const LatticePolygon& p, Int factor);

/// Twice the Euclidean area (shoelace), always positive.
Int polygon_area2(const LatticePolygon& p);
Rational polygon_area2(const RationalPolygon& p);

/// Lattice points of one column x = const: y ranges over [lo, hi].
struct LatticeColumn {
    Int x;
    Int lo;
    Int hi;
    Int count() const { return hi - lo + 1; }
};

/// All non-empty columns of P ∩ Z^2, ordered by x.
std::vector<LatticeColumn> lattice_columns(const RationalPolygon& p);
std::vector<LatticeColumn> lattice_columns(const LatticePolygon& p);

struct LatticePointSet {
    std::vector<LatticePoint> boundary;  ///< lexicographic order
    std::vector<LatticePoint> interior;  ///< lexicographic order
    std::size_t total() const { return boundary.size() + interior.size(); }
};

LatticePointSet lattice_points(const LatticePolygon& p);
LatticePointSet lattice_points(const RationalPolygon& p);

/// #(P ∩ Z^2) without materializing the points.
Int lattice_point_count(const RationalPolygon& p);
Int lattice_point_count(const LatticePolygon& p);

/// #(∂P ∩ Z^2) for a lattice polygon via edge gcds.
Int boundary_point_count(const LatticePolygon& p);

/// #(2P ∩ Z^2), by enumerating the dilated polygon directly.
Int minkowski_double(const LatticePolygon& p);
Int minkowski_double(const RationalPolygon& p);

}  // namespace toric
