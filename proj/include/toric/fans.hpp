#pragma once

#include <cstddef>
#include <vector>

#include "toric/cones.hpp"
#include "toric/lattice.hpp"
#include "toric/rational.hpp"

namespace toric {

/// Complete fan in R^2 stored by its rays n_1..n_ν, anticlockwise, sweeping
/// the plane exactly once. Cone i is spanned by (n_i, n_{i+1}) with n_{ν+1} = n_1.
class CompleteFan {
public:
    /// Throws invalid_input unless ν >= 3, every ray is primitive, every
    /// consecutive determinant is positive and the rays wind around the
    /// origin exactly once.
    explicit CompleteFan(std::vector<LatticePoint> rays);

    const std::vector<LatticePoint>& rays() const noexcept { return rays_; }
    std::size_t size() const noexcept { return rays_.size(); }
    /// Cyclic: ray(-1) == ray(size() - 1).
    const LatticePoint& ray(std::ptrdiff_t i) const;
    Cone2 cone(std::ptrdiff_t i) const { return {ray(i), ray(i + 1)}; }

    friend bool operator==(const CompleteFan&, const CompleteFan&) = default;

private:
    std::vector<LatticePoint> rays_;
};

struct ExceptionalCurve {
    std::size_t cone;         ///< index of the singular cone it resolves
    LatticePoint ray;         ///< u_j
    Int self_intersection;    ///< -b_j
};

struct Desingularization {
    CompleteFan fan;
    std::vector<ExceptionalCurve> exceptional;
};

struct FanAnalysis {
    std::vector<ConeData> cones;
    std::vector<std::size_t> singular;  ///< I: cones with q > 1
    std::vector<std::size_t> basic;     ///< J: cones with q = 1
    std::vector<Int> r;                 ///< -r_i is the self-intersection of the strict transform of C_i
    Int picard = 0;
    Rational k2;
    Desingularization desing;
};

/// Rays are the polygon vertices in their stored order. Throws invalid_input
/// unless the origin is strictly inside and all vertices are primitive.
CompleteFan fan_from_polygon(const LatticePolygon& q);

std::vector<ConeData> cone_data(const CompleteFan& f);
std::vector<Int> r_weights(const CompleteFan& f);
Rational canonical_k2(const CompleteFan& f);
inline Int picard_number(const CompleteFan& f) { return static_cast<Int>(f.size()) - 2; }
Desingularization minimal_desingularization(const CompleteFan& f);
FanAnalysis analyze_fan(const CompleteFan& f);

/// Splits the cone strictly containing `ray` into two. Throws invalid_input if
/// the ray is not primitive or lies on an existing ray.
CompleteFan star_subdivide(const CompleteFan& f, const LatticePoint& ray);

/// Rays (1,-1), (1,0), (p,1), (-1,0): a smooth fan of the Hirzebruch surface
/// F_{p+1} with the orbit closure of (1,0) as its ∞-section.
CompleteFan hirzebruch_fan(Int p);

}  // namespace toric
