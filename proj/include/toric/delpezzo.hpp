#pragma once

// LDP-polygons: lattice polygons with primitive vertices and the origin in
// the interior. Index, polar polygon, the three canonical one-singularity
// families Q_p^[k] and a classifier that maps any one-singularity input onto
// its family member by an explicit unimodular map.

#include <optional>
#include <utility>
#include <vector>

#include "toric/fans.hpp"

namespace toric {

/// Facet F = [a, b] of an LDP-polygon (b follows a anticlockwise).
struct FacetData {
    LatticePoint a, b;
    /// Primitive outer normal: <eta, x> = distance on F, < distance inside.
    LatticePoint eta;
    /// Lattice distance of the facet line from the origin.
    Int distance = 1;
    /// q_F / gcd(q_F, p_F - 1) of the cone over F; always equal to `distance`.
    Int local_index = 1;
    /// -eta / distance, the vertex of the polar polygon dual to F.
    RationalPoint polar_vertex;
};

struct LdpData {
    LatticePolygon polygon;
    CompleteFan fan;
    FanAnalysis analysis;
    std::vector<FacetData> facets;
    Int index = 1;              ///< lcm of the local indices
    Int index_by_dilation = 1;  ///< smallest κ with κ·polar integral
    RationalPolygon polar;
    std::size_t singular_count = 0;
};

/// Origin strictly inside and every vertex primitive.
bool is_ldp(const LatticePolygon& q);

/// Throws invalid_input unless is_ldp(q).
LdpData ldp_analyze(const LatticePolygon& q);

/// Q_p^[1] = conv{(1,-1), (p,1), (-1,0)}, Q_p^[2] adds (p-1,1),
/// Q_p^[3] adds (p-1,1) and (0,-1). Throws std::domain_error on bad (k, p).
LatticePolygon canonical_polygon(int k, Int p);

/// conv{(1,-1), (p,1), (-1,0), (0,-1)}, lattice-equivalent to Q_p^[2].
LatticePolygon checked_q2_polygon(Int p);

/// [[1, 1-p], [0, -1]]: an involution exchanging Q_p^[2] and checked_q2_polygon(p).
UnimodularMap y_map(Int p);

enum class ClassTarget { canonical, checked_q2 };

struct Classification {
    int k = 0;
    Int p = 0;
    /// Maps the input polygon onto canonical_polygon(k, p).
    UnimodularMap transform = UnimodularMap::identity();
    /// 1-based position of (-1,0) among the normalized vertices, counted
    /// anticlockwise from the image (1,-1) of the singular cone's first ray.
    std::size_t mu = 0;
    /// Which polygon the normalization landed on before any final flip.
    ClassTarget target = ClassTarget::canonical;
};

/// Throws invalid_input for non-LDP input, singularity_count_error unless
/// exactly one cone is non-basic, consistency_error if the normal form is
/// not one of the expected polygons.
Classification classify_one_singularity(const LatticePolygon& q);

/// All (k, p) whose canonical polygon has index ell. Throws std::domain_error for ell < 1.
std::vector<std::pair<int, Int>> index_parity_check(Int ell);

/// (p+1)/2 for odd p, p+1 for even p.
inline Int canonical_index(Int p) { return p % 2 != 0 ? (p + 1) / 2 : p + 1; }

}  // namespace toric
