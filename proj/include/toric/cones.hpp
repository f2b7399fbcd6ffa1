#pragma once

// Invariants of two-dimensional rational strongly convex cones.
//
// A cone spanned by primitive n, n2 (det(n, n2) > 0) is a (p, q)-cone: some
// det(+1) unimodular map sends n to (1, 0) and n2 to (p, q) with 0 <= p < q,
// gcd(p, q) = 1. q = 1 exactly when the cone is basic (smooth chart). For
// q > 1 the cyclic quotient singularity is resolved by the Hirzebruch-Jung
// chain u_0 = n, u_1, ..., u_{s+1} = n2 built from the negative-regular
// continued fraction of q / (q - p).

#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

class Cone2 {
public:
    /// Throws invalid_input unless both generators are primitive and
    /// det(n, n2) > 0.
    Cone2(LatticePoint n, LatticePoint n2);

    const LatticePoint& n() const noexcept { return n_; }
    const LatticePoint& n2() const noexcept { return n2_; }
    Int q() const { return det(n_, n2_); }

private:
    LatticePoint n_, n2_;
};

struct ConeData {
    Int p = 0;
    Int q = 1;
    Int socius = 0;
    /// det(+1) map with normalizer(n) = (1, 0), normalizer(n2) = (p, q).
    UnimodularMap normalizer = UnimodularMap::identity();
    /// l_F = q / gcd(q, p - 1)
    Int local_index = 1;
    /// Hirzebruch-Jung digits b_1..b_s (all >= 2); empty for basic cones.
    std::vector<Int> hj;
    /// u_0 .. u_{s+1}; just {n, n2} for basic cones.
    std::vector<LatticePoint> u_chain;
    /// "1/q(q-p,1)"; empty for basic cones.
    std::string singularity;

    bool basic() const noexcept { return q == 1; }
};

ConeData cone_invariants(const Cone2& c);

/// det(n, n2) == 1.
bool is_basic(const Cone2& c);
/// conv{0, n, n2} ∩ Z^2 == {0, n, n2}; an independent route to is_basic.
bool is_basic_by_triangle(const Cone2& c);

/// The unique p̂ in [0, q) with p * p̂ ≡ 1 (mod q); 0 when q == 1.
/// Throws std::domain_error unless 0 <= p < q and gcd(p, q) == 1.
Int socius(Int p, Int q);

/// Negative-regular continued fraction digits of q / (q - p).
/// Throws std::domain_error when q < 2 or (p, q) is not a valid pair.
std::vector<Int> hj_expansion(Int p, Int q);

/// Throws std::domain_error for basic cones.
std::vector<LatticePoint> u_chain(const Cone2& c);

}  // namespace toric
