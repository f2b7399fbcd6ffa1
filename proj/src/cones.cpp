#include "toric/cones.hpp"

#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

namespace {

void check_pair(Int p, Int q) {
    if (q < 1 || p < 0 || p >= q) throw std::domain_error("need 0 <= p < q");
    if (gcd(p, q) != 1) throw std::domain_error("p and q are not coprime");
}

}  // namespace

Cone2::Cone2(LatticePoint n, LatticePoint n2) : n_(n), n2_(n2) {
    if (!is_primitive(n) || !is_primitive(n2))
        throw invalid_input("cone generators " + n.str() + ", " + n2.str() + " must be primitive");
    if (det(n, n2) <= 0)
        throw invalid_input("cone generators " + n.str() + ", " + n2.str() + " are not in anticlockwise position");
}

bool is_basic(const Cone2& c) { return c.q() == 1; }

bool is_basic_by_triangle(const Cone2& c) {
    const auto tri = LatticePolygon::from_vertices({{0, 0}, c.n(), c.n2()});
    return lattice_points(tri).total() == 3;
}

Int socius(Int p, Int q) {
    check_pair(p, q);
    if (q == 1) return 0;
    const auto eg = extended_gcd(p, q);  // kappa*p - lambda*q = 1
    return mod_floor(eg.kappa, q);
}

std::vector<Int> hj_expansion(Int p, Int q) {
    check_pair(p, q);
    if (q < 2) throw std::domain_error("a basic cone has no Hirzebruch-Jung expansion");
    std::vector<Int> digits;
    Int num = q, den = q - p;
    while (den != 0) {
        const Int b = ceil_div(num, den);
        digits.push_back(b);
        const Int next = checked_sub(checked_mul(b, den), num);
        num = den;
        den = next;
    }
    return digits;
}

std::vector<LatticePoint> u_chain(const Cone2& c) {
    const Int q = c.q();
    if (q == 1) throw std::domain_error("a basic cone has no refinement chain");
    const ConeData data = cone_invariants(c);
    return data.u_chain;
}

ConeData cone_invariants(const Cone2& c) {
    const LatticePoint n = c.n(), n2 = c.n2();
    const Int q = c.q();
    ConeData out;
    out.q = q;

    // kappa*a - lambda*b = 1 for n = (a, b); Xi = [[kappa, -lambda], [-b, a]]
    // has det 1, sends n to (1, 0) and n2 to (kappa*c - lambda*d, q).
    const auto eg = extended_gcd(n.x, n.y);
    const UnimodularMap xi(eg.kappa, checked_neg(eg.lambda), checked_neg(n.y), n.x);
    const LatticePoint image = xi(n2);
    if (image.y != q) throw consistency_error("normalizer does not preserve the determinant");
    out.p = mod_floor(image.x, q);
    const Int shift = exact_div(checked_sub(out.p, image.x), q);
    out.normalizer = UnimodularMap(1, shift, 0, 1) * xi;
    if (out.normalizer(n) != LatticePoint{1, 0} || out.normalizer(n2) != LatticePoint{out.p, q})
        throw consistency_error("normalizer does not reach (p, q)-form");

    out.socius = socius(out.p, q);
    out.local_index = q / gcd(q, out.p - 1);
    out.u_chain = {n};
    if (q == 1) {
        out.u_chain.push_back(n2);
        return out;
    }

    out.hj = hj_expansion(out.p, q);
    const LatticePoint sum = (q - out.p) * n + n2;
    if (sum.x % q != 0 || sum.y % q != 0)
        throw consistency_error("first refinement ray " + sum.str() + "/" + std::to_string(q) + " is not integral");
    out.u_chain.push_back({sum.x / q, sum.y / q});
    for (const Int b : out.hj) {
        const auto& cur = out.u_chain.back();
        const auto& prev = out.u_chain[out.u_chain.size() - 2];
        out.u_chain.push_back(b * cur - prev);
    }
    if (out.u_chain.back() != n2) throw consistency_error("refinement chain does not end at the second generator");
    out.singularity = "1/" + std::to_string(q) + "(" + std::to_string(q - out.p) + ",1)";
    return out;
}

}  // namespace toric
