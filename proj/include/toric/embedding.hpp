#pragma once

// Anticanonical embedding of a toric log del Pezzo surface. The lattice
// points of ℓ·polar index the homogeneous coordinates z_(i,j); the ideal is
// generated by the quadrics z_a z_b - z_c z_d with a + b = c + d.
//
// The ideal has no linear part (the points span the plane affinely and the
// surface lies in no hyperplane), so any basis of its degree-two piece is a
// minimal generating system. minimal_system builds one such basis fiber by
// fiber: for each sum point the pairs hitting it are joined to the smallest
// pair, giving m - 1 independent binomials for a fiber of size m.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toric/delpezzo.hpp"
#include "toric/sparse_rank.hpp"

namespace toric {

struct EmbeddingData {
    LatticePolygon dilated_polar;       ///< ℓ·polar
    std::vector<LatticePoint> points;   ///< lexicographic
    Int delta = 0;                      ///< #points - 1
    Int degree = 0;                     ///< 2·area(ℓ·polar)
    Int boundary = 0;
    Int interior = 0;                   ///< sectional genus
};

/// Throws consistency_error if the Pick-style identities between the counts fail.
EmbeddingData embedding_data(const LdpData& ldp);

inline Int sectional_genus(const EmbeddingData& e) { return e.interior; }

using PointPair = std::pair<LatticePoint, LatticePoint>;

/// z_{plus.first} z_{plus.second} - z_{minus.first} z_{minus.second}, stored
/// with each pair sorted and plus < minus.
struct Binomial {
    PointPair plus;
    PointPair minus;

    /// Sorts the pairs; throws invalid_input if the sums differ or the two
    /// monomials coincide.
    static Binomial make(PointPair a, PointPair b);

    friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

/// "z(i1,j1)*z(i2,j2) - z(i3,j3)*z(i4,j4)"
std::string format_binomial(const Binomial& b);
/// Inverse of format_binomial; also tolerates extra whitespace.
Binomial parse_binomial(std::string_view line);

/// Every quadratic relation, grouped by sum point (sum points and pairs in
/// lexicographic order). Size is Σ C(m, 2) over the fibers.
std::vector<Binomial> koelman_quadrics(const EmbeddingData& e);

/// Counts available without listing a single binomial; fine for large ℓ.
struct FiberStatistics {
    Int monomials = 0;        ///< C(δ + 2, 2)
    Int sum_points = 0;       ///< distinct a + b
    Int spanning_count = 0;   ///< Σ (m - 1)
    Int koelman_count = 0;    ///< Σ C(m, 2)
};

/// Column-by-column convolution of the point set with itself.
FiberStatistics fiber_statistics(const EmbeddingData& e);

struct MinimalSystemOptions {
    bool verify_rank = false;
    /// Rank verification is skipped (rank stays empty) above this many
    /// Koelman relations unless forced.
    Int rank_limit = 500000;
    bool force_rank = false;
};

struct QuadricIdealReport {
    Int delta = 0, degree = 0, genus = 0, boundary = 0;
    Int beta = 0;          ///< generators.size()
    Int beta_formula = 0;  ///< C(δ+2, 2) - #(2·ℓ·polar ∩ Z^2)
    Int koelman_count = 0;
    std::optional<Int> rank;  ///< rank of the full relation set when verified
    std::vector<LatticePoint> points;
    std::vector<Binomial> generators;  ///< output order of the ideal file
};

/// Throws consistency_error when the three β counts (or the rank) disagree.
QuadricIdealReport minimal_system(const EmbeddingData& e, const MinimalSystemOptions& options = {});

/// Reusable span test against a fixed generator set.
class SpanChecker {
public:
    explicit SpanChecker(const QuadricIdealReport& report);
    /// Throws invalid_input if b uses a point outside the report's point set.
    bool contains(const Binomial& b) const;

private:
    SparseRow row_of(const Binomial& b) const;
    std::vector<LatticePoint> points_;
    SparseEchelon echelon_;
};

bool span_membership(const QuadricIdealReport& report, const Binomial& b);

struct TableRow {
    Int degree = 0, delta = 0, beta = 0, genus = 0, boundary = 0;
};

/// Closed forms for the canonical polygon Q_p^[k]. Throws std::domain_error
/// for bad (k, p) or a non-integral value.
TableRow table_formulas(int k, Int p);

/// Ideal file: header comments with δ, d, β, g then one binomial per line.
std::string format_ideal(const QuadricIdealReport& r);
/// Reads the binomial lines of an ideal file, skipping '#' comments.
std::vector<Binomial> parse_ideal(std::string_view text);

}  // namespace toric
