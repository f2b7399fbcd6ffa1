#pragma once

// Flat, serializable summary of an analyzed polygon. Rationals travel as
// "num/den" strings so a JSON round trip is exact.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toric/delpezzo.hpp"
#include "toric/embedding.hpp"

namespace toric {

struct ConeReport {
    Int p = 0, q = 1, socius = 0, local_index = 1;
    std::vector<Int> hj;
    std::string singularity;
    friend bool operator==(const ConeReport&, const ConeReport&) = default;
};

struct ClassificationReport {
    int k = 0;
    Int p = 0;
    std::array<Int, 4> transform{};  ///< row-major
    std::size_t mu = 0;
    std::string target;  ///< "Q" or "Qcheck"
    std::string label;   ///< e.g. "P(1,1,3)" for k = 1
    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

struct EmbeddingReport {
    Int delta = 0, degree = 0, boundary = 0, genus = 0, beta = 0;
    friend bool operator==(const EmbeddingReport&, const EmbeddingReport&) = default;
};

struct Report {
    std::vector<LatticePoint> vertices;
    Int index = 1;
    Rational k2;
    Int picard = 0;
    std::size_t singular_count = 0;
    std::vector<ConeReport> cones;
    std::vector<Int> r;
    std::string graph;
    std::vector<RationalPoint> polar;
    std::optional<ClassificationReport> classification;
    std::optional<EmbeddingReport> embedding;
    friend bool operator==(const Report&, const Report&) = default;
};

/// Classification is filled in iff the polygon has exactly one singular cone.
/// β in the embedding block comes from the lattice-point formula, so this
/// stays cheap for large polygons.
Report make_report(const LdpData& ldp, bool with_embedding = true);

std::string report_to_json(const Report& r);
/// Throws invalid_input on malformed JSON or a missing field.
Report report_from_json(std::string_view text);
std::string report_to_text(const Report& r);

}  // namespace toric
