#include "toric/report.hpp"

#include <sstream>

#include <json.hpp>

#include "toric/errors.hpp"
#include "toric/graphs.hpp"

namespace toric {

using nlohmann::json;

Report make_report(const LdpData& ldp, bool with_embedding) {
    Report r;
    r.vertices = ldp.polygon.vertices();
    r.index = ldp.index;
    r.k2 = ldp.analysis.k2;
    r.picard = ldp.analysis.picard;
    r.singular_count = ldp.singular_count;
    for (const auto& c : ldp.analysis.cones) r.cones.push_back({c.p, c.q, c.socius, c.local_index, c.hj, c.singularity});
    r.r = ldp.analysis.r;
    r.graph = render(graph_of(ldp.analysis));
    r.polar = ldp.polar.vertices();
    if (ldp.singular_count == 1) {
        const Classification c = classify_one_singularity(ldp.polygon);
        const auto& t = c.transform;
        r.classification = ClassificationReport{
            c.k, c.p, {t.a(), t.b(), t.c(), t.d()}, c.mu, c.target == ClassTarget::canonical ? "Q" : "Qcheck",
            c.k == 1 ? "P(1,1," + std::to_string(c.p + 1) + ")" : ""};
    }
    if (with_embedding) {
        const EmbeddingData e = embedding_data(ldp);
        const Int beta = checked_sub(choose2(e.delta + 2), minkowski_double(e.dilated_polar));
        r.embedding = EmbeddingReport{e.delta, e.degree, e.boundary, e.interior, beta};
    }
    return r;
}

namespace {

json point_json(const LatticePoint& v) { return json::array({v.x, v.y}); }

std::string rat_str(const Rational& q) { return q.fraction_str(); }

}  // namespace

std::string report_to_json(const Report& r) {
    json j;
    j["vertices"] = json::array();
    for (const auto& v : r.vertices) j["vertices"].push_back(point_json(v));
    j["index"] = r.index;
    j["k2"] = rat_str(r.k2);
    j["picard"] = r.picard;
    j["singular_count"] = r.singular_count;
    j["cones"] = json::array();
    for (const auto& c : r.cones)
        j["cones"].push_back({{"p", c.p}, {"q", c.q}, {"socius", c.socius}, {"local_index", c.local_index},
                              {"hj", c.hj}, {"singularity", c.singularity}});
    j["r"] = r.r;
    j["graph"] = r.graph;
    j["polar"] = json::array();
    for (const auto& v : r.polar) j["polar"].push_back(json::array({rat_str(v.x), rat_str(v.y)}));
    if (r.classification) {
        const auto& c = *r.classification;
        j["classification"] = {{"k", c.k},   {"p", c.p},           {"transform", c.transform},
                               {"mu", c.mu}, {"target", c.target}, {"label", c.label}};
    } else {
        j["classification"] = nullptr;
    }
    if (r.embedding) {
        const auto& e = *r.embedding;
        j["embedding"] = {{"delta", e.delta}, {"degree", e.degree}, {"boundary", e.boundary},
                          {"genus", e.genus}, {"beta", e.beta}};
    } else {
        j["embedding"] = nullptr;
    }
    return j.dump(2) + "\n";
}

Report report_from_json(std::string_view text) {
    try {
        const json j = json::parse(text);
        Report r;
        for (const auto& v : j.at("vertices")) r.vertices.push_back({v.at(0).get<Int>(), v.at(1).get<Int>()});
        r.index = j.at("index").get<Int>();
        r.k2 = Rational::parse(j.at("k2").get<std::string>());
        r.picard = j.at("picard").get<Int>();
        r.singular_count = j.at("singular_count").get<std::size_t>();
        for (const auto& c : j.at("cones"))
            r.cones.push_back({c.at("p").get<Int>(), c.at("q").get<Int>(), c.at("socius").get<Int>(),
                               c.at("local_index").get<Int>(), c.at("hj").get<std::vector<Int>>(),
                               c.at("singularity").get<std::string>()});
        r.r = j.at("r").get<std::vector<Int>>();
        r.graph = j.at("graph").get<std::string>();
        for (const auto& v : j.at("polar"))
            r.polar.emplace_back(Rational::parse(v.at(0).get<std::string>()), Rational::parse(v.at(1).get<std::string>()));
        if (const auto& c = j.at("classification"); !c.is_null())
            r.classification = ClassificationReport{c.at("k").get<int>(),          c.at("p").get<Int>(),
                                                    c.at("transform").get<std::array<Int, 4>>(),
                                                    c.at("mu").get<std::size_t>(), c.at("target").get<std::string>(),
                                                    c.at("label").get<std::string>()};
        if (const auto& e = j.at("embedding"); !e.is_null())
            r.embedding = EmbeddingReport{e.at("delta").get<Int>(), e.at("degree").get<Int>(),
                                          e.at("boundary").get<Int>(), e.at("genus").get<Int>(), e.at("beta").get<Int>()};
        return r;
    } catch (const json::exception& e) {
        throw invalid_input(std::string("malformed report: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw invalid_input(std::string("malformed report: ") + e.what());
    }
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << "vertices:";
    for (const auto& v : r.vertices) os << ' ' << v.str();
    os << "\nindex: " << r.index << "\nK^2: " << r.k2.str() << "\nPicard number: " << r.picard
       << "\nsingular cones: " << r.singular_count << "\n";
    for (std::size_t i = 0; i < r.cones.size(); ++i) {
        const auto& c = r.cones[i];
        os << "  cone " << i + 1 << ": (p,q) = (" << c.p << "," << c.q << ")";
        if (!c.singularity.empty()) {
            os << "  " << c.singularity << "  HJ [";
            for (std::size_t t = 0; t < c.hj.size(); ++t) os << (t ? "," : "") << c.hj[t];
            os << "]  l_F = " << c.local_index;
        }
        os << "\n";
    }
    os << "r:";
    for (Int x : r.r) os << ' ' << x;
    os << "\ngraph: " << r.graph << "\npolar:";
    for (const auto& v : r.polar) os << ' ' << v.str();
    os << "\n";
    if (r.classification) {
        const auto& c = *r.classification;
        os << "class: k = " << c.k << ", p = " << c.p << "  transform [[" << c.transform[0] << "," << c.transform[1]
           << "],[" << c.transform[2] << "," << c.transform[3] << "]]  mu = " << c.mu;
        if (!c.label.empty()) os << "  " << c.label;
        os << "\n";
    }
    if (r.embedding) {
        const auto& e = *r.embedding;
        os << "embedding: delta = " << e.delta << ", degree = " << e.degree << ", boundary = " << e.boundary
           << ", genus = " << e.genus << ", beta = " << e.beta << "\n";
    }
    return os.str();
}

}  // namespace toric
