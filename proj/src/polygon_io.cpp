#include "toric/polygon_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "toric/errors.hpp"

namespace toric {

namespace {

void reject_duplicates(const std::vector<LatticePoint>& pts) {
    auto sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
        throw invalid_input("duplicate vertex " + it->str());
}

}  // namespace

LatticePolygon parse_polygon_text(std::string_view text) {
    std::vector<LatticePoint> pts;
    std::istringstream in{std::string(text)};
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a)) continue;
        if (!(fields >> b) || (fields >> extra))
            throw invalid_input("line " + std::to_string(lineno) + ": expected two integers");
        try {
            const Rational x = Rational::parse(a), y = Rational::parse(b);
            if (!x.is_integer() || !y.is_integer() || a.find('/') != std::string::npos ||
                b.find('/') != std::string::npos)
                throw std::invalid_argument("fraction");
            pts.push_back({x.num(), y.num()});
        } catch (const std::invalid_argument&) {
            throw invalid_input("line " + std::to_string(lineno) + ": expected two integers, got '" + line + "'");
        }
    }
    reject_duplicates(pts);
    return LatticePolygon::from_vertices(std::move(pts));
}

LatticePolygon parse_polygon_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw invalid_input(std::string("malformed JSON polygon: ") + e.what());
    }
    if (!j.is_array()) throw invalid_input("JSON polygon must be an array of [x, y] pairs");
    std::vector<LatticePoint> pts;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& e = j[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw invalid_input("JSON polygon entry " + std::to_string(i) + " is not an integer pair");
        pts.push_back({e[0].get<Int>(), e[1].get<Int>()});
    }
    reject_duplicates(pts);
    return LatticePolygon::from_vertices(std::move(pts));
}

LatticePolygon parse_polygon(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '[') return parse_polygon_json(text);
    return parse_polygon_text(text);
}

LatticePolygon read_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open polygon file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_polygon(buf.str());
}

std::string format_polygon_text(const LatticePolygon& p) {
    std::string out;
    for (const auto& v : p.vertices()) out += std::to_string(v.x) + " " + std::to_string(v.y) + "\n";
    return out;
}

std::string format_polygon_json(const LatticePolygon& p) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& v : p.vertices()) j.push_back({v.x, v.y});
    return j.dump();
}

}  // namespace toric
