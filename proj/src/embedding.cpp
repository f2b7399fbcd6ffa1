#include "toric/embedding.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

EmbeddingData embedding_data(const LdpData& ldp) {
    EmbeddingData e{.dilated_polar = ldp.polar.scaled(ldp.index).to_lattice(), .points = {}};
    LatticePointSet pts = lattice_points(e.dilated_polar);
    e.points = pts.boundary;
    e.points.insert(e.points.end(), pts.interior.begin(), pts.interior.end());
    std::sort(e.points.begin(), e.points.end());
    e.delta = static_cast<Int>(e.points.size()) - 1;
    e.degree = polygon_area2(e.dilated_polar);
    e.boundary = static_cast<Int>(pts.boundary.size());
    e.interior = static_cast<Int>(pts.interior.size());
    if (e.boundary != boundary_point_count(e.dilated_polar))
        throw consistency_error("boundary count by enumeration and by edge gcds disagree");
    if (2 * e.delta != e.degree + e.boundary) throw consistency_error("2·delta != degree + boundary");
    if (e.interior != e.delta - e.boundary + 1) throw consistency_error("genus != delta - boundary + 1");
    return e;
}

Binomial Binomial::make(PointPair a, PointPair b) {
    if (a.second < a.first) std::swap(a.first, a.second);
    if (b.second < b.first) std::swap(b.first, b.second);
    if (a.first + a.second != b.first + b.second)
        throw invalid_input("binomial terms have different sums: " + (a.first + a.second).str() + " vs " +
                            (b.first + b.second).str());
    if (a == b) throw invalid_input("binomial with equal monomials");
    if (b < a) std::swap(a, b);
    return {a, b};
}

std::string format_binomial(const Binomial& b) {
    return "z" + b.plus.first.str() + "*z" + b.plus.second.str() + " - z" + b.minus.first.str() + "*z" +
           b.minus.second.str();
}

Binomial parse_binomial(std::string_view line) {
    std::string s;
    for (char ch : line)
        if (ch != ' ' && ch != '\t' && ch != '\r') s += ch;
    static const std::regex re(R"(z\((-?\d+),(-?\d+)\)\*z\((-?\d+),(-?\d+)\)-z\((-?\d+),(-?\d+)\)\*z\((-?\d+),(-?\d+)\))");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw invalid_input("malformed binomial: " + std::string(line));
    Int v[8];
    for (int i = 0; i < 8; ++i) {
        try {
            v[i] = std::stoll(m[i + 1].str());
        } catch (const std::out_of_range&) {
            throw invalid_input("coordinate out of range in: " + std::string(line));
        }
    }
    return Binomial::make({{v[0], v[1]}, {v[2], v[3]}}, {{v[4], v[5]}, {v[6], v[7]}});
}

namespace {

// Unordered pairs {a, b} (a <= b) grouped by a + b, everything in lexicographic order.
std::map<LatticePoint, std::vector<PointPair>> fibers(const EmbeddingData& e) {
    std::map<LatticePoint, std::vector<PointPair>> out;
    for (std::size_t i = 0; i < e.points.size(); ++i)
        for (std::size_t j = i; j < e.points.size(); ++j)
            out[e.points[i] + e.points[j]].emplace_back(e.points[i], e.points[j]);
    return out;
}

}  // namespace

std::vector<Binomial> koelman_quadrics(const EmbeddingData& e) {
    std::vector<Binomial> out;
    for (const auto& [sum, pairs] : fibers(e))
        for (std::size_t a = 0; a < pairs.size(); ++a)
            for (std::size_t b = a + 1; b < pairs.size(); ++b) out.push_back(Binomial::make(pairs[a], pairs[b]));
    return out;
}

FiberStatistics fiber_statistics(const EmbeddingData& e) {
    const auto found = lattice_columns(e.dilated_polar);
    FiberStatistics st;
    if (found.empty()) return st;
    const Int x0 = found.front().x;
    const Int x1 = found.back().x;
    // Thin polygons can have empty columns; keep them as empty intervals.
    std::vector<LatticeColumn> cols;
    for (Int x = x0; x <= x1; ++x) cols.push_back({x, 0, -1});
    for (const auto& c : found) cols[static_cast<std::size_t>(c.x - x0)] = c;
    auto empty = [](const LatticeColumn& c) { return c.hi < c.lo; };

    std::vector<Int> d2;
    for (Int X = 2 * x0; X <= 2 * x1; ++X) {
        // Ordered pairs (a, b) of points with a.x + b.x = X.
        const Int ilo = std::max(x0, X - x1), ihi = std::min(x1, X - x0);
        Int ylo = 0, yhi = -1;
        for (Int xa = ilo; xa <= ihi; ++xa) {
            const auto& a = cols[static_cast<std::size_t>(xa - x0)];
            const auto& b = cols[static_cast<std::size_t>(X - xa - x0)];
            if (empty(a) || empty(b)) continue;
            if (yhi < ylo) {
                ylo = a.lo + b.lo;
                yhi = a.hi + b.hi;
            } else {
                ylo = std::min(ylo, a.lo + b.lo);
                yhi = std::max(yhi, a.hi + b.hi);
            }
        }
        if (yhi < ylo) continue;
        d2.assign(static_cast<std::size_t>(yhi - ylo + 3), 0);
        auto bump = [&](Int y, Int v) { d2[static_cast<std::size_t>(y - ylo)] += v; };
        for (Int xa = ilo; xa <= ihi; ++xa) {
            const auto& a = cols[static_cast<std::size_t>(xa - x0)];
            const auto& b = cols[static_cast<std::size_t>(X - xa - x0)];
            if (empty(a) || empty(b)) continue;
            // Second difference of the convolution of two interval indicators.
            bump(a.lo + b.lo, 1);
            bump(a.hi + b.lo + 1, -1);
            bump(a.lo + b.hi + 1, -1);
            bump(a.hi + b.hi + 2, 1);
        }
        // A point a with 2a = (X, Y) exists iff X is even and Y/2 lies in that column.
        const LatticeColumn* mid = (X % 2 == 0) ? &cols[static_cast<std::size_t>(X / 2 - x0)] : nullptr;
        Int slope = 0, ordered = 0;
        for (Int Y = ylo; Y <= yhi; ++Y) {
            slope += d2[static_cast<std::size_t>(Y - ylo)];
            ordered += slope;
            if (ordered == 0) continue;
            const Int diag = (mid != nullptr && Y % 2 == 0 && mid->lo <= Y / 2 && Y / 2 <= mid->hi) ? 1 : 0;
            const Int m = exact_div(ordered + diag, 2);
            ++st.sum_points;
            st.monomials = checked_add(st.monomials, m);
            st.spanning_count = checked_add(st.spanning_count, m - 1);
            st.koelman_count = checked_add(st.koelman_count, choose2(m));
        }
    }
    if (st.monomials != choose2(e.delta + 2)) throw consistency_error("fiber sizes do not add up to C(delta+2, 2)");
    return st;
}

namespace {

std::size_t point_index(const std::vector<LatticePoint>& pts, const LatticePoint& v) {
    const auto it = std::lower_bound(pts.begin(), pts.end(), v);
    if (it == pts.end() || *it != v) throw invalid_input("point " + v.str() + " is not a lattice point of the polygon");
    return static_cast<std::size_t>(it - pts.begin());
}

SparseRow binomial_row(const std::vector<LatticePoint>& pts, const Binomial& b) {
    const auto n = static_cast<Int>(pts.size());
    auto col = [&](const PointPair& pr) {
        const auto i = static_cast<Int>(point_index(pts, pr.first));
        const auto j = static_cast<Int>(point_index(pts, pr.second));
        return std::min(i, j) * n + std::max(i, j);
    };
    return {{col(b.plus), 1}, {col(b.minus), -1}};
}

}  // namespace

QuadricIdealReport minimal_system(const EmbeddingData& e, const MinimalSystemOptions& options) {
    QuadricIdealReport r;
    r.delta = e.delta;
    r.degree = e.degree;
    r.genus = e.interior;
    r.boundary = e.boundary;
    r.points = e.points;

    const Int doubled = minkowski_double(e.dilated_polar);
    r.beta_formula = checked_sub(choose2(e.delta + 2), doubled);
    const FiberStatistics st = fiber_statistics(e);
    r.koelman_count = st.koelman_count;

    const auto fib = fibers(e);
    if (static_cast<Int>(fib.size()) != doubled || st.sum_points != doubled)
        throw consistency_error("sum points differ from the lattice points of the doubled polygon");
    for (const auto& [sum, pairs] : fib)
        for (std::size_t t = 1; t < pairs.size(); ++t) r.generators.push_back(Binomial::make(pairs.front(), pairs[t]));
    std::sort(r.generators.begin(), r.generators.end());
    r.beta = static_cast<Int>(r.generators.size());
    if (r.beta != r.beta_formula || r.beta != st.spanning_count)
        throw consistency_error("generator count " + std::to_string(r.beta) + ", formula " +
                                std::to_string(r.beta_formula) + ", fiber count " + std::to_string(st.spanning_count));

    if (options.verify_rank && (options.force_rank || r.koelman_count <= options.rank_limit)) {
        SparseEchelon full, mine;
        Int koelman_seen = 0;
        for (const auto& [sum, pairs] : fib)
            for (std::size_t a = 0; a < pairs.size(); ++a)
                for (std::size_t b = a + 1; b < pairs.size(); ++b) {
                    full.add(binomial_row(r.points, Binomial::make(pairs[a], pairs[b])));
                    ++koelman_seen;
                }
        if (koelman_seen != r.koelman_count) throw consistency_error("Koelman relation count mismatch");
        for (const auto& g : r.generators)
            if (!mine.add(binomial_row(r.points, g))) throw consistency_error("minimal system is linearly dependent");
        if (static_cast<Int>(full.rank()) != r.beta)
            throw consistency_error("rank of all quadrics is " + std::to_string(full.rank()) + ", expected " +
                                    std::to_string(r.beta));
        r.rank = static_cast<Int>(full.rank());
    }
    return r;
}

SpanChecker::SpanChecker(const QuadricIdealReport& report) : points_(report.points) {
    for (const auto& g : report.generators) echelon_.add(row_of(g));
}

SparseRow SpanChecker::row_of(const Binomial& b) const { return binomial_row(points_, b); }

bool SpanChecker::contains(const Binomial& b) const { return echelon_.contains(row_of(b)); }

bool span_membership(const QuadricIdealReport& report, const Binomial& b) { return SpanChecker(report).contains(b); }

namespace {

Int poly(Int p, std::initializer_list<Int> coeffs) {  // highest degree first
    Int v = 0;
    for (Int c : coeffs) v = checked_add(checked_mul(v, p), c);
    return v;
}

Int divide(Int num, Int den) {
    if (num % den != 0) throw std::domain_error("closed form is not integral");
    return num / den;
}

}  // namespace

TableRow table_formulas(int k, Int p) {
    if (p < 1) throw std::domain_error("p must be positive");
    if (k < 1 || k > 3) throw std::domain_error("k must be 1, 2 or 3");
    // Quadratic factor shared by d, δ and the boundary count.
    const Int f = k == 1 ? poly(p, {1, 6, 9}) : k == 2 ? poly(p, {1, 5, 8}) : poly(p, {1, 4, 7});
    TableRow t;
    if (p % 2 != 0) {
        t.degree = divide(checked_mul(p + 1, f), 4);
        t.delta = divide(checked_mul(p + 3, f), 8);
        const Int cubic = k == 1 ? poly(p, {1, 11, 43, 25}) : k == 2 ? poly(p, {1, 10, 37, 16}) : poly(p, {1, 9, 31, 7});
        t.beta = divide(checked_mul(checked_mul(p + 1, f), cubic), 128);
        t.genus = k == 1   ? divide(checked_mul(p + 1, poly(p, {1, 4, -1})), 8)
                  : k == 2 ? divide(checked_mul(checked_mul(p, p + 1), p + 3), 8)
                           : divide(checked_mul(checked_mul(p + 1, p + 1), p + 1), 8);
        t.boundary = divide(f, 2);
    } else {
        t.degree = checked_mul(p + 1, f);
        t.delta = divide(checked_mul(p + 2, f), 2);
        const Int quartic = k == 1   ? poly(p, {1, 10, 37, 50, 24})
                            : k == 2 ? poly(p, {1, 9, 32, 42, 20})
                                     : poly(p, {1, 8, 27, 34, 16});
        t.beta = divide(checked_mul(f, quartic), 8);
        t.genus = k == 1   ? divide(checked_mul(p + 2, poly(p, {1, 4, -1})), 2)
                  : k == 2 ? divide(poly(p, {1, 5, 8, 2}), 2)
                           : divide(poly(p, {1, 4, 7, 2}), 2);
        t.boundary = f;
    }
    return t;
}

std::string format_ideal(const QuadricIdealReport& r) {
    std::ostringstream os;
    os << "# delta = " << r.delta << "\n# degree = " << r.degree << "\n# beta = " << r.beta << "\n# genus = " << r.genus
       << "\n";
    for (const auto& g : r.generators) os << format_binomial(g) << "\n";
    return os.str();
}

std::vector<Binomial> parse_ideal(std::string_view text) {
    std::vector<Binomial> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') continue;
        out.push_back(parse_binomial(line));
    }
    return out;
}

}  // namespace toric
