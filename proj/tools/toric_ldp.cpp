// toric-ldp: analyze, classify and embed toric log del Pezzo surfaces given by
// LDP-polygons.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "toric/delpezzo.hpp"
#include "toric/embedding.hpp"
#include "toric/enumerate.hpp"
#include "toric/errors.hpp"
#include "toric/polygon_io.hpp"
#include "toric/report.hpp"
#include "toric/tables.hpp"

namespace {

using namespace toric;

enum Exit { ok = 0, bad_input = 2, wrong_singularities = 3, inconsistent = 4 };

struct Source {
    std::string path;
    std::vector<Int> canonical;  // {k, p}

    void attach(CLI::App* cmd) {
        auto* file = cmd->add_option("polygon", path, "polygon file (text or [[x,y],...] JSON)");
        auto* canon = cmd->add_option("--canonical", canonical, "use Q_p^[k] instead of a file")->expected(2);
        canon->type_name("K P");
        file->excludes(canon);
        canon->excludes(file);
    }

    LatticePolygon load() const {
        if (!canonical.empty()) return canonical_polygon(static_cast<int>(canonical[0]), canonical[1]);
        if (path.empty()) throw invalid_input("give a polygon file or --canonical K P");
        return read_polygon_file(path);
    }
};

int cmd_analyze(const Source& src, bool json, bool embedding) {
    const Report r = make_report(ldp_analyze(src.load()), embedding);
    std::cout << (json ? report_to_json(r) : report_to_text(r));
    return ok;
}

int cmd_classify(const Source& src, bool json) {
    const LatticePolygon q = src.load();
    const Classification c = classify_one_singularity(q);
    if (json) {
        Report r = make_report(ldp_analyze(q), false);
        std::cout << report_to_json(r);
    } else {
        std::cout << "k = " << c.k << ", p = " << c.p << "\ntransform: " << c.transform.str() << "\nmu = " << c.mu
                  << "\nnormal form: " << (c.target == ClassTarget::canonical ? "Q" : "Qcheck") << "_" << c.p << "^["
                  << c.k << "]\n";
    }
    return ok;
}

int cmd_quadrics(const Source& src, const std::string& out, int rank_mode, Int rank_limit) {
    const EmbeddingData e = embedding_data(ldp_analyze(src.load()));
    MinimalSystemOptions opt;
    opt.verify_rank = rank_mode >= 0;
    opt.force_rank = rank_mode > 0;
    opt.rank_limit = rank_limit;
    const QuadricIdealReport r = minimal_system(e, opt);
    const std::string text = format_ideal(r);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw invalid_input("cannot write " + out);
        f << text;
        std::cout << "wrote " << r.beta << " quadrics to " << out << "\n";
    }
    std::cerr << "delta = " << r.delta << ", degree = " << r.degree << ", beta = " << r.beta
              << ", genus = " << r.genus << ", rank check: "
              << (r.rank ? "passed (rank " + std::to_string(*r.rank) + ")" : std::string("skipped")) << "\n";
    return ok;
}

int cmd_tables(Int pmax) {
    if (pmax < 1) throw invalid_input("--pmax must be at least 1");
    const auto cells = compute_tables(pmax, workers_from_env());
    std::size_t failed = 0;
    for (const auto& c : cells) {
        const auto& t = c.computed;
        std::cout << "k=" << c.k << " p=" << c.p << "  d=" << t.degree << " delta=" << t.delta << " beta=" << t.beta
                  << " g=" << t.genus << " boundary=" << t.boundary << " index=" << c.index
                  << (c.mismatches.empty() ? "  ok" : "  MISMATCH") << "\n";
        for (const auto& m : c.mismatches) std::cout << "    " << m << "\n";
        failed += c.mismatches.size();
    }
    const std::size_t total = cells.size() * kTableQuantities;
    if (failed == 0) {
        std::cout << total << " checks passed\n";
        return ok;
    }
    std::cout << failed << " of " << total << " checks failed\n";
    return inconsistent;
}

int cmd_enumerate(Int bound, bool reverse) {
    EnumerationOptions opt;
    opt.reverse_order = reverse;
    opt.workers = workers_from_env();
    const EnumerationResult res = enumerate_one_singularity(bound, opt);
    std::cout << "bound " << res.bound << ": " << res.polygons_found << " one-singularity polygons, "
              << res.classes.size() << " isomorphism classes\n";
    for (const auto& c : res.classes) {
        std::cout << "  k=" << c.k << " p=" << c.p << "  polygons=" << c.count << "  e.g.";
        for (const auto& v : c.representative.vertices()) std::cout << ' ' << v.str();
        std::cout << "\n";
    }
    for (const auto& f : res.failures) std::cout << "FAILED " << f << "\n";
    std::cout << res.failures.size() << " failures\n";
    return res.failures.empty() ? ok : inconsistent;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toric log del Pezzo surfaces with one singularity"};
    app.require_subcommand(1);

    Source analyze_src, classify_src, quadrics_src;
    bool json = false, no_embedding = false, verify = false, no_verify = false, reverse = false;
    std::string out;
    Int rank_limit = MinimalSystemOptions{}.rank_limit, pmax = 20, bound = 3;

    auto* analyze = app.add_subcommand("analyze", "invariants, graph, polar polygon and embedding counts");
    analyze_src.attach(analyze);
    analyze->add_flag("--json", json, "machine-readable output");
    analyze->add_flag("--no-embedding", no_embedding, "skip the embedding counts");

    auto* classify = app.add_subcommand("classify", "normal form of a one-singularity polygon");
    classify_src.attach(classify);
    classify->add_flag("--json", json, "machine-readable output");

    auto* quadrics = app.add_subcommand("quadrics", "minimal quadric generators of the anticanonical embedding");
    quadrics_src.attach(quadrics);
    quadrics->add_option("--out", out, "write the ideal file here instead of stdout");
    auto* v = quadrics->add_flag("--verify-rank", verify, "always check the rank of all quadratic relations");
    auto* nv = quadrics->add_flag("--no-verify-rank", no_verify, "never check the rank");
    v->excludes(nv);
    quadrics->add_option("--rank-limit", rank_limit, "automatic rank check up to this many relations")
        ->capture_default_str();

    auto* tables = app.add_subcommand("tables", "compare computed invariants of Q_p^[k] with their closed forms");
    tables->add_option("--pmax", pmax, "largest p")->capture_default_str();

    auto* enumerate = app.add_subcommand("enumerate", "exhaustive search in a box, classifying every hit");
    enumerate->add_option("--bound", bound, "coordinate bound B")->capture_default_str();
    enumerate->add_flag("--reverse", reverse, "visit candidates in reverse order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : bad_input;
    }

    try {
        if (*analyze) return cmd_analyze(analyze_src, json, !no_embedding);
        if (*classify) return cmd_classify(classify_src, json);
        if (*quadrics) return cmd_quadrics(quadrics_src, out, verify ? 1 : (no_verify ? -1 : 0), rank_limit);
        if (*tables) return cmd_tables(pmax);
        if (*enumerate) return cmd_enumerate(bound, reverse);
    } catch (const singularity_count_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return wrong_singularities;
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const consistency_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return inconsistent;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return inconsistent;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    }
    return ok;
}
