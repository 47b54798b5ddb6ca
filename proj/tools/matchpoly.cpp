// Command-line surface: matching polynomials, subgraph censuses, formula
// verification, and the cubic-order-10 catalog, for batch and CI use.
//
//   matchpoly poly [file]                 one graph6 per line
//   matchpoly census [file] --max-edges N
//   matchpoly verify [file] [--formulas] [--system]
//   matchpoly catalog --order N --degree R [--verify]
//
// Exit codes: 0 success, 1 verification failure, 2 input/parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "matchpoly/catalog.hpp"
#include "matchpoly/census.hpp"
#include "matchpoly/formulas.hpp"
#include "matchpoly/matching.hpp"

using json = nlohmann::ordered_json;
using namespace matchpoly;

namespace {

struct InputLine {
    int ordinal;  // 1-based line number
    Graph graph;
    std::string g6;
};

// Reads graph6 lines from a file or stdin; parse failures are reported with
// line numbers and flip the error flag.
std::vector<InputLine> read_graphs(const std::string& path, bool& had_error) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) {
            std::cerr << "error: cannot open " << path << "\n";
            had_error = true;
            return {};
        }
        in = &file;
    }
    std::vector<InputLine> lines;
    std::string raw;
    int ordinal = 0;
    while (std::getline(*in, raw)) {
        ++ordinal;
        while (!raw.empty() && (raw.back() == '\r' || raw.back() == '\n' || raw.back() == ' '))
            raw.pop_back();
        if (raw.empty()) continue;
        try {
            lines.push_back({ordinal, parse_graph6(raw), raw});
        } catch (const std::exception& e) {
            std::cerr << "line " << ordinal << ": " << e.what() << "\n";
            had_error = true;
        }
    }
    return lines;
}

int cmd_poly(const std::string& path, const std::string& format) {
    bool had_error = false;
    for (const auto& line : read_graphs(path, had_error)) {
        auto poly = matching_polynomial(line.graph);
        int alpha_prime = 0;
        for (int r = static_cast<int>(poly.rho.size()) - 1; r >= 0; --r)
            if (poly.rho[r] > 0) {
                alpha_prime = r;
                break;
            }
        bool perfect = line.graph.order() % 2 == 0 && alpha_prime == line.graph.order() / 2;
        if (format == "json-lines") {
            json rec;
            rec["line"] = line.ordinal;
            rec["graph6"] = line.g6;
            rec["n"] = poly.n;
            rec["rho"] = poly.rho;
            rec["mu"] = render_polynomial(poly);
            rec["matching_number"] = alpha_prime;
            rec["perfect_matching"] = perfect;
            std::cout << rec.dump() << "\n";
        } else {
            std::cout << line.g6 << "  n=" << poly.n << "  alpha'=" << alpha_prime
                      << "  perfect=" << (perfect ? "yes" : "no")
                      << "  mu=" << render_polynomial(poly) << "\n";
        }
    }
    return had_error ? 2 : 0;
}

int cmd_census(const std::string& path, int max_edges, const std::string& format) {
    bool had_error = false;
    const auto& dict = ClassDictionary::instance();
    const auto& map = paper_index_map();
    for (const auto& line : read_graphs(path, had_error)) {
        auto table = census(line.graph, max_edges);
        // deterministic: by class name within each input line
        std::vector<int> order;
        for (int cid = 0; cid < dict.size(); ++cid)
            if (dict.classes()[cid].m <= max_edges) order.push_back(cid);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return dict.classes()[a].name < dict.classes()[b].name; });
        for (int cid : order) {
            const auto& cls = dict.classes()[cid];
            if (format == "json-lines") {
                json rec;
                rec["line"] = line.ordinal;
                rec["graph6"] = line.g6;
                rec["class"] = cls.name;
                rec["index"] = mki_label(map[cid]);
                rec["m"] = cls.m;
                rec["k"] = cls.k;
                rec["count"] = table[cid];
                std::cout << rec.dump() << "\n";
            } else if (table[cid] != 0) {
                std::cout << line.g6 << "  " << mki_label(map[cid]) << "  " << cls.name << " = "
                          << table[cid] << "\n";
            }
        }
    }
    return had_error ? 2 : 0;
}

int cmd_verify(const std::string& path, bool formulas, bool system, const std::string& format) {
    if (!formulas && !system) formulas = system = true;
    bool had_error = false;
    bool all_zero = true;
    for (const auto& line : read_graphs(path, had_error)) {
        if (!is_regular(line.graph)) {
            std::cerr << "line " << line.ordinal << ": not regular, skipped\n";
            continue;
        }
        if (formulas) {
            auto report = verify_formulas(line.graph);
            if (!report.all_zero) all_zero = false;
            for (const auto& row : report.rows) {
                if (format == "json-lines") {
                    json rec;
                    rec["line"] = line.ordinal;
                    rec["graph6"] = line.g6;
                    rec["formula"] = mki_label(row.id);
                    rec["closed_form"] = row.closed.str();
                    rec["census"] = row.census;
                    rec["residual"] = row.residual.str();
                    std::cout << rec.dump() << "\n";
                } else {
                    std::cout << line.g6 << "  " << mki_label(row.id) << "  closed=" << row.closed.str()
                              << "  census=" << row.census << "  residual=" << row.residual.str()
                              << "\n";
                }
            }
        }
        if (system) {
            auto report = verify_linear_system(line.graph);
            if (!report.all_zero) all_zero = false;
            for (const auto& row : report.rows) {
                if (format == "json-lines") {
                    json rec;
                    rec["line"] = line.ordinal;
                    rec["graph6"] = line.g6;
                    rec["equation"] = row.index;
                    rec["lhs"] = row.lhs.str();
                    rec["rhs"] = row.rhs.str();
                    rec["residual"] = row.residual.str();
                    std::cout << rec.dump() << "\n";
                } else {
                    std::cout << line.g6 << "  eq" << row.index << "  lhs=" << row.lhs.str()
                              << "  rhs=" << row.rhs.str() << "  residual=" << row.residual.str()
                              << "\n";
                }
            }
        }
    }
    if (had_error) return 2;
    return all_zero ? 0 : 1;
}

void print_entry(const CatalogEntry& e, const std::string& format) {
    if (format == "json-lines") {
        json rec;
        if (e.paper_index > 0) rec["index"] = e.paper_index;
        rec["graph6"] = e.g6;
        rec["mu"] = render_polynomial(e.polynomial);
        rec["saturation"] = e.stats.saturation_number;
        rec["matching_number"] = e.stats.matching_number;
        rec["c3"] = e.params.c3;
        rec["c4"] = e.params.c4;
        rec["c5"] = e.params.c5;
        rec["q"] = e.params.q;
        std::cout << rec.dump() << "\n";
    } else {
        std::ostringstream row;
        if (e.paper_index > 0)
            row << "G_" << e.paper_index;
        else
            row << "-";
        row << "\t" << e.g6 << "\t" << render_polynomial(e.polynomial) << "\ts="
            << e.stats.saturation_number << "\ta'=" << e.stats.matching_number << "\tc3="
            << e.params.c3 << "\tc4=" << e.params.c4 << "\tc5=" << e.params.c5 << "\tq="
            << e.params.q;
        std::cout << row.str() << "\n";
    }
}

int cmd_catalog(int order, int degree, bool verify, const std::string& format) {
    if (verify && (order != 10 || degree != 3)) {
        std::cerr << "error: --verify applies to --order 10 --degree 3 only\n";
        return 2;
    }
    std::vector<CatalogEntry> entries;
    try {
        if (order == 10 && degree == 3) {
            entries = build_cubic10_catalog();
        } else {
            for (auto& g : generate_regular(order, degree)) {
                CatalogEntry e;
                e.g6 = serialize_graph6(g);
                e.polynomial = matching_polynomial(g);
                e.stats = matching_stats(g);
                if (g.order() > 0 && is_regular(g)) e.params = extract_params(g);
                e.graph = std::move(g);
                entries.push_back(std::move(e));
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    for (const auto& e : entries) print_entry(e, format);

    if (!verify) return 0;
    bool ok = true;
    auto obs = verify_observation(entries);
    for (const auto& row : obs.rows)
        if (!row.ok)
            std::cout << "observation mismatch: G_" << row.paper_index << " expected s="
                      << row.expected_s << " computed s=" << row.actual_s << "\n";
    std::cout << "observation: " << (obs.all_ok ? "ok" : "MISMATCH") << "\n";
    ok = ok && obs.all_ok;

    auto uniq = verify_uniqueness(entries);
    std::cout << "uniqueness: " << (uniq.all_ok ? "ok" : "FAILED") << " (" << uniq.pairs_checked
              << " pairs)\n";
    ok = ok && uniq.all_ok;

    bool theorem_ok = true;
    for (const auto& e : entries)
        if (theorem_pol(e.params) != e.polynomial) theorem_ok = false;
    std::cout << "theorem-pol: " << (theorem_ok ? "ok" : "FAILED") << "\n";
    ok = ok && theorem_ok;

    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matching polynomials, subgraph censuses and coefficient formulas for regular graphs"};
    app.require_subcommand(1);
    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json-lines"}));

    std::string path;
    auto* poly = app.add_subcommand("poly", "matching polynomial per graph6 line");
    poly->add_option("file", path, "input file (default stdin)");

    int max_edges = kMaxCensusEdges;
    auto* cen = app.add_subcommand("census", "subgraph class counts per graph6 line");
    cen->add_option("file", path, "input file (default stdin)");
    cen->add_option("--max-edges", max_edges, "largest subgraph size (<= 5)");

    bool flag_formulas = false, flag_system = false;
    auto* ver = app.add_subcommand("verify", "closed forms and linear system against brute censuses");
    ver->add_option("file", path, "input file (default stdin)");
    ver->add_flag("--formulas", flag_formulas, "check the 42 closed forms");
    ver->add_flag("--system", flag_system, "check the 24-equation system");

    int order = 10, degree = 3;
    bool flag_verify = false;
    auto* cat = app.add_subcommand("catalog", "regular graph catalog");
    cat->add_option("--order", order, "vertex count");
    cat->add_option("--degree", degree, "regularity degree");
    cat->add_flag("--verify", flag_verify, "run observation/uniqueness/theorem-pol suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (poly->parsed()) return cmd_poly(path, format);
        if (cen->parsed()) return cmd_census(path, max_edges, format);
        if (ver->parsed()) return cmd_verify(path, flag_formulas, flag_system, format);
        if (cat->parsed()) return cmd_catalog(order, degree, flag_verify, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
