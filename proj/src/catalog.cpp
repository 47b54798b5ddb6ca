#include "matchpoly/catalog.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "matchpoly/canonical.hpp"
#include "matchpoly/census.hpp"

namespace matchpoly {

namespace {

constexpr int kMaxGenOrder = 12;

// Completes vertices in index order: the least deficient vertex picks its
// remaining neighbors among larger indices, so every labeled graph appears
// exactly once. N(0) = {1..r} is forced, which every isomorphism class admits.
struct RegularSearch {
    int n, r;
    Graph g;
    std::vector<int> deg;
    std::set<Certificate>& found;

    void run() {
        if (r == 0) {
            found.insert(canonical_certificate(Graph(n)));
            return;
        }
        for (int v = 1; v <= r; ++v) {
            g.add_edge(0, v);
            deg[0]++;
            deg[v]++;
        }
        extend();
    }

    void extend() {
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (deg[v] < r) {
                u = v;
                break;
            }
        if (u < 0) {
            found.insert(canonical_certificate(g));
            return;
        }
        std::vector<int> cands;
        for (int v = u + 1; v < n; ++v)
            if (deg[v] < r && !g.has_edge(u, v)) cands.push_back(v);
        choose(u, r - deg[u], cands, 0);
    }

    void choose(int u, int need, const std::vector<int>& cands, std::size_t start) {
        if (need == 0) {
            extend();
            return;
        }
        if (cands.size() - start < static_cast<std::size_t>(need)) return;
        for (std::size_t i = start; i < cands.size(); ++i) {
            int v = cands[i];
            g.add_edge(u, v);
            deg[u]++;
            deg[v]++;
            choose(u, need - 1, cands, i + 1);
            g = g.delete_edge(u, v);
            deg[u]--;
            deg[v]--;
        }
    }
};

}  // namespace

std::vector<Graph> generate_regular(int n, int r) {
    if (n < 0 || r < 0) throw std::invalid_argument("negative order or degree");
    if (n > kMaxGenOrder)
        throw std::invalid_argument("exhaustive generation capped at n <= 12, got " + std::to_string(n));
    if ((n * r) % 2 != 0)
        throw std::invalid_argument("no regular graph: n*r odd (n = " + std::to_string(n) +
                                    ", r = " + std::to_string(r) + ")");
    if (r >= n && !(r == 0 && n >= 0)) return {};

    std::set<Certificate> found;
    RegularSearch search{n, r, Graph(n), std::vector<int>(n, 0), found};
    search.run();

    std::vector<Graph> out;
    for (const auto& cert : found) out.push_back(graph_from_certificate(cert));
    return out;
}

std::vector<Graph> random_regular(int n, int r, int count, std::uint64_t seed) {
    if ((n * r) % 2 != 0 || r >= n) throw std::invalid_argument("infeasible (n, r)");
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    std::vector<int> stubs;
    while (static_cast<int>(out.size()) < count) {
        stubs.clear();
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < r; ++i) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        Graph g(n);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || g.has_edge(u, v)) {
                ok = false;
                break;
            }
            g.add_edge(u, v);
        }
        if (ok) out.push_back(g);
    }
    return out;
}

const std::array<std::array<long long, 6>, 21>& printed_cubic10_rho() {
    static const std::array<std::array<long long, 6>, 21> table = {{
        {1, 15, 75, 141, 80, 8},    // G_1
        {1, 15, 75, 143, 86, 6},    // G_2
        {1, 15, 75, 142, 84, 7},    // G_3
        {1, 15, 75, 143, 90, 10},   // G_4
        {1, 15, 75, 141, 80, 6},    // G_5
        {1, 15, 75, 145, 95, 13},   // G_6
        {1, 15, 75, 145, 93, 9},    // G_7
        {1, 15, 75, 145, 92, 8},    // G_8
        {1, 15, 75, 144, 89, 8},    // G_9
        {1, 15, 75, 145, 95, 11},   // G_10
        {1, 15, 75, 143, 87, 7},    // G_11
        {1, 15, 75, 143, 84, 6},    // G_12
        {1, 15, 75, 144, 91, 8},    // G_13
        {1, 15, 75, 142, 81, 6},    // G_14
        {1, 15, 75, 144, 90, 9},    // G_15
        {1, 15, 75, 145, 96, 12},   // G_16
        {1, 15, 75, 145, 90, 6},    // G_17 (Petersen)
        {1, 15, 75, 141, 84, 4},    // G_18
        {1, 15, 75, 143, 85, 7},    // G_19
        {1, 15, 75, 139, 78, 12},   // G_20
        {1, 15, 75, 141, 90, 18},   // G_21
    }};
    return table;
}

const std::array<int, 21>& printed_cubic10_saturation() {
    static const std::array<int, 21> table = {
        3, 3, 4, 4, 3, 4, 4, 3, 4, 4, 4, 3, 4, 4, 4, 3, 3, 3, 4, 4, 5};
    return table;
}

std::vector<CatalogEntry> assign_paper_indices(std::vector<CatalogEntry> entries) {
    const auto& printed = printed_cubic10_rho();
    if (entries.size() != printed.size())
        throw CatalogError("expected 21 entries, got " + std::to_string(entries.size()));

    std::vector<bool> used(printed.size(), false);
    for (auto& entry : entries) {
        int match = -1;
        for (std::size_t i = 0; i < printed.size(); ++i) {
            if (!std::equal(printed[i].begin(), printed[i].end(), entry.polynomial.rho.begin(),
                            entry.polynomial.rho.end()))
                continue;
            if (match >= 0)
                throw CatalogError("polynomial of " + entry.g6 + " matches two printed lines");
            match = static_cast<int>(i);
        }
        if (match < 0)
            throw CatalogError("polynomial of " + entry.g6 + " matches no printed line: " +
                               render_polynomial(entry.polynomial));
        if (used[match])
            throw CatalogError("printed polynomial " + std::to_string(match + 1) +
                               " matched twice");
        used[match] = true;
        entry.paper_index = match + 1;
    }
    std::sort(entries.begin(), entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.paper_index < b.paper_index; });
    return entries;
}

std::vector<CatalogEntry> build_cubic10_catalog() {
    auto graphs = generate_regular(10, 3);
    std::vector<CatalogEntry> entries;
    for (auto& g : graphs) {
        CatalogEntry e;
        e.g6 = serialize_graph6(g);
        e.polynomial = matching_polynomial(g);
        e.stats = matching_stats(g);
        e.params = extract_params(g);
        e.graph = std::move(g);
        entries.push_back(std::move(e));
    }
    return assign_paper_indices(std::move(entries));
}

ObservationReport verify_observation(const std::vector<CatalogEntry>& catalog) {
    const auto& expected = printed_cubic10_saturation();
    ObservationReport report;
    for (const auto& entry : catalog) {
        ObservationReport::Row row;
        row.paper_index = entry.paper_index;
        row.expected_s = expected.at(entry.paper_index - 1);
        row.actual_s = entry.stats.saturation_number;
        row.matching_number = entry.stats.matching_number;
        row.has_perfect_matching = entry.stats.has_perfect_matching;
        row.ok = row.actual_s == row.expected_s && row.matching_number == 5 && row.has_perfect_matching;
        if (!row.ok) report.all_ok = false;
        report.rows.push_back(row);
    }
    if (catalog.size() != 21) report.all_ok = false;
    return report;
}

UniquenessReport verify_uniqueness(const std::vector<CatalogEntry>& catalog) {
    UniquenessReport report;
    report.pairwise_distinct = true;
    for (std::size_t i = 0; i < catalog.size(); ++i)
        for (std::size_t j = i + 1; j < catalog.size(); ++j) {
            ++report.pairs_checked;
            if (catalog[i].polynomial.rho == catalog[j].polynomial.rho)
                report.pairwise_distinct = false;
        }
    const auto& printed = printed_cubic10_rho();
    report.matches_printed = catalog.size() == printed.size();
    for (const auto& entry : catalog) {
        if (entry.paper_index < 1 || entry.paper_index > 21) {
            report.matches_printed = false;
            break;
        }
        const auto& want = printed[entry.paper_index - 1];
        if (!std::equal(want.begin(), want.end(), entry.polynomial.rho.begin(),
                        entry.polynomial.rho.end()))
            report.matches_printed = false;
    }
    report.all_ok = report.pairwise_distinct && report.matches_printed &&
                    report.pairs_checked == 210;
    return report;
}

}  // namespace matchpoly
