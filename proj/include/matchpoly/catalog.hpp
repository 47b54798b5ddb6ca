#ifndef MATCHPOLY_CATALOG_HPP
#define MATCHPOLY_CATALOG_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "matchpoly/formulas.hpp"
#include "matchpoly/graph.hpp"
#include "matchpoly/matching.hpp"

namespace matchpoly {

struct CatalogEntry {
    Graph graph;
    std::string g6;
    int paper_index = 0;  // 1..21, 0 while unassigned
    MatchingPolynomial polynomial;
    MatchingStats stats;
    RegularParams params;
};

/// All r-regular graphs on n vertices up to isomorphism, disconnected ones
/// included. Exhaustive degree-constrained backtracking plus certificate
/// deduplication; n <= 12. Returned in canonical form, certificate order.
std::vector<Graph> generate_regular(int n, int r);

// Pairing-model random r-regular graphs (simple, possibly disconnected).
std::vector<Graph> random_regular(int n, int r, int count, std::uint64_t seed);

/// rho vectors of the 21 printed cubic-order-10 polynomials, paper order.
const std::array<std::array<long long, 6>, 21>& printed_cubic10_rho();

// Expected saturation numbers s(G_1)..s(G_21).
const std::array<int, 21>& printed_cubic10_saturation();

struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generates the 21 cubic graphs of order 10, computes polynomial/stats/params
// per entry, and assigns paper indices through the printed polynomial table.
// Result is sorted by paper index. Throws CatalogError if the match is not a
// bijection.
std::vector<CatalogEntry> build_cubic10_catalog();

std::vector<CatalogEntry> assign_paper_indices(std::vector<CatalogEntry> entries);

struct ObservationReport {
    struct Row {
        int paper_index = 0;
        int expected_s = 0;
        int actual_s = 0;
        int matching_number = 0;
        bool has_perfect_matching = false;
        bool ok = false;
    };
    std::vector<Row> rows;
    bool all_ok = true;
};

ObservationReport verify_observation(const std::vector<CatalogEntry>& catalog);

struct UniquenessReport {
    int pairs_checked = 0;
    bool pairwise_distinct = false;
    bool matches_printed = false;
    bool all_ok = false;
};

// Pairwise distinctness of the 21 polynomials plus exact agreement with the
// printed table; uniqueness against graphs outside this class is not machine-
// checked here.
UniquenessReport verify_uniqueness(const std::vector<CatalogEntry>& catalog);

}  // namespace matchpoly

#endif
