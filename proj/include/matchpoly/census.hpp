#ifndef MATCHPOLY_CENSUS_HPP
#define MATCHPOLY_CENSUS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matchpoly/canonical.hpp"
#include "matchpoly/graph.hpp"

namespace matchpoly {

/// Paper-style index triple: m edges, k vertices of degree 1, class number i.
struct Mki {
    int m = 0, k = 0, i = 0;
    auto operator<=>(const Mki&) const = default;
};

std::string mki_label(const Mki& id);  // "g_{m,k,i}"

/// Isomorphism class of an edge-subset subgraph, isolated vertices dropped.
struct SubgraphClass {
    int m = 0;          // edge count
    int k = 0;          // number of degree-1 vertices
    Certificate cert;   // canonical certificate
    std::string name;   // "C5", "2K2", "K4-e", "paw+K2", ...
};

/// Complete list of isomorphism classes with 1..5 edges and no isolated
/// vertices, generated by repeated single-edge extension. Stable ordering:
/// by (m, k, cert).
class ClassDictionary {
public:
    static const ClassDictionary& instance();

    const std::vector<SubgraphClass>& classes() const { return classes_; }
    int size() const { return static_cast<int>(classes_.size()); }

    int find(const Certificate& cert) const;         // -1 if unknown
    int find_by_name(const std::string& name) const;  // -1 if unknown
    int classify(const Graph& subgraph) const;        // subgraph w/o isolated vertices

private:
    ClassDictionary();

    std::vector<SubgraphClass> classes_;
    std::map<Certificate, int> by_cert_;
    std::map<std::string, int> by_name_;
    // cheap-invariant fast path: signatures that identify a class uniquely
    // within the dictionary; anything else falls back to the certificate
    std::map<std::string, int> by_signature_;
};

constexpr int kMaxCensusEdges = 5;

/// Census counts for one host graph, indexed by dictionary class id.
struct CensusTable {
    int max_edges = 0;
    std::vector<long long> counts;

    long long operator[](int class_id) const { return counts[class_id]; }
};

// Classifies every edge subset of size 1..max_edges exactly once.
CensusTable census(const Graph& g, int max_edges = kMaxCensusEdges);

struct IndexMapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Class id -> paper (m,k,i), derived by matching brute-force census counts on
/// a fixed probe set of regular graphs against the closed-form formulas. The
/// k=0 classes (C3, C4, C5, K4-e) are pinned structurally. Ambiguous or
/// inconsistent matches throw IndexMapError. The result covers every class.
const std::vector<Mki>& paper_index_map();

// Census count looked up by paper index; requires census through id.m edges.
long long census_count(const CensusTable& table, const Mki& id);

}  // namespace matchpoly

#endif
