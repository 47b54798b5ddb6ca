#ifndef MATCHPOLY_GRAPH_HPP
#define MATCHPOLY_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace matchpoly {

using Edge = std::pair<int, int>;  // normalized u < v

/// Simple undirected graph on 0..n-1, n <= 62, adjacency as per-vertex bitmasks.
/// Treated as an immutable value after construction; mutation ops return copies.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);

    std::uint64_t neighbor_mask(int v) const;
    int degree(int v) const;

    std::vector<Edge> edges() const;

    Graph delete_vertices(const std::vector<int>& vs) const;
    Graph delete_edge(int u, int v) const;

    // Induced subgraph on the given vertices, relabeled 0..k-1 in list order.
    Graph induced(const std::vector<int>& vs) const;

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

std::optional<int> is_regular(const Graph& g);

// Partition of V into connected components, each sorted, ordered by least vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

struct Graph6Error : std::runtime_error {
    Graph6Error(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at byte " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

// McKay graph6: byte 63+n for n <= 62, then upper-triangle bits column-major,
// 6 per byte offset by 63, padding bits zero. ">>graph6<<" header tolerated.
Graph parse_graph6(std::string_view line);
std::string serialize_graph6(const Graph& g);

// Fixed small graphs used throughout.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();
Graph prism_graph();  // K3 x K2

}  // namespace matchpoly

#endif
