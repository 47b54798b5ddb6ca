#include "matchpoly/graph.hpp"

#include <algorithm>
#include <bit>

namespace matchpoly {

namespace {
constexpr int kMaxOrder = 62;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxOrder)
        throw std::invalid_argument("graph order out of range 0..62: " + std::to_string(n));
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex index " + std::to_string(v) +
                                " out of range for order " + std::to_string(n_));
}

int Graph::edge_count() const {
    int total = 0;
    for (auto m : adj_) total += std::popcount(m);
    return total / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

std::uint64_t Graph::neighbor_mask(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if ((adj_[u] >> v) & 1u) out.emplace_back(u, v);
    return out;
}

Graph Graph::delete_vertices(const std::vector<int>& vs) const {
    std::uint64_t kill = 0;
    for (int v : vs) {
        check_vertex(v);
        kill |= std::uint64_t{1} << v;
    }
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v)
        if (!((kill >> v) & 1u)) keep.push_back(v);
    return induced(keep);
}

Graph Graph::delete_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    Graph g = *this;
    g.adj_[u] &= ~(std::uint64_t{1} << v);
    g.adj_[v] &= ~(std::uint64_t{1} << u);
    return g;
}

Graph Graph::induced(const std::vector<int>& vs) const {
    Graph g(static_cast<int>(vs.size()));
    for (std::size_t a = 0; a < vs.size(); ++a) {
        check_vertex(vs[a]);
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if ((adj_[vs[a]] >> vs[b]) & 1u) g.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
    return g;
}

std::optional<int> is_regular(const Graph& g) {
    if (g.order() == 0) return 0;
    int r = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != r) return std::nullopt;
    return r;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::uint64_t seen = 0;
    for (int s = 0; s < g.order(); ++s) {
        if ((seen >> s) & 1u) continue;
        std::uint64_t comp = std::uint64_t{1} << s;
        std::uint64_t frontier = comp;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            std::uint64_t fresh = g.neighbor_mask(v) & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        seen |= comp;
        std::vector<int> vs;
        for (int v = 0; v < g.order(); ++v)
            if ((comp >> v) & 1u) vs.push_back(v);
        comps.push_back(std::move(vs));
    }
    return comps;
}

Graph parse_graph6(std::string_view line) {
    std::size_t off = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) off = header.size();
    if (off >= line.size()) throw Graph6Error("empty graph6 string", off);

    unsigned char first = static_cast<unsigned char>(line[off]);
    if (first == 126) throw Graph6Error("multi-byte order field (n > 62) unsupported", off);
    if (first < 63 || first > 126) throw Graph6Error("size byte out of range 63..126", off);
    int n = first - 63;
    Graph g(n);

    int bits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - off - 1 != need)
        throw Graph6Error("wrong payload length: expected " + std::to_string(need) +
                              " bytes, got " + std::to_string(line.size() - off - 1),
                          off + 1);

    int bit = 0;
    int col = 1, row = 0;
    for (std::size_t i = 0; i < need; ++i) {
        std::size_t pos = off + 1 + i;
        unsigned char c = static_cast<unsigned char>(line[pos]);
        if (c < 63 || c > 126) throw Graph6Error("payload byte out of range 63..126", pos);
        int word = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            int on = (word >> b) & 1;
            if (bit >= bits) {
                if (on) throw Graph6Error("nonzero padding bit", pos);
                continue;
            }
            if (on) g.add_edge(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return g;
}

std::string serialize_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int word = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            word = (word << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + word));
                word = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (word << (6 - nbits))));
    return out;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);       // outer C5
        g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        g.add_edge(v, 5 + v);             // spokes
    }
    return g;
}

Graph prism_graph() {
    Graph g(6);
    for (int v = 0; v < 3; ++v) {
        g.add_edge(v, (v + 1) % 3);
        g.add_edge(3 + v, 3 + (v + 1) % 3);
        g.add_edge(v, 3 + v);
    }
    return g;
}

}  // namespace matchpoly
