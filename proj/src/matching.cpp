#include "matchpoly/matching.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "matchpoly/canonical.hpp"

namespace matchpoly {

namespace {

using RhoVec = std::vector<long long>;  // trimmed: last entry nonzero (or just {1})

using MemoTable = std::unordered_map<Certificate, RhoVec, CertificateHash>;

// Edge choice for the recurrence: the lexicographically smallest edge incident
// to the (first) highest-degree vertex. Deterministic and keeps trees small.
Edge pick_edge(const Graph& g) {
    int w = -1, dmax = -1;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if (d > dmax) {
            dmax = d;
            w = v;
        }
    }
    int u = std::countr_zero(g.neighbor_mask(w));
    return {std::min(u, w), std::max(u, w)};
}

RhoVec rho_recurrence(const Graph& g, MemoTable* memo) {
    if (g.edge_count() == 0) return {1};

    Certificate cert;
    if (memo) {
        cert = canonical_certificate(g);
        if (auto it = memo->find(cert); it != memo->end()) return it->second;
    }

    auto [u, v] = pick_edge(g);
    RhoVec without = rho_recurrence(g.delete_edge(u, v), memo);
    RhoVec with = rho_recurrence(g.delete_vertices({u, v}), memo);

    RhoVec out(std::max(without.size(), with.size() + 1), 0);
    for (std::size_t r = 0; r < without.size(); ++r) out[r] += without[r];
    for (std::size_t r = 0; r < with.size(); ++r) out[r + 1] += with[r];

    if (memo) memo->emplace(cert, out);
    return out;
}

RhoVec convolve_raw(const RhoVec& a, const RhoVec& b) {
    RhoVec out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

MatchingPolynomial finalize(int n, RhoVec rho) {
    rho.resize(static_cast<std::size_t>(n / 2) + 1, 0);
    return {n, std::move(rho)};
}

}  // namespace

MatchingPolynomial matching_polynomial(const Graph& g) {
    MemoTable memo;
    RhoVec total{1};
    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 2) continue;
        Graph sub = g.induced(comp);
        RhoVec part = rho_recurrence(sub, sub.order() <= 15 ? &memo : nullptr);
        total = convolve_raw(total, part);
    }
    return finalize(g.order(), std::move(total));
}

long long count_matchings(const Graph& g, int r) {
    if (r < 0) return 0;
    auto p = matching_polynomial(g);
    return r < static_cast<int>(p.rho.size()) ? p.rho[r] : 0;
}

int matching_number(const Graph& g) {
    auto p = matching_polynomial(g);
    for (int r = static_cast<int>(p.rho.size()) - 1; r >= 0; --r)
        if (p.rho[r] > 0) return r;
    return 0;
}

namespace {

struct SaturationSearch {
    const std::vector<Edge>& edges;
    const Graph& g;
    int best;

    bool maximal(std::uint64_t covered) const {
        for (auto [u, v] : edges)
            if (!((covered >> u) & 1u) && !((covered >> v) & 1u)) return false;
        return true;
    }

    void dfs(std::size_t idx, std::uint64_t covered, int size) {
        if (size >= best) return;  // no smaller maximal matching below here
        if (idx == edges.size()) {
            if (maximal(covered)) best = size;
            return;
        }
        auto [u, v] = edges[idx];
        if (!((covered >> u) & 1u) && !((covered >> v) & 1u))
            dfs(idx + 1, covered | (std::uint64_t{1} << u) | (std::uint64_t{1} << v), size + 1);
        dfs(idx + 1, covered, size);
    }
};

}  // namespace

int saturation_number(const Graph& g) {
    auto edges = g.edges();
    if (edges.empty()) return 0;
    SaturationSearch search{edges, g, static_cast<int>(edges.size()) + 1};
    search.dfs(0, 0, 0);
    return search.best;
}

namespace {

void mis_dfs(const Graph& g, std::uint64_t cands, int size, int& best) {
    if (size + std::popcount(cands) <= best) return;
    if (!cands) {
        best = size;
        return;
    }
    int v = std::countr_zero(cands);
    std::uint64_t bit = std::uint64_t{1} << v;
    mis_dfs(g, cands & ~bit & ~g.neighbor_mask(v), size + 1, best);
    mis_dfs(g, cands & ~bit, size, best);
}

}  // namespace

int independence_number(const Graph& g) {
    int n = g.order();
    if (n == 0) return 0;
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    int best = 0;
    mis_dfs(g, all, 0, best);
    return best;
}

std::pair<int, int> saturation_bounds(const Graph& g) {
    int ap = matching_number(g);
    int alpha = independence_number(g);
    return {(ap + 1) / 2, (g.order() - alpha + 1) / 2};
}

MatchingStats matching_stats(const Graph& g) {
    MatchingStats st;
    st.matching_number = matching_number(g);
    st.saturation_number = saturation_number(g);
    st.independence_number = independence_number(g);
    st.has_perfect_matching = g.order() % 2 == 0 && st.matching_number == g.order() / 2;
    return st;
}

std::string render_polynomial(const MatchingPolynomial& p) {
    std::string out;
    for (std::size_t r = 0; r < p.rho.size(); ++r) {
        long long c = p.rho[r];
        if (c == 0) continue;
        bool neg = r % 2 == 1;
        int power = p.n - 2 * static_cast<int>(r);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        if (c != 1 || power == 0) out += std::to_string(c);
        if (power == 1)
            out += "x";
        else if (power > 1)
            out += "x^" + std::to_string(power);
    }
    return out.empty() ? "0" : out;
}

MatchingPolynomial convolve(const MatchingPolynomial& a, const MatchingPolynomial& b) {
    return finalize(a.n + b.n, convolve_raw(a.rho, b.rho));
}

namespace {

void enumerate_matchings(const std::vector<Edge>& edges, std::size_t start, std::uint64_t covered,
                         int size, RhoVec& counts) {
    counts[size] += 1;
    for (std::size_t i = start; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (((covered >> u) & 1u) || ((covered >> v) & 1u)) continue;
        enumerate_matchings(edges, i + 1,
                            covered | (std::uint64_t{1} << u) | (std::uint64_t{1} << v), size + 1,
                            counts);
    }
}

}  // namespace

MatchingPolynomial matching_polynomial_by_enumeration(const Graph& g) {
    RhoVec counts(static_cast<std::size_t>(g.order() / 2) + 1, 0);
    auto edges = g.edges();
    enumerate_matchings(edges, 0, 0, 0, counts);
    return {g.order(), std::move(counts)};
}

}  // namespace matchpoly
