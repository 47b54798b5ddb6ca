#include "matchpoly/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace matchpoly {

namespace {

constexpr int kMaxCanonOrder = 15;  // 105 triangle bits, fits lo+hi

// Searches for the vertex order minimizing the column-major adjacency
// bit-string. Candidate words at depth j are the j adjacency bits to the
// already placed vertices, most significant bit first.
class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

    std::vector<std::uint32_t> run() {
        cur_words_.assign(n_, 0);
        perm_.assign(n_, -1);
        best_set_ = false;
        dfs(0, 0, true);
        return best_words_;
    }

private:
    // equal_prefix: cur_words_[0..j-1] equals best_words_[0..j-1] (vacuously
    // true while no best exists).
    void dfs(int j, std::uint64_t used, bool equal_prefix) {
        if (j == n_) {
            if (!best_set_ || !equal_prefix) {
                best_words_ = cur_words_;
                best_set_ = true;
            }
            return;
        }

        struct Cand {
            std::uint32_t word;
            int v;
        };
        std::vector<Cand> cands;
        cands.reserve(n_ - j);
        for (int v = 0; v < n_; ++v) {
            if ((used >> v) & 1u) continue;
            std::uint32_t w = 0;
            for (int t = 0; t < j; ++t)
                w = (w << 1) | static_cast<std::uint32_t>((g_.neighbor_mask(v) >> perm_[t]) & 1u);
            cands.push_back({w, v});
        }
        std::sort(cands.begin(), cands.end(),
                  [](const Cand& a, const Cand& b) { return a.word != b.word ? a.word < b.word : a.v < b.v; });

        std::vector<int> tried;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            auto [w, v] = cands[i];
            bool eq;
            if (best_set_ && equal_prefix) {
                if (w > best_words_[j]) break;  // sorted: no later candidate can help
                eq = (w == best_words_[j]);
            } else if (best_set_) {
                // prefix already strictly smaller: only a minimal word can
                // extend the minimal completion
                if (w != cands[0].word) break;
                eq = false;
            } else {
                if (w != cands[0].word) break;
                eq = false;
            }

            bool twin = false;
            for (int u : tried) {
                std::uint64_t nu = g_.neighbor_mask(u) & ~(std::uint64_t{1} << v);
                std::uint64_t nv = g_.neighbor_mask(v) & ~(std::uint64_t{1} << u);
                if (nu == nv) {
                    twin = true;
                    break;
                }
            }
            if (twin) continue;
            tried.push_back(v);

            perm_[j] = v;
            cur_words_[j] = w;
            dfs(j + 1, used | (std::uint64_t{1} << v), eq);
            perm_[j] = -1;

            // best may have changed inside the call; re-derive the status of
            // the current prefix before looking at the next sibling
            if (best_set_) {
                equal_prefix = true;
                for (int t = 0; t < j; ++t) {
                    if (cur_words_[t] != best_words_[t]) {
                        equal_prefix = false;
                        break;
                    }
                }
            }
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> perm_;
    std::vector<std::uint32_t> cur_words_;
    std::vector<std::uint32_t> best_words_;
    bool best_set_ = false;
};

void set_bit(Certificate& c, int idx) {
    if (idx < 64)
        c.lo |= std::uint64_t{1} << idx;
    else
        c.hi |= std::uint64_t{1} << (idx - 64);
}

bool get_bit(const Certificate& c, int idx) {
    return idx < 64 ? (c.lo >> idx) & 1u : (c.hi >> (idx - 64)) & 1u;
}

}  // namespace

Certificate canonical_certificate(const Graph& g) {
    int n = g.order();
    if (n > kMaxCanonOrder)
        throw std::invalid_argument("canonical certificate supports n <= 15, got " + std::to_string(n));
    Certificate cert;
    cert.n = n;
    if (n <= 1) return cert;

    auto words = CanonSearch(g).run();
    int idx = 0;
    for (int j = 1; j < n; ++j)
        for (int t = 0; t < j; ++t, ++idx)
            if ((words[j] >> (j - 1 - t)) & 1u) set_bit(cert, idx);
    return cert;
}

Graph graph_from_certificate(const Certificate& cert) {
    Graph g(cert.n);
    int idx = 0;
    for (int col = 1; col < cert.n; ++col)
        for (int row = 0; row < col; ++row, ++idx)
            if (get_bit(cert, idx)) g.add_edge(row, col);
    return g;
}

Graph canonical_form(const Graph& g) { return graph_from_certificate(canonical_certificate(g)); }

std::string certificate_key(const Certificate& cert) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%d:%016llx%014llx", cert.n,
                  static_cast<unsigned long long>(cert.lo), static_cast<unsigned long long>(cert.hi));
    return buf;
}

}  // namespace matchpoly
