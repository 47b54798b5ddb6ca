#ifndef MATCHPOLY_MATCHING_HPP
#define MATCHPOLY_MATCHING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "matchpoly/graph.hpp"

namespace matchpoly {

/// Signless matching polynomial: rho[r] counts r-matchings, r = 0..floor(n/2).
/// Signs (-1)^r are applied only when rendering mu(G,x).
struct MatchingPolynomial {
    int n = 0;
    std::vector<long long> rho;

    bool operator==(const MatchingPolynomial&) const = default;
};

struct MatchingStats {
    int matching_number = 0;      // alpha'(G)
    int saturation_number = 0;    // s(G)
    int independence_number = 0;  // alpha(G)
    bool has_perfect_matching = false;
};

// Edge-deletion recurrence mu(G) = mu(G-e) - mu(G-u-v), memoized on canonical
// certificates, with per-component decomposition and convolution.
MatchingPolynomial matching_polynomial(const Graph& g);

long long count_matchings(const Graph& g, int r);

int matching_number(const Graph& g);

// Minimum size over all maximal matchings, by exhaustive branch and bound.
int saturation_number(const Graph& g);

int independence_number(const Graph& g);

// (ceil(alpha'/2), ceil((n - alpha)/2)); s(G) >= max of both.
std::pair<int, int> saturation_bounds(const Graph& g);

MatchingStats matching_stats(const Graph& g);

// "x^10-15x^8+75x^6-145x^4+90x^2-6" style rendering, descending powers.
std::string render_polynomial(const MatchingPolynomial& p);

// Product rule for disjoint unions.
MatchingPolynomial convolve(const MatchingPolynomial& a, const MatchingPolynomial& b);

// Test oracle: direct enumeration over edge subsets, no recurrence, no memo.
MatchingPolynomial matching_polynomial_by_enumeration(const Graph& g);

}  // namespace matchpoly

#endif
