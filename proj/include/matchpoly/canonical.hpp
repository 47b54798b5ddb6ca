#ifndef MATCHPOLY_CANONICAL_HPP
#define MATCHPOLY_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "matchpoly/graph.hpp"

namespace matchpoly {

/// Isomorphism certificate: the lexicographically smallest upper-triangle
/// adjacency bit-string over all vertex relabelings, packed column-major.
/// Two graphs get equal certificates iff they are isomorphic.
struct Certificate {
    int n = 0;
    std::uint64_t lo = 0;  // bits 0..63
    std::uint64_t hi = 0;  // bits 64..119

    auto operator<=>(const Certificate&) const = default;
};

struct CertificateHash {
    std::size_t operator()(const Certificate& c) const {
        std::size_t h = std::hash<std::uint64_t>{}(c.lo);
        h ^= std::hash<std::uint64_t>{}(c.hi) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= std::hash<int>{}(c.n) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

// Supported through n = 15 (upper triangle fits in 105 bits); throws beyond.
Certificate canonical_certificate(const Graph& g);

// The canonically labeled copy of g (adjacency rebuilt from its certificate).
Graph canonical_form(const Graph& g);

Graph graph_from_certificate(const Certificate& cert);

std::string certificate_key(const Certificate& cert);

}  // namespace matchpoly

#endif
