#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "isokit/graph.hpp"

namespace isokit {

/// Unbiased draw from [0, bound) with rejection sampling; mt19937_64 output
/// is pinned by the standard, so results are reproducible across platforms.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw ValidationError("uniform_below: empty range");
    const std::uint64_t min_accept = (~bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
        std::uint64_t x = rng();
        if (x >= min_accept) return x % bound;
    }
}

/// Uniform random labelled tree on n vertices via a random Pruefer sequence.
inline std::vector<Edge> random_tree_edges(int n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    if (n <= 1) return edges;
    if (n == 2) {
        edges.emplace_back(0, 1);
        return edges;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (int& s : seq) s = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++degree[static_cast<std::size_t>(s)];
    std::uint64_t leaves = 0;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves |= std::uint64_t{1} << v;
    for (int s : seq) {
        int leaf = VertexSet::from_bits(leaves).min();
        leaves &= leaves - 1;
        edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
        if (--degree[static_cast<std::size_t>(s)] == 1) leaves |= std::uint64_t{1} << s;
    }
    int a = VertexSet::from_bits(leaves).min();
    leaves &= leaves - 1;
    int b = VertexSet::from_bits(leaves).min();
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return edges;
}

}  // namespace isokit
