#pragma once

// Test-only brute-force oracles. They deliberately avoid the library's
// matcher and solvers: copies are found by enumerating all injective maps,
// isolation and domination numbers by enumerating all subsets.

#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "isokit/graph.hpp"

namespace oracle {

using isokit::Graph;
using isokit::Vertex;

// Calls fn(map) for every injective edge-preserving map V(F) -> allowed
// vertices of g; stops early when fn returns true.
template <typename Fn>
bool for_each_embedding(const Graph& g, const Graph& f, std::uint64_t allowed, Fn&& fn) {
    std::vector<Vertex> map(static_cast<std::size_t>(f.vertex_count()), -1);
    auto rec = [&](auto&& self, int p, std::uint64_t used) -> bool {
        if (p == f.vertex_count()) return fn(map);
        for (Vertex c = 0; c < g.vertex_count(); ++c) {
            if (((allowed >> c) & 1) == 0 || ((used >> c) & 1) != 0) continue;
            bool ok = true;
            for (Vertex q = 0; q < p && ok; ++q)
                if (f.has_edge(p, q) && !g.has_edge(c, map[static_cast<std::size_t>(q)])) ok = false;
            if (!ok) continue;
            map[static_cast<std::size_t>(p)] = c;
            if (self(self, p + 1, used | (std::uint64_t{1} << c))) return true;
        }
        map[static_cast<std::size_t>(p)] = -1;
        return false;
    };
    return rec(rec, 0, 0);
}

inline bool exists_copy(const Graph& g, const Graph& f, std::uint64_t allowed) {
    return for_each_embedding(g, f, allowed, [](const std::vector<Vertex>&) { return true; });
}

inline bool exists_copy(const Graph& g, const Graph& f) {
    return exists_copy(g, f, g.vertices().bits());
}

// All host vertices that serve as the center of some copy: images of pattern
// vertices whose closed pattern neighbourhood is all of V(F).
inline std::set<Vertex> copy_centers(const Graph& g, const Graph& f) {
    std::vector<Vertex> doms;
    for (Vertex v = 0; v < f.vertex_count(); ++v)
        if (f.closed_neighborhood(v) == f.vertices()) doms.push_back(v);
    std::set<Vertex> centers;
    for_each_embedding(g, f, g.vertices().bits(), [&](const std::vector<Vertex>& map) {
        for (Vertex d : doms) centers.insert(map[static_cast<std::size_t>(d)]);
        return false;
    });
    return centers;
}

inline std::set<std::uint64_t> copy_sets(const Graph& g, const Graph& f) {
    std::set<std::uint64_t> sets;
    for_each_embedding(g, f, g.vertices().bits(), [&](const std::vector<Vertex>& map) {
        std::uint64_t s = 0;
        for (Vertex v : map) s |= std::uint64_t{1} << v;
        sets.insert(s);
        return false;
    });
    return sets;
}

inline std::uint64_t closed_bits(const Graph& g, std::uint64_t d) {
    std::uint64_t out = d;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if ((d >> v) & 1) out |= g.adjacency_bits(v) | (std::uint64_t{1} << v);
    return out;
}

// Smallest D such that g minus N[D] has no F-copy, by scanning all subsets
// in ascending popcount order.
inline int iota_brute(const Graph& g, const Graph& f) {
    const int n = g.vertex_count();
    const std::uint64_t all = g.vertices().bits();
    for (int size = 0; size <= n; ++size) {
        for (std::uint64_t d = 0;; ++d) {
            if (d > all) break;
            if (std::popcount(d) != size || (d & ~all) != 0) continue;
            std::uint64_t remaining = all & ~closed_bits(g, d);
            if (!exists_copy(g, f, remaining)) return size;
        }
    }
    return n;
}

inline int gamma_brute(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    const std::uint64_t all = g.vertices().bits();
    for (int size = 0; size <= n; ++size)
        for (std::uint64_t d = 0; d <= all; ++d) {
            if (std::popcount(d) != size || (d & ~all) != 0) continue;
            if (closed_bits(g, d) == all) return size;
        }
    return n;
}

// All connected graphs on n vertices (every labelling, no dedup), for
// exhaustive cross-checks that do not depend on the harness.
inline std::vector<Graph> all_connected_labelled(int n) {
    std::vector<Graph> out;
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        Graph g = isokit::graph_from_bitmask(n, mask);
        if (g.is_connected()) out.push_back(g);
    }
    return out;
}

}  // namespace oracle
