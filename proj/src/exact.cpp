#include "isokit/exact.hpp"

#include <bit>

namespace isokit {

namespace {

std::uint64_t closed_bits(const Graph& g, std::uint64_t d) {
    std::uint64_t out = d;
    for (std::uint64_t b = d; b != 0; b &= b - 1)
        out |= g.adjacency_bits(std::countr_zero(b));
    return out;
}

bool hits_all(const Graph& g, std::uint64_t d, const std::vector<std::uint64_t>& copy_sets) {
    std::uint64_t nd = closed_bits(g, d);
    for (std::uint64_t s : copy_sets)
        if ((s & nd) == 0) return false;
    return true;
}

// Enumerates size-`size` subsets of `candidates` in lexicographic order of
// index vectors, returning the first subset accepted by `test`.
template <typename Test>
bool first_combination(const std::vector<Vertex>& candidates, int size, std::uint64_t& out,
                       std::uint64_t& explored, Test&& test) {
    const int n = static_cast<int>(candidates.size());
    if (size > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
        std::uint64_t d = 0;
        for (int i : idx) d |= std::uint64_t{1} << candidates[static_cast<std::size_t>(i)];
        ++explored;
        if (test(d)) {
            out = d;
            return true;
        }
        int pos = size - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - size + pos) --pos;
        if (pos < 0) return false;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < size; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
}

}  // namespace

bool is_isolating(const Graph& g, const Pattern& f, VertexSet d) {
    VertexSet nd = closed_neighborhood(g, d);
    SubgraphHandle rest = delete_vertices(g, nd);
    return !contains_copy(rest.graph, f).has_value();
}

ExactResult iota_exact(const Graph& g, const Pattern& f) {
    if (g.vertex_count() > exact_solver_limit)
        throw UnsupportedError("iota_exact: graph exceeds the solver limit of " +
                               std::to_string(exact_solver_limit) + " vertices");
    ExactResult res;
    std::vector<std::uint64_t> copy_sets = copy_vertex_sets(g, f);
    res.explored = 1;  // the empty set
    if (copy_sets.empty()) return res;

    std::uint64_t copy_union = 0;
    for (std::uint64_t s : copy_sets) copy_union |= s;
    std::vector<Vertex> candidates;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        if ((g.closed_neighborhood(u).bits() & copy_union) != 0) candidates.push_back(u);

    for (int size = 1; size <= static_cast<int>(candidates.size()); ++size) {
        std::uint64_t d = 0;
        if (first_combination(candidates, size, d, res.explored,
                              [&](std::uint64_t mask) { return hits_all(g, mask, copy_sets); })) {
            res.iota = size;
            res.witness = VertexSet::from_bits(d);
            return res;
        }
    }
    // Unreachable: the candidate set always contains an isolating set (every
    // vertex of a copy is a candidate, and hitting all copies suffices).
    throw UnsupportedError("iota_exact: no isolating set found");
}

int gamma(const Graph& g) {
    if (g.vertex_count() > exact_solver_limit)
        throw UnsupportedError("gamma: graph exceeds the solver limit of " +
                               std::to_string(exact_solver_limit) + " vertices");
    if (g.vertex_count() == 0) return 0;
    const std::uint64_t all = g.vertices().bits();
    std::vector<Vertex> candidates;
    for (Vertex u = 0; u < g.vertex_count(); ++u) candidates.push_back(u);
    std::uint64_t ignored = 0;
    for (int size = 1; size <= g.vertex_count(); ++size) {
        std::uint64_t d = 0;
        if (first_combination(candidates, size, d, ignored,
                              [&](std::uint64_t mask) { return closed_bits(g, mask) == all; }))
            return size;
    }
    return g.vertex_count();
}

}  // namespace isokit
