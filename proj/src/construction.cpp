#include "isokit/construction.hpp"

#include "isokit/exact.hpp"
#include "isokit/proof.hpp"
#include "isokit/rng.hpp"

namespace isokit {

namespace {

constexpr int verify_exact_limit = 14;

std::vector<Edge> tree_on_connections(int q, TreeShape shape, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    switch (shape) {
        case TreeShape::Path:
            for (int i = 0; i + 1 < q; ++i) edges.emplace_back(i, i + 1);
            break;
        case TreeShape::Star:
            for (int i = 1; i < q; ++i) edges.emplace_back(0, i);
            break;
        case TreeShape::Random:
            edges = random_tree_edges(q, rng);
            break;
    }
    return edges;
}

}  // namespace

BuiltSpecial build_special(const Pattern& f, int m, const BuildOptions& options) {
    if (m < 0) throw ValidationError("build_special: m must be non-negative");
    const int k = f.k;
    const int ell = f.ell;
    const int q = (m + 1) / (k + 2);
    const int r = (m + 1) % (k + 2);

    BuiltSpecial out;
    out.spec.m = m;
    out.spec.q = q;
    out.spec.r = r;
    std::mt19937_64 rng(options.seed);

    if (q == 0) {
        if (!options.remainder.has_value())
            throw ValidationError("build_special: q = 0 requires a connected m-edge remainder");
        const Graph& rem = *options.remainder;
        if (!rem.is_connected() || rem.edge_count() != m)
            throw ValidationError("build_special: q = 0 remainder must be connected with " +
                                  std::to_string(m) + " edges");
        out.graph = rem;
        out.spec.remainder = rem;
        out.spec.pure = rem.edge_count() == 0;
        out.special_pair = is_special_pair(out.graph, f);
        return out;
    }

    if (options.remainder.has_value()) {
        const Graph& rem = *options.remainder;
        if (!rem.is_connected() || rem.edge_count() != r || rem.vertex_count() == 0)
            throw ValidationError("build_special: remainder must be connected with exactly " +
                                  std::to_string(r) + " edges");
        out.spec.remainder = rem;
    } else if (r != 0) {
        throw ValidationError("build_special: r = " + std::to_string(r) +
                              " requires an explicit remainder graph");
    } else {
        out.spec.remainder = make_graph(1, {});
    }
    out.spec.pure = out.spec.remainder.edge_count() == 0;

    std::vector<Edge> edges;
    for (int i = 0; i < q; ++i) {
        const int base = q + i * ell;
        Vertex w = options.attach_random
                       ? static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(ell)))
                       : f.dominators.front();
        out.spec.attach.push_back(w);
        for (auto [u, v] : f.f.edges()) edges.emplace_back(base + u, base + v);
        edges.emplace_back(i, base + w);
        VertexSet constituent = VertexSet::single(i);
        for (int t = 0; t < ell; ++t) constituent.add(base + t);
        out.constituent_vertex_sets.push_back(constituent);
        out.connections.push_back(i);
    }
    out.spec.tree_edges = tree_on_connections(q, options.tree, rng);
    for (Edge e : out.spec.tree_edges) edges.push_back(e);

    // Remainder vertex 0 is identified with the last connection v_q = q-1.
    const int rem_base = q + q * ell - 1;  // fresh remainder ids start at rem_base + 1
    const Graph& rem = out.spec.remainder;
    auto glued = [&](Vertex u) { return u == 0 ? q - 1 : rem_base + u; };
    for (auto [u, v] : rem.edges()) {
        Vertex a = glued(u), b = glued(v);
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    const int n = q + q * ell + (rem.vertex_count() - 1);
    out.graph = make_graph(n, edges);
    out.special_pair = is_special_pair(out.graph, f);
    return out;
}

bool verify_special(const BuiltSpecial& b, const Pattern& f) {
    const Graph& g = b.graph;
    if (!g.is_connected() || g.edge_count() != b.spec.m) return false;
    if (static_cast<int>(b.connections.size()) != b.spec.q) return false;

    VertexSet conn;
    for (Vertex v : b.connections) conn.add(v);
    for (std::size_t i = 0; i < b.constituent_vertex_sets.size(); ++i) {
        VertexSet copy_set = b.constituent_vertex_sets[i] - VertexSet::single(b.connections[i]);
        SubgraphHandle copy = induced_subgraph(g, copy_set);
        if (!is_isomorphic(copy.graph, f.f)) return false;
        // The lower bound iota >= q needs each F-copy's only outside
        // neighbour to be its connection: any isolating set must then meet
        // every constituent.
        VertexSet outside = closed_neighborhood(g, copy_set) - copy_set;
        if (!(outside == VertexSet::single(b.connections[i]))) return false;
    }

    // Upper bound: the connections isolate (also covers q = 0, where an
    // empty set must already isolate a non-degenerate remainder).
    if (!is_isolating(g, f, conn)) return false;

    if (g.vertex_count() <= verify_exact_limit) {
        if (iota_exact(g, f).iota != b.spec.q) return false;
    }
    return true;
}

}  // namespace isokit
