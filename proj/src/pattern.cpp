#include "isokit/pattern.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace isokit {

namespace {

// Backtracking matcher. Pattern vertices are assigned in a fixed order
// (anchored dominator first, then by decreasing pattern degree); host
// candidates are restricted to N[u] of the anchor, which is exhaustive
// because every copy lies in one closed neighborhood.
struct MatchContext {
    const Graph& g;
    const Pattern& f;
    std::vector<Vertex> order;                       // pattern vertices in assignment order
    std::vector<std::vector<std::size_t>> earlier;   // per position: earlier positions adjacent in F
    std::uint64_t anchor_closed = 0;
    std::vector<Vertex> mapping;

    MatchContext(const Graph& host, const Pattern& pat) : g(host), f(pat) {
        mapping.assign(static_cast<std::size_t>(f.ell), -1);
    }

    void set_order(Vertex dominator) {
        order.clear();
        order.push_back(dominator);
        for (Vertex p = 0; p < f.ell; ++p)
            if (p != dominator) order.push_back(p);
        std::stable_sort(order.begin() + 1, order.end(), [&](Vertex a, Vertex b) {
            return f.f.degree(a) > f.f.degree(b);
        });
        earlier.assign(order.size(), {});
        for (std::size_t i = 1; i < order.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (f.f.has_edge(order[i], order[j])) earlier[i].push_back(j);
    }

    template <typename OnLeaf>
    bool search(std::size_t pos, std::uint64_t used, OnLeaf&& on_leaf) {
        if (pos == order.size()) return on_leaf();
        Vertex p = order[pos];
        std::uint64_t cands = anchor_closed & ~used;
        for (std::size_t j : earlier[pos])
            cands &= g.adjacency_bits(mapping[static_cast<std::size_t>(order[j])]);
        for (std::uint64_t b = cands; b != 0; b &= b - 1) {
            Vertex c = std::countr_zero(b);
            if (g.degree(c) < f.f.degree(p)) continue;
            mapping[static_cast<std::size_t>(p)] = c;
            if (search(pos + 1, used | (std::uint64_t{1} << c), on_leaf)) return true;
        }
        mapping[static_cast<std::size_t>(p)] = -1;
        return false;
    }

    // Runs the search anchored at host vertex u; on_leaf is called with the
    // completed mapping and may return false to keep enumerating.
    template <typename OnLeaf>
    bool anchored(Vertex u, OnLeaf&& on_leaf) {
        if (g.degree(u) + 1 < f.ell) return false;
        anchor_closed = g.closed_neighborhood(u).bits();
        for (Vertex dom : f.dominators) {
            set_order(dom);
            mapping[static_cast<std::size_t>(dom)] = u;
            if (search(1, std::uint64_t{1} << u, on_leaf)) return true;
            mapping[static_cast<std::size_t>(dom)] = -1;
        }
        return false;
    }
};

}  // namespace

Pattern make_pattern(const Graph& f) {
    if (f.vertex_count() == 0) throw ValidationError("pattern must have at least one vertex");
    if (f.vertex_count() > pattern_vertex_limit)
        throw ValidationError("pattern has " + std::to_string(f.vertex_count()) +
                              " vertices, limit is " + std::to_string(pattern_vertex_limit));
    if (!f.is_connected()) throw ValidationError("pattern must be connected");
    Pattern p;
    p.f = f;
    p.k = f.edge_count();
    p.ell = f.vertex_count();
    for (Vertex v = 0; v < f.vertex_count(); ++v)
        if (f.closed_neighborhood(v) == f.vertices()) p.dominators.push_back(v);
    if (p.dominators.empty()) throw ValidationError("pattern lacks dominating vertex");
    return p;
}

Pattern make_pattern(const Graph& f, const std::string& name) {
    Pattern p = make_pattern(f);
    p.name = name;
    return p;
}

std::optional<CopyWitness> contains_copy(const Graph& g, const Pattern& f) {
    MatchContext ctx(g, f);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (ctx.anchored(u, [] { return true; }))
            return CopyWitness{ctx.mapping, u};
    }
    return std::nullopt;
}

bool has_copy_centered_at(const Graph& g, const Pattern& f, Vertex u) {
    MatchContext ctx(g, f);
    return ctx.anchored(u, [] { return true; });
}

VertexSet find_copy_centers(const Graph& g, const Pattern& f) {
    VertexSet centers;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        if (has_copy_centered_at(g, f, u)) centers.add(u);
    return centers;
}

std::vector<std::uint64_t> copy_vertex_sets(const Graph& g, const Pattern& f) {
    std::set<std::uint64_t> sets;
    MatchContext ctx(g, f);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        ctx.anchored(u, [&] {
            std::uint64_t s = 0;
            for (Vertex host : ctx.mapping) s |= std::uint64_t{1} << host;
            sets.insert(s);
            return false;  // keep enumerating
        });
    }
    return {sets.begin(), sets.end()};
}

bool is_six_cycle(const Graph& g) {
    if (g.vertex_count() != 6 || g.edge_count() != 6 || !g.is_connected()) return false;
    for (Vertex v = 0; v < 6; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

bool is_special_pair(const Graph& g, const Pattern& f) {
    if (is_isomorphic(g, f.f)) return true;
    return f.is_p3() && is_six_cycle(g);
}

const std::vector<std::string>& builtin_pattern_names() {
    static const std::vector<std::string> names = {"k1", "k2",  "p3",  "k3",
                                                   "k13", "paw", "k4", "k14"};
    return names;
}

Pattern builtin_pattern(const std::string& name) {
    Graph f;
    if (name == "k1")
        f = make_graph(1, {});
    else if (name == "k2")
        f = make_graph(2, {{0, 1}});
    else if (name == "p3")
        f = make_graph(3, {{0, 1}, {1, 2}});
    else if (name == "k3")
        f = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    else if (name == "k13")
        f = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    else if (name == "paw")
        f = make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    else if (name == "k4")
        f = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    else if (name == "k14")
        f = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    else
        throw ValidationError("unknown built-in pattern \"" + name + "\"");
    return make_pattern(f, name);
}

}  // namespace isokit
