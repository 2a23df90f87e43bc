#include "isokit/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace isokit {

namespace {

void check_vertex_range(Vertex v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw ValidationError(std::string(what) + ": vertex " + std::to_string(v) +
                              " out of range 0.." + std::to_string(n - 1));
}

std::uint64_t mask_of_n(int n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

}  // namespace

VertexSet VertexSet::single(Vertex v) {
    VertexSet s;
    s.add(v);
    return s;
}

VertexSet VertexSet::of(std::initializer_list<Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.add(v);
    return s;
}

VertexSet VertexSet::full(int n) {
    if (n < 0 || n > 64) throw ValidationError("VertexSet::full: n out of range");
    return from_bits(mask_of_n(n));
}

void VertexSet::add(Vertex v) {
    if (v < 0 || v >= 64) throw ValidationError("VertexSet: vertex id out of 0..63");
    bits_ |= std::uint64_t{1} << v;
}

void VertexSet::remove(Vertex v) {
    if (v < 0 || v >= 64) throw ValidationError("VertexSet: vertex id out of 0..63");
    bits_ &= ~(std::uint64_t{1} << v);
}

int VertexSet::size() const { return std::popcount(bits_); }

Vertex VertexSet::min() const {
    return bits_ == 0 ? -1 : std::countr_zero(bits_);
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (Vertex v : to_vector()) {
        if (!first) out += ", ";
        out += std::to_string(v);
        first = false;
    }
    out += "}";
    return out;
}

Graph make_graph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw ValidationError("make_graph: negative vertex count");
    if (n > Graph::max_vertices)
        throw ValidationError("make_graph: vertex count " + std::to_string(n) + " exceeds limit " +
                              std::to_string(Graph::max_vertices));
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges) {
        check_vertex_range(u, n, "make_graph");
        check_vertex_range(v, n, "make_graph");
        if (u == v)
            throw ValidationError("make_graph: self-loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        g.adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    int deg_sum = 0;
    for (std::uint64_t row : g.adj_) deg_sum += std::popcount(row);
    g.m_ = deg_sum / 2;
    return g;
}

Graph make_graph(int n, std::initializer_list<Edge> edges) {
    return make_graph(n, std::vector<Edge>(edges));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex_range(u, n_, "has_edge");
    check_vertex_range(v, n_, "has_edge");
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
}

std::uint64_t Graph::adjacency_bits(Vertex v) const {
    check_vertex_range(v, n_, "adjacency_bits");
    return adj_[static_cast<std::size_t>(v)];
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
    return VertexSet::from_bits(adjacency_bits(v) | (std::uint64_t{1} << v));
}

int Graph::degree(Vertex v) const { return std::popcount(adjacency_bits(v)); }

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u) {
        std::uint64_t above = adj_[static_cast<std::size_t>(u)] >> (u + 1);
        for (std::uint64_t b = above; b != 0; b &= b - 1)
            out.emplace_back(u, u + 1 + std::countr_zero(b));
    }
    return out;
}

std::vector<int> Graph::sorted_degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t b = frontier; b != 0; b &= b - 1)
            next |= adj_[static_cast<std::size_t>(std::countr_zero(b))];
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == mask_of_n(n_);
}

VertexSet closed_neighborhood(const Graph& g, VertexSet x) {
    if ((x.bits() & ~mask_of_n(g.vertex_count())) != 0)
        throw ValidationError("closed_neighborhood: set contains vertices outside the graph");
    std::uint64_t out = x.bits();
    for (std::uint64_t b = x.bits(); b != 0; b &= b - 1)
        out |= g.adjacency_bits(std::countr_zero(b));
    return VertexSet::from_bits(out);
}

VertexSet SubgraphHandle::to_original(VertexSet s) const {
    VertexSet out;
    for (Vertex v : s.to_vector()) out.add(to_original(v));
    return out;
}

SubgraphHandle induced_subgraph(const Graph& g, VertexSet keep) {
    if ((keep.bits() & ~mask_of_n(g.vertex_count())) != 0)
        throw ValidationError("induced_subgraph: set contains vertices outside the graph");
    SubgraphHandle h;
    h.back_map = keep.to_vector();
    std::vector<Vertex> fwd(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < h.back_map.size(); ++i)
        fwd[static_cast<std::size_t>(h.back_map[i])] = static_cast<Vertex>(i);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < h.back_map.size(); ++i) {
        std::uint64_t row = g.adjacency_bits(h.back_map[i]) & keep.bits();
        for (std::uint64_t b = row; b != 0; b &= b - 1) {
            Vertex w = fwd[static_cast<std::size_t>(std::countr_zero(b))];
            if (static_cast<Vertex>(i) < w) es.emplace_back(static_cast<Vertex>(i), w);
        }
    }
    h.graph = make_graph(static_cast<int>(h.back_map.size()), es);
    return h;
}

SubgraphHandle delete_vertices(const Graph& g, VertexSet x) {
    if ((x.bits() & ~mask_of_n(g.vertex_count())) != 0)
        throw ValidationError("delete_vertices: set contains vertices outside the graph");
    return induced_subgraph(g, g.vertices() - x);
}

Graph delete_edges(const Graph& g, const std::vector<Edge>& ys) {
    std::vector<Edge> kept = g.edges();
    for (auto [u, v] : ys) {
        if (u > v) std::swap(u, v);
        if (!g.has_edge(u, v))
            throw ValidationError("delete_edges: {" + std::to_string(u) + ", " +
                                  std::to_string(v) + "} is not an edge");
        auto it = std::find(kept.begin(), kept.end(), Edge{u, v});
        if (it != kept.end()) kept.erase(it);
    }
    return make_graph(g.vertex_count(), kept);
}

std::vector<VertexSet> component_sets_within(const Graph& g, VertexSet within) {
    if ((within.bits() & ~mask_of_n(g.vertex_count())) != 0)
        throw ValidationError("component_sets_within: set contains vertices outside the graph");
    std::vector<VertexSet> out;
    std::uint64_t rem = within.bits();
    while (rem != 0) {
        std::uint64_t comp = rem & (~rem + 1);  // lowest remaining vertex
        std::uint64_t frontier = comp;
        while (frontier != 0) {
            std::uint64_t next = 0;
            for (std::uint64_t b = frontier; b != 0; b &= b - 1)
                next |= g.adjacency_bits(std::countr_zero(b));
            frontier = next & rem & ~comp;
            comp |= frontier;
        }
        out.push_back(VertexSet::from_bits(comp));
        rem &= ~comp;
    }
    return out;
}

std::vector<VertexSet> component_sets(const Graph& g) {
    return component_sets_within(g, g.vertices());
}

std::vector<SubgraphHandle> components(const Graph& g) {
    std::vector<SubgraphHandle> out;
    for (VertexSet s : component_sets(g)) out.push_back(induced_subgraph(g, s));
    return out;
}

std::vector<Edge> edges_between(const Graph& g, VertexSet x, VertexSet y) {
    std::uint64_t lim = mask_of_n(g.vertex_count());
    if ((x.bits() & ~lim) != 0 || (y.bits() & ~lim) != 0)
        throw ValidationError("edges_between: set contains vertices outside the graph");
    std::vector<Edge> out;
    for (auto [u, v] : g.edges()) {
        bool fwd = x.contains(u) && y.contains(v);
        bool rev = x.contains(v) && y.contains(u);
        if (fwd || rev) out.emplace_back(u, v);
    }
    return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    check_vertex_range(source, g.vertex_count(), "bfs_distances");
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    dist[static_cast<std::size_t>(source)] = 0;
    std::uint64_t seen = std::uint64_t{1} << source;
    std::uint64_t frontier = seen;
    int d = 0;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t b = frontier; b != 0; b &= b - 1)
            next |= g.adjacency_bits(std::countr_zero(b));
        frontier = next & ~seen;
        seen |= frontier;
        ++d;
        for (std::uint64_t b = frontier; b != 0; b &= b - 1)
            dist[static_cast<std::size_t>(std::countr_zero(b))] = d;
    }
    return dist;
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& order,
                        std::size_t pos, std::vector<Vertex>& image, std::uint64_t used) {
    if (pos == order.size()) return true;
    Vertex p = order[pos];
    for (Vertex c = 0; c < b.vertex_count(); ++c) {
        if ((used >> c) & 1) continue;
        if (b.degree(c) != a.degree(p)) continue;
        bool ok = true;
        for (std::size_t j = 0; j < pos && ok; ++j)
            if (a.has_edge(p, order[j]) != b.has_edge(c, image[static_cast<std::size_t>(order[j])]))
                ok = false;
        if (!ok) continue;
        image[static_cast<std::size_t>(p)] = c;
        if (extend_isomorphism(a, b, order, pos + 1, image, used | (std::uint64_t{1} << c)))
            return true;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (a.sorted_degrees() != b.sorted_degrees()) return false;
    std::vector<Vertex> order(static_cast<std::size_t>(a.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex u, Vertex v) {
        if (a.degree(u) != a.degree(v)) return a.degree(u) > a.degree(v);
        return u < v;
    });
    std::vector<Vertex> image(static_cast<std::size_t>(a.vertex_count()), -1);
    return extend_isomorphism(a, b, order, 0, image, 0);
}

std::uint64_t bitmask_of(const Graph& g) {
    int n = g.vertex_count();
    int bits = n * (n - 1) / 2;
    if (bits > 64) throw UnsupportedError("bitmask_of: too many potential edges for 64 bits");
    std::uint64_t mask = 0;
    int idx = 0;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) {
            if (g.has_edge(i, j)) mask |= std::uint64_t{1} << (bits - 1 - idx);
            ++idx;
        }
    return mask;
}

Graph graph_from_bitmask(int n, std::uint64_t mask) {
    int bits = n * (n - 1) / 2;
    if (bits > 64) throw UnsupportedError("graph_from_bitmask: too many potential edges for 64 bits");
    if (bits < 64 && (mask >> bits) != 0)
        throw ValidationError("graph_from_bitmask: mask has bits beyond the edge slots");
    std::vector<Edge> es;
    int idx = 0;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) {
            if ((mask >> (bits - 1 - idx)) & 1) es.emplace_back(i, j);
            ++idx;
        }
    return make_graph(n, es);
}

std::string canonical_form(const Graph& g) {
    int n = g.vertex_count();
    if (n > canonical_form_limit)
        throw UnsupportedError("canonical_form: supported up to " +
                               std::to_string(canonical_form_limit) + " vertices");
    int bits = n * (n - 1) / 2;
    std::uint64_t best = bitmask_of(g);
    std::array<Vertex, canonical_form_limit> perm{};
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    auto first = perm.begin();
    auto last = perm.begin() + n;
    while (std::next_permutation(first, last)) {
        std::uint64_t img = 0;
        int idx = 0;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j) {
                if (g.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
                    img |= std::uint64_t{1} << (bits - 1 - idx);
                ++idx;
            }
        best = std::min(best, img);
    }
    std::string out;
    out.push_back(static_cast<char>(n));
    for (int byte_start = 0; byte_start < bits; byte_start += 8) {
        unsigned char byte = 0;
        for (int t = 0; t < 8 && byte_start + t < bits; ++t)
            if ((best >> (bits - 1 - (byte_start + t))) & 1) byte |= 1u << (7 - t);
        out.push_back(static_cast<char>(byte));
    }
    return out;
}

std::string hex_encode(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

}  // namespace isokit
