#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace isokit {

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // stored normalized with first < second

/// Set of vertex ids in 0..63, backed by a single bitmask.
class VertexSet {
public:
    VertexSet() = default;

    static VertexSet single(Vertex v);
    static VertexSet of(std::initializer_list<Vertex> vs);
    static VertexSet from_bits(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }
    /// The full set {0, ..., n-1}.
    static VertexSet full(int n);

    void add(Vertex v);
    void remove(Vertex v);
    bool contains(Vertex v) const {
        return v >= 0 && v < 64 && (bits_ & (std::uint64_t{1} << v)) != 0;
    }
    int size() const;
    bool empty() const { return bits_ == 0; }
    std::uint64_t bits() const { return bits_; }
    /// Smallest member, or -1 if empty.
    Vertex min() const;
    std::vector<Vertex> to_vector() const;  // ascending
    std::string to_string() const;          // "{0, 2, 5}"

    VertexSet operator|(VertexSet o) const { return from_bits(bits_ | o.bits_); }
    VertexSet operator&(VertexSet o) const { return from_bits(bits_ & o.bits_); }
    VertexSet operator-(VertexSet o) const { return from_bits(bits_ & ~o.bits_); }
    VertexSet& operator|=(VertexSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    bool operator==(const VertexSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on vertices 0..n-1.
/// Adjacency is stored as one 64-bit mask per vertex, so n is capped at 64.
class Graph {
public:
    static constexpr int max_vertices = 64;

    Graph() = default;

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool has_edge(Vertex u, Vertex v) const;
    std::uint64_t adjacency_bits(Vertex v) const;
    VertexSet neighbors(Vertex v) const { return VertexSet::from_bits(adjacency_bits(v)); }
    VertexSet closed_neighborhood(Vertex v) const;
    int degree(Vertex v) const;
    VertexSet vertices() const { return VertexSet::full(n_); }
    std::vector<Edge> edges() const;  // ascending (u, v) with u < v
    std::vector<int> sorted_degrees() const;
    bool is_connected() const;

    bool operator==(const Graph&) const = default;

    friend Graph make_graph(int n, const std::vector<Edge>& edges);

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> adj_;
};

/// Builds a graph from an edge list. Duplicate edges are merged; self-loops
/// and out-of-range endpoints are rejected.
Graph make_graph(int n, const std::vector<Edge>& edges);
Graph make_graph(int n, std::initializer_list<Edge> edges);

/// N[X]: X together with every vertex adjacent to X. N[{}] = {}.
VertexSet closed_neighborhood(const Graph& g, VertexSet x);

/// A relabeled subgraph together with the map from new ids back to the
/// host's original ids (back_map[new] = original, strictly increasing).
struct SubgraphHandle {
    Graph graph;
    std::vector<Vertex> back_map;

    Vertex to_original(Vertex v) const { return back_map.at(static_cast<std::size_t>(v)); }
    VertexSet to_original(VertexSet s) const;
};

/// Induced subgraph on `keep`, relabeled to 0..|keep|-1.
SubgraphHandle induced_subgraph(const Graph& g, VertexSet keep);

/// G - X: induced subgraph on V(G) \ X.
SubgraphHandle delete_vertices(const Graph& g, VertexSet x);

/// G - Y for Y a set of edges; every pair must be an existing edge.
Graph delete_edges(const Graph& g, const std::vector<Edge>& ys);

/// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexSet> component_sets(const Graph& g);
std::vector<VertexSet> component_sets_within(const Graph& g, VertexSet within);

/// Components as relabeled subgraphs, same order as component_sets.
std::vector<SubgraphHandle> components(const Graph& g);

/// Edges with one endpoint in X and the other in Y.
std::vector<Edge> edges_between(const Graph& g, VertexSet x, VertexSet y);

/// BFS distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Exact isomorphism test by backtracking with degree pruning. Intended for
/// small graphs (everything in this codebase compares against patterns or C6).
bool is_isomorphic(const Graph& a, const Graph& b);

/// Canonical byte string: equal iff isomorphic. Defined as the lexicographic
/// minimum over all vertex permutations of the row-major upper-triangular
/// adjacency bitstring, prefixed by the vertex count. Supported for n <= 8.
std::string canonical_form(const Graph& g);
constexpr int canonical_form_limit = 8;

/// Encoding between graphs and upper-triangle edge bitmasks. Bit order is
/// row-major, (0,1) most significant; used by canonical_form and enumeration.
Graph graph_from_bitmask(int n, std::uint64_t mask);
std::uint64_t bitmask_of(const Graph& g);

std::string hex_encode(const std::string& bytes);

}  // namespace isokit
