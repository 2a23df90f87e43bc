#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isokit/graph.hpp"
#include "isokit/pattern.hpp"

namespace isokit {

enum class TreeShape { Path, Star, Random };

struct BuildOptions {
    TreeShape tree = TreeShape::Path;
    /// Attach each constituent's connection edge at a random vertex of its
    /// F-copy instead of a dominator.
    bool attach_random = false;
    std::uint64_t seed = 0;
    /// Connected remainder graph sharing one vertex with the last connection;
    /// absent means edgeless (required to be absent or edgeless when r = 0,
    /// and mandatory with exactly r edges when r > 0). For q = 0 the
    /// remainder IS the whole graph and must have m edges.
    std::optional<Graph> remainder;
};

/// The data of the extremal construction: m+1 = q(k+2) + r with
/// 0 <= r <= k+1; q gadgets (an F-copy plus a connection vertex joined by a
/// single edge), a tree on the connection vertices, and an r-edge remainder
/// glued at the last connection.
struct SpecialGraphSpec {
    int m = 0;
    int q = 0;
    int r = 0;
    std::vector<Edge> tree_edges;      // on connection ids
    Graph remainder;                   // as supplied (vertex 0 glued to v_q)
    std::vector<Vertex> attach;        // chosen w_i inside each F-copy (F ids)
    bool pure = false;                 // remainder has no edges
};

struct BuiltSpecial {
    Graph graph;
    SpecialGraphSpec spec;
    std::vector<VertexSet> constituent_vertex_sets;  // each {v_i} + F_i block
    std::vector<Vertex> connections;                 // the v_i
    bool special_pair = false;  // degenerate: (graph, F) itself is special
};

/// Builds an (m, F)-special graph. Vertices 0..q-1 are the connections,
/// followed by q blocks of F-copy vertices, then fresh remainder vertices.
BuiltSpecial build_special(const Pattern& f, int m, const BuildOptions& options = {});

/// Checks that the build is structurally sound (connected, m edges, each
/// constituent minus its connection an F-copy with no other outside
/// neighbours), that the connections form an F-isolating set, and — for
/// graphs small enough to solve exactly — that the isolation number equals q.
/// Degenerate builds whose graph forms a special pair with F fail the check.
bool verify_special(const BuiltSpecial& b, const Pattern& f);

}  // namespace isokit
