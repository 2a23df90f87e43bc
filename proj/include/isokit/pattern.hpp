#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isokit/graph.hpp"

namespace isokit {

/// A validated pattern F with domination number 1: F is connected and has at
/// least one vertex adjacent to all others.
struct Pattern {
    Graph f;
    int k = 0;    // edge count of F
    int ell = 0;  // vertex count of F
    std::vector<Vertex> dominators;
    std::string name = "custom";

    bool is_k1() const { return ell == 1; }
    /// K_{1,2}, the 3-path.
    bool is_p3() const { return ell == 3 && k == 2; }
};

constexpr int pattern_vertex_limit = 8;

Pattern make_pattern(const Graph& f);
Pattern make_pattern(const Graph& f, const std::string& name);

/// An embedding of F into a host graph: mapping[p] is the host image of
/// pattern vertex p; center is the image of a dominator, so the whole copy
/// lies inside the host's closed neighborhood of center.
struct CopyWitness {
    std::vector<Vertex> mapping;
    Vertex center = -1;
};

/// Finds a subgraph of g isomorphic to F (not necessarily induced). The
/// search anchors a dominator of F at each host vertex u in increasing order
/// and extends over injective edge-preserving maps into N[u]; the first hit
/// in this order is returned.
std::optional<CopyWitness> contains_copy(const Graph& g, const Pattern& f);

/// True iff some copy of F is centered at u, i.e. has all its vertices in the
/// copy's closed neighborhood of u.
bool has_copy_centered_at(const Graph& g, const Pattern& f, Vertex u);

/// The set U of all copy centers.
VertexSet find_copy_centers(const Graph& g, const Pattern& f);

/// Vertex sets of all F-copies in g, as bitmasks, deduplicated and sorted.
/// A set D is F-isolating exactly when N[D] meets every one of these.
std::vector<std::uint64_t> copy_vertex_sets(const Graph& g, const Pattern& f);

/// True iff g is a 6-cycle (connected, 6 vertices, all degrees 2).
bool is_six_cycle(const Graph& g);

/// The two exceptional families of the bound: g is a copy of F, or F is the
/// 3-path and g is a 6-cycle. Callers pass connected g.
bool is_special_pair(const Graph& g, const Pattern& f);

/// Built-in patterns: k1, k2, p3, k3, k13, paw, k4, k14.
const std::vector<std::string>& builtin_pattern_names();
Pattern builtin_pattern(const std::string& name);

}  // namespace isokit
