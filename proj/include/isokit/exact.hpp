#pragma once

#include <cstdint>

#include "isokit/graph.hpp"
#include "isokit/pattern.hpp"

namespace isokit {

/// Largest graph iota_exact/gamma will attempt. Subset enumeration is
/// exponential; exhaustive corpora stay at n <= 8.
constexpr int exact_solver_limit = 24;

struct ExactResult {
    int iota = 0;
    VertexSet witness;
    std::uint64_t explored = 0;  // candidate sets tested
};

/// True iff G - N[D] contains no F-copy.
bool is_isolating(const Graph& g, const Pattern& f, VertexSet d);

/// Minimum F-isolating set by enumeration over subset sizes 0, 1, 2, ...
/// Only subsets of the candidate set {u : N[u] meets some copy's vertex set}
/// are tried; a vertex outside it never helps. The witness is the first
/// minimum set in the enumeration order.
ExactResult iota_exact(const Graph& g, const Pattern& f);

/// Domination number, computed directly from N[D] = V(G). Equals
/// iota_exact(g, K1).iota.
int gamma(const Graph& g);

}  // namespace isokit
