#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isokit/graph.hpp"
#include "isokit/pattern.hpp"
#include "isokit/proof.hpp"

namespace isokit {

constexpr int enumeration_limit = 8;

struct Corpus {
    std::string source;
    std::vector<Graph> graphs;
};

/// All connected graphs on n vertices, one per isomorphism class (n <= 8).
/// A labelled graph is kept iff its edge bitmask is minimal over all
/// relabelings, so the output order (ascending mask) is deterministic and
/// every member is its own canonical representative.
Corpus enumerate_connected(int n);

/// Random connected graph: a uniform random spanning tree (Pruefer) plus
/// m-(n-1) distinct extra edges. Deterministic per seed.
Graph random_connected(int n, int m, std::uint64_t seed);

/// `count` graphs drawn sequentially from one seeded stream.
Corpus random_corpus(int n, int m, int count, std::uint64_t seed);

Corpus corpus_from_files(const std::vector<std::string>& paths);

struct ReportRow {
    std::size_t graph_index = 0;
    std::string canon_hex;  // empty when the graph exceeds the canonical limit
    int n = 0;
    int m = 0;
    std::string pattern;
    bool special = false;
    std::optional<int> iota;
    int proof_size = 0;
    int bound = 0;
    bool ok = false;
    bool oracle_fallback = false;  // k <= 1: exact solver stands in
    std::vector<CaseTag> tags;
    std::string error;
};

struct VerificationReport {
    std::string source;
    std::vector<std::string> patterns;
    std::vector<ReportRow> rows;
    int violations = 0;
    int equality_count = 0;  // non-special rows attaining proof_size == bound
    std::map<std::string, int> case_histogram;

    std::string to_csv() const;
    std::string summary_json() const;
};

struct VerifyOptions {
    bool use_exact = false;
    bool fail_fast = false;
    int workers = 0;  // 0: hardware concurrency
};

/// Runs the solvers over every (graph, pattern) pair. Special pairs are
/// recorded as exempt; patterns with k <= 1 fall back to the exact solver;
/// everything else runs the constructive solver and checks its certificate.
/// Rows are merged in corpus order whatever the worker count.
VerificationReport verify_corpus(const Corpus& corpus, const std::vector<Pattern>& patterns,
                                 const VerifyOptions& options = {});

/// Graphs of the corpus attaining iota_exact = bound(m, k) > 0.
std::vector<Graph> find_extremal(const Pattern& f, const Corpus& corpus);

}  // namespace isokit
