#include "isokit/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "isokit/exact.hpp"
#include "isokit/io.hpp"
#include "isokit/rng.hpp"

namespace isokit {

namespace {

// Connectivity of a labelled graph given per-vertex adjacency rows.
bool mask_connected(int n, const std::array<std::uint8_t, 8>& adj) {
    if (n <= 1) return true;
    std::uint8_t seen = 1, frontier = 1;
    while (frontier != 0) {
        std::uint8_t next = 0;
        for (std::uint8_t b = frontier; b != 0; b &= static_cast<std::uint8_t>(b - 1))
            next |= adj[static_cast<std::size_t>(std::countr_zero(b))];
        frontier = next & static_cast<std::uint8_t>(~seen);
        seen |= frontier;
    }
    return seen == static_cast<std::uint8_t>((1u << n) - 1);
}

struct Enumerator {
    int n;
    int bits;
    std::vector<std::pair<int, int>> bit_edge;  // bit index -> (i, j)
    // Per permutation: flat map from source bit position to image bitmask,
    // transpositions first so rejection scans exit early.
    std::vector<std::uint64_t> perm_bit;
    std::size_t perm_count = 0;

    explicit Enumerator(int vertex_count) : n(vertex_count), bits(n * (n - 1) / 2) {
        std::array<std::array<int, 8>, 8> pair_bit{};
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                bit_edge.emplace_back(i, j);
                pair_bit[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = idx;
                pair_bit[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = idx;
                ++idx;
            }
        std::vector<std::array<std::uint8_t, 8>> perms;
        std::array<std::uint8_t, 8> p{};
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                auto t = p;
                std::swap(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]);
                perms.push_back(t);
            }
        while (std::next_permutation(p.begin(), p.begin() + n)) perms.push_back(p);
        perm_count = perms.size();
        perm_bit.assign(perm_count * static_cast<std::size_t>(bits > 0 ? bits : 1), 0);
        for (std::size_t pi = 0; pi < perm_count; ++pi)
            for (int src = 0; src < bits; ++src) {
                auto [i, j] = bit_edge[static_cast<std::size_t>(src)];
                int dst = pair_bit[perms[pi][static_cast<std::size_t>(i)]]
                                  [perms[pi][static_cast<std::size_t>(j)]];
                perm_bit[pi * static_cast<std::size_t>(bits) + static_cast<std::size_t>(src)] =
                    bit_of(dst);
            }
    }

    std::uint64_t bit_of(int idx) const { return std::uint64_t{1} << (bits - 1 - idx); }

    // True iff no relabeling yields a strictly smaller mask. A cheap
    // necessary condition is checked first: in a minimal mask, vertex 0 has
    // minimum degree and its neighbours are exactly the top-id vertices
    // (row 0 is the most significant block of the bitstring).
    bool minimal(std::uint64_t mask, const std::array<std::uint8_t, 8>& adj,
                 const std::array<int, 8>& deg) const {
        int d0 = deg[0];
        for (int v = 1; v < n; ++v)
            if (deg[static_cast<std::size_t>(v)] < d0) return false;
        std::uint8_t expected_row0 =
            static_cast<std::uint8_t>(((1u << d0) - 1) << (n - d0)) & static_cast<std::uint8_t>(~1u);
        if (adj[0] != expected_row0) return false;
        for (std::size_t pi = 0; pi < perm_count; ++pi) {
            const std::uint64_t* map = &perm_bit[pi * static_cast<std::size_t>(bits)];
            std::uint64_t img = 0;
            for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
                img |= map[bits - 1 - std::countr_zero(rest)];
            if (img < mask) return false;
        }
        return true;
    }
};

}  // namespace

Corpus enumerate_connected(int n) {
    if (n < 1) throw ValidationError("enumerate_connected: n must be at least 1");
    if (n > enumeration_limit)
        throw UnsupportedError("enumerate_connected: supported up to " +
                               std::to_string(enumeration_limit) + " vertices");
    Corpus corpus;
    corpus.source = "exhaustive(" + std::to_string(n) + ")";
    Enumerator en(n);
    const std::uint64_t total = std::uint64_t{1} << en.bits;
    const int row0_bits = n - 1;

    auto scan_range = [&](std::uint64_t begin, std::uint64_t end,
                          std::vector<std::uint64_t>& found) {
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            // In a minimal mask, row 0 (the most significant n-1 bits) is an
            // all-ones suffix; rejecting on the raw mask skips most candidates.
            std::uint64_t row0 = row0_bits == 0 ? 0 : mask >> (en.bits - row0_bits);
            if ((row0 & (row0 + 1)) != 0) continue;
            std::array<std::uint8_t, 8> adj{};
            std::array<int, 8> deg{};
            for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
                int idx = en.bits - 1 - std::countr_zero(rest);
                auto [i, j] = en.bit_edge[static_cast<std::size_t>(idx)];
                adj[static_cast<std::size_t>(i)] |= static_cast<std::uint8_t>(1u << j);
                adj[static_cast<std::size_t>(j)] |= static_cast<std::uint8_t>(1u << i);
                ++deg[static_cast<std::size_t>(i)];
                ++deg[static_cast<std::size_t>(j)];
            }
            if (!mask_connected(n, adj)) continue;
            if (!en.minimal(mask, adj, deg)) continue;
            found.push_back(mask);
        }
    };

    unsigned hw = std::thread::hardware_concurrency();
    int threads = hw == 0 ? 1 : static_cast<int>(hw);
    std::vector<std::uint64_t> masks;
    if (threads <= 1 || en.bits < 20) {
        scan_range(0, total, masks);
    } else {
        // Contiguous chunks concatenated in range order: same output
        // whatever the thread count or scheduling.
        const std::uint64_t chunk_count = std::uint64_t{64} * static_cast<std::uint64_t>(threads);
        const std::uint64_t chunk_size = (total + chunk_count - 1) / chunk_count;
        std::vector<std::vector<std::uint64_t>> chunks(static_cast<std::size_t>(chunk_count));
        std::atomic<std::uint64_t> next_chunk{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    std::uint64_t c = next_chunk.fetch_add(1);
                    if (c >= chunk_count) return;
                    std::uint64_t begin = c * chunk_size;
                    std::uint64_t end = std::min(total, begin + chunk_size);
                    if (begin < end) scan_range(begin, end, chunks[static_cast<std::size_t>(c)]);
                }
            });
        }
        for (std::thread& th : pool) th.join();
        for (const auto& chunk : chunks) masks.insert(masks.end(), chunk.begin(), chunk.end());
    }
    for (std::uint64_t mask : masks) corpus.graphs.push_back(graph_from_bitmask(n, mask));
    return corpus;
}

Graph random_connected(int n, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    if (n < 1 || n > Graph::max_vertices)
        throw ValidationError("random_connected: n out of range");
    const long max_m = static_cast<long>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_m)
        throw ValidationError("random_connected: m must lie in [n-1, n(n-1)/2]");
    std::vector<Edge> edges = random_tree_edges(n, rng);
    std::vector<Edge> rest;
    std::vector<std::uint64_t> tree_adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        tree_adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        tree_adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (((tree_adj[static_cast<std::size_t>(u)] >> v) & 1) == 0) rest.emplace_back(u, v);
    int extra = m - (n - 1);
    for (int i = 0; i < extra; ++i) {
        std::size_t j = static_cast<std::size_t>(i) +
                        uniform_below(rng, rest.size() - static_cast<std::size_t>(i));
        std::swap(rest[static_cast<std::size_t>(i)], rest[j]);
        edges.push_back(rest[static_cast<std::size_t>(i)]);
    }
    return make_graph(n, edges);
}

Corpus random_corpus(int n, int m, int count, std::uint64_t seed) {
    if (count < 0) throw ValidationError("random_corpus: negative count");
    Corpus corpus;
    std::ostringstream src;
    src << "random(n=" << n << ",m=" << m << ",count=" << count << ",seed=" << seed << ")";
    corpus.source = src.str();
    for (int i = 0; i < count; ++i)
        corpus.graphs.push_back(random_connected(n, m, seed + static_cast<std::uint64_t>(i)));
    return corpus;
}

Corpus corpus_from_files(const std::vector<std::string>& paths) {
    Corpus corpus;
    corpus.source = "files(" + std::to_string(paths.size()) + ")";
    for (const std::string& p : paths) corpus.graphs.push_back(read_edge_list_file(p));
    return corpus;
}

namespace {

ReportRow make_row(const Graph& g, const std::string& canon, std::size_t gi, const Pattern& f,
                   bool use_exact) {
    ReportRow row;
    row.graph_index = gi;
    row.canon_hex = canon;
    row.n = g.vertex_count();
    row.m = g.edge_count();
    row.pattern = f.name;
    row.bound = bound(g.edge_count(), f.k);
    row.special = is_special_pair(g, f);

    if (row.special) {
        // Exempt families; the direct values are 1 (an F-copy) and 2 (C6/P3).
        row.proof_size = is_isomorphic(g, f.f) ? 1 : 2;
        if (use_exact) row.iota = iota_exact(g, f).iota;
        row.ok = true;
        return row;
    }
    if (f.k <= 1) {
        row.oracle_fallback = true;
        int iota = iota_exact(g, f).iota;
        row.iota = iota;
        row.proof_size = iota;
        row.ok = iota <= row.bound;
        return row;
    }
    Certificate cert = isolate(g, f);
    row.proof_size = cert.size();
    for (const CaseStep& s : cert.trace) row.tags.push_back(s.tag);
    bool sound = is_isolating(g, f, cert.set);
    row.ok = sound && cert.size() <= row.bound;
    if (use_exact) {
        row.iota = iota_exact(g, f).iota;
        row.ok = row.ok && *row.iota <= cert.size() && *row.iota <= row.bound;
    }
    return row;
}

}  // namespace

VerificationReport verify_corpus(const Corpus& corpus, const std::vector<Pattern>& patterns,
                                 const VerifyOptions& options) {
    VerificationReport report;
    report.source = corpus.source;
    for (const Pattern& f : patterns) report.patterns.push_back(f.name);

    std::vector<std::string> canon(corpus.graphs.size());
    for (std::size_t i = 0; i < corpus.graphs.size(); ++i)
        if (corpus.graphs[i].vertex_count() <= canonical_form_limit)
            canon[i] = hex_encode(canonical_form(corpus.graphs[i]));

    const std::size_t total = corpus.graphs.size() * patterns.size();
    report.rows.resize(total);
    int workers = options.workers;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min<int>(workers, static_cast<int>(total) > 0 ? static_cast<int>(total) : 1);

    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto work = [&] {
        for (;;) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= total || stop.load()) return;
            std::size_t gi = idx / patterns.size();
            std::size_t pi = idx % patterns.size();
            try {
                report.rows[idx] =
                    make_row(corpus.graphs[gi], canon[gi], gi, patterns[pi], options.use_exact);
            } catch (const std::exception& e) {
                if (options.fail_fast) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    stop.store(true);
                    return;
                }
                ReportRow& row = report.rows[idx];
                row.graph_index = gi;
                row.canon_hex = canon[gi];
                row.n = corpus.graphs[gi].vertex_count();
                row.m = corpus.graphs[gi].edge_count();
                row.pattern = patterns[pi].name;
                row.bound = bound(row.m, patterns[pi].k);
                row.ok = false;
                row.error = e.what();
            }
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    for (const ReportRow& row : report.rows) {
        if (!row.ok) ++report.violations;
        if (!row.special && row.proof_size == row.bound && row.error.empty())
            ++report.equality_count;
        for (CaseTag tag : row.tags) ++report.case_histogram[std::string(to_string(tag))];
    }
    return report;
}

std::string VerificationReport::to_csv() const {
    std::ostringstream out;
    out << "id,canon,n,m,pattern,special,iota_exact,proof_size,bound,ok,tags\n";
    for (const ReportRow& row : rows) {
        out << row.graph_index << ',' << row.canon_hex << ',' << row.n << ',' << row.m << ','
            << row.pattern << ',' << (row.special ? 1 : 0) << ',';
        if (row.iota) out << *row.iota;
        out << ',' << row.proof_size << ',' << row.bound << ',' << (row.ok ? 1 : 0) << ',';
        if (row.oracle_fallback) {
            out << "oracle";
        } else {
            for (std::size_t i = 0; i < row.tags.size(); ++i) {
                if (i > 0) out << ';';
                out << to_string(row.tags[i]);
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string VerificationReport::summary_json() const {
    nlohmann::json j;
    j["source"] = source;
    j["patterns"] = patterns;
    j["rows"] = rows.size();
    j["violations"] = violations;
    j["equality_count"] = equality_count;
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [tag, count] : case_histogram) hist[tag] = count;
    j["case_histogram"] = hist;
    return j.dump(2);
}

std::vector<Graph> find_extremal(const Pattern& f, const Corpus& corpus) {
    std::vector<Graph> out;
    for (const Graph& g : corpus.graphs) {
        int b = bound(g.edge_count(), f.k);
        if (b <= 0) continue;
        if (iota_exact(g, f).iota == b) out.push_back(g);
    }
    return out;
}

}  // namespace isokit
