#include <doctest.h>

#include <algorithm>

#include "isokit/exact.hpp"
#include "isokit/harness.hpp"
#include "isokit/proof.hpp"
#include "oracles.hpp"

using namespace isokit;

namespace {

Graph cycle(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(0, n - 1);
    return make_graph(n, es);
}

bool has_tag(const Certificate& c, CaseTag tag, int depth = -1) {
    return std::any_of(c.trace.begin(), c.trace.end(), [&](const CaseStep& s) {
        return s.tag == tag && (depth < 0 || s.depth == depth);
    });
}

std::string local_of(const Certificate& c, CaseTag tag, const std::string& key) {
    for (const CaseStep& s : c.trace)
        if (s.tag == tag)
            for (const auto& [k, v] : s.locals)
                if (k == key) return v;
    return "";
}

// isolating, within bound, at least the optimum
Certificate certified(const Graph& g, const Pattern& f) {
    Certificate cert = isolate(g, f);
    CHECK(is_isolating(g, f, cert.set));
    CHECK(cert.size() <= cert.bound);
    CHECK(cert.size() >= iota_exact(g, f).iota);
    return cert;
}

}  // namespace

TEST_CASE("bound arithmetic") {
    CHECK(bound(9, 3) == 2);
    CHECK(bound(5, 2) == 1);
    for (int k = 0; k <= 6; ++k) CHECK(bound(k, k) == 0);
    CHECK(bound(0, 2) == 0);
    CHECK_THROWS_AS(bound(-1, 2), ValidationError);
}

TEST_CASE("solver errors") {
    Pattern p3 = builtin_pattern("p3");
    Pattern k3 = builtin_pattern("k3");

    CHECK_THROWS_AS(isolate(cycle(6), p3), SolverError);
    try {
        isolate(cycle(6), p3);
    } catch (const SolverError& e) {
        CHECK(e.kind() == SolverErrorKind::SpecialPairInput);
        CHECK(std::string(e.what()).find("special pair") != std::string::npos);
    }
    CHECK_THROWS_AS(isolate(k3.f, k3), SolverError);

    try {
        isolate(cycle(5), builtin_pattern("k2"));
    } catch (const SolverError& e) {
        CHECK(e.kind() == SolverErrorKind::PatternTooSmall);
    }
}

TEST_CASE("no copy and whole neighborhood") {
    Pattern p3 = builtin_pattern("p3");
    Pattern k3 = builtin_pattern("k3");

    Certificate none = certified(cycle(6), k3);
    CHECK(none.set.empty());
    CHECK(none.bound == 1);
    CHECK(has_tag(none, CaseTag::NoCopy, 0));

    Graph k15 = make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    Certificate hub = certified(k15, p3);
    CHECK(hub.set == VertexSet::single(0));
    CHECK(hub.bound == 1);
    CHECK(has_tag(hub, CaseTag::WholeNbhd, 0));

    Certificate empty = certified(Graph{}, p3);
    CHECK(empty.set.empty());
}

TEST_CASE("case 1 strict") {
    // star at 0 with a 5-path tail: G - N[0] is a P4, and two spare star
    // edges keep the count strict
    Pattern p3 = builtin_pattern("p3");
    Graph g = make_graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}});
    Certificate cert = certified(g, p3);
    CHECK(has_tag(cert, CaseTag::Case1Strict, 0));
    CHECK(cert.set == VertexSet::of({0, 6}));
    CHECK(cert.size() == 2);
}

TEST_CASE("case 1.1 on a 4-path") {
    Pattern p3 = builtin_pattern("p3");
    Graph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    Certificate cert = certified(p4, p3);
    CHECK(has_tag(cert, CaseTag::Case1_1, 0));
    CHECK(cert.set == VertexSet::single(1));
    CHECK(cert.bound == 1);
}

TEST_CASE("case 1.2 with no special component of I - y_I") {
    // 3-path centered at 0 with an 8-path linked at its end: every component
    // of G - N[v] sits exactly at (k+2)|D_H| = |E(H)|+1, and I - y_I is a
    // single non-special 7-path
    Pattern p3 = builtin_pattern("p3");
    Graph g = make_graph(11, {{0, 1}, {0, 2}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8},
                              {8, 9}, {9, 10}});
    Certificate cert = certified(g, p3);
    CHECK(has_tag(cert, CaseTag::Case1_2JEmpty, 0));
    CHECK(cert.set == VertexSet::of({1, 7}));
    CHECK(cert.bound == 2);
    CHECK(local_of(cert, CaseTag::Case1_2JEmpty, "x_I") == "1");
    CHECK(local_of(cert, CaseTag::Case1_2JEmpty, "y_I") == "3");
    // deeper recursion on the 7-path passes through the J-special branch
    CHECK(has_tag(cert, CaseTag::Case1_2JSpecial));
}

TEST_CASE("case 1.2 with special components of I - y_I") {
    // v adjacent to two 5-paths: removing the link endpoint of the first
    // leaves a bare 3-path, which is an F-copy
    Pattern p3 = builtin_pattern("p3");
    Graph g = make_graph(11, {{0, 1}, {0, 6}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 7}, {7, 8},
                              {8, 9}, {9, 10}});
    Certificate cert = certified(g, p3);
    CHECK(has_tag(cert, CaseTag::Case1_2JSpecial, 0));
    CHECK(cert.set == VertexSet::of({2, 7}));
    CHECK(cert.size() == cert.bound);
    CHECK(local_of(cert, CaseTag::Case1_2JSpecial, "y_I") == "2");
}

TEST_CASE("case 2 with a 6-cycle component") {
    // v with three leaves and a 6-cycle hanging from leaf 1; F = P3 makes
    // the cycle special, and the solver removes N_H[y4]
    Pattern p3 = builtin_pattern("p3");
    Graph g = make_graph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8},
                              {8, 9}, {4, 9}});
    Certificate cert = certified(g, p3);
    CHECK(has_tag(cert, CaseTag::Case2C6, 0));
    CHECK(cert.set == VertexSet::of({1, 7}));
    CHECK(local_of(cert, CaseTag::Case2C6, "y_1") == "4");
    CHECK(local_of(cert, CaseTag::Case2C6, "y_4") == "7");
    CHECK(cert.size() == cert.bound);
    CHECK(iota_exact(g, p3).iota == 2);
}

TEST_CASE("case 2.1: two F-copies linked to one x") {
    Pattern p3 = builtin_pattern("p3");
    Graph g = make_graph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {4, 5}, {5, 6}, {1, 7}, {7, 8},
                              {8, 9}});
    Certificate cert = certified(g, p3);
    CHECK(has_tag(cert, CaseTag::Case2_1, 0));
    CHECK(cert.set == VertexSet::of({0, 1}));
    CHECK(local_of(cert, CaseTag::Case2_1, "x") == "1");
    CHECK(local_of(cert, CaseTag::Case2_1, "X") == "{}");
}

TEST_CASE("case 2.2.1 with a non-special remainder") {
    // N[v] side keeps a triangle after removing {x} + V(H)
    Pattern p3 = builtin_pattern("p3");
    Graph g = make_graph(7, {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {1, 4}, {4, 5}, {5, 6}});
    Certificate cert = certified(g, p3);
    CHECK(has_tag(cert, CaseTag::Case2_2_1, 0));
    CHECK(local_of(cert, CaseTag::Case2_2_1, "G_v*") == "non-special");
    CHECK(cert.set == VertexSet::of({0, 1}));
}

TEST_CASE("case 2.2.1 landing on an F-copy remainder") {
    // inside the C6 instance's recursion: G* - {x} - V(H) is a bare 3-path
    Pattern p3 = builtin_pattern("p3");
    Graph g = make_graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {4, 5}, {4, 6}});
    Certificate cert = certified(g, p3);
    CHECK(has_tag(cert, CaseTag::Case2_2_1, 0));
    CHECK(local_of(cert, CaseTag::Case2_2_1, "G_v*") == "F-copy");
    CHECK(cert.set == VertexSet::single(1));
    CHECK(cert.size() == cert.bound);
}

TEST_CASE("case 2.2.1 with a 6-cycle remainder through v") {
    Pattern p3 = builtin_pattern("p3");
    Graph g = make_graph(10, {{0, 1}, {0, 5}, {0, 6}, {1, 2}, {2, 3}, {3, 4}, {5, 7}, {7, 8},
                              {8, 9}, {6, 9}});
    Certificate cert = certified(g, p3);
    CHECK(has_tag(cert, CaseTag::Case2_2_1, 0));
    CHECK(local_of(cert, CaseTag::Case2_2_1, "G_v*") == "C6");
    CHECK(local_of(cert, CaseTag::Case2_2_1, "w_2") == "8");
    CHECK(cert.set == VertexSet::of({1, 8}));
}

TEST_CASE("case 2.2.2 with non-special I") {
    // pendant triangle linked twice into a paw around v
    Pattern k3 = builtin_pattern("k3");
    Graph g = make_graph(7, {{0, 1}, {0, 2}, {1, 2}, {0, 6}, {3, 4}, {3, 5}, {4, 5}, {1, 3},
                             {2, 4}});
    Certificate cert = certified(g, k3);
    CHECK(has_tag(cert, CaseTag::Case2_2_2, 0));
    CHECK(local_of(cert, CaseTag::Case2_2_2, "I") == "non-special");
    CHECK(cert.set == VertexSet::of({0, 3}));
}

TEST_CASE("case 2.2.2 with I an F-copy and two links") {
    // twin stars joined by two leaf edges: the final branch returns {x'}
    Pattern k13 = builtin_pattern("k13");
    Graph g = make_graph(8, {{0, 1}, {0, 2}, {0, 3}, {4, 5}, {4, 6}, {4, 7}, {1, 5}, {2, 6}});
    Certificate cert = certified(g, k13);
    CHECK(has_tag(cert, CaseTag::Case2_2_2, 0));
    CHECK(local_of(cert, CaseTag::Case2_2_2, "branch") == "pick-x'");
    CHECK(cert.set == VertexSet::single(2));
    CHECK(cert.size() == cert.bound);
    CHECK(iota_exact(g, k13).iota == 1);
}

TEST_CASE("case 2.2.2 with I an F-copy and three links") {
    Pattern k13 = builtin_pattern("k13");
    Graph g = make_graph(8, {{0, 1}, {0, 2}, {0, 3}, {4, 5}, {4, 6}, {4, 7}, {1, 5}, {2, 6},
                             {3, 7}});
    Certificate cert = certified(g, k13);
    CHECK(has_tag(cert, CaseTag::Case2_2_2, 0));
    CHECK(local_of(cert, CaseTag::Case2_2_2, "branch") == "A>=3");
    CHECK(cert.set == VertexSet::of({0, 4}));
}

TEST_CASE("disconnected input handled per component") {
    Pattern p3 = builtin_pattern("p3");
    // C6 (special) + a 5-path (not special) + a bare 3-path (special)
    std::vector<Edge> es;
    for (int i = 0; i < 6; ++i) es.emplace_back(i, (i + 1) % 6 == 0 ? 0 : i + 1);
    es.emplace_back(6, 7);
    es.emplace_back(7, 8);
    es.emplace_back(8, 9);
    es.emplace_back(9, 10);
    es.emplace_back(11, 12);
    es.emplace_back(12, 13);
    std::sort(es.begin(), es.end());
    Graph g = make_graph(14, es);
    REQUIRE_FALSE(g.is_connected());

    Certificate cert = isolate(g, p3);
    CHECK(is_isolating(g, p3, cert.set));
    CHECK(cert.special_components.size() == 2);
    CHECK(cert.special_components[0] == VertexSet::of({0, 1, 2, 3, 4, 5}));
    CHECK(cert.special_components[1] == VertexSet::of({11, 12, 13}));
    // 2 for the cycle, 1 for the path, 1 for the copy
    CHECK(cert.size() == 4);
    CHECK(cert.size() == iota_exact(g, p3).iota);
}

TEST_CASE("pure special graphs meet the bound exactly") {
    Pattern p3 = builtin_pattern("p3");
    // two 3-path gadgets plus one tree edge: the 7-edge extremal graph
    Graph g = make_graph(8, {{0, 1}, {2, 3}, {3, 4}, {0, 3}, {5, 6}, {6, 7}, {1, 6}});
    Certificate cert = certified(g, p3);
    CHECK(cert.bound == 2);
    CHECK(cert.size() == 2);
    CHECK(iota_exact(g, p3).iota == 2);
}

TEST_CASE("exhaustive certification on small graphs") {
    std::vector<Pattern> pats;
    for (const char* name : {"p3", "k3", "k13"}) pats.push_back(builtin_pattern(name));
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : oracle::all_connected_labelled(n)) {
            for (const Pattern& f : pats) {
                if (is_special_pair(g, f)) continue;
                Certificate cert = isolate(g, f);
                CHECK(is_isolating(g, f, cert.set));
                CHECK(cert.size() <= cert.bound);
                CHECK(cert.size() >= oracle::iota_brute(g, f.f));
            }
        }
    }
}

TEST_CASE("determinism") {
    Pattern p3 = builtin_pattern("p3");
    Graph g = make_graph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8},
                              {8, 9}, {4, 9}});
    Certificate a = isolate(g, p3);
    Certificate b = isolate(g, p3);
    CHECK(a.set == b.set);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        CHECK(a.trace[i].tag == b.trace[i].tag);
        CHECK(a.trace[i].center == b.trace[i].center);
        CHECK(a.trace[i].locals == b.trace[i].locals);
    }
}
