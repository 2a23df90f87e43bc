#include "isokit/proof.hpp"

#include <algorithm>

#include "isokit/exact.hpp"

namespace isokit {

std::string_view to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::NoCopy: return "NoCopy";
        case CaseTag::WholeNbhd: return "WholeNbhd";
        case CaseTag::Case1Strict: return "Case1-strict";
        case CaseTag::Case1_1: return "Case1.1";
        case CaseTag::Case1_2JEmpty: return "Case1.2-Jempty";
        case CaseTag::Case1_2JSpecial: return "Case1.2-Jspecial";
        case CaseTag::Case2C6: return "Case2-C6";
        case CaseTag::Case2_1: return "Case2.1";
        case CaseTag::Case2_2_1: return "Case2.2.1";
        case CaseTag::Case2_2_2: return "Case2.2.2";
    }
    return "?";
}

SolverError::SolverError(SolverErrorKind kind, const std::string& msg,
                         std::vector<CaseStep> trace)
    : std::runtime_error(msg), kind_(kind), trace_(std::move(trace)) {}

int bound(int m, int k) {
    if (m < 0 || k < 0) throw ValidationError("bound: m and k must be non-negative");
    return (m + 1) / (k + 2);
}

namespace {

std::string vert_str(Vertex v) { return std::to_string(v); }

// Link edges between N(v) and a component, oriented as (x in N(v), y in H)
// and sorted; the smallest pair is the canonical x_H, y_H.
std::vector<Edge> oriented_links(const Graph& g, VertexSet nv_open, VertexSet comp) {
    std::vector<Edge> out;
    for (auto [a, b] : edges_between(g, nv_open, comp)) {
        if (nv_open.contains(a))
            out.emplace_back(a, b);
        else
            out.emplace_back(b, a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct Solver {
    const Pattern& f;
    std::vector<CaseStep>& trace;

    [[noreturn]] void violate(const std::string& msg) const {
        throw SolverError(SolverErrorKind::ProofInvariantViolated, msg, trace);
    }

    std::size_t push_step(CaseTag tag, int depth, Vertex center,
                          std::vector<std::pair<std::string, std::string>> locals) {
        trace.push_back(CaseStep{tag, depth, center, std::move(locals)});
        return trace.size() - 1;
    }

    // Every return funnels through here: the set must isolate and must obey
    // (k+2)|D| <= m+1, which is exactly the induction hypothesis the parent
    // level consumes.
    VertexSet finish(const Graph& g, VertexSet d) const {
        if (!is_isolating(g, f, d)) violate("returned set is not isolating");
        if ((f.k + 2) * d.size() > g.edge_count() + 1)
            violate("size certification failed: (k+2)|D| > m+1");
        return d;
    }

    VertexSet solve_in(const Graph& g, VertexSet comp, int depth) {
        SubgraphHandle h = induced_subgraph(g, comp);
        return h.to_original(solve(h.graph, depth));
    }

    Vertex antipode_in(const Graph& cycle, Vertex s) const {
        std::vector<int> dist = bfs_distances(cycle, s);
        for (Vertex u = 0; u < cycle.vertex_count(); ++u)
            if (dist[static_cast<std::size_t>(u)] == 3) return u;
        violate("expected a vertex at distance 3 on a 6-cycle");
    }

    struct Split {
        Vertex v = -1;
        VertexSet nv_closed, nv_open;
        std::vector<VertexSet> comp_sets;
        std::vector<SubgraphHandle> comp_graphs;
        std::vector<bool> comp_special;
    };

    // Requires: g connected, (g, f) not special, k >= 2.
    VertexSet solve(const Graph& g, int depth) {
        if (!contains_copy(g, f).has_value()) {
            push_step(CaseTag::NoCopy, depth, -1, {});
            return finish(g, {});
        }

        VertexSet centers = find_copy_centers(g, f);
        Vertex v = -1;
        int best = -1;
        for (Vertex u : centers.to_vector())
            if (g.degree(u) > best) {
                best = g.degree(u);
                v = u;
            }
        if (v < 0) violate("a copy exists but no copy center was found");

        Split s;
        s.v = v;
        s.nv_closed = g.closed_neighborhood(v);
        s.nv_open = s.nv_closed - VertexSet::single(v);
        if (s.nv_closed == g.vertices()) {
            push_step(CaseTag::WholeNbhd, depth, v, {});
            return finish(g, VertexSet::single(v));
        }

        s.comp_sets = component_sets_within(g, g.vertices() - s.nv_closed);
        bool any_special = false;
        for (VertexSet c : s.comp_sets) {
            s.comp_graphs.push_back(induced_subgraph(g, c));
            s.comp_special.push_back(is_special_pair(s.comp_graphs.back().graph, f));
            any_special = any_special || s.comp_special.back();
        }
        if (!any_special) return solve_case1(g, depth, s);
        return solve_case2(g, depth, s);
    }

    // Case 1: no component of G - N[v] forms a special pair with F.
    VertexSet solve_case1(const Graph& g, int depth, const Split& s) {
        const int k = f.k;
        const int m = g.edge_count();
        int sum_eh_plus1 = 0;
        for (const auto& h : s.comp_graphs) sum_eh_plus1 += h.graph.edge_count() + 1;

        if (m >= k + 1 + sum_eh_plus1) {
            push_step(CaseTag::Case1Strict, depth, s.v, {});
            VertexSet d = VertexSet::single(s.v);
            for (std::size_t i = 0; i < s.comp_sets.size(); ++i)
                d |= solve_in(g, s.comp_sets[i], depth + 1);
            return finish(g, d);
        }
        if (m < k + sum_eh_plus1)
            violate("Case 1: m below k + sum(|E(H)|+1), contradicting the edge count bound");

        // Equality: E(G) decomposes as E(F1) plus, per component, E(H) and a
        // single link edge. Verify the decomposition before relying on it.
        if (induced_subgraph(g, s.nv_closed).graph.edge_count() != k)
            violate("Case 1: G[N[v]] carries more than k edges in the equality case");
        std::vector<Edge> link(s.comp_sets.size());
        for (std::size_t i = 0; i < s.comp_sets.size(); ++i) {
            auto links = oriented_links(g, s.nv_open, s.comp_sets[i]);
            if (links.size() != 1)
                violate("Case 1: component is not linked by exactly one edge in the equality case");
            link[i] = links[0];
        }

        std::vector<VertexSet> dh(s.comp_sets.size());
        for (std::size_t i = 0; i < s.comp_sets.size(); ++i)
            dh[i] = solve_in(g, s.comp_sets[i], depth + 1);

        for (std::size_t i = 0; i < s.comp_sets.size(); ++i) {
            if ((k + 2) * dh[i].size() <= s.comp_graphs[i].graph.edge_count()) {
                push_step(CaseTag::Case1_1, depth, s.v,
                          {{"I", s.comp_sets[i].to_string()}});
                VertexSet d = VertexSet::single(s.v);
                for (const VertexSet& part : dh) d |= part;
                return finish(g, d);
            }
        }
        return solve_case1_2(g, depth, s, link);
    }

    // Case 1.2: every component sits exactly at (k+2)|D_H| = |E(H)|+1.
    VertexSet solve_case1_2(const Graph& g, int depth, const Split& s,
                            const std::vector<Edge>& link) {
        const VertexSet i_set = s.comp_sets[0];
        const auto [xi, yi] = link[0];

        VertexSet i_minus_y = i_set;
        i_minus_y.remove(yi);
        std::vector<VertexSet> j_sets = component_sets_within(g, i_minus_y);
        std::vector<SubgraphHandle> j_graphs;
        std::vector<bool> j_special;
        bool any_j_special = false;
        for (VertexSet js : j_sets) {
            j_graphs.push_back(induced_subgraph(g, js));
            j_special.push_back(is_special_pair(j_graphs.back().graph, f));
            any_j_special = any_j_special || j_special.back();
        }

        std::vector<std::pair<std::string, std::string>> locals = {
            {"I", i_set.to_string()}, {"x_I", vert_str(xi)}, {"y_I", vert_str(yi)}};

        if (!any_j_special) {
            push_step(CaseTag::Case1_2JEmpty, depth, s.v, std::move(locals));
            VertexSet removed = VertexSet::of({s.v, yi});
            VertexSet d = VertexSet::single(xi);
            for (VertexSet c : component_sets_within(g, g.vertices() - removed)) {
                SubgraphHandle h = induced_subgraph(g, c);
                if (is_special_pair(h.graph, f))
                    violate("Case 1.2: component of G - {v, y_I} is special");
                d |= h.to_original(solve(h.graph, depth + 1));
            }
            return finish(g, d);
        }

        VertexSet gstar_set = g.vertices() - i_set;
        SubgraphHandle gstar = induced_subgraph(g, gstar_set);
        if (!gstar.graph.is_connected()) violate("Case 1.2: G - V(I) is disconnected");
        std::size_t step_idx;
        VertexSet d;
        if (s.comp_sets.size() == 1) {
            if (!is_isomorphic(gstar.graph, f.f))
                violate("Case 1.2: single component, yet G - V(I) is not an F-copy");
            locals.emplace_back("G*", "F-copy");
            step_idx = push_step(CaseTag::Case1_2JSpecial, depth, s.v, std::move(locals));
        } else {
            if (f.is_p3() && is_six_cycle(gstar.graph))
                violate("Case 1.2: G - V(I) is a 6-cycle");
            if (is_special_pair(gstar.graph, f))
                violate("Case 1.2: (G - V(I), F) is special");
            step_idx = push_step(CaseTag::Case1_2JSpecial, depth, s.v, std::move(locals));
            d |= gstar.to_original(solve(gstar.graph, depth + 1));
        }
        d.add(yi);

        for (std::size_t j = 0; j < j_sets.size(); ++j) {
            if (!j_special[j]) {
                d |= j_graphs[j].to_original(solve(j_graphs[j].graph, depth + 1));
                continue;
            }
            if (is_isomorphic(j_graphs[j].graph, f.f)) continue;  // D_J empty
            if (!(f.is_p3() && is_six_cycle(j_graphs[j].graph)))
                violate("Case 1.2: special J is neither an F-copy nor a 6-cycle");
            std::uint64_t zbits = g.adjacency_bits(yi) & j_sets[j].bits();
            if (zbits == 0) violate("Case 1.2: y_I has no neighbour in a component of I - y_I");
            Vertex z = VertexSet::from_bits(zbits).min();
            Vertex z_local = -1;
            for (std::size_t t = 0; t < j_graphs[j].back_map.size(); ++t)
                if (j_graphs[j].back_map[t] == z) z_local = static_cast<Vertex>(t);
            Vertex zprime = j_graphs[j].to_original(antipode_in(j_graphs[j].graph, z_local));
            trace[step_idx].locals.emplace_back("z_J", vert_str(z));
            trace[step_idx].locals.emplace_back("z_J'", vert_str(zprime));
            d.add(zprime);
        }
        return finish(g, d);
    }

    // Case 2: some component of G - N[v] forms a special pair with F.
    VertexSet solve_case2(const Graph& g, int depth, const Split& s) {
        // A special component isomorphic to C6 forces F = P3.
        if (f.is_p3()) {
            for (std::size_t i = 0; i < s.comp_sets.size(); ++i)
                if (s.comp_special[i] && is_six_cycle(s.comp_graphs[i].graph))
                    return solve_case2_c6(g, depth, s, i);
        }

        // All special components are F-copies now. Look for an x in N(v)
        // linked to at least two of them.
        std::vector<std::vector<Edge>> links(s.comp_sets.size());
        for (std::size_t i = 0; i < s.comp_sets.size(); ++i)
            links[i] = oriented_links(g, s.nv_open, s.comp_sets[i]);

        for (Vertex x : s.nv_open.to_vector()) {
            int count = 0;
            for (std::size_t i = 0; i < s.comp_sets.size(); ++i)
                if (s.comp_special[i] &&
                    std::any_of(links[i].begin(), links[i].end(),
                                [&](Edge e) { return e.first == x; }))
                    ++count;
            if (count >= 2) return solve_case2_1(g, depth, s, links, x);
        }
        return solve_case2_2(g, depth, s, links);
    }

    VertexSet solve_case2_c6(const Graph& g, int depth, const Split& s, std::size_t hi) {
        const SubgraphHandle& h = s.comp_graphs[hi];
        auto links = oriented_links(g, s.nv_open, s.comp_sets[hi]);
        if (links.empty()) violate("Case 2 C6: component has no link edge");
        Vertex y1 = links[0].second;
        if (g.degree(s.v) < 3)
            violate("Case 2 C6: center degree below 3 contradicts the choice of v");
        Vertex y1_local = -1;
        for (std::size_t t = 0; t < h.back_map.size(); ++t)
            if (h.back_map[t] == y1) y1_local = static_cast<Vertex>(t);
        Vertex y4_local = antipode_in(h.graph, y1_local);
        Vertex y4 = h.to_original(y4_local);
        VertexSet removed = h.to_original(h.graph.closed_neighborhood(y4_local));

        SubgraphHandle gstar = induced_subgraph(g, g.vertices() - removed);
        if (!gstar.graph.is_connected()) violate("Case 2 C6: G - N_H[y4] is disconnected");
        if (is_special_pair(gstar.graph, f))
            violate("Case 2 C6: (G - N_H[y4], F) is special");
        push_step(CaseTag::Case2C6, depth, s.v,
                  {{"H", s.comp_sets[hi].to_string()},
                   {"y_1", vert_str(y1)},
                   {"y_4", vert_str(y4)}});
        VertexSet d = VertexSet::single(y4);
        d |= gstar.to_original(solve(gstar.graph, depth + 1));
        return finish(g, d);
    }

    VertexSet solve_case2_1(const Graph& g, int depth, const Split& s,
                            const std::vector<std::vector<Edge>>& links, Vertex x) {
        VertexSet xset;
        for (std::size_t i = 0; i < s.comp_sets.size(); ++i) {
            if (!s.comp_special[i]) continue;
            bool linked_to_x = std::any_of(links[i].begin(), links[i].end(),
                                           [&](Edge e) { return e.first == x; });
            if (!linked_to_x) xset.add(links[i][0].first);
        }
        push_step(CaseTag::Case2_1, depth, s.v,
                  {{"x", vert_str(x)}, {"X", xset.to_string()}});
        VertexSet d = VertexSet::of({s.v, x}) | xset;
        for (std::size_t i = 0; i < s.comp_sets.size(); ++i)
            if (!s.comp_special[i]) d |= solve_in(g, s.comp_sets[i], depth + 1);
        return finish(g, d);
    }

    VertexSet solve_case2_2(const Graph& g, int depth, const Split& s,
                            const std::vector<std::vector<Edge>>& links) {
        std::size_t hi = 0;
        while (hi < s.comp_sets.size() && !s.comp_special[hi]) ++hi;
        if (hi == s.comp_sets.size()) violate("Case 2.2: no special component found");
        if (links[hi].empty()) violate("Case 2.2: special component has no link edge");
        const auto [x, y] = links[hi][0];
        VertexSet linked_xs;
        for (Edge e : links[hi]) linked_xs.add(e.first);

        if (linked_xs == VertexSet::single(x))
            return solve_case2_2_1(g, depth, s, hi, x, y);
        return solve_case2_2_2(g, depth, s, hi, links[hi], x, y, linked_xs);
    }

    // Case 2.2.1: the F-copy component H is linked to a single x in N(v).
    VertexSet solve_case2_2_1(const Graph& g, int depth, const Split& s, std::size_t hi,
                              Vertex x, Vertex y) {
        VertexSet removed = s.comp_sets[hi];
        removed.add(x);
        std::vector<VertexSet> parts = component_sets_within(g, g.vertices() - removed);
        int gv_idx = -1;
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (parts[i].contains(s.v)) gv_idx = static_cast<int>(i);
        if (gv_idx < 0) violate("Case 2.2.1: lost the component containing v");
        SubgraphHandle gv = induced_subgraph(g, parts[static_cast<std::size_t>(gv_idx)]);

        std::string subcase;
        Vertex w2 = -1;
        if (!is_special_pair(gv.graph, f)) {
            subcase = "non-special";
        } else if (is_isomorphic(gv.graph, f.f)) {
            subcase = "F-copy";
        } else {
            // G_v^* is a 6-cycle through v; take the opposite cycle vertex.
            if (!(f.is_p3() && is_six_cycle(gv.graph)))
                violate("Case 2.2.1: special G_v^* is neither an F-copy nor a 6-cycle");
            Vertex v_local = -1;
            for (std::size_t t = 0; t < gv.back_map.size(); ++t)
                if (gv.back_map[t] == s.v) v_local = static_cast<Vertex>(t);
            w2 = gv.to_original(antipode_in(gv.graph, v_local));
            subcase = "C6";
        }
        std::vector<std::pair<std::string, std::string>> locals = {
            {"H", s.comp_sets[hi].to_string()},
            {"x", vert_str(x)},
            {"y", vert_str(y)},
            {"G_v*", subcase}};
        if (w2 >= 0) locals.emplace_back("w_2", vert_str(w2));
        push_step(CaseTag::Case2_2_1, depth, s.v, std::move(locals));

        VertexSet d = VertexSet::single(x);
        if (subcase == "non-special")
            d |= gv.to_original(solve(gv.graph, depth + 1));
        else if (subcase == "C6")
            d.add(w2);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (static_cast<int>(i) == gv_idx) continue;
            SubgraphHandle side = induced_subgraph(g, parts[i]);
            if (is_special_pair(side.graph, f))
                violate("Case 2.2.1: side component of G - X is special");
            d |= side.to_original(solve(side.graph, depth + 1));
        }
        return finish(g, d);
    }

    // Case 2.2.2: H is linked to a second neighbour x' of v.
    VertexSet solve_case2_2_2(const Graph& g, int depth, const Split& s, std::size_t hi,
                              const std::vector<Edge>& hlinks, Vertex x, Vertex y,
                              VertexSet linked_xs) {
        const VertexSet h_set = s.comp_sets[hi];
        const SubgraphHandle& h = s.comp_graphs[hi];
        Vertex xp = (linked_xs - VertexSet::single(x)).min();
        Vertex yp = -1;
        for (Edge e : hlinks)
            if (e.first == xp) {
                yp = e.second;
                break;
            }

        // w: image of a dominator of F inside H.
        Vertex w = -1;
        for (Vertex t = 0; t < h.graph.vertex_count(); ++t)
            if (h.graph.closed_neighborhood(t) == h.graph.vertices()) {
                w = h.to_original(t);
                break;
            }
        if (w < 0) violate("Case 2.2.2: F-copy component has no dominating vertex");

        SubgraphHandle ih = induced_subgraph(g, g.vertices() - h_set);
        if (!ih.graph.is_connected()) violate("Case 2.2.2: G - V(H) is disconnected");

        std::vector<std::pair<std::string, std::string>> locals = {
            {"H", h_set.to_string()}, {"x", vert_str(x)},   {"y", vert_str(y)},
            {"x'", vert_str(xp)},     {"y'", vert_str(yp)}, {"w", vert_str(w)}};

        if (!is_special_pair(ih.graph, f)) {
            locals.emplace_back("I", "non-special");
            push_step(CaseTag::Case2_2_2, depth, s.v, std::move(locals));
            VertexSet d = VertexSet::single(w);
            d |= ih.to_original(solve(ih.graph, depth + 1));
            return finish(g, d);
        }
        if (f.is_p3() && is_six_cycle(ih.graph))
            violate("Case 2.2.2: G - V(H) is a 6-cycle, contradicting the choice of v");

        // I is a copy of F, so it is F1 itself and m = 2k + |A|.
        std::vector<Edge> a = edges_between(g, s.nv_open, h_set);
        locals.emplace_back("|A|", std::to_string(a.size()));
        if (a.size() >= 3) {
            locals.emplace_back("branch", "A>=3");
            push_step(CaseTag::Case2_2_2, depth, s.v, std::move(locals));
            return finish(g, VertexSet::of({s.v, w}));
        }
        if (a.size() != 2) violate("Case 2.2.2: expected exactly two link edges");
        if (w == y || w == yp) {
            locals.emplace_back("branch", "w-linked");
            push_step(CaseTag::Case2_2_2, depth, s.v, std::move(locals));
            return finish(g, VertexSet::single(w));
        }
        // Orient so that d_H(y) <= d_H(y'); the isolating check in finish
        // certifies that G - N[x'] has no copy, which the argument guarantees.
        auto local_of = [&](Vertex orig) {
            for (std::size_t t = 0; t < h.back_map.size(); ++t)
                if (h.back_map[t] == orig) return static_cast<Vertex>(t);
            violate("Case 2.2.2: link endpoint is outside H");
        };
        if (h.graph.degree(local_of(y)) > h.graph.degree(local_of(yp))) {
            std::swap(x, xp);
            std::swap(y, yp);
        }
        locals.emplace_back("branch", "pick-x'");
        locals.emplace_back("chosen", vert_str(xp));
        push_step(CaseTag::Case2_2_2, depth, s.v, std::move(locals));
        return finish(g, VertexSet::single(xp));
    }
};

}  // namespace

Certificate isolate(const Graph& g, const Pattern& f) {
    if (f.k <= 1)
        throw SolverError(SolverErrorKind::PatternTooSmall,
                          "pattern \"" + f.name + "\" has k <= 1; use the exact solver", {});
    Certificate cert;
    cert.bound = bound(g.edge_count(), f.k);
    Solver solver{f, cert.trace};

    if (g.is_connected()) {
        if (g.vertex_count() > 0 && is_special_pair(g, f)) {
            std::string msg = is_isomorphic(g, f.f)
                                  ? "special pair: G is a copy of F (" + f.name + ")"
                                  : "special pair: F=" + f.name + ", G=C6";
            throw SolverError(SolverErrorKind::SpecialPairInput, msg, {});
        }
        cert.set = solver.solve(g, 0);
        return cert;
    }

    for (VertexSet comp : component_sets(g)) {
        SubgraphHandle h = induced_subgraph(g, comp);
        if (is_special_pair(h.graph, f)) {
            cert.special_components.push_back(comp);
            if (is_isomorphic(h.graph, f.f)) {
                cert.set.add(comp.min());  // any vertex meets the unique copy
            } else {
                // C6 with F = P3: two opposite vertices cover the cycle.
                Vertex c = 0;
                VertexSet d_local = VertexSet::single(c);
                for (Vertex u = 0; u < h.graph.vertex_count(); ++u)
                    if (bfs_distances(h.graph, c)[static_cast<std::size_t>(u)] == 3)
                        d_local.add(u);
                cert.set |= h.to_original(d_local);
            }
        } else {
            cert.set |= h.to_original(solver.solve(h.graph, 0));
        }
    }
    if (!is_isolating(g, f, cert.set))
        throw SolverError(SolverErrorKind::ProofInvariantViolated,
                          "per-component set is not isolating", cert.trace);
    return cert;
}

}  // namespace isokit
