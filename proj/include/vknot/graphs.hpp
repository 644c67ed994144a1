#pragma once

// Labelled multigraphs on the cycles of a smoothing.
//
// T_O(D) has a vertex per cycle of the oriented smoothing, T_S(D) a vertex
// per cycle of the alternately coloured smoothing. Both have one edge per
// classical crossing joining the cycles that meet its smoothing site, so
// loops and parallel edges are kept.

#include "vknot/disjoint_sets.hpp"
#include "vknot/gauss_code.hpp"
#include "vknot/states.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace vknot {

struct EdgeLabel {
    Parity parity = Parity::Even;
    int sign = +1;

    friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

inline std::string to_string(EdgeLabel l) {
    return std::string(l.parity == Parity::Even ? "e" : "o") + (l.sign > 0 ? "+" : "-");
}

// The two label classes of the doubled theory: (e,-),(o,+) behave like a
// negative sign and (e,+),(o,-) like a positive one. For even diagrams this
// is just the crossing sign.
inline int doubled_sign(EdgeLabel l) { return l.parity == Parity::Odd ? -l.sign : l.sign; }

struct GraphEdge {
    std::size_t u = 0;
    std::size_t v = 0;
    EdgeLabel label;
    int crossing = 0;  // crossing label in the code

    bool is_loop() const { return u == v; }
};

struct StateGraph {
    std::size_t num_vertices = 0;
    std::vector<GraphEdge> edges;
};

inline StateGraph build_state_graph(const GaussCode& d, const State& s) {
    StateGraph g;
    g.num_vertices = s.num_cycles();
    std::vector<Parity> parity(d.num_crossings(), Parity::Even);
    for (const auto& info : crossing_parities(d)) parity[static_cast<std::size_t>(info.label - 1)] = info.parity;
    for (std::size_t c = 0; c < d.num_crossings(); ++c) {
        auto site = site_cycles(d, s, c);
        g.edges.push_back({static_cast<std::size_t>(site.first), static_cast<std::size_t>(site.second),
                           EdgeLabel{parity[c], d.crossing_sign(c)}, static_cast<int>(c) + 1});
    }
    return g;
}

inline StateGraph build_T_O(const GaussCode& d) { return build_state_graph(d, oriented_smoothing(d)); }

inline StateGraph build_T_S(const GaussCode& d) { return build_state_graph(d, alternately_coloured_smoothing(d)); }

inline StateGraph without_loops(const StateGraph& g) {
    StateGraph out{g.num_vertices, {}};
    std::copy_if(g.edges.begin(), g.edges.end(), std::back_inserter(out.edges),
                 [](const GraphEdge& e) { return !e.is_loop(); });
    return out;
}

// Connected components after deleting every edge whose label fails `keep`.
template <class Keep>
std::size_t subgraph_components(const StateGraph& g, Keep keep) {
    DisjointSets sets(g.num_vertices);
    for (const auto& e : g.edges)
        if (keep(e.label)) sets.unite(e.u, e.v);
    return sets.num_sets();
}

inline std::size_t num_components(const StateGraph& g) {
    return subgraph_components(g, [](EdgeLabel) { return true; });
}

inline bool is_bipartite(const StateGraph& g) {
    std::vector<std::vector<std::size_t>> adj(g.num_vertices);
    for (const auto& e : g.edges) {
        if (e.is_loop()) return false;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> colour(g.num_vertices, -1);
    for (std::size_t s = 0; s < g.num_vertices; ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : adj[v]) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[v];
                    stack.push_back(w);
                } else if (colour[w] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Blocks

struct BlockDecomposition {
    std::vector<std::vector<std::size_t>> blocks;  // edge indices into the graph
    std::vector<std::size_t> cut_vertices;         // sorted
};

// Biconnected components of the loopless reduction (Tarjan, edge stack).
// Each loop then joins the first block containing its vertex; loops at a
// vertex outside every block form one block together. Loops never create
// cut vertices.
inline BlockDecomposition blocks_and_cut_vertices(const StateGraph& g) {
    const std::size_t nv = g.num_vertices;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nv);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        if (e.is_loop()) continue;
        adj[e.u].push_back({e.v, i});
        adj[e.v].push_back({e.u, i});
    }

    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> disc(nv, none), low(nv, 0);
    std::vector<bool> is_cut(nv, false);
    std::vector<std::size_t> edge_stack;
    BlockDecomposition out;
    std::size_t timer = 0;

    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t parent_edge) {
        disc[v] = low[v] = timer++;
        std::size_t children = 0;
        for (auto [w, e] : adj[v]) {
            if (e == parent_edge) continue;
            if (disc[w] == none) {
                edge_stack.push_back(e);
                ++children;
                dfs(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    if (parent_edge != none) is_cut[v] = true;
                    std::vector<std::size_t> block;
                    while (true) {
                        auto top = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(top);
                        if (top == e) break;
                    }
                    std::sort(block.begin(), block.end());
                    out.blocks.push_back(std::move(block));
                }
            } else if (disc[w] < disc[v]) {
                edge_stack.push_back(e);
                low[v] = std::min(low[v], disc[w]);
            }
        }
        if (parent_edge == none && children > 1) is_cut[v] = true;
    };
    for (std::size_t v = 0; v < nv; ++v)
        if (disc[v] == none) dfs(v, none);

    std::vector<std::size_t> first_block(nv, none);
    for (std::size_t b = 0; b < out.blocks.size(); ++b)
        for (auto e : out.blocks[b])
            for (auto v : {g.edges[e].u, g.edges[e].v})
                if (first_block[v] == none) first_block[v] = b;
    std::vector<std::size_t> loop_block(nv, none);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        if (!e.is_loop()) continue;
        std::size_t v = e.u;
        if (first_block[v] != none) {
            out.blocks[first_block[v]].push_back(i);
        } else {
            if (loop_block[v] == none) {
                loop_block[v] = out.blocks.size();
                out.blocks.emplace_back();
            }
            out.blocks[loop_block[v]].push_back(i);
        }
    }
    for (std::size_t v = 0; v < nv; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

// Every block carries edges of one class only.
template <class ClassOf>
bool is_homogeneous(const StateGraph& g, ClassOf class_of) {
    for (const auto& block : blocks_and_cut_vertices(g).blocks) {
        auto first = class_of(g.edges[block.front()].label);
        for (auto e : block)
            if (class_of(g.edges[e].label) != first) return false;
    }
    return true;
}

inline bool is_l_homogeneous(const GaussCode& d) {
    require_knot(d, "is_l_homogeneous");
    return is_homogeneous(without_loops(build_T_O(d)), [](EdgeLabel l) { return l.sign; });
}

inline bool is_d_homogeneous(const GaussCode& d) {
    require_knot(d, "is_d_homogeneous");
    return is_homogeneous(build_T_S(d), [](EdgeLabel l) { return doubled_sign(l); });
}

// ---------------------------------------------------------------------------
// Derived graph: a vertex per component of each of the two class subgraphs,
// an edge per vertex of the state graph joining the two components holding it.

struct DerivedGraph {
    std::size_t num_vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

template <class ClassA, class ClassB>
DerivedGraph build_derived(const StateGraph& g, ClassA in_a, ClassB in_b) {
    DisjointSets a(g.num_vertices), b(g.num_vertices);
    for (const auto& e : g.edges) {
        if (in_a(e.label)) a.unite(e.u, e.v);
        if (in_b(e.label)) b.unite(e.u, e.v);
    }
    std::vector<std::size_t> id_a(g.num_vertices, static_cast<std::size_t>(-1));
    std::vector<std::size_t> id_b(g.num_vertices, static_cast<std::size_t>(-1));
    DerivedGraph out;
    for (std::size_t v = 0; v < g.num_vertices; ++v) {
        auto r = a.find(v);
        if (id_a[r] == static_cast<std::size_t>(-1)) id_a[r] = out.num_vertices++;
    }
    for (std::size_t v = 0; v < g.num_vertices; ++v) {
        auto r = b.find(v);
        if (id_b[r] == static_cast<std::size_t>(-1)) id_b[r] = out.num_vertices++;
    }
    for (std::size_t v = 0; v < g.num_vertices; ++v) out.edges.emplace_back(id_a[a.find(v)], id_b[b.find(v)]);
    return out;
}

inline long first_betti(const DerivedGraph& g) {
    DisjointSets sets(g.num_vertices);
    for (auto [u, v] : g.edges) sets.unite(u, v);
    return static_cast<long>(g.edges.size()) - static_cast<long>(g.num_vertices) + static_cast<long>(sets.num_sets());
}

template <class ClassA, class ClassB>
long betti_derived(const StateGraph& g, ClassA in_a, ClassB in_b) {
    return first_betti(build_derived(g, in_a, in_b));
}

// ---------------------------------------------------------------------------
// DOT export for debugging.

inline std::string to_dot(const StateGraph& g, const std::string& name = "T") {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (std::size_t v = 0; v < g.num_vertices; ++v) os << "  c" << v << ";\n";
    for (const auto& e : g.edges)
        os << "  c" << e.u << " -- c" << e.v << " [label=\"" << to_string(e.label) << "\"];\n";
    os << "}\n";
    return os.str();
}

inline std::string to_dot(const DerivedGraph& g, const std::string& name = "G") {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (std::size_t v = 0; v < g.num_vertices; ++v) os << "  n" << v << ";\n";
    for (auto [u, v] : g.edges) os << "  n" << u << " -- n" << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace vknot
