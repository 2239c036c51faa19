#pragma once

#include "tubal/cone.hpp"

namespace tubal {

/// Directed graph on tube indices: edge i -> j whenever tube (i,j) is
/// nonzero at the working tolerance. Only the support pattern matters.
struct SupportDigraph {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> adj;
};

inline SupportDigraph support_digraph(const TubalMatrix<double>& a, double tol) {
    SupportDigraph g{a.n(), std::vector<std::vector<std::size_t>>(a.n())};
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j)
            if (classify(a.tube(i, j), tol) != ConeClass::Zero) g.adj[i].push_back(j);
    return g;
}

/// Tarjan's algorithm, iterative. Components come out in reverse topological
/// order of the condensation; each component is sorted ascending.
inline std::vector<std::vector<std::size_t>> tarjan_scc(const SupportDigraph& g) {
    const std::size_t n = g.n;
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> sccs;
    std::size_t counter = 0;

    struct Frame {
        std::size_t v;
        std::size_t next_edge;
    };
    std::vector<Frame> frames;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        frames.push_back({root, 0});
        index[root] = lowlink[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next_edge < g.adj[f.v].size()) {
                const std::size_t w = g.adj[f.v][f.next_edge++];
                if (index[w] == unvisited) {
                    index[w] = lowlink[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                if (lowlink[f.v] == index[f.v]) {
                    std::vector<std::size_t> comp;
                    std::size_t w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp.push_back(w);
                    } while (w != f.v);
                    std::sort(comp.begin(), comp.end());
                    sccs.push_back(std::move(comp));
                }
                const std::size_t v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
            }
        }
    }
    return sccs;
}

}  // namespace tubal
