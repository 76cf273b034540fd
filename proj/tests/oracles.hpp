#ifndef OHBA_TESTS_ORACLES_HPP
#define OHBA_TESTS_ORACLES_HPP

// Deliberately dumb reference implementations for cross-checking the
// engine.  Everything here enumerates the full product space with an
// odometer and checks properness pairwise, sharing no code with the
// engine's backtracking or range machinery.

#include <optional>
#include <set>
#include <vector>

#include "ohba/graph.hpp"
#include "ohba/list_assignment.hpp"

namespace ohba::test {

// Visits every product assignment (proper or not); returns false from the
// callback to stop.
template <typename Graph, typename Fn>
void for_each_product_coloring(const Graph& g, const ListAssignment& L, Fn&& fn) {
    const int n = g.vertex_count();
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    if (n == 0) return;
    while (true) {
        Coloring f;
        f.assignment.resize(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v)
            f.assignment[static_cast<std::size_t>(v)] =
                L.list(v)[idx[static_cast<std::size_t>(v)]];
        if (!fn(f)) return;
        int v = n - 1;
        while (v >= 0 && idx[static_cast<std::size_t>(v)] + 1 == L.list(v).size()) {
            idx[static_cast<std::size_t>(v)] = 0;
            --v;
        }
        if (v < 0) return;
        ++idx[static_cast<std::size_t>(v)];
    }
}

template <typename Graph>
bool oracle_proper(const Graph& g, const Coloring& f) {
    const int n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) && f.at(u) == f.at(v)) return false;
    return true;
}

template <typename Graph>
bool oracle_colorable(const Graph& g, const ListAssignment& L) {
    bool found = false;
    for_each_product_coloring(g, L, [&](const Coloring& f) {
        if (oracle_proper(g, f)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

template <typename Graph>
std::set<ColorSet> oracle_ranges(const Graph& g, const ListAssignment& L) {
    std::set<ColorSet> out;
    for_each_product_coloring(g, L, [&](const Coloring& f) {
        if (oracle_proper(g, f)) out.insert(f.range());
        return true;
    });
    return out;
}

} // namespace ohba::test

#endif
