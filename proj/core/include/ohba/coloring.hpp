#ifndef OHBA_COLORING_HPP
#define OHBA_COLORING_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ohba/graph.hpp"
#include "ohba/list_assignment.hpp"

namespace ohba {

// The distinct ranges f(V) over all proper L-colorings f of a designated
// graph, each stored canonically and listed in lexicographic order.  A
// witness coloring for any member can be reconstructed with
// find_coloring_with_range.
struct RangeSet {
    std::vector<ColorSet> ranges;

    std::size_t count() const { return ranges.size(); }
    bool contains(const ColorSet& r) const;
};

// Deterministic backtracking search for a proper L-coloring: the
// most-constrained vertex (fewest currently available colors) is colored
// first, ties broken by smallest index, colors tried in ascending order.
// Returns the first coloring found, or nullopt if none exists.
// Rejects an assignment that does not cover every vertex.
std::optional<Coloring> find_proper_coloring(const GenericGraph& g, const ListAssignment& L);
std::optional<Coloring> find_proper_coloring(const JoinGraph& g, const ListAssignment& L);

// Exact enumeration of R(G, L).  Exhaustive over all proper colorings, so
// the graph is capped at 16 vertices; larger inputs are rejected.
RangeSet enumerate_ranges(const GenericGraph& g, const ListAssignment& L);

// A proper L-coloring whose range is exactly `target`, if one exists.
std::optional<Coloring> find_coloring_with_range(const GenericGraph& g,
                                                 const ListAssignment& L,
                                                 const ColorSet& target);

// L with domain restricted to W u X (the first p + a vertices).
ListAssignment restrict_wx(const JoinGraph& g, const ListAssignment& L);

struct JoinColorability {
    bool colorable = false;
    // Full proper L-coloring when colorable: a witness coloring of W u X
    // realizing a surviving range, extended greedily over Y.
    std::optional<Coloring> witness;
    // |R(G[W u X], L')|, the quantity the decision turns on.
    std::size_t wx_range_count = 0;
};

// Join-aware decision: K_p v K_{a,b} is L-colorable iff some range R of
// G[W u X] leaves every Y-list with a color outside R.  Equivalent to
// find_proper_coloring on every input, but scales with |R(G[WuX],L')| * b
// instead of with the full search tree.  Requires p + a <= 16.
JoinColorability is_colorable_join_fast(const JoinGraph& g, const ListAssignment& L);

// Certified upper bound chi_l(K_p v K_{a,b}) <= p + a + 1, used to
// terminate exact searches.  No enumeration.
int list_chromatic_upper_bound(const JoinGraph& g);

} // namespace ohba

#endif
