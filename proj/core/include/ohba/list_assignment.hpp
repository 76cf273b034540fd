#ifndef OHBA_LIST_ASSIGNMENT_HPP
#define OHBA_LIST_ASSIGNMENT_HPP

#include <optional>
#include <vector>

#include "ohba/graph.hpp"

namespace ohba {

using Color = int;
// Canonical color set: sorted ascending, no duplicates.  Colors are
// nonnegative integers with no meaning beyond equality.
using ColorSet = std::vector<Color>;

// Returns s sorted and deduplicated.
ColorSet canonical_color_set(ColorSet s);
bool color_set_contains(const ColorSet& s, Color c);
// True iff sub is a subset of super (both canonical).
bool color_set_subset(const ColorSet& sub, const ColorSet& super);
ColorSet color_set_minus(const ColorSet& s, const ColorSet& remove);
// The integer interval [lo, hi] as a ColorSet; empty when lo > hi.
ColorSet color_range(Color lo, Color hi);

// One color list per vertex, indexed densely.  Every list is nonempty and
// stored canonically.  uniform_size() is set iff all lists have one size
// (a "k-assignment").  Immutable in practice: build once, then share.
class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(std::vector<ColorSet> lists);

    int vertex_count() const { return static_cast<int>(lists_.size()); }
    const ColorSet& list(Vertex v) const { return lists_[static_cast<std::size_t>(v)]; }
    const std::vector<ColorSet>& lists() const { return lists_; }

    std::optional<int> uniform_size() const { return uniform_size_; }

    // All distinct colors across lists, canonical.
    ColorSet palette() const;

private:
    std::vector<ColorSet> lists_;
    std::optional<int> uniform_size_;
};

// A full vertex coloring; color(v) = assignment[v].
struct Coloring {
    std::vector<Color> assignment;

    Color at(Vertex v) const { return assignment[static_cast<std::size_t>(v)]; }
    ColorSet range() const;
    // Range of the colors on vertices [from, to).
    ColorSet range_of(Vertex from, Vertex to) const;
};

// Independent validator used to check every witness the searches emit:
// adjacent vertices differ and every color comes from its list.
// Deliberately a plain double loop over vertex pairs.
template <typename Graph>
bool is_proper_l_coloring(const Graph& g, const ListAssignment& L, const Coloring& f) {
    const int n = g.vertex_count();
    if (L.vertex_count() != n || static_cast<int>(f.assignment.size()) != n) return false;
    for (Vertex v = 0; v < n; ++v) {
        if (!color_set_contains(L.list(v), f.at(v))) return false;
        for (Vertex u = v + 1; u < n; ++u)
            if (g.adjacent(u, v) && f.at(u) == f.at(v)) return false;
    }
    return true;
}

} // namespace ohba

#endif
