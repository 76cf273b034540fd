#include "ohba/coloring.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <set>
#include <string>
#include <unordered_set>

namespace ohba {

bool RangeSet::contains(const ColorSet& r) const {
    return std::binary_search(ranges.begin(), ranges.end(), r);
}

namespace {

constexpr Color kUncolored = -1;

void require_covers(int graph_n, const ListAssignment& L) {
    if (L.vertex_count() != graph_n)
        throw ParamError("list assignment covers " + std::to_string(L.vertex_count()) +
                         " vertices, graph has " + std::to_string(graph_n));
}

template <typename Graph>
bool conflicts(const Graph& g, const std::vector<Color>& assignment, Vertex v, Color c) {
    const int n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u)
        if (assignment[static_cast<std::size_t>(u)] == c && g.adjacent(u, v)) return true;
    return false;
}

template <typename Graph>
int available_count(const Graph& g, const ListAssignment& L,
                    const std::vector<Color>& assignment, Vertex v) {
    int count = 0;
    for (Color c : L.list(v))
        if (!conflicts(g, assignment, v, c)) ++count;
    return count;
}

template <typename Graph>
bool extend_coloring(const Graph& g, const ListAssignment& L,
                     std::vector<Color>& assignment, int uncolored) {
    if (uncolored == 0) return true;
    const int n = g.vertex_count();

    Vertex pick = -1;
    int pick_avail = INT_MAX;
    for (Vertex v = 0; v < n; ++v) {
        if (assignment[static_cast<std::size_t>(v)] != kUncolored) continue;
        const int avail = available_count(g, L, assignment, v);
        if (avail < pick_avail) {
            pick_avail = avail;
            pick = v;
            if (avail == 0) break;
        }
    }
    if (pick_avail == 0) return false;

    for (Color c : L.list(pick)) {
        if (conflicts(g, assignment, pick, c)) continue;
        assignment[static_cast<std::size_t>(pick)] = c;
        if (extend_coloring(g, L, assignment, uncolored - 1)) return true;
        assignment[static_cast<std::size_t>(pick)] = kUncolored;
    }
    return false;
}

template <typename Graph>
std::optional<Coloring> find_impl(const Graph& g, const ListAssignment& L) {
    require_covers(g.vertex_count(), L);
    std::vector<Color> assignment(static_cast<std::size_t>(g.vertex_count()), kUncolored);
    if (!extend_coloring(g, L, assignment, g.vertex_count())) return std::nullopt;
    return Coloring{std::move(assignment)};
}

} // namespace

std::optional<Coloring> find_proper_coloring(const GenericGraph& g, const ListAssignment& L) {
    return find_impl(g, L);
}

std::optional<Coloring> find_proper_coloring(const JoinGraph& g, const ListAssignment& L) {
    return find_impl(g, L);
}

namespace {

// Exhaustive range collection over dense color ids (palette <= 64), fixed
// vertex order, banned colors recomputed from earlier neighbours per node.
struct MaskEnumerator {
    const GenericGraph& g;
    const std::vector<std::vector<int>>& lists; // dense ids, ascending
    std::vector<int> color_of;
    std::unordered_set<std::uint64_t> seen;

    MaskEnumerator(const GenericGraph& gr, const std::vector<std::vector<int>>& ls)
        : g(gr), lists(ls), color_of(ls.size(), -1) {}

    void run(Vertex v, std::uint64_t range_mask) {
        const int n = g.vertex_count();
        if (v == n) {
            seen.insert(range_mask);
            return;
        }
        std::uint64_t banned = 0;
        const std::uint64_t earlier = g.neighbors_mask(v) & ((std::uint64_t{1} << v) - 1);
        for (std::uint64_t m = earlier; m;) {
            const int u = __builtin_ctzll(m);
            m &= m - 1;
            banned |= std::uint64_t{1} << color_of[static_cast<std::size_t>(u)];
        }
        for (int id : lists[static_cast<std::size_t>(v)]) {
            if ((banned >> id) & 1) continue;
            color_of[static_cast<std::size_t>(v)] = id;
            run(v + 1, range_mask | (std::uint64_t{1} << id));
        }
        color_of[static_cast<std::size_t>(v)] = -1;
    }
};

// Fallback for palettes beyond 64 colors: same enumeration over raw color
// values, ranges deduplicated in a sorted set.
struct PlainEnumerator {
    const GenericGraph& g;
    const ListAssignment& L;
    std::vector<Color> color_of;
    std::set<ColorSet> seen;

    PlainEnumerator(const GenericGraph& gr, const ListAssignment& ls)
        : g(gr), L(ls), color_of(static_cast<std::size_t>(gr.vertex_count()), kUncolored) {}

    void run(Vertex v) {
        const int n = g.vertex_count();
        if (v == n) {
            seen.insert(canonical_color_set(ColorSet(color_of.begin(), color_of.end())));
            return;
        }
        for (Color c : L.list(v)) {
            if (conflicts(g, color_of, v, c)) continue;
            color_of[static_cast<std::size_t>(v)] = c;
            run(v + 1);
        }
        color_of[static_cast<std::size_t>(v)] = kUncolored;
    }
};

} // namespace

RangeSet enumerate_ranges(const GenericGraph& g, const ListAssignment& L) {
    const int n = g.vertex_count();
    if (n > 16)
        throw ParamError("range enumeration is exhaustive and capped at 16 vertices, got " +
                         std::to_string(n));
    require_covers(n, L);

    const ColorSet palette = L.palette();
    RangeSet out;

    if (palette.size() <= 64) {
        std::vector<std::vector<int>> dense(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v)
            for (Color c : L.list(v))
                dense[static_cast<std::size_t>(v)].push_back(static_cast<int>(
                    std::lower_bound(palette.begin(), palette.end(), c) - palette.begin()));
        MaskEnumerator e(g, dense);
        e.run(0, 0);
        out.ranges.reserve(e.seen.size());
        for (std::uint64_t mask : e.seen) {
            ColorSet r;
            for (std::uint64_t m = mask; m;) {
                const int id = __builtin_ctzll(m);
                m &= m - 1;
                r.push_back(palette[static_cast<std::size_t>(id)]);
            }
            out.ranges.push_back(std::move(r));
        }
        std::sort(out.ranges.begin(), out.ranges.end());
    } else {
        PlainEnumerator e(g, L);
        e.run(0);
        out.ranges.assign(e.seen.begin(), e.seen.end());
    }
    return out;
}

namespace {

bool extend_with_range(const GenericGraph& g, const std::vector<ColorSet>& lists,
                       const ColorSet& target, std::vector<Color>& color_of, Vertex v) {
    const int n = g.vertex_count();
    if (v == n) {
        ColorSet got = canonical_color_set(ColorSet(color_of.begin(), color_of.end()));
        return got == target;
    }
    // Colors of target still missing cannot exceed the vertices left.
    ColorSet used = canonical_color_set(ColorSet(color_of.begin(), color_of.begin() + v));
    const int missing = static_cast<int>(target.size() - used.size());
    if (missing > n - v) return false;

    for (Color c : lists[static_cast<std::size_t>(v)]) {
        if (conflicts(g, color_of, v, c)) continue;
        color_of[static_cast<std::size_t>(v)] = c;
        if (extend_with_range(g, lists, target, color_of, v + 1)) return true;
        color_of[static_cast<std::size_t>(v)] = kUncolored;
    }
    return false;
}

} // namespace

std::optional<Coloring> find_coloring_with_range(const GenericGraph& g,
                                                 const ListAssignment& L,
                                                 const ColorSet& target) {
    const int n = g.vertex_count();
    require_covers(n, L);
    std::vector<ColorSet> restricted(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        ColorSet cs;
        std::set_intersection(L.list(v).begin(), L.list(v).end(), target.begin(),
                              target.end(), std::back_inserter(cs));
        if (cs.empty()) return std::nullopt;
        restricted[static_cast<std::size_t>(v)] = std::move(cs);
    }
    std::vector<Color> color_of(static_cast<std::size_t>(n), kUncolored);
    if (!extend_with_range(g, restricted, target, color_of, 0)) return std::nullopt;
    return Coloring{std::move(color_of)};
}

ListAssignment restrict_wx(const JoinGraph& g, const ListAssignment& L) {
    require_covers(g.vertex_count(), L);
    const int m = g.p() + g.a();
    std::vector<ColorSet> lists(L.lists().begin(), L.lists().begin() + m);
    return ListAssignment(std::move(lists));
}

JoinColorability is_colorable_join_fast(const JoinGraph& g, const ListAssignment& L) {
    require_covers(g.vertex_count(), L);
    const int m = g.p() + g.a();
    if (m > 16)
        throw ParamError("join fast path requires p + a <= 16, got " + std::to_string(m));

    const GenericGraph wx = induced_wx(g);
    const ListAssignment Lwx = restrict_wx(g, L);
    const RangeSet rs = enumerate_ranges(wx, Lwx);

    const int n = g.vertex_count();
    for (const ColorSet& r : rs.ranges) {
        bool survives = true;
        for (Vertex y = m; y < n; ++y) {
            if (color_set_subset(L.list(y), r)) {
                survives = false;
                break;
            }
        }
        if (!survives) continue;

        // r is realizable by construction, so a witness exists.
        const auto base = find_coloring_with_range(wx, Lwx, r);
        Coloring full;
        full.assignment.resize(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < m; ++v) full.assignment[static_cast<std::size_t>(v)] = base->at(v);
        for (Vertex y = m; y < n; ++y) {
            const ColorSet free = color_set_minus(L.list(y), r);
            full.assignment[static_cast<std::size_t>(y)] = free.front();
        }
        return JoinColorability{true, std::move(full), rs.count()};
    }
    return JoinColorability{false, std::nullopt, rs.count()};
}

int list_chromatic_upper_bound(const JoinGraph& g) {
    return g.p() + g.a() + 1;
}

} // namespace ohba
