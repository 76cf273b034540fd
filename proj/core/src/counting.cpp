#include "ohba/counting.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "ohba/coloring.hpp"

namespace ohba {

namespace {

long long brute_force_min(const std::vector<long long>& d, long long left, std::size_t i,
                          long long partial) {
    if (i + 1 == d.size())
        return partial * (d[i] - left); // dump the rest on the last coordinate
    long long best = -1;
    for (long long a = 0; a <= left; ++a) {
        const long long v = brute_force_min(d, left - a, i + 1, partial * (d[i] - a));
        if (best < 0 || v < best) best = v;
    }
    return best;
}

} // namespace

long long min_weighted_product(const WeightedTuple& t) {
    const std::size_t k = t.d.size();
    if (k < 2) throw ParamError("weighted tuple needs k >= 2");
    for (long long di : t.d) {
        if (di < 1) throw ParamError("weights must be positive");
        if (di < t.d.front()) throw ParamError("d_1 must be minimal among the weights");
    }
    if (t.l < 0 || t.l > t.d.front() - 1)
        throw ParamError("needs 0 <= l <= d_1 - 1");

    const long long min = brute_force_min(t.d, t.l, 0, 1);

    long long closed = t.d.front() - t.l;
    for (std::size_t i = 1; i < k; ++i) closed *= t.d[i];
    if (min != closed)
        throw std::logic_error("weighted product minimum " + std::to_string(min) +
                               " differs from (d_1-l) prod d_i = " + std::to_string(closed));
    return min;
}

Lemma17Report check_lemma17(const GenericGraph& g, const std::vector<Vertex>& x_set,
                            const ListAssignment& L) {
    const int n = g.vertex_count();
    const int s = static_cast<int>(x_set.size());
    if (n < 2) throw ParamError("lemma17: needs n >= 2");
    if (n > 8) throw ParamError("lemma17: exhaustive count capped at n <= 8");
    if (s < 2 || s > n) throw ParamError("lemma17: needs 2 <= s <= n");
    if (L.vertex_count() != n) throw ParamError("lemma17: lists must cover every vertex");

    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (Vertex x : x_set) {
        if (x < 0 || x >= n) throw ParamError("lemma17: x_set vertex out of range");
        if (used[static_cast<std::size_t>(x)])
            throw ParamError("lemma17: x_set has repeated vertices");
        used[static_cast<std::size_t>(x)] = true;
    }
    for (std::size_t i = 0; i < x_set.size(); ++i)
        for (std::size_t j = i + 1; j < x_set.size(); ++j) {
            if (g.adjacent(x_set[i], x_set[j]))
                throw ParamError("lemma17: x_set is not independent");
            ColorSet common;
            const ColorSet& li = L.list(x_set[i]);
            const ColorSet& lj = L.list(x_set[j]);
            std::set_intersection(li.begin(), li.end(), lj.begin(), lj.end(),
                                  std::back_inserter(common));
            if (!common.empty())
                throw ParamError("lemma17: lists of x_" + std::to_string(i + 1) + " and x_" +
                                 std::to_string(j + 1) + " are not disjoint");
        }
    for (Vertex v = 0; v < n; ++v)
        if (static_cast<int>(L.list(v).size()) < n)
            throw ParamError("lemma17: |L(" + std::to_string(v) + ")| < n");

    Lemma17Report report;
    report.n = n;
    report.s = s;
    report.range_count = enumerate_ranges(g, L).count();
    report.product = 1;
    for (Vertex x : x_set) report.product *= L.list(x).size();
    report.ok = report.range_count >= report.product;
    return report;
}

Lemma18Report check_lemma18(int s, const ListAssignment& L) {
    if (s < 2) throw ParamError("lemma18: needs s >= 2");
    if (s > 5) throw ParamError("lemma18: exhaustive count capped at s <= 5");
    if (L.vertex_count() != s + 1)
        throw ParamError("lemma18: lists must cover the s+1 star vertices");
    if (!L.uniform_size() || *L.uniform_size() != s + 1)
        throw ParamError("lemma18: needs an (s+1)-assignment");
    for (Vertex i = 1; i <= s; ++i)
        for (Vertex j = i + 1; j <= s; ++j) {
            ColorSet common;
            const ColorSet& li = L.list(i);
            const ColorSet& lj = L.list(j);
            std::set_intersection(li.begin(), li.end(), lj.begin(), lj.end(),
                                  std::back_inserter(common));
            if (!common.empty())
                throw ParamError("lemma18: leaf lists are not pairwise disjoint");
        }

    const GenericGraph star = make_star(s);
    Lemma18Report report;
    report.s = s;
    report.range_count = enumerate_ranges(star, L).count();
    unsigned long long bound = static_cast<unsigned long long>(s + 1) * s / 2;
    for (int i = 0; i < s - 1; ++i) bound *= static_cast<unsigned long long>(s + 1);
    report.bound = bound;
    report.ok = report.range_count >= report.bound;
    return report;
}

namespace {

// Deterministic uniform draw in [0, m); plain modulo keeps the stream
// identical everywhere, and the slight bias is irrelevant here.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t m) { return rng() % m; }

ColorSet draw_distinct(std::mt19937_64& rng, int count, int pool_lo, int pool_hi) {
    std::vector<Color> pool;
    for (Color c = pool_lo; c <= pool_hi; ++c) pool.push_back(c);
    ColorSet out;
    for (int i = 0; i < count; ++i) {
        const std::size_t pick = draw(rng, pool.size() - static_cast<std::size_t>(i));
        std::swap(pool[pick], pool[pool.size() - 1 - static_cast<std::size_t>(i)]);
        out.push_back(pool[pool.size() - 1 - static_cast<std::size_t>(i)]);
    }
    return canonical_color_set(std::move(out));
}

} // namespace

Lemma17Instance random_lemma17_instance(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int s = 2 + static_cast<int>(draw(rng, 2));      // {2, 3}
    const int n = std::max(s, 3) + static_cast<int>(draw(rng, 5));
    const int nn = std::min(n, 7);

    GenericGraph g(nn);
    std::vector<Vertex> x_set;
    for (Vertex v = 0; v < s; ++v) x_set.push_back(v); // first s vertices stay independent
    for (Vertex u = 0; u < nn; ++u)
        for (Vertex v = u + 1; v < nn; ++v) {
            if (u < s && v < s) continue;
            if (draw(rng, 2) == 0) g.add_edge(u, v);
        }

    // x-lists from disjoint blocks, everything else from a shared pool that
    // deliberately overlaps the blocks.
    std::vector<ColorSet> lists(static_cast<std::size_t>(nn));
    for (int i = 0; i < s; ++i)
        lists[static_cast<std::size_t>(i)] = color_range(i * nn, (i + 1) * nn - 1);
    const int pool_hi = s * nn + nn; // block colors plus some fresh ones
    for (Vertex v = s; v < nn; ++v)
        lists[static_cast<std::size_t>(v)] = draw_distinct(rng, nn, 0, pool_hi);

    return Lemma17Instance{g, std::move(x_set), ListAssignment(std::move(lists))};
}

ListAssignment random_lemma18_assignment(int s, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int k = s + 1;
    std::vector<ColorSet> lists(static_cast<std::size_t>(s) + 1);
    for (int i = 1; i <= s; ++i)
        lists[static_cast<std::size_t>(i)] = color_range((i - 1) * k, i * k - 1);
    // center: k distinct colors from the leaf blocks plus a fresh band
    lists[0] = draw_distinct(rng, k, 0, s * k + k - 1);
    return ListAssignment(std::move(lists));
}

} // namespace ohba
