#include "ohba/constructions.hpp"

#include <algorithm>
#include <set>

#include "ohba/bounds.hpp"
#include "ohba/coloring.hpp"

namespace ohba {

std::string to_string(ConstructionKind k) {
    switch (k) {
    case ConstructionKind::T1: return "T1";
    case ConstructionKind::T4: return "T4";
    case ConstructionKind::T6: return "T6";
    case ConstructionKind::T7: return "T7";
    }
    return "?";
}

namespace {

// Materialized instances are desk scale; anything bigger is refused rather
// than silently thinned out.
constexpr long long kMaxLists = 2'000'000;

long long checked_c_size(const bounds::Int& c) {
    if (c > kMaxLists)
        throw BudgetError("construction needs " + c.str() +
                          " structured Y-lists; refusing beyond " +
                          std::to_string(kMaxLists));
    return static_cast<long long>(c);
}

void check_b_capacity(long long b) {
    if (b > kMaxLists)
        throw BudgetError("construction asked to materialize b = " + std::to_string(b) +
                          " Y-lists; refusing beyond " + std::to_string(kMaxLists));
}

// All j-subsets of `universe` in lexicographic order.
std::vector<ColorSet> subsets_of(const ColorSet& universe, int j) {
    std::vector<ColorSet> out;
    const int n = static_cast<int>(universe.size());
    if (j < 0 || j > n) return out;
    std::vector<int> comb(static_cast<std::size_t>(j));
    for (int i = 0; i < j; ++i) comb[static_cast<std::size_t>(i)] = i;
    while (true) {
        ColorSet s;
        s.reserve(static_cast<std::size_t>(j));
        for (int i : comb) s.push_back(universe[static_cast<std::size_t>(i)]);
        out.push_back(std::move(s));
        int i = j - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - j + i) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int t = i + 1; t < j; ++t)
            comb[static_cast<std::size_t>(t)] = comb[static_cast<std::size_t>(t - 1)] + 1;
    }
    return out;
}

// The transversal family J: one color from each of the s blocks
// [jk+1 : (j+1)k], j = 1..s, in odometer order.  Just {emptyset} for s = 0.
std::vector<ColorSet> transversal_family(int s, int k) {
    std::vector<ColorSet> out{{}};
    for (int j = 1; j <= s; ++j) {
        std::vector<ColorSet> next;
        next.reserve(out.size() * static_cast<std::size_t>(k));
        for (const ColorSet& base : out)
            for (Color c = j * k + 1; c <= (j + 1) * k; ++c) {
                ColorSet e = base;
                e.push_back(c);
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

ColorSet set_union_sorted(const ColorSet& a, const ColorSet& b) {
    ColorSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ConstructionInstance assemble(ConstructionSpec spec, int p,
                              std::vector<ColorSet> wx_lists,
                              const std::vector<ColorSet>& structured_y) {
    check_b_capacity(spec.b);
    const long long c = static_cast<long long>(structured_y.size());
    const ColorSet full = color_range(1, spec.k);

    std::vector<ColorSet> lists = std::move(wx_lists);
    lists.reserve(lists.size() + static_cast<std::size_t>(spec.b));
    for (const ColorSet& y : structured_y) lists.push_back(y);
    for (long long i = c; i < spec.b; ++i) lists.push_back(full);

    JoinGraph g(p, spec.a, spec.b);
    return ConstructionInstance{spec, g, ListAssignment(std::move(lists)), c};
}

} // namespace

ConstructionInstance construct_thm1(int k, long long t) {
    if (k < 1) throw ParamError("T1 needs k >= 1");
    const bounds::Int kk = bounds::ipow(bounds::Int(k), static_cast<unsigned>(k));
    if (t < kk)
        throw ParamError("T1 needs t >= k^k = " + kk.str() + ", got t = " +
                         std::to_string(t));
    const long long c = checked_c_size(kk);
    check_b_capacity(t);

    ConstructionSpec spec;
    spec.theorem = ConstructionKind::T1;
    spec.a = k;
    spec.b = t;
    spec.k = k;

    // X: k pairwise-disjoint blocks.
    std::vector<ColorSet> lists;
    for (int i = 1; i <= k; ++i) lists.push_back(color_range((i - 1) * k + 1, i * k));

    // Y: every transversal of the X-blocks, in odometer order.
    std::vector<ColorSet> ys;
    ys.reserve(static_cast<std::size_t>(c));
    std::vector<int> pick(static_cast<std::size_t>(k), 0); // offset into each block
    while (true) {
        ColorSet y;
        y.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            y.push_back(i * k + 1 + pick[static_cast<std::size_t>(i)]);
        ys.push_back(std::move(y));
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == k - 1) {
            pick[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
    }

    return assemble(spec, /*p=*/0, std::move(lists), ys);
}

ConstructionInstance construct_thm4(int s, int l, long long b) {
    if (s < 0) throw ParamError("T4 needs s >= 0");
    if (l < 2) throw ParamError("T4 needs l >= 2, got l = " + std::to_string(l));
    const bounds::Int threshold = bounds::thm4_threshold(s, l);
    if (b < threshold)
        throw ParamError("T4 needs b >= C(l+s+1,l)(l+s+1)^(s+1) = " + threshold.str() +
                         ", got b = " + std::to_string(b));

    ConstructionSpec spec;
    spec.theorem = ConstructionKind::T4;
    spec.s = s;
    spec.l = l;
    spec.a = s + 2;
    spec.b = b;
    spec.k = l + s + 1;
    const int k = spec.k;
    const long long c = checked_c_size(threshold);

    std::vector<ColorSet> lists;
    const ColorSet full = color_range(1, k);
    for (int w = 0; w < l - 1; ++w) lists.push_back(full); // W
    for (int j = 1; j <= s + 1; ++j)                       // x_1..x_{s+1}: blocks
        lists.push_back(color_range(j * k + 1, (j + 1) * k));
    lists.push_back(full);                                 // x_{s+2}

    // C = { I u {c_1..c_{s+1}} : I an l-subset of [k], c_j in block j },
    // in lexicographic (I, c_1, ..., c_{s+1}) order.
    std::vector<ColorSet> ys;
    ys.reserve(static_cast<std::size_t>(c));
    for (const ColorSet& I : subsets_of(full, l)) {
        std::vector<int> pick(static_cast<std::size_t>(s + 1), 0);
        while (true) {
            ColorSet y = I;
            for (int j = 1; j <= s + 1; ++j)
                y.push_back(j * k + 1 + pick[static_cast<std::size_t>(j - 1)]);
            ys.push_back(canonical_color_set(std::move(y)));
            int j = s;
            while (j >= 0 && pick[static_cast<std::size_t>(j)] == k - 1) {
                pick[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j < 0) break;
            ++pick[static_cast<std::size_t>(j)];
        }
    }

    return assemble(spec, /*p=*/l - 1, std::move(lists), ys);
}

namespace {

// Shared frame for T6/T7: W and x_a get [k]; x_{a-s}..x_{a-1} get the s
// J-blocks; x_1..x_{a-s-1} get ([k] - P_j) plus a fresh tail.  The two
// generators differ only in the partition P and the tails.
std::vector<ColorSet> frame_wx_lists(int s, int l, int a, int k,
                                     const std::vector<ColorSet>& partition,
                                     const std::vector<ColorSet>& tails) {
    const ColorSet full = color_range(1, k);
    std::vector<ColorSet> lists;
    for (int w = 0; w < l - 1; ++w) lists.push_back(full);
    const int t = a - s - 1;
    for (int j = 1; j <= t; ++j)
        lists.push_back(set_union_sorted(
            color_set_minus(full, partition[static_cast<std::size_t>(j - 1)]),
            tails[static_cast<std::size_t>(j - 1)]));
    for (int d = a - s; d <= a - 1; ++d) { // J-blocks
        const int block = d - t;
        lists.push_back(color_range(block * k + 1, (block + 1) * k));
    }
    lists.push_back(full); // x_a
    return lists;
}

void check_t67_common(int s, int l, int a, long long b) {
    if (s < 0) throw ParamError("needs s >= 0");
    if (l < 2) throw ParamError("needs l >= 2, got l = " + std::to_string(l));
    if (a <= s + 2)
        throw ParamError("needs a > s+2 (a = s+2 is the T4 regime), got a = " +
                         std::to_string(a) + ", s = " + std::to_string(s));
    if (b < a)
        throw ParamError("needs b >= a, got b = " + std::to_string(b) + ", a = " +
                         std::to_string(a));
}

} // namespace

ConstructionInstance construct_thm6(int s, int l, int a, long long b) {
    check_t67_common(s, l, a, b);
    const int k = l + s + 1;
    const int denom = a - s - 1;
    if (k % denom != 0)
        throw ParamError("T6 needs (a-s-1) | (l+s+1); " + std::to_string(denom) +
                         " does not divide " + std::to_string(k) +
                         ", use the T7 generator");
    const int q = k / denom;
    const bounds::BoundReport thr = bounds::thm67_threshold(s, l, a);
    if (b < *thr.value)
        throw ParamError("T6 needs b >= (l+s+1)^s (C(l+s+1,l+1) + C(l+s+1,l) q) = " +
                         thr.value->str() + ", got b = " + std::to_string(b));

    ConstructionSpec spec;
    spec.theorem = ConstructionKind::T6;
    spec.s = s;
    spec.l = l;
    spec.a = a;
    spec.b = b;
    spec.k = k;
    spec.q = q;
    spec.h = (s + 1) * k;
    const long long c = checked_c_size(*thr.value);

    // P_j = [(j-1)q+1 : jq] partitions [k]; every x_j tail is [h+1 : h+q].
    std::vector<ColorSet> partition, tails;
    for (int j = 1; j <= denom; ++j) {
        partition.push_back(color_range((j - 1) * q + 1, j * q));
        tails.push_back(color_range(spec.h + 1, spec.h + q));
    }
    std::vector<ColorSet> lists = frame_wx_lists(s, l, a, k, partition, tails);

    // C = T u Z with T = {I u J u {i}} and Z = {I u J}, in lexicographic
    // (I, J, i) order for T followed by (I, J) order for Z.
    const ColorSet full = color_range(1, k);
    const std::vector<ColorSet> family = transversal_family(s, k);
    std::vector<ColorSet> ys;
    ys.reserve(static_cast<std::size_t>(c));
    for (const ColorSet& I : subsets_of(full, l))
        for (const ColorSet& J : family)
            for (Color i = spec.h + 1; i <= spec.h + q; ++i) {
                ColorSet y = set_union_sorted(I, J);
                y.push_back(i);
                ys.push_back(canonical_color_set(std::move(y)));
            }
    for (const ColorSet& I : subsets_of(full, l + 1))
        for (const ColorSet& J : family) ys.push_back(set_union_sorted(I, J));

    return assemble(spec, /*p=*/l - 1, std::move(lists), ys);
}

ConstructionInstance construct_thm7(int s, int l, int a, long long b) {
    check_t67_common(s, l, a, b);
    const int k = l + s + 1;
    const int denom = a - s - 1;
    if (k % denom == 0)
        throw ParamError("T7 needs (a-s-1) to not divide (l+s+1); " +
                         std::to_string(denom) + " divides " + std::to_string(k) +
                         ", use the T6 generator");
    const int q = k / denom;
    const int r = k - q * denom;
    if (!(0 < r && r <= a - s - 2))
        throw ParamError("T7 partition remainder r = " + std::to_string(r) +
                         " outside (0, a-s-2]");
    const int u = ((1 + q) * denom - k) * q;
    const bounds::BoundReport thr = bounds::thm67_threshold(s, l, a);
    if (b < *thr.value)
        throw ParamError(
            "T7 needs b >= (l+s+1)^s (C(l+s+1,l+1) + C(l+s+1,l)(q+1) - C(u,l)) = " +
            thr.value->str() + ", got b = " + std::to_string(b));

    ConstructionSpec spec;
    spec.theorem = ConstructionKind::T7;
    spec.s = s;
    spec.l = l;
    spec.a = a;
    spec.b = b;
    spec.k = k;
    spec.q = q;
    spec.r = r;
    spec.u = u;
    spec.h = (s + 1) * k;
    const long long c = checked_c_size(*thr.value);

    // r blocks of size q+1, then a-s-1-r blocks of size q (empty if q = 0).
    // The first r tails reach h+q+1, the rest stop at h+q.
    std::vector<ColorSet> partition, tails;
    for (int i = 1; i <= r; ++i) {
        partition.push_back(color_range((i - 1) * (q + 1) + 1, i * (q + 1)));
        tails.push_back(color_range(spec.h + 1, spec.h + q + 1));
    }
    for (int j = 1; j <= denom - r; ++j) {
        partition.push_back(color_range(r * (q + 1) + (j - 1) * q + 1, r * (q + 1) + j * q));
        tails.push_back(color_range(spec.h + 1, spec.h + q));
    }
    std::vector<ColorSet> lists = frame_wx_lists(s, l, a, k, partition, tails);

    // U = P_{r+1} u ... u P_{a-s-1} = [r(q+1)+1 : k], |U| = u.
    const ColorSet U = color_range(r * (q + 1) + 1, k);
    const ColorSet full = color_range(1, k);
    const std::vector<ColorSet> family = transversal_family(s, k);

    // T2 - T1 in lexicographic (I, i) order: I u {i} with i in
    // [h+1 : h+q+1], dropping the T1 members (i = h+q+1 with I inside U).
    std::vector<ColorSet> t2_minus_t1;
    for (const ColorSet& I : subsets_of(full, l))
        for (Color i = spec.h + 1; i <= spec.h + q + 1; ++i) {
            if (i == spec.h + q + 1 && color_set_subset(I, U)) continue;
            ColorSet e = I;
            e.push_back(i);
            t2_minus_t1.push_back(std::move(e));
        }

    std::vector<ColorSet> ys;
    ys.reserve(static_cast<std::size_t>(c));
    for (const ColorSet& I : t2_minus_t1)
        for (const ColorSet& J : family) ys.push_back(set_union_sorted(I, J));
    for (const ColorSet& I : subsets_of(full, l + 1))
        for (const ColorSet& J : family) ys.push_back(set_union_sorted(I, J));

    return assemble(spec, /*p=*/l - 1, std::move(lists), ys);
}

ConstructionInstance construct(ConstructionKind kind, int s, int l, int a, long long b) {
    switch (kind) {
    case ConstructionKind::T1: return construct_thm1(a, b);
    case ConstructionKind::T4: return construct_thm4(s, l, b);
    case ConstructionKind::T6: return construct_thm6(s, l, a, b);
    case ConstructionKind::T7: return construct_thm7(s, l, a, b);
    }
    throw ParamError("unknown construction kind");
}

namespace {

bounds::Int closed_form_c(const ConstructionSpec& spec) {
    switch (spec.theorem) {
    case ConstructionKind::T1:
        return bounds::ipow(bounds::Int(spec.k), static_cast<unsigned>(spec.k));
    case ConstructionKind::T4:
        return bounds::thm4_threshold(spec.s, spec.l);
    case ConstructionKind::T6:
    case ConstructionKind::T7:
        return *bounds::thm67_threshold(spec.s, spec.l, spec.a).value;
    }
    throw ParamError("unknown construction kind");
}

} // namespace

VerifyReport verify_construction(ConstructionKind kind, int s, int l, int a, long long b) {
    const ConstructionInstance inst = construct(kind, s, l, a, b);
    const ConstructionSpec& spec = inst.spec;
    VerifyReport report;
    report.spec = spec;
    report.c_size = inst.c_size;

    const JoinColorability col = is_colorable_join_fast(inst.graph, inst.lists);
    report.wx_range_count = col.wx_range_count;
    report.clauses.push_back({"uncolorable", !col.colorable,
                              "|R(G[WuX],L')| = " + std::to_string(col.wx_range_count)});

    const bounds::Int closed = closed_form_c(spec);
    report.clauses.push_back({"c_size_matches_closed_form", bounds::Int(inst.c_size) == closed,
                              std::to_string(inst.c_size) + " vs " + closed.str()});

    bool sizes_ok = true;
    for (Vertex v = 0; v < inst.lists.vertex_count(); ++v)
        if (static_cast<int>(inst.lists.list(v).size()) != spec.k) { sizes_ok = false; break; }
    report.clauses.push_back({"all_lists_size_k", sizes_ok, "k = " + std::to_string(spec.k)});

    // X-list structure.  T1/T4 carry pairwise-disjoint block lists; T6/T7
    // carry pairwise-distinct partition complements on x_1..x_{a-s-1}.
    bool x_ok = true;
    std::string x_detail;
    const int p = inst.graph.p();
    if (kind == ConstructionKind::T1 || kind == ConstructionKind::T4) {
        const int nblocks = (kind == ConstructionKind::T1) ? spec.k : spec.s + 1;
        const int from = (kind == ConstructionKind::T1) ? 0 : 1; // T4 block j covers x_j
        for (int i = 0; i < nblocks && x_ok; ++i) {
            const ColorSet expect =
                color_range((i + from) * spec.k + 1, (i + from + 1) * spec.k);
            if (inst.lists.list(p + i) != expect) {
                x_ok = false;
                x_detail = "x_" + std::to_string(i + 1) + " is not its block";
            }
        }
        if (kind == ConstructionKind::T4 && x_ok &&
            inst.lists.list(p + spec.s + 1) != color_range(1, spec.k)) {
            x_ok = false;
            x_detail = "x_{s+2} is not [k]";
        }
    } else {
        // Recover P_j = [k] - L(x_j) and check the partition structure.
        // Blocks can be empty (the q = 0 case), and the lists of empty
        // blocks coincide at [k], so distinctness applies to the rest.
        const int t = spec.a - spec.s - 1;
        const ColorSet full = color_range(1, spec.k);
        std::set<ColorSet> distinct_nonempty;
        int nonempty = 0;
        std::size_t total_size = 0;
        ColorSet partition_union;
        for (int j = 0; j < t; ++j) {
            ColorSet in_k;
            const ColorSet& lst = inst.lists.list(p + j);
            std::set_intersection(lst.begin(), lst.end(), full.begin(), full.end(),
                                  std::back_inserter(in_k));
            const ColorSet block = color_set_minus(full, in_k);
            total_size += block.size();
            partition_union = set_union_sorted(partition_union, block);
            if (!block.empty()) {
                ++nonempty;
                distinct_nonempty.insert(lst);
            }
        }
        if (partition_union != full || total_size != full.size()) {
            x_ok = false;
            x_detail = "P_1..P_{a-s-1} do not partition [k]";
        } else if (static_cast<int>(distinct_nonempty.size()) != nonempty) {
            x_ok = false;
            x_detail = "X-lists of nonempty partition blocks are not pairwise distinct";
        }
    }
    report.clauses.push_back({"x_lists_structure", x_ok, x_detail});

    std::set<ColorSet> y_distinct;
    const int y0 = inst.graph.y_begin();
    for (long long i = 0; i < inst.c_size; ++i)
        y_distinct.insert(inst.lists.list(y0 + static_cast<int>(i)));
    report.clauses.push_back({"structured_y_lists_distinct",
                              static_cast<long long>(y_distinct.size()) == inst.c_size,
                              std::to_string(y_distinct.size()) + " distinct of " +
                                  std::to_string(inst.c_size)});

    bool pad_ok = true;
    const ColorSet full = color_range(1, spec.k);
    for (long long i = inst.c_size; i < spec.b; ++i)
        if (inst.lists.list(y0 + static_cast<int>(i)) != full) { pad_ok = false; break; }
    report.clauses.push_back({"y_padding_is_full_palette", pad_ok, ""});

    report.pass = true;
    for (const VerifyClause& cl : report.clauses) report.pass = report.pass && cl.ok;
    return report;
}

} // namespace ohba
