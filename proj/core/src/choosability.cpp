#include "ohba/choosability.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <unordered_set>

#include "ohba/bounds.hpp"

namespace ohba {

std::string to_string(CertificateKind k) {
    switch (k) {
    case CertificateKind::BadAssignment: return "bad-assignment";
    case CertificateKind::CountingBound: return "counting";
    case CertificateKind::Exhaustion: return "exhaustion";
    }
    return "?";
}

namespace {

// ---- canonical k-assignment enumeration ----------------------------------
//
// A k-assignment is canonical when renaming its colors by first appearance
// (vertices in index order, colors within a list ascending) fixes it.  The
// list of vertex v is then some j-subset of the colors already used plus a
// run of k-j fresh colors.  Every k-assignment is the renaming of exactly
// one canonical one, and colorability is renaming-invariant.

struct EnumBudget {
    std::uint64_t max_assignments;
    std::uint64_t visited = 0;
};

// visit(lists, used_colors) -> false stops the whole enumeration.
// filter(v, lists, candidate) -> false skips the candidate list for v.
template <typename Visit, typename Filter>
bool enumerate_canonical_rec(int m, int k, int v, int used,
                             std::vector<std::vector<int>>& lists,
                             EnumBudget& budget, Visit& visit, Filter& filter) {
    if (v == m) {
        if (++budget.visited > budget.max_assignments)
            throw BudgetError("canonical assignment budget of " +
                              std::to_string(budget.max_assignments) + " exceeded");
        return visit(lists, used);
    }
    for (int j = std::min(k, used); j >= 0; --j) {
        const int fresh = k - j;
        // j-subsets of [0, used) in lexicographic order.
        std::vector<int> comb(static_cast<std::size_t>(j));
        for (int i = 0; i < j; ++i) comb[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::vector<int> cand;
            cand.reserve(static_cast<std::size_t>(k));
            cand.insert(cand.end(), comb.begin(), comb.end());
            for (int f = 0; f < fresh; ++f) cand.push_back(used + f);

            if (filter(v, lists, cand)) {
                lists[static_cast<std::size_t>(v)] = cand;
                if (!enumerate_canonical_rec(m, k, v + 1, used + fresh, lists, budget,
                                             visit, filter))
                    return false;
                lists[static_cast<std::size_t>(v)].clear();
            }

            // next combination
            int i = j - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == used - j + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int t = i + 1; t < j; ++t)
                comb[static_cast<std::size_t>(t)] = comb[static_cast<std::size_t>(t - 1)] + 1;
        }
    }
    return true;
}

template <typename Visit, typename Filter>
std::uint64_t enumerate_canonical(int m, int k, std::uint64_t max_assignments,
                                  Visit visit, Filter filter) {
    std::vector<std::vector<int>> lists(static_cast<std::size_t>(m));
    EnumBudget budget{max_assignments};
    enumerate_canonical_rec(m, k, 0, 0, lists, budget, visit, filter);
    return budget.visited;
}

ListAssignment to_assignment(const std::vector<std::vector<int>>& lists) {
    std::vector<ColorSet> out;
    out.reserve(lists.size());
    for (const auto& l : lists) out.emplace_back(l.begin(), l.end());
    return ListAssignment(std::move(out));
}

// ---- per-assignment range analysis ----------------------------------------

// Exhaustive ranges of the (W u X)-assignment, dense colors (< 64).
// Aborts as void the moment a range smaller than k shows up (no k-set fits
// inside it, so the assignment can never beat any b).  When stop_at is
// finite (sound only for k = p+a, where the min cover equals the number of
// ranges) also aborts once that many distinct ranges exist.
struct RangeScan {
    const GenericGraph& g;
    const std::vector<std::vector<int>>& lists;
    int k;
    std::size_t stop_at;
    bool void_assignment = false;
    bool at_stop = false;
    std::vector<int> color_of;
    std::unordered_set<std::uint64_t> ranges;

    RangeScan(const GenericGraph& gr, const std::vector<std::vector<int>>& ls, int kk,
              std::size_t stop)
        : g(gr), lists(ls), k(kk), stop_at(stop),
          color_of(static_cast<std::size_t>(gr.vertex_count()), -1) {}

    void run(Vertex v, std::uint64_t mask) {
        if (void_assignment || at_stop) return;
        if (v == g.vertex_count()) {
            if (__builtin_popcountll(mask) < k) {
                void_assignment = true;
                return;
            }
            if (ranges.insert(mask).second && ranges.size() >= stop_at) at_stop = true;
            return;
        }
        std::uint64_t banned = 0;
        std::uint64_t earlier = g.neighbors_mask(v) & ((std::uint64_t{1} << v) - 1);
        while (earlier) {
            const int u = __builtin_ctzll(earlier);
            earlier &= earlier - 1;
            banned |= std::uint64_t{1} << color_of[static_cast<std::size_t>(u)];
        }
        for (int c : lists[static_cast<std::size_t>(v)]) {
            if ((banned >> c) & 1) continue;
            color_of[static_cast<std::size_t>(v)] = c;
            run(v + 1, mask | (std::uint64_t{1} << c));
            if (void_assignment || at_stop) break;
        }
        color_of[static_cast<std::size_t>(v)] = -1;
    }
};

// Exact branch-and-bound minimum cover: fewest k-sets such that every range
// contains one of them.  Branches on an uncovered range over its k-subsets.
// Only improvements strictly below `ub` are reported.
struct MinCover {
    int k;
    std::size_t ub;
    std::vector<std::uint64_t> best_cover;
    bool found = false;

    void search(const std::vector<std::uint64_t>& uncovered,
                std::vector<std::uint64_t>& chosen) {
        if (uncovered.empty()) {
            if (chosen.size() < ub) {
                ub = chosen.size();
                best_cover = chosen;
                found = true;
            }
            return;
        }
        if (chosen.size() + 1 >= ub) return;

        // fail-first: branch on the range with the fewest k-subsets
        std::uint64_t pick = uncovered.front();
        int pick_pop = __builtin_popcountll(pick);
        for (std::uint64_t r : uncovered) {
            const int pop = __builtin_popcountll(r);
            if (pop < pick_pop) {
                pick = r;
                pick_pop = pop;
            }
        }

        std::vector<int> bits;
        for (std::uint64_t m = pick; m;) {
            bits.push_back(__builtin_ctzll(m));
            m &= m - 1;
        }
        // k-subsets of pick in lexicographic bit order
        std::vector<int> comb(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
        const int nb = static_cast<int>(bits.size());
        while (true) {
            std::uint64_t subset = 0;
            for (int i : comb) subset |= std::uint64_t{1} << bits[static_cast<std::size_t>(i)];

            std::vector<std::uint64_t> rest;
            rest.reserve(uncovered.size());
            for (std::uint64_t r : uncovered)
                if ((r & subset) != subset) rest.push_back(r);
            chosen.push_back(subset);
            search(rest, chosen);
            chosen.pop_back();

            int i = k - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == nb - k + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int t = i + 1; t < k; ++t)
                comb[static_cast<std::size_t>(t)] = comb[static_cast<std::size_t>(t - 1)] + 1;
        }
    }
};

ColorSet mask_to_set(std::uint64_t mask) {
    ColorSet out;
    while (mask) {
        out.push_back(__builtin_ctzll(mask));
        mask &= mask - 1;
    }
    return out;
}

} // namespace

ChoosabilityVerdict is_k_choosable_naive(const GenericGraph& g, int k,
                                         const SearchBudget& budget) {
    const int n = g.vertex_count();
    if (n > budget.max_naive_vertices)
        throw BudgetError("naive oracle refuses |V| = " + std::to_string(n) + " > " +
                          std::to_string(budget.max_naive_vertices));
    if (k > budget.max_naive_k)
        throw BudgetError("naive oracle refuses k = " + std::to_string(k) + " > " +
                          std::to_string(budget.max_naive_k));
    if (k < 1) throw ParamError("k must be positive");

    ChoosabilityVerdict verdict;
    verdict.choosable = true;
    verdict.certificate = CertificateKind::Exhaustion;

    const std::uint64_t visited = enumerate_canonical(
        n, k, budget.max_assignments,
        [&](const std::vector<std::vector<int>>& lists, int) {
            const ListAssignment L = to_assignment(lists);
            if (!find_proper_coloring(g, L)) {
                verdict.choosable = false;
                verdict.certificate = CertificateKind::BadAssignment;
                verdict.bad_assignment = L;
                return false;
            }
            return true;
        },
        [](int, const std::vector<std::vector<int>>&, const std::vector<int>&) {
            return true;
        });

    verdict.detail = verdict.choosable
                         ? "all " + std::to_string(visited) + " canonical " +
                               std::to_string(k) + "-assignments are colorable"
                         : "canonical assignment #" + std::to_string(visited) +
                               " admits no proper coloring";
    return verdict;
}

CriticalBResult critical_b(int p, int a, int k, long long b_cap,
                           const SearchBudget& budget) {
    if (p < 0 || a < 1) throw ParamError("critical_b needs p >= 0, a >= 1");
    if (k < p + 2)
        throw ParamError("critical_b needs k >= p+2 (k-assignments below the chromatic "
                         "number are trivially bad)");
    if (b_cap < 1) throw ParamError("critical_b needs a positive cap");
    const int m = p + a;
    if (m > budget.max_wx_vertices)
        throw BudgetError("critical_b refuses p+a = " + std::to_string(m) + " > " +
                          std::to_string(budget.max_wx_vertices));

    CriticalBResult result;
    result.cap = b_cap;

    // k >= p+a+1 is k-choosable for every b: one color can be struck from
    // every Y-list for each of the p+a join neighbours and one still
    // remains.  Equivalently every (W u X)-range has size < k here.
    if (k >= m + 1) return result;

    if (static_cast<long long>(k) * m > 64)
        throw BudgetError("critical_b color universe k*(p+a) = " +
                          std::to_string(static_cast<long long>(k) * m) + " exceeds 64");

    const GenericGraph wx = induced_wx(JoinGraph(p, a, std::max<long long>(a, 1)));

    const bool restrict_x_disjoint = (k == m) && p >= 1 && a >= 2;
    std::size_t best = static_cast<std::size_t>(b_cap) + 1;
    std::vector<std::vector<int>> best_lists;
    std::vector<std::uint64_t> best_cover;

    auto filter = [&](int v, const std::vector<std::vector<int>>& lists,
                      const std::vector<int>& cand) {
        if (!restrict_x_disjoint || v < p) return true;
        // X-lists pairwise disjoint: intersecting ones are always colorable.
        for (int x = p; x < v; ++x)
            for (int c : lists[static_cast<std::size_t>(x)])
                for (int d : cand)
                    if (c == d) return false;
        return true;
    };

    auto visit = [&](const std::vector<std::vector<int>>& lists, int) {
        if (k == m) {
            RangeScan scan(wx, lists, k, best);
            scan.run(0, 0);
            if (scan.void_assignment || scan.at_stop) return true;
            if (scan.ranges.size() < best) {
                best = scan.ranges.size();
                best_lists = lists;
                best_cover.assign(scan.ranges.begin(), scan.ranges.end());
                std::sort(best_cover.begin(), best_cover.end());
            }
        } else {
            RangeScan scan(wx, lists, k, std::numeric_limits<std::size_t>::max());
            scan.run(0, 0);
            if (scan.void_assignment) return true;
            std::vector<std::uint64_t> ranges(scan.ranges.begin(), scan.ranges.end());
            std::sort(ranges.begin(), ranges.end());
            MinCover cover{k, best, {}, false};
            std::vector<std::uint64_t> chosen;
            cover.search(ranges, chosen);
            if (cover.found) {
                best = cover.ub;
                best_lists = lists;
                best_cover = cover.best_cover;
            }
        }
        return true;
    };

    try {
        result.assignments_enumerated =
            enumerate_canonical(m, k, budget.max_assignments, visit, filter);
    } catch (const BudgetError& e) {
        const std::string partial =
            best <= static_cast<std::size_t>(b_cap)
                ? "partial minimum found so far: " + std::to_string(best)
                : "no assignment within the cap found so far";
        throw BudgetError(std::string(e.what()) + "; " + partial);
    }

    if (best > static_cast<std::size_t>(b_cap)) return result; // above cap

    // The least usable b is also at least a (the graph needs b >= a); any
    // extra Y-vertex can repeat a cover set without restoring colorability.
    const long long value = std::max<long long>(static_cast<long long>(best), a);
    if (value > b_cap) return result;

    std::vector<ColorSet> lists;
    lists.reserve(static_cast<std::size_t>(m) + static_cast<std::size_t>(value));
    for (const auto& l : best_lists) lists.emplace_back(l.begin(), l.end());
    for (std::uint64_t mask : best_cover) lists.push_back(mask_to_set(mask));
    for (long long pad = static_cast<long long>(best); pad < value; ++pad)
        lists.push_back(mask_to_set(best_cover.front()));

    result.value = value;
    result.witness = ListAssignment(std::move(lists));
    return result;
}

ChoosabilityVerdict is_k_choosable_join(const JoinGraph& g, int k,
                                        const SearchBudget& budget) {
    const CriticalBResult res = critical_b(g.p(), g.a(), k, g.b(), budget);
    ChoosabilityVerdict verdict;
    if (res.value) {
        verdict.choosable = false;
        verdict.certificate = CertificateKind::BadAssignment;
        // Extend the witness from b = value to the queried b.
        std::vector<ColorSet> lists = res.witness->lists();
        const ColorSet pad = lists.back();
        for (long long y = *res.value; y < g.b(); ++y) lists.push_back(pad);
        verdict.bad_assignment = ListAssignment(std::move(lists));
        verdict.detail = "least bad b is " + std::to_string(*res.value);
    } else {
        verdict.choosable = true;
        verdict.certificate = CertificateKind::CountingBound;
        verdict.detail =
            k >= g.p() + g.a() + 1
                ? "k >= p+a+1 certifies choosability"
                : "every adversarial assignment needs more than b = " +
                      std::to_string(g.b()) + " blocked ranges (" +
                      std::to_string(res.assignments_enumerated) +
                      " canonical assignments searched)";
    }
    return verdict;
}

int deficiency(int p, int a, long long b, const SearchBudget& budget) {
    if (p < 0 || a < 1 || b < a) throw ParamError("deficiency needs p >= 0, 1 <= a <= b");
    for (int k = p + 2; k <= p + a; ++k) {
        const CriticalBResult res = critical_b(p, a, k, b, budget);
        if (!res.value) return k - (p + 2); // k-choosable, so chi_l = k
    }
    return a - 1; // chi_l = p + a + 1, the certified bound
}

TauResult tau_exact(const TauQuery& q, const SearchBudget& budget) {
    if (q.s < 0 || q.a < 1 || q.b < q.a)
        throw ParamError("tau query needs s >= 0, 1 <= a <= b");
    try {
        const long long p_cap = bounds::lemma13_upper(q.a, q.b);
        for (long long p = 0; p <= p_cap; ++p) {
            const int d = deficiency(static_cast<int>(p), q.a, q.b, budget);
            if (d <= q.s) {
                TauResult r;
                r.query = q;
                r.exact = true;
                r.value = p;
                r.lower = r.upper = p;
                r.provenance = "search(deficiency probe; chi_l capped at p+a+1)";
                return r;
            }
        }
        // tau_0 <= max{0, a+b-5} guarantees the loop returns.
        throw std::logic_error("tau search passed its certified cap");
    } catch (const BudgetError& e) {
        TauResult r = tau_sandwich(q);
        r.exact = false;
        r.provenance += "; search refused: " + std::string(e.what());
        return r;
    }
}

TauResult tau_sandwich(const TauQuery& q) {
    if (q.s < 0 || q.a < 1 || q.b < q.a)
        throw ParamError("tau query needs s >= 0, 1 <= a <= b");
    const int s = q.s, a = q.a;
    const bounds::Int b = q.b;

    TauResult r;
    r.query = q;

    long long lower = 0;
    std::string lower_from = "trivial";
    long long upper = bounds::lemma13_upper(a, q.b);
    std::string upper_from = "L13";

    if (a <= s + 1) {
        // chi_l(K_{a,b}) <= a+1 keeps the deficiency at most a-1 <= s.
        r.exact = true;
        r.value = r.lower = r.upper = 0;
        r.provenance = "L2(a <= s+1)";
        return r;
    }

    if (a == s + 2) {
        const bounds::Int l2 = bounds::ipow(bounds::Int(s + 2),
                                            static_cast<unsigned>(s + 2));
        if (b < l2) {
            r.exact = true;
            r.value = r.lower = r.upper = 0;
            r.provenance = "L2(b < (s+2)^(s+2))";
            return r;
        }
        const long long t4 = bounds::thm4_best_lower(s, b);
        if (t4 > lower) { lower = t4; lower_from = "T4"; }
        const bounds::BoundReport c5 = bounds::cor5_lower(s, b);
        if (c5.valid) {
            const long long v = static_cast<long long>(*c5.value);
            if (v > lower) { lower = v; lower_from = "Cor5"; }
        }
        const long long t8 = bounds::thm8_upper(s, b);
        if (t8 < upper) { upper = t8; upper_from = "T8"; }
        if (s == 0 && a == 2) {
            // Exact, so it owns both endpoints whenever it applies.
            const long long c9 = bounds::cor9_exact(b);
            if (c9 >= lower) { lower = c9; lower_from = "Cor9"; }
            if (c9 <= upper) { upper = c9; upper_from = "Cor9"; }
        } else {
            const bounds::Interval t10 = bounds::thm10_interval(s);
            if (b >= t10.lo && b <= t10.hi) {
                lower = std::max(lower, 1LL);
                upper = std::min(upper, 1LL);
                lower_from = upper_from = "T10";
            }
        }
    } else { // a > s + 2
        const long long t67 = bounds::thm67_best_lower(s, a, b);
        if (t67 > lower) { lower = t67; lower_from = "T6/T7"; }
    }

    if (s == 0 && a == 2 && q.b >= 5) {
        const bounds::Interval t3 = bounds::allagan_bounds(q.b);
        const long long t3u = static_cast<long long>(t3.hi);
        if (t3u < upper) { upper = t3u; upper_from = "T3"; }
    }

    r.lower = lower;
    r.upper = upper;
    r.exact = (lower == upper);
    if (r.exact) r.value = lower;
    r.provenance = "lower=" + lower_from + " upper=" + upper_from;
    return r;
}

} // namespace ohba
