#ifndef OHBA_CHOOSABILITY_HPP
#define OHBA_CHOOSABILITY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "ohba/coloring.hpp"
#include "ohba/graph.hpp"
#include "ohba/list_assignment.hpp"

namespace ohba {

// Hard limits for the exact searches.  Exceeding one raises BudgetError
// naming the limit and any partial result; nothing is ever silently
// truncated or approximated.
struct SearchBudget {
    int max_wx_vertices = 8;                    // p + a in join searches
    int max_naive_vertices = 8;                 // |V| in the naive oracle
    int max_naive_k = 3;                        // k in the naive oracle
    std::uint64_t max_assignments = 20'000'000; // canonical assignments visited
};

enum class CertificateKind {
    BadAssignment, // a k-assignment with no proper coloring (not choosable)
    CountingBound, // every adversarial assignment needs more than b Y-lists
    Exhaustion,    // every canonical k-assignment was colorable
};

std::string to_string(CertificateKind k);

struct ChoosabilityVerdict {
    bool choosable = false;
    CertificateKind certificate = CertificateKind::Exhaustion;
    // Present iff not choosable.
    std::optional<ListAssignment> bad_assignment;
    std::string detail;
};

// Exhaustive ground-truth oracle: enumerates every k-assignment over a
// color universe of size k*|V|, quotiented by first-appearance color
// renaming along the vertex scan order 0..n-1, and runs the generic search
// on each.  Budget: |V| <= 8 and k <= 3.
ChoosabilityVerdict is_k_choosable_naive(const GenericGraph& g, int k,
                                         const SearchBudget& budget = {});

struct CriticalBResult {
    // Least b such that K_p v K_{a,b} is not k-choosable; nullopt when that
    // least b exceeds the cap.
    std::optional<long long> value;
    long long cap = 0;
    // For a found value: the minimizing (W u X)-assignment extended with the
    // covering Y-lists, a full bad k-assignment on K_p v K_{a,value}.
    std::optional<ListAssignment> witness;
    std::uint64_t assignments_enumerated = 0;
};

// Exact minimum, over canonical k-assignments L' of W u X, of the least
// number of k-sets needed so that every range in R(G[WuX], L') contains one
// of them (ranges smaller than k are uncoverable and void the assignment).
// That minimum is exactly the least bad b.  For k = p+a with p >= 1, a >= 2
// the enumeration keeps only pairwise-disjoint X-lists, the assignments
// with intersecting X-lists being always colorable.
CriticalBResult critical_b(int p, int a, int k, long long b_cap,
                           const SearchBudget& budget = {});

// Structured k-choosability decision for a join, driven by critical_b with
// the cap at b.
ChoosabilityVerdict is_k_choosable_join(const JoinGraph& g, int k,
                                        const SearchBudget& budget = {});

// Exact chi_l(K_p v K_{a,b}) - chi, found by probing k = p+2, p+3, ... with
// critical_b; the probe stops at the certified bound chi_l <= p+a+1.
int deficiency(int p, int a, long long b, const SearchBudget& budget = {});

struct TauQuery {
    int s = 0;
    int a = 1;
    long long b = 1;
};

struct TauResult {
    TauQuery query;
    bool exact = false;
    long long value = 0;       // when exact
    long long lower = 0;       // sandwich interval otherwise
    long long upper = 0;
    std::string provenance;
};

// Smallest p with deficiency(p,a,b) <= s, by ascending search (sound since
// the deficiency is non-increasing in p).  On budget exhaustion returns the
// best closed-form sandwich instead, tagged non-exact.
TauResult tau_exact(const TauQuery& q, const SearchBudget& budget = {});

// The closed-form sandwich by itself: [max lower bound, min upper bound]
// with provenance per endpoint.
TauResult tau_sandwich(const TauQuery& q);

} // namespace ohba

#endif
