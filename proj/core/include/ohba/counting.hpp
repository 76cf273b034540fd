#ifndef OHBA_COUNTING_HPP
#define OHBA_COUNTING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ohba/graph.hpp"
#include "ohba/list_assignment.hpp"

namespace ohba {

// Brute-force oracles for the three counting inequalities behind the
// upper-bound machinery.  The oracles enumerate colorings (not ranges) and
// project, so every counted range has a witness by construction.

// d_1 <= d_i for all i, k >= 2, and 0 <= l <= d_1 - 1.
struct WeightedTuple {
    std::vector<long long> d;
    long long l = 0;
};

// Exact minimum of prod(d_i - a_i) over nonnegative integer tuples a with
// sum l.  The minimum is always attained by loading l onto the smallest
// weight, i.e. it equals (d_1 - l) * prod_{i>=2} d_i; the function checks
// that equality on every call.
long long min_weighted_product(const WeightedTuple& t);

struct Lemma17Report {
    int n = 0;
    int s = 0;
    unsigned long long range_count = 0; // |R(G,L)|, exact
    unsigned long long product = 0;     // prod |L(x_i)|
    bool ok = false;                    // range_count >= product
};

// Preconditions, each rejected by name: n in [2,8], 2 <= s <= n, x_set
// independent, |L(v)| >= n for every v, and the x-lists pairwise disjoint.
Lemma17Report check_lemma17(const GenericGraph& g, const std::vector<Vertex>& x_set,
                            const ListAssignment& L);

struct Lemma18Report {
    int s = 0;
    unsigned long long range_count = 0;
    unsigned long long bound = 0; // C(s+1,2) * (s+1)^(s-1)
    bool ok = false;
};

// L is an (s+1)-assignment on the star K_{1,s} (center = vertex 0) whose
// leaf lists are pairwise disjoint; s in [2,5] keeps enumeration exact.
Lemma18Report check_lemma18(int s, const ListAssignment& L);

// Seeded random valid instances for the property sweeps.  Deterministic
// across platforms: only raw engine draws, no distribution objects.
struct Lemma17Instance {
    GenericGraph g;
    std::vector<Vertex> x_set;
    ListAssignment L;
};

Lemma17Instance random_lemma17_instance(std::uint64_t seed);

// Disjoint leaf blocks plus a center list drawn from leaves and fresh
// colors, so center overlap varies across seeds.
ListAssignment random_lemma18_assignment(int s, std::uint64_t seed);

} // namespace ohba

#endif
