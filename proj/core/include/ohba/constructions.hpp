#ifndef OHBA_CONSTRUCTIONS_HPP
#define OHBA_CONSTRUCTIONS_HPP

#include <string>
#include <vector>

#include "ohba/graph.hpp"
#include "ohba/list_assignment.hpp"

namespace ohba {

// Adversarial list-assignment generators.  Each produces a k-assignment
// under which the generated join graph has no proper coloring, together
// with the instance parameters.  Colors are 1-based and laid out in the
// blocks [jk+1 : (j+1)k] so the emitted witnesses read directly.
//
//   T1:  K_{k,t}, t >= k^k; disjoint k-blocks on X, all transversals on Y.
//   T4:  K_{l-1} v K_{s+2,b}, b >= C(l+s+1,l)(l+s+1)^{s+1}.
//   T6:  K_{l-1} v K_{a,b}, a > s+2, (a-s-1) | (l+s+1).
//   T7:  same regime when (a-s-1) does not divide (l+s+1).

enum class ConstructionKind { T1, T4, T6, T7 };

std::string to_string(ConstructionKind k);

struct ConstructionSpec {
    ConstructionKind theorem = ConstructionKind::T4;
    int s = 0;      // allowed deficiency (T4/T6/T7)
    int l = 0;      // lower-bound target (T4/T6/T7); the list size for T1
    int a = 0;      // small partite size (T1: a = k; T4: a = s+2)
    long long b = 0;

    // Derived quantities.
    int k = 0;              // uniform list size (l+s+1; T1: k)
    int q = 0, r = 0, u = 0; // partition parameters (T6/T7)
    int h = 0;              // (s+1) * k, the top of the block layout (T6/T7)
};

struct ConstructionInstance {
    ConstructionSpec spec;
    JoinGraph graph;
    ListAssignment lists;
    long long c_size = 0; // |C|: structured Y-lists before [k]-padding
};

ConstructionInstance construct_thm1(int k, long long t);
ConstructionInstance construct_thm4(int s, int l, long long b);
ConstructionInstance construct_thm6(int s, int l, int a, long long b);
ConstructionInstance construct_thm7(int s, int l, int a, long long b);

// Dispatch on spec.theorem using (s, l, a, b); for T1 the parameters are
// (k = a's role, t = b).
ConstructionInstance construct(ConstructionKind kind, int s, int l, int a, long long b);

struct VerifyClause {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct VerifyReport {
    bool pass = false;
    ConstructionSpec spec;
    long long c_size = 0;
    std::size_t wx_range_count = 0;
    std::vector<VerifyClause> clauses;
};

// Regenerates the instance and checks, clause by clause: the engine finds
// it uncolorable, |C| matches the closed form, every list has exactly k
// colors, the X-lists follow the block/partition structure, and the
// structured Y-lists are pairwise distinct with [k] padding after them.
VerifyReport verify_construction(ConstructionKind kind, int s, int l, int a, long long b);

} // namespace ohba

#endif
