#ifndef OHBA_BOUNDS_HPP
#define OHBA_BOUNDS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ohba/error.hpp"

// Closed-form bounds on the generalized Ohba numbers tau_s(a,b) of K_{a,b}.
// Every radical is evaluated by exact integer root extraction; floating
// point never touches a reported value.  The canonical parameterization
// everywhere is (s = allowed deficiency, a = small side); the *_smallside
// aliases at the bottom restate the two results that are usually quoted
// with the small partite side as the parameter.
namespace ohba::bounds {

using Int = boost::multiprecision::cpp_int;

// C(n, k), with C(n, k) = 0 whenever n < k.
Int binomial(long long n, long long k);
Int ipow(const Int& base, unsigned exp);
Int factorial(unsigned n);

// Largest m >= 0 with m^k <= n, and smallest m >= 0 with m^k >= n.
Int int_root_floor(const Int& n, unsigned k);
Int int_root_ceil(const Int& n, unsigned k);

struct Interval {
    Int lo, hi;
    bool operator==(const Interval&) const = default;
};

struct Condition {
    std::string expr;
    bool ok;
};

// A named bound with its validity conditions.  `value`/`interval` are
// meaningful only when every condition holds (valid == true); otherwise the
// failing conditions identify why.
struct BoundReport {
    enum class Kind { Lower, Upper, Exact, IntervalKind };

    std::string name;
    Kind kind = Kind::Lower;
    std::optional<Int> value;
    std::optional<Interval> interval;
    bool valid = false;
    std::vector<Condition> conditions;
    // Derived integer parameters worth reporting (q, r, u, ...).
    std::vector<std::pair<std::string, long long>> params;
};

// tau_0(a,b) <= max{0, a+b-5}.
long long lemma13_upper(long long a, long long b);

// For b >= 5: floor(sqrt(b)) - 1 <= tau_0(2,b) <= ceil((-7+sqrt(8b+17))/2).
Interval allagan_bounds(long long b);

// tau_s(s+2,b) >= l once b >= C(l+s+1,l) * (l+s+1)^(s+1).
Int thm4_threshold(int s, int l);

// tau_s(s+2,b) >= floor(((s+1)! b)^(1/(2s+2))) - s - 1, subject to
// b >= s+2 and (s+1)! b >= (s+1)^(2s+2).
BoundReport cor5_lower(int s, const Int& b);

// Lower-bound threshold for a > s+2; picks the divisible (T6) or
// non-divisible (T7) branch of the construction and reports q, r, u.
BoundReport thm67_threshold(int s, int l, int a);

// Smallest certified upper bound from tau_s(s+2,b) <= l-1 for
// b <= (l+s+1)^(s+2) - 1; returns l - 1 with l = max(1, ceilroot(b+1, s+2) - s - 1).
long long thm8_upper(int s, const Int& b);
// Largest b for which that theorem certifies tau_s(s+2,b) <= l - 1.
Int thm8_window_end(int s, int l);

// tau_0(2,b) = floor(sqrt(b)) - 1, for b >= 2.
long long cor9_exact(const Int& b);

// tau_s(s+2,b) = 1 exactly on [(s+2)^(s+2), C(s+3,2)(s+3)^(s+1) - 1].
Interval thm10_interval(int s);

// Conjectured b-interval on which tau_s(s+2,b) = l:
// [thm4_threshold(s,l), thm4_threshold(s,l+1) - 1].  Proven for s = 0.
Interval conjecture11_interval(int s, int l);

// Aliases in the small-side parameterization (small = s+2, so the
// deficiency is small-2):  tau_{m-2}(m, b) forms.
long long thm8_upper_smallside(int small_side, const Int& b);
Interval thm10_interval_smallside(int small_side);

// Largest l >= 0 whose Theorem-4 threshold is <= b (a = s+2 regime).
long long thm4_best_lower(int s, const Int& b);
// Largest l >= 2 whose Theorem-6/7 threshold is <= b, 0 if none (a > s+2;
// also requires b >= a).
long long thm67_best_lower(int s, int a, const Int& b);

} // namespace ohba::bounds

#endif
