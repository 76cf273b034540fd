#include "ohba/bounds.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace ohba::bounds {

Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || n < k) return 0;
    k = std::min(k, n - k);
    Int num = 1;
    for (long long i = 1; i <= k; ++i) {
        num *= (n - k + i);
        num /= i; // exact at every step: product of i consecutive integers
    }
    return num;
}

Int ipow(const Int& base, unsigned exp) {
    Int result = 1, b = base;
    while (exp) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

namespace {

// Native path for word-sized inputs; the sweeps call these millions of
// times and cpp_int allocation would dominate.
bool pow_leq_u64(std::uint64_t m, unsigned k, std::uint64_t n) {
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc *= m;
        if (acc > n) return false;
    }
    return true;
}

std::uint64_t root_floor_u64(std::uint64_t n, unsigned k) {
    if (n == 0) return 0;
    if (k == 1) return n;
    std::uint64_t lo = 0, hi = 1;
    while (pow_leq_u64(hi, k, n)) {
        lo = hi;
        if (hi > (std::numeric_limits<std::uint64_t>::max() >> 1)) break;
        hi <<= 1;
    }
    while (lo + 1 < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (pow_leq_u64(mid, k, n)) lo = mid; else hi = mid;
    }
    return lo;
}

} // namespace

Int int_root_floor(const Int& n, unsigned k) {
    if (n < 0) throw ParamError("integer root of a negative number");
    if (k == 0) throw ParamError("0th root");
    if (n <= std::numeric_limits<std::uint64_t>::max())
        return root_floor_u64(static_cast<std::uint64_t>(n), k);

    Int lo = 0, hi = 1;
    while (ipow(hi, k) <= n) { lo = hi; hi <<= 1; }
    while (lo + 1 < hi) {
        const Int mid = (lo + hi) / 2;
        if (ipow(mid, k) <= n) lo = mid; else hi = mid;
    }
    return lo;
}

Int int_root_ceil(const Int& n, unsigned k) {
    const Int fl = int_root_floor(n, k);
    return (ipow(fl, k) == n) ? fl : fl + 1;
}

long long lemma13_upper(long long a, long long b) {
    if (a < 1 || a > b) throw ParamError("lemma13 needs 1 <= a <= b");
    return std::max<long long>(0, a + b - 5);
}

Interval allagan_bounds(long long b) {
    if (b < 5) throw ParamError("Allagan bounds need b >= 5, got " + std::to_string(b));
    const Int lower = int_root_floor(b, 2) - 1;
    // m satisfies 2m+7 >= sqrt(D) iff (2m+7)^2 >= D iff 2m+7 >= ceilsqrt(D),
    // so the upper endpoint is ceil((ceilsqrt(8b+17) - 7) / 2).
    const Int cs = int_root_ceil(Int(8) * b + 17, 2);
    const Int upper = (cs - 7 + 1) / 2; // ceil((cs-7)/2), cs >= 7 for b >= 5
    return Interval{lower, upper};
}

Int thm4_threshold(int s, int l) {
    if (s < 0 || l < 0) throw ParamError("thm4 threshold needs s, l >= 0");
    const long long k = static_cast<long long>(l) + s + 1;
    return binomial(k, l) * ipow(k, static_cast<unsigned>(s + 1));
}

BoundReport cor5_lower(int s, const Int& b) {
    BoundReport r;
    r.name = "Cor5";
    r.kind = BoundReport::Kind::Lower;
    if (s < 0) throw ParamError("cor5 needs s >= 0");

    const Int fact = factorial(static_cast<unsigned>(s + 1));
    const Int prod = fact * b;
    const bool c1 = b >= s + 2;
    const bool c2 = prod >= ipow(Int(s + 1), static_cast<unsigned>(2 * s + 2));
    r.conditions.push_back({"b >= s+2", c1});
    r.conditions.push_back({"(s+1)! b >= (s+1)^(2s+2)", c2});
    r.valid = c1 && c2;
    if (r.valid)
        r.value = int_root_floor(prod, static_cast<unsigned>(2 * s + 2)) - s - 1;
    return r;
}

BoundReport thm67_threshold(int s, int l, int a) {
    if (a <= s + 2)
        throw ParamError("thm67 threshold is the a > s+2 regime; got a=" + std::to_string(a) +
                         ", s=" + std::to_string(s));
    BoundReport r;
    r.kind = BoundReport::Kind::Lower;
    const bool cl = l >= 2;
    r.conditions.push_back({"l >= 2", cl});
    if (!cl) {
        r.name = "T6/T7";
        r.valid = false;
        return r;
    }

    const long long k = static_cast<long long>(l) + s + 1;
    const long long denom = static_cast<long long>(a) - s - 1;
    if (k % denom == 0) {
        const long long q = k / denom;
        r.name = "T6";
        r.valid = true;
        r.params = {{"q", q}};
        r.value = ipow(Int(k), static_cast<unsigned>(s)) *
                  (binomial(k, l + 1) + binomial(k, l) * q);
    } else {
        const long long q = k / denom;
        const long long rr = k - q * denom;
        const long long u = ((1 + q) * denom - k) * q;
        r.name = "T7";
        r.valid = true;
        r.params = {{"q", q}, {"r", rr}, {"u", u}};
        r.value = ipow(Int(k), static_cast<unsigned>(s)) *
                  (binomial(k, l + 1) + binomial(k, l) * (q + 1) - binomial(u, l));
    }
    return r;
}

long long thm8_upper(int s, const Int& b) {
    if (s < 0 || b < 1) throw ParamError("thm8 upper needs s >= 0, b >= 1");
    const Int l = int_root_ceil(b + 1, static_cast<unsigned>(s + 2)) - s - 1;
    const long long ll = std::max<long long>(1, static_cast<long long>(l));
    return ll - 1;
}

Int thm8_window_end(int s, int l) {
    if (s < 0 || l < 1) throw ParamError("thm8 window needs s >= 0, l >= 1");
    return ipow(Int(static_cast<long long>(l) + s + 1), static_cast<unsigned>(s + 2)) - 1;
}

long long cor9_exact(const Int& b) {
    if (b < 2) throw ParamError("cor9 needs b >= 2");
    return static_cast<long long>(int_root_floor(b, 2) - 1);
}

Interval thm10_interval(int s) {
    if (s < 0) throw ParamError("thm10 needs s >= 0");
    const Int lo = ipow(Int(s + 2), static_cast<unsigned>(s + 2));
    const Int hi = binomial(s + 3, 2) * ipow(Int(s + 3), static_cast<unsigned>(s + 1)) - 1;
    return Interval{lo, hi};
}

Interval conjecture11_interval(int s, int l) {
    if (s < 0 || l < 1) throw ParamError("conjecture11 needs s >= 0, l >= 1");
    return Interval{thm4_threshold(s, l), thm4_threshold(s, l + 1) - 1};
}

long long thm8_upper_smallside(int small_side, const Int& b) {
    if (small_side < 2) throw ParamError("small-side form needs small side >= 2");
    return thm8_upper(small_side - 2, b);
}

Interval thm10_interval_smallside(int small_side) {
    if (small_side < 2) throw ParamError("small-side form needs small side >= 2");
    return thm10_interval(small_side - 2);
}

long long thm4_best_lower(int s, const Int& b) {
    long long best = 0;
    for (int l = 1;; ++l) {
        if (thm4_threshold(s, l) > b) break;
        best = l;
    }
    return best;
}

long long thm67_best_lower(int s, int a, const Int& b) {
    if (b < a) return 0;
    long long best = 0;
    // Both branch thresholds are >= C(l+s+1, l), which is monotone and
    // unbounded in l, so that term going past b ends the scan even if the
    // branch values wobble across the divisibility boundary.
    for (int l = 2;; ++l) {
        const long long k = static_cast<long long>(l) + s + 1;
        if (binomial(k, l) > b) break;
        const BoundReport r = thm67_threshold(s, l, a);
        if (r.valid && *r.value <= b) best = l;
    }
    return best;
}

} // namespace ohba::bounds
