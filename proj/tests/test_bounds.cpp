#include "doctest.h"

#include "ohba/bounds.hpp"

using namespace ohba;
using bounds::Int;

TEST_CASE("binomial with the vanishing convention") {
    CHECK(bounds::binomial(5, 2) == 10);
    CHECK(bounds::binomial(2, 3) == 0); // C(a,b) = 0 when a < b
    CHECK(bounds::binomial(0, 0) == 1);
    CHECK(bounds::binomial(60, 30) == Int("118264581564861424"));
}

TEST_CASE("integer roots, floor and ceil") {
    CHECK(bounds::int_root_floor(9, 2) == 3);
    CHECK(bounds::int_root_floor(8, 2) == 2);
    CHECK(bounds::int_root_floor(125, 3) == 5); // exact cube
    CHECK(bounds::int_root_ceil(125, 3) == 5);
    CHECK(bounds::int_root_floor(192, 4) == 3); // 81 <= 192 < 256
    CHECK(bounds::int_root_ceil(192, 4) == 4);
    CHECK(bounds::int_root_floor(0, 5) == 0);

    // Past the native word: 10^30 has cube root 10^10.
    const Int big = bounds::ipow(Int(10), 30);
    CHECK(bounds::int_root_floor(big, 3) == bounds::ipow(Int(10), 10));
    CHECK(bounds::int_root_floor(big - 1, 3) == bounds::ipow(Int(10), 10) - 1);

    // floor/ceil bracket property on a grid.
    for (long long n = 0; n <= 2000; n += 7)
        for (unsigned k = 2; k <= 5; ++k) {
            const Int fl = bounds::int_root_floor(n, k);
            CHECK(bounds::ipow(fl, k) <= n);
            CHECK(bounds::ipow(fl + 1, k) > n);
        }
}

TEST_CASE("lemma13 upper bound") {
    CHECK(bounds::lemma13_upper(2, 3) == 0);
    CHECK(bounds::lemma13_upper(2, 10) == 7);
    CHECK(bounds::lemma13_upper(3, 4) == 2);
}

TEST_CASE("allagan interval endpoints") {
    CHECK(bounds::allagan_bounds(5) == bounds::Interval{1, 1});
    CHECK(bounds::allagan_bounds(9) == bounds::Interval{2, 2});
    CHECK(bounds::allagan_bounds(100) == bounds::Interval{9, 11});
    CHECK_THROWS_AS(bounds::allagan_bounds(4), ParamError);
}

TEST_CASE("thm4 thresholds") {
    CHECK(bounds::thm4_threshold(1, 2) == 96);
    CHECK(bounds::thm4_threshold(2, 2) == 1250);
    CHECK(bounds::thm4_threshold(0, 1) == 4); // the (s+2)^(s+2) base case
}

TEST_CASE("cor5 lower bound with conditions") {
    const bounds::BoundReport a = bounds::cor5_lower(0, 9);
    CHECK(a.valid);
    CHECK(*a.value == 2);

    const bounds::BoundReport b = bounds::cor5_lower(1, 96);
    CHECK(b.valid);
    CHECK(*b.value == 1); // floor(192^(1/4)) - 2 = 1

    const bounds::BoundReport c = bounds::cor5_lower(0, 1);
    CHECK_FALSE(c.valid);
    REQUIRE(!c.conditions.empty());
    CHECK(c.conditions[0].expr == "b >= s+2");
    CHECK_FALSE(c.conditions[0].ok);
}

TEST_CASE("thm67 threshold picks the right branch") {
    const bounds::BoundReport t6 = bounds::thm67_threshold(0, 2, 4);
    CHECK(t6.name == "T6");
    CHECK(*t6.value == 4);
    REQUIRE(t6.params.size() == 1);
    CHECK(t6.params[0] == std::pair<std::string, long long>{"q", 1});

    const bounds::BoundReport t7 = bounds::thm67_threshold(0, 3, 4);
    CHECK(t7.name == "T7");
    CHECK(*t7.value == 9);
    CHECK(t7.params == decltype(t7.params){{"q", 1}, {"r", 1}, {"u", 2}});

    const bounds::BoundReport t7b = bounds::thm67_threshold(1, 2, 5);
    CHECK(t7b.name == "T7");
    CHECK(*t7b.value == 60);

    CHECK_THROWS_AS(bounds::thm67_threshold(0, 2, 2), ParamError); // a <= s+2
}

TEST_CASE("thm8 upper bound and window ends") {
    CHECK(bounds::thm8_upper(1, 124) == 2);
    CHECK(bounds::thm8_upper(2, 1295) == 2);
    CHECK(bounds::thm8_upper(0, 8) == 1); // 9^(1/2) exact, l = 2
    CHECK(bounds::thm8_window_end(1, 3) == 124);
    CHECK(bounds::thm8_window_end(2, 3) == 1295);
    CHECK(bounds::thm8_window_end(0, 2) == 8);
}

TEST_CASE("cor9 exact staircase") {
    CHECK(bounds::cor9_exact(4) == 1);
    CHECK(bounds::cor9_exact(8) == 1);
    CHECK(bounds::cor9_exact(9) == 2);
    CHECK_THROWS_AS(bounds::cor9_exact(1), ParamError);
}

TEST_CASE("thm10 intervals") {
    CHECK(bounds::thm10_interval(0) == bounds::Interval{4, 8});
    CHECK(bounds::thm10_interval(1) == bounds::Interval{27, 95});
    CHECK(bounds::thm10_interval(2) == bounds::Interval{256, 1249});
}

TEST_CASE("conjectured intervals") {
    CHECK(bounds::conjecture11_interval(0, 2) == bounds::Interval{9, 15});
    CHECK(bounds::conjecture11_interval(0, 1) == bounds::Interval{4, 8});
    CHECK(bounds::conjecture11_interval(1, 1) == bounds::Interval{27, 95});
}

TEST_CASE("thm10 equals the conjectured interval at l = 1") {
    for (int s = 0; s <= 5; ++s) {
        const auto a = bounds::thm10_interval(s);
        const auto b = bounds::conjecture11_interval(s, 1);
        CHECK(a == b);
    }
}

TEST_CASE("conjectured intervals tile b without gaps") {
    for (int s = 0; s <= 3; ++s)
        for (int l = 1; l <= 5; ++l) {
            const auto cur = bounds::conjecture11_interval(s, l);
            const auto next = bounds::conjecture11_interval(s, l + 1);
            CHECK(cur.hi + 1 == next.lo);
            CHECK(cur.lo <= cur.hi);
        }
}

TEST_CASE("cor9 sits inside the allagan interval") {
    long long violations = 0;
    for (long long b = 5; b <= 100000; ++b) {
        const auto iv = bounds::allagan_bounds(b);
        const long long exact = bounds::cor9_exact(b);
        if (iv.lo > exact || exact > iv.hi) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("threshold formulas against a repeated-multiplication oracle") {
    // s = 4, l = 4: C(9,4) * 9^5 computed the slow way.
    Int c94 = 0;
    {
        // Pascal recurrence, no shortcuts.
        std::vector<std::vector<Int>> pas(10, std::vector<Int>(10, 0));
        for (int n = 0; n <= 9; ++n) {
            pas[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                pas[n][k] = pas[n - 1][k - 1] + (k <= n - 1 ? pas[n - 1][k] : Int(0));
        }
        c94 = pas[9][4];
    }
    Int nine5 = 1;
    for (int i = 0; i < 5; ++i) nine5 *= 9;
    CHECK(bounds::thm4_threshold(4, 4) == c94 * nine5);

    Int w = 1;
    for (int i = 0; i < 6; ++i) w *= 9; // (l+s+1)^(s+2) at s=4, l=4
    CHECK(bounds::thm8_window_end(4, 4) == w - 1);
}

TEST_CASE("lower bounds never cross upper bounds out to b = 1e6 (a = s+2)") {
    // Thresholds advance by events so the sweep is linear in b.
    constexpr long long kBMax = 1'000'000;
    long long violations = 0;
    for (int s = 0; s <= 2; ++s) {
        const int a = s + 2;
        std::vector<std::pair<long long, long long>> events; // (threshold, l)
        for (int l = 1;; ++l) {
            const Int t = bounds::thm4_threshold(s, l);
            if (t > kBMax) break;
            events.push_back({static_cast<long long>(t), l});
        }
        std::size_t next = 0;
        long long t4 = 0;
        long long t8_l = 1;
        for (long long b = a; b <= kBMax; ++b) {
            while (next < events.size() && events[next].first <= b) t4 = events[next++].second;
            long long lower = t4;
            const bounds::BoundReport c5 = bounds::cor5_lower(s, b);
            if (c5.valid) lower = std::max(lower, static_cast<long long>(*c5.value));

            while (bounds::thm8_window_end(s, static_cast<int>(t8_l)) < b) ++t8_l;
            const long long upper =
                std::min(t8_l - 1, bounds::lemma13_upper(a, b));
            if (lower > upper) ++violations;
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("small-side aliases match the canonical forms") {
    CHECK(bounds::thm8_upper_smallside(3, 124) == bounds::thm8_upper(1, 124));
    CHECK(bounds::thm10_interval_smallside(2) == bounds::thm10_interval(0));
    CHECK(bounds::thm10_interval_smallside(4) == bounds::thm10_interval(2));
}

TEST_CASE("best derivable lower bounds") {
    CHECK(bounds::thm4_best_lower(0, 9) == 2);
    CHECK(bounds::thm4_best_lower(0, 8) == 1);
    CHECK(bounds::thm4_best_lower(0, 3) == 0);
    CHECK(bounds::thm4_best_lower(1, 96) == 2);
    CHECK(bounds::thm67_best_lower(0, 4, 4) == 2);
    CHECK(bounds::thm67_best_lower(0, 4, 3) == 0); // b < a
}
