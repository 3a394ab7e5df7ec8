#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "parsep/classes.hpp"

using namespace parsep;

namespace {

std::map<Integer, int> multiplicities(const Partition& lam) {
    std::map<Integer, int> m;
    for (Integer x : lam.parts()) ++m[x];
    return m;
}

// Odd parts distinct and each greater than every even part.
bool prose_p_eu_od(const Partition& lam) {
    Integer max_even = 0;
    for (Integer x : lam.parts())
        if (x % 2 == 0) max_even = std::max(max_even, x);
    for (const auto& [value, mult] : multiplicities(lam)) {
        if (value % 2 == 0) continue;
        if (mult > 1 || value < max_even) return false;
    }
    return true;
}

// Odd parts distinct and every odd integer below the largest odd part present.
bool prose_O_d(const Partition& lam) {
    const auto m = multiplicities(lam);
    Integer max_odd = 0;
    for (const auto& [value, mult] : m) {
        if (value % 2 == 0) continue;
        if (mult > 1) return false;
        max_odd = std::max(max_odd, value);
    }
    for (Integer odd = 1; odd < max_odd; odd += 2)
        if (!m.count(odd)) return false;
    return true;
}

std::vector<Integer> counts(const ClassSpec& spec, Integer upto) {
    std::vector<Integer> out;
    for (Integer n = 0; n <= upto; ++n) out.push_back(count_class(n, spec));
    return out;
}

} // namespace

TEST_SUITE("classes") {

TEST_CASE("is_in_D") {
    CHECK(is_in_D(make_partition({53, 49, 29, 17, 13, 9, 8, 4, 4, 4}), 4, 1));
    CHECK(is_in_D(Partition{}, 3, 2));
    CHECK_FALSE(is_in_D(make_partition({4, 1}), 2, 1));
    CHECK(is_in_D(make_partition({8, 8, 4}), 4, 3));        // only multiples of p
    CHECK_FALSE(is_in_D(make_partition({5, 5}), 4, 1));     // repeated r-part
    CHECK_FALSE(is_in_D(make_partition({7, 6}), 4, 3));     // 6 ≡ 2, foreign
    CHECK_THROWS_AS(is_in_D(Partition{}, 1, 0), InvalidParameter);
}

TEST_CASE("is_in_O") {
    CHECK(is_in_O(make_partition({32, 32, 21, 17, 16, 13, 9, 8, 8, 8, 8, 5, 4, 4, 4, 1}), 4, 1));
    CHECK_FALSE(is_in_O(make_partition({3, 2}), 2, 1));
    CHECK(is_in_O(Partition{}, 5, 4));
    CHECK_FALSE(is_in_O(make_partition({3, 1, 1}), 2, 1));  // staircase values appear exactly once
    CHECK(is_in_O(make_partition({12, 8, 6, 2}), 6, 2));
    CHECK_FALSE(is_in_O(make_partition({8, 6}), 6, 2));      // 2 missing
}

TEST_CASE("is_in_A") {
    CHECK(is_in_A(make_partition({3}), 1));
    CHECK(is_in_A(make_partition({1, 1, 1}), 1));
    CHECK_FALSE(is_in_A(make_partition({2, 1}), 1));
    CHECK(is_in_A(Partition{}, 1));
    CHECK(is_in_A(Partition{}, 3));
    CHECK(is_in_A(make_partition({5, 2}), 3));
    CHECK_FALSE(is_in_A(make_partition({3, 2}), 3));
    CHECK(is_in_A(make_partition({7, 4, 4, 2, 2}), 3));      // repeats allowed
    CHECK_FALSE(is_in_A(make_partition({4}), 1));            // 2 missing
    CHECK_THROWS_AS(is_in_A(Partition{}, 2), InvalidParameter);

    std::vector<std::string> members;
    for (const Partition& lam : list_class(7, ClassSpec::a(3))) members.push_back(to_literal(lam));
    CHECK(members == std::vector<std::string>{"7", "5,2"});
}

TEST_CASE("classify_B") {
    auto empty = classify_B(Partition{});
    REQUIRE(empty);
    CHECK(empty->branch == BBranch::A);
    CHECK(empty->even_part_count == 0);

    auto ones = classify_B(make_partition({1, 1, 1}));
    REQUIRE(ones);
    CHECK(ones->branch == BBranch::B);
    CHECK(ones->even_part_count == 0);

    auto four = classify_B(make_partition({4, 1, 1}));
    REQUIRE(four);
    CHECK(four->branch == BBranch::B);
    CHECK(four->even_part_count == 1);

    CHECK_FALSE(classify_B(make_partition({1})));
    CHECK_FALSE(classify_B(make_partition({2, 1, 1})));          // even part below 2k+2
    CHECK_FALSE(classify_B(make_partition({3, 3, 1})));          // 1 appears once
    CHECK_FALSE(classify_B(make_partition({5, 5, 1, 1})));       // 3 missing
    CHECK_FALSE(classify_B(make_partition({6, 6})));             // repeated even
    CHECK(classify_B(make_partition({8, 3, 3, 3, 1, 1})));       // 8 >= 3 + 3 + 2
    CHECK(classify_B(make_partition({6, 3, 3, 1, 1})));          // 6 >= 3 + 3
    CHECK_FALSE(classify_B(make_partition({4, 3, 3, 1, 1})));    // 4 < 6
}

TEST_CASE("AP and distinct-residue classes") {
    CHECK(is_in_AP_class(make_partition({3, 1}), 3));
    CHECK_FALSE(is_in_AP_class(make_partition({2, 2}), 3));
    CHECK(is_in_AP_class(Partition{}, 4));
    CHECK(is_in_AP_class(make_partition({4, 1}), 3));
    CHECK_FALSE(is_in_AP_class(make_partition({4}), 3));        // smallest non-multiple must be < p

    CHECK(is_in_distinct_residue_class(make_partition({5}), 3));
    CHECK_FALSE(is_in_distinct_residue_class(make_partition({3, 2}), 3));
    CHECK(is_in_distinct_residue_class(Partition{}, 2));
    CHECK(is_in_distinct_residue_class(make_partition({4, 1}), 3));
    CHECK_FALSE(is_in_distinct_residue_class(make_partition({5, 4}), 3));  // mixed residues

    CHECK(count_class(4, ClassSpec::ap(3)) == 1);
    CHECK(count_class(5, ClassSpec::ap(3)) == 2);
    CHECK(count_class(5, ClassSpec::distinct_residue(3)) == 2);
}

TEST_CASE("count_class examples") {
    CHECK(count_class(5, ClassSpec::d(2, 1)) == 2);
    CHECK(count_class(5, ClassSpec::o(2, 1)) == 2);
    CHECK(count_class(3, ClassSpec::a(1)) == 2);
    CHECK(count_class(3, ClassSpec::mod4(1)) == 2);
    for (const ClassSpec& spec : {ClassSpec::d(3, 2), ClassSpec::o(5, 1), ClassSpec::a(3), ClassSpec::b(),
                                  ClassSpec::ap(2), ClassSpec::distinct_residue(4), ClassSpec::mod4(3)})
        CHECK_MESSAGE(count_class(0, spec) == 1, describe(spec));

    // Frozen from an independent brute-force enumeration.
    CHECK(counts(ClassSpec::o(2, 1), 5) == std::vector<Integer>{1, 1, 1, 1, 3, 2});
    CHECK(counts(ClassSpec::o(3, 2), 15) == std::vector<Integer>{1, 0, 1, 1, 0, 1, 2, 1, 2, 3, 1, 3, 5, 2, 5, 8});
    CHECK(counts(ClassSpec::d(4, 1), 15) == std::vector<Integer>{1, 1, 0, 0, 1, 1, 1, 0, 2, 2, 1, 0, 3, 3, 2, 1});
    CHECK(counts(ClassSpec::ap(3), 15) == std::vector<Integer>{1, 1, 1, 1, 1, 2, 2, 3, 3, 3, 4, 5, 6, 7, 8, 9});
    CHECK(counts(ClassSpec::a(1), 7) == std::vector<Integer>{1, 1, 2, 2, 3, 4, 6, 7});
    CHECK(counts(ClassSpec::a(3), 7) == std::vector<Integer>{1, 0, 1, 1, 1, 1, 3, 2});
}

TEST_CASE("ClassSpec validation") {
    CHECK_THROWS_AS(ClassSpec::d(1, 0), InvalidParameter);
    CHECK_THROWS_AS(ClassSpec::o(3, 3), InvalidParameter);
    CHECK_THROWS_AS(ClassSpec::a(2), InvalidParameter);
    CHECK_THROWS_AS(ClassSpec::mod4(0), InvalidParameter);
    CHECK_THROWS_AS(ClassSpec::ap(1), InvalidParameter);
    CHECK(parse_class_kind("MOD4") == ClassKind::ResiduePartsMod4);
    CHECK_FALSE(parse_class_kind("Q"));
    CHECK(describe(ClassSpec::o(4, 1)) == "O(p=4,r=1)");
}

TEST_CASE("signed_count_B examples") {
    CHECK(signed_count_B(0) == SignedCount{1, 0});
    CHECK(signed_count_B(1).difference() == 0);
    CHECK(signed_count_B(3).difference() == 1);
    CHECK(signed_count_B(5).difference() == 1);
    // (6) −1, (4,2) +1, (1^6) +1, (4,1,1) −1
    CHECK(signed_count_B(6) == SignedCount{2, 2});
}

TEST_CASE("D and O for p=2, r=1 match direct encodings of their definitions") {
    for (Integer n = 0; n <= 25; ++n)
        for_each_partition(n, [&](const Partition& lam) {
            CHECK_MESSAGE(is_in_D(lam, 2, 1) == prose_p_eu_od(lam), lam);
            CHECK_MESSAGE(is_in_O(lam, 2, 1) == prose_O_d(lam), lam);
        });
}

TEST_CASE("counting identities at small n") {
    for (Integer n = 0; n <= 22; ++n) {
        for (Integer p = 2; p <= 5; ++p) {
            for (Integer r = 1; r < p; ++r)
                CHECK_MESSAGE(count_class(n, ClassSpec::d(p, r)) == count_class(n, ClassSpec::o(p, r)),
                              "n=" << n << " p=" << p << " r=" << r);
            CHECK(count_class(n, ClassSpec::ap(p)) == count_class(n, ClassSpec::distinct_residue(p)));
        }
        for (Integer r : {1, 3}) CHECK(count_class(n, ClassSpec::a(r)) == count_class(n, ClassSpec::mod4(r)));
        bool pent = false;
        for (Integer m = 0; m <= 3; ++m) pent = pent || n == m * (4 * m + 1) || n == m * (4 * m - 1);
        CHECK_MESSAGE(signed_count_B(n).difference() == (pent ? 1 : 0), "n=" << n);
    }
}

TEST_CASE("B branches are disjoint and cover the definition") {
    for (Integer n = 0; n <= 20; ++n)
        for_each_partition(n, [&](const Partition& lam) {
            const auto c = classify_B(lam);
            if (!c) return;
            const bool has_odd = std::any_of(lam.parts().begin(), lam.parts().end(), [](Integer x) { return x % 2; });
            CHECK((c->branch == BBranch::B) == has_odd);
            const auto evens = std::count_if(lam.parts().begin(), lam.parts().end(), [](Integer x) { return x % 2 == 0; });
            CHECK(c->even_part_count == evens);
        });
}

} // TEST_SUITE
