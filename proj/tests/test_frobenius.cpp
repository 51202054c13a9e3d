#include "frobgeom/frobenius.hpp"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace frobgeom {
namespace {

input_vector vec(std::vector<std::int64_t> v) { return input_vector::validate(std::move(v)); }
multiplicity mult(std::int64_t s) { return multiplicity::validate(s); }

TEST(ClosedForm, KnownValues) {
    EXPECT_EQ(frobenius_two_closed(vec({3, 5}), mult(1)).value, 7);
    EXPECT_EQ(frobenius_two_closed(vec({3, 5}), mult(2)).value, 22);
    EXPECT_EQ(frobenius_two_closed(vec({1, 2}), mult(1)).value, -1);
    EXPECT_EQ(frobenius_two_closed(vec({2, 3}), mult(3)).value, 13);
}

TEST(ClosedForm, RequiresPairs) {
    EXPECT_THROW(frobenius_two_closed(vec({3, 5, 7}), mult(1)), input_error);
}

TEST(ClosedForm, Overflow) {
    std::int64_t big = (std::int64_t)1 << 62;
    EXPECT_THROW(frobenius_two_closed(vec({big, big - 1}), mult(4)), overflow_error);
}

TEST(SearchBound, PinnedFormulaValues) {
    // n = 2 uses the closed form for U_1, n >= 3 the classical/fallback max.
    EXPECT_EQ(search_bound(vec({3, 5}), mult(1)), 12);      // 7 + 0 + 5
    EXPECT_EQ(search_bound(vec({3, 5}), mult(2)), 27);      // 7 + 15 + 5
    EXPECT_EQ(search_bound(vec({3, 5, 7}), mult(1)), 28);   // max(11, 21) + 0 + 7
}

TEST(SearchBound, DominatesFrobeniusPlusMaxEntry) {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 150; ++round) {
        int n = 2 + (int)(rng() % 3);
        input_vector a = vec(testing::random_instance(rng, n, 25));
        std::int64_t s = 1 + (std::int64_t)(rng() % 4);
        std::int64_t f = testing::frobenius_by_definition(a.entries(), s);
        EXPECT_GE(search_bound(a, mult(s)), f + a.max_entry())
            << ::testing::PrintToString(a.entries()) << " s=" << s;
    }
}

TEST(AperyMethod, KnownValues) {
    EXPECT_EQ(frobenius_apery(vec({3, 5}), mult(1)).value, 7);
    EXPECT_EQ(frobenius_apery(vec({3, 5, 7}), mult(1)).value, 4);
    EXPECT_EQ(frobenius_apery(vec({2, 3}), mult(3)).value, 13);
    EXPECT_EQ(frobenius_apery(vec({1, 2}), mult(1)).value, -1);
}

TEST(NaiveScan, KnownValues) {
    EXPECT_EQ(frobenius_naive(vec({3, 5}), mult(2)).value, 22);
    EXPECT_EQ(frobenius_naive(vec({1, 1}), mult(1)).value, -1);
    EXPECT_EQ(frobenius_naive(vec({2, 3, 5}), mult(1)).value, 1);
}

TEST(AllMethods, AgreeWithDefinitionOracle) {
    std::mt19937_64 rng(37);
    for (int round = 0; round < 80; ++round) {
        int n = 2 + (int)(rng() % 2);
        input_vector a = vec(testing::random_instance(rng, n, 20));
        std::int64_t s = 1 + (std::int64_t)(rng() % 3);
        std::int64_t expected = testing::frobenius_by_definition(a.entries(), s);
        EXPECT_EQ(frobenius_apery(a, mult(s)).value, expected);
        EXPECT_EQ(frobenius_naive(a, mult(s)).value, expected);
        if (n == 2) EXPECT_EQ(frobenius_two_closed(a, mult(s)).value, expected);
    }
}

TEST(AllMethods, ThreeWayAgreementSample) {
    for (std::int64_t a1 = 1; a1 <= 9; ++a1)
        for (std::int64_t a2 = 1; a2 <= 9; ++a2) {
            if (std::gcd(a1, a2) != 1) continue;
            for (std::int64_t s = 1; s <= 4; ++s) {
                input_vector a = vec({a1, a2});
                std::int64_t closed = frobenius_two_closed(a, mult(s)).value;
                EXPECT_EQ(frobenius_apery(a, mult(s)).value, closed);
                EXPECT_EQ(frobenius_naive(a, mult(s)).value, closed);
            }
        }
}

TEST(AllMethods, TripleSweepAperyEqualsNaive) {
    // every primitive sorted triple with entries <= 30 (permutations are
    // covered by the invariance test above)
    long checked = 0;
    for (std::int64_t a1 = 1; a1 <= 30; ++a1)
        for (std::int64_t a2 = a1; a2 <= 30; ++a2)
            for (std::int64_t a3 = a2; a3 <= 30; ++a3) {
                if (std::gcd(a1, std::gcd(a2, a3)) != 1) continue;
                input_vector a = vec({a1, a2, a3});
                for (std::int64_t s = 1; s <= 4; ++s) {
                    ASSERT_EQ(frobenius_apery(a, mult(s)).value,
                              frobenius_naive(a, mult(s)).value)
                        << a1 << "," << a2 << "," << a3 << " s=" << s;
                    ++checked;
                }
            }
    EXPECT_GT(checked, 10000);
}

TEST(Frobenius, MonotoneInMultiplicity) {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 40; ++round) {
        input_vector a = vec(testing::random_instance(rng, 2 + (int)(rng() % 3), 22));
        std::int64_t prev = INT64_MIN;
        for (std::int64_t s = 1; s <= 4; ++s) {
            std::int64_t cur = frobenius_apery(a, mult(s)).value;
            EXPECT_GE(cur, prev);
            prev = cur;
        }
    }
}

TEST(Frobenius, DefinitionCheckAroundTheValue) {
    std::mt19937_64 rng(43);
    for (int round = 0; round < 40; ++round) {
        input_vector a = vec(testing::random_instance(rng, 2 + (int)(rng() % 3), 18));
        std::int64_t s = 1 + (std::int64_t)(rng() % 3);
        std::int64_t f = frobenius_apery(a, mult(s)).value;
        if (f >= 0) EXPECT_LT(denumerant(f, a, mult(s)).value, s);
        for (std::int64_t k = 1; k <= a.max_entry(); ++k)
            EXPECT_EQ(denumerant(f + k, a, mult(s)).value, s) << "k=" << k;
    }
}

TEST(Frobenius, PermutationInvariant) {
    std::mt19937_64 rng(47);
    for (int round = 0; round < 30; ++round) {
        std::vector<std::int64_t> entries = testing::random_instance(rng, 3, 20);
        std::int64_t s = 1 + (std::int64_t)(rng() % 3);
        std::int64_t base = frobenius_apery(vec(entries), mult(s)).value;
        std::vector<std::int64_t> shuffled = entries;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        EXPECT_EQ(frobenius_apery(vec(shuffled), mult(s)).value, base);
    }
}

TEST(Frobenius, DispatcherPicksRoute) {
    EXPECT_EQ(frobenius_number(vec({3, 5}), mult(2)).method, frobenius_method::closed_form_2);
    EXPECT_EQ(frobenius_number(vec({3, 5, 7}), mult(1)).method, frobenius_method::apery);
    EXPECT_EQ(frobenius_number(vec({3, 5, 7}), mult(1), frobenius_method::naive_scan).method,
              frobenius_method::naive_scan);
    EXPECT_THROW(frobenius_number(vec({3, 5, 7}), mult(1), frobenius_method::closed_form_2),
                 input_error);
}

TEST(Frobenius, ResultCarriesBound) {
    frobenius_result r = frobenius_apery(vec({3, 5}), mult(2));
    EXPECT_EQ(r.search_bound_used, 27);
    EXPECT_EQ(frobenius_two_closed(vec({3, 5}), mult(2)).search_bound_used, 0);
}

}  // namespace
}  // namespace frobgeom
