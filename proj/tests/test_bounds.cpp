#include "frobgeom/bounds.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace frobgeom {
namespace {

input_vector vec(std::vector<std::int64_t> v) { return input_vector::validate(std::move(v)); }
multiplicity mult(std::int64_t s) { return multiplicity::validate(s); }

TEST(VolumeLower, KnownValues) {
    bound_report r = frobenius_volume_lower(vec({3, 5}), mult(1));
    EXPECT_TRUE(r.holds());
    EXPECT_TRUE(r.equality);  // 1*1*15 = (7+8)^1
    EXPECT_EQ(r.lhs, "15");
    EXPECT_EQ(r.rhs, "15");

    bound_report r3 = frobenius_volume_lower(vec({3, 5, 7}), mult(1));
    EXPECT_TRUE(r3.holds());
    EXPECT_EQ(r3.lhs, "210");  // 1 * 2! * 105
    EXPECT_EQ(r3.rhs, "361");  // (4 + 15)^2

    EXPECT_TRUE(frobenius_volume_lower(vec({3, 5, 7}), mult(2)).holds());
}

TEST(IncrementalUpper, KnownValues) {
    bound_report r = frobenius_incremental_upper(vec({3, 5}), mult(2));
    EXPECT_TRUE(r.holds());
    EXPECT_TRUE(r.equality);  // F_2 - F_1 = 15 = (2-1)*1!*15
    EXPECT_EQ(r.lhs, "15");

    bound_report s1 = frobenius_incremental_upper(vec({4, 9, 11}), mult(1));
    EXPECT_TRUE(s1.holds());
    EXPECT_EQ(s1.rhs, "0");  // degenerate s = 1: F_1 <= F_1

    bound_report r3 = frobenius_incremental_upper(vec({3, 5, 7}), mult(2));
    EXPECT_TRUE(r3.holds());
    EXPECT_EQ(r3.rhs, "210");
}

TEST(ClassicalBounds, KnownValues) {
    std::vector<bound_report> rs = classical_bounds(vec({3, 5, 7}));
    ASSERT_EQ(rs.size(), 2u);
    EXPECT_EQ(rs[0].bound_name, "classical_volume_lower");
    EXPECT_TRUE(rs[0].holds());
    EXPECT_EQ(rs[0].relation, "<");
    EXPECT_EQ(rs[0].lhs, "210");
    EXPECT_EQ(rs[0].rhs, "361");
    EXPECT_EQ(rs[1].bound_name, "erdos_graham_upper");
    EXPECT_TRUE(rs[1].holds());
    EXPECT_EQ(rs[1].lhs, "4");   // F_1(3,5,7)
    EXPECT_EQ(rs[1].rhs, "13");  // 2*5*floor(7/3) - 7
}

TEST(ClassicalBounds, DuplicatesDoNotInflateTheCoinCount) {
    // {5,5,8} is really the pair {5,8} with F_1 = 27; the two-coin form
    // 2*5*floor(8/2) - 8 = 32 must be used, not the three-coin one (= 12).
    std::vector<bound_report> rs = classical_bounds(vec({5, 5, 8}));
    EXPECT_TRUE(rs[1].applicable);
    EXPECT_TRUE(rs[1].holds());
    EXPECT_EQ(rs[1].lhs, "27");
    EXPECT_EQ(rs[1].rhs, "32");
}

TEST(ClassicalBounds, RegressionLargeSpreadInstance) {
    // F_1(33,5,40) = 127: reaching residue 2 mod 5 needs four copies of 33.
    std::vector<bound_report> rs = classical_bounds(vec({33, 5, 40}));
    EXPECT_TRUE(rs[1].applicable);
    EXPECT_TRUE(rs[1].holds());
    EXPECT_EQ(rs[1].lhs, "127");
    EXPECT_EQ(rs[1].rhs, "818");  // 2*33*floor(40/3) - 40
}

TEST(ClassicalBounds, UpperNotApplicableForSmallMinEntry) {
    std::vector<bound_report> rs = classical_bounds(vec({2, 3, 5}));
    ASSERT_EQ(rs.size(), 2u);
    EXPECT_TRUE(rs[0].holds());
    EXPECT_FALSE(rs[1].applicable);
    EXPECT_FALSE(rs[1].holds());
}

TEST(ClassicalBounds, RequireThreeEntries) {
    EXPECT_THROW(classical_bounds(vec({3, 5})), input_error);
}

TEST(CoveringSandwich, PairCaseIsExact) {
    for (std::int64_t a1 = 1; a1 <= 7; ++a1)
        for (std::int64_t a2 = 1; a2 <= 7; ++a2) {
            if (std::gcd(a1, a2) != 1) continue;
            for (std::int64_t s = 1; s <= 4; ++s) {
                std::vector<bound_report> rs = covering_sandwich(vec({a1, a2}), mult(s));
                ASSERT_EQ(rs.size(), 2u);
                EXPECT_TRUE(rs[0].holds() && rs[0].equality)
                    << a1 << "," << a2 << " s=" << s;
                EXPECT_TRUE(rs[1].holds() && rs[1].equality);
            }
        }
}

TEST(MinimaSumUpper, KnownValues) {
    bound_report r1 = minima_sum_bound(vec({3, 5}), mult(1));
    EXPECT_TRUE(r1.holds());
    EXPECT_TRUE(r1.equality);  // mu_1 = 15 = lambda_1

    bound_report r4 = minima_sum_bound(vec({3, 5}), mult(4));
    EXPECT_TRUE(r4.holds());
    EXPECT_TRUE(r4.equality);  // mu_4 = 60 = (1 + 3) * 15

    bound_report r3 = minima_sum_bound(vec({3, 5, 7}), mult(1));
    EXPECT_TRUE(r3.holds());  // 19 <= 10 + 12
}

TEST(MinimaSumUpper, PairSharpnessSweep) {
    for (std::int64_t a1 = 1; a1 <= 6; ++a1)
        for (std::int64_t a2 = 1; a2 <= 6; ++a2) {
            if (std::gcd(a1, a2) != 1) continue;
            for (std::int64_t s = 1; s <= 4; ++s) {
                bound_report r = minima_sum_bound(vec({a1, a2}), mult(s));
                EXPECT_TRUE(r.holds() && r.equality) << a1 << "," << a2 << " s=" << s;
            }
        }
}

TEST(VerifyInstance, RosterAndExamples) {
    std::vector<bound_report> pair = verify_instance(vec({3, 5}), mult(2));
    ASSERT_EQ(pair.size(), 4u);
    for (const bound_report& r : pair)
        if (r.applicable) EXPECT_EQ(r.verdict, bound_verdict::holds) << r.bound_name;
    EXPECT_FALSE(pair[2].applicable);  // classical bracket needs n >= 3

    std::vector<bound_report> low = verify_instance(vec({2, 3, 5}), mult(1));
    ASSERT_EQ(low.size(), 5u);
    bool saw_inapplicable_upper = false;
    for (const bound_report& r : low) {
        if (r.bound_name == "erdos_graham_upper") {
            EXPECT_FALSE(r.applicable);
            saw_inapplicable_upper = true;
        } else if (r.applicable) {
            EXPECT_EQ(r.verdict, bound_verdict::holds) << r.bound_name;
        }
    }
    EXPECT_TRUE(saw_inapplicable_upper);

    // unit entry: F_1 = -1 still satisfies everything on the n = 2 path
    for (const bound_report& r : verify_instance(vec({1, 2}), mult(1)))
        if (r.applicable) EXPECT_EQ(r.verdict, bound_verdict::holds) << r.bound_name;
}

TEST(VerifyInstance, NoViolationsOnRandomInstances) {
    std::mt19937_64 rng(79);
    for (int round = 0; round < 60; ++round) {
        int n = 2 + (int)(rng() % 3);
        input_vector a = vec(testing::random_instance(rng, n, 40));
        std::int64_t s = 1 + (std::int64_t)(rng() % 4);
        for (const bound_report& r : verify_instance(a, mult(s)))
            if (r.applicable)
                EXPECT_NE(r.verdict, bound_verdict::violated)
                    << r.bound_name << " on " << ::testing::PrintToString(a.entries()) << " s=" << s;
        for (const bound_report& r : covering_sandwich(a, mult(s)))
            EXPECT_EQ(r.verdict, bound_verdict::holds) << r.bound_name;
    }
}

TEST(RootClearing, AgreesWithFloatingEvaluation) {
    std::mt19937_64 rng(83);
    for (int round = 0; round < 200; ++round) {
        int n = 2 + (int)(rng() % 3);
        input_vector a = vec(testing::random_instance(rng, n, 40));
        std::int64_t s = 1 + (std::int64_t)(rng() % 4);
        const unsigned d = (unsigned)a.dimension() - 1;
        std::int64_t f_s = frobenius_number(a, mult(s)).value;

        double lhs = std::pow((double)(std::int64_t)(s * (std::int64_t)checked_factorial(d) *
                                                     (std::int64_t)a.product()),
                              1.0 / (double)d);
        double rhs = (double)f_s + (double)(std::int64_t)a.sum();
        bound_report r = frobenius_volume_lower(a, mult(s), f_s);
        if (std::abs(lhs - rhs) > 1e-6 * std::max(1.0, std::abs(rhs)))
            EXPECT_EQ(lhs <= rhs, r.holds());
    }
}

}  // namespace
}  // namespace frobgeom
