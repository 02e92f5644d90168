#include <gtest/gtest.h>

#include "kazcalc/classifying.hpp"
#include "kazcalc/error.hpp"
#include "test_util.hpp"

using namespace kazcalc;

TEST(Classifying, SpaceExamples)
{
    EXPECT_EQ(space_series(ClassifyingSpace::bso(3), 8), series_of({1, 0, 0, 0, 1, 0, 0, 0, 1}));
    EXPECT_EQ(space_series(ClassifyingSpace::bso(2), 6), series_of({1, 0, 1, 0, 1, 0, 1}));
    EXPECT_EQ(space_series(ClassifyingSpace::bso_stable()).coefficient(8), 2);
    EXPECT_THROW(ClassifyingSpace::bso(0), UsageError);
    EXPECT_THROW(ClassifyingSpace::bo(0), UsageError);
}

TEST(Classifying, BsoMatchesMonomialCount)
{
    for (int k = 1; k <= 12; ++k) {
        const int l = k / 2;
        std::vector<int> degrees = oracle::pontrjagin_degrees(k % 2 == 1 ? l : l - 1);
        if (k % 2 == 0)
            degrees.push_back(k);
        EXPECT_EQ(space_series(ClassifyingSpace::bso(k)), from_coeffs(oracle::count_monomials(degrees, 60)))
            << "k=" << k;
    }
}

TEST(Classifying, BsoEvenTwoPresentations)
{
    // Q[p_1..p_{l-1}, chi] versus (1 + t^{2l}) * Q[p_1..p_l].
    for (int l = 1; l <= 10; ++l) {
        const auto a = oracle::count_monomials(oracle::pontrjagin_degrees(l), 60);
        const auto split = oracle::sum(a, oracle::shifted(a, 2 * l));
        EXPECT_EQ(space_series(ClassifyingSpace::bso(2 * l)), from_coeffs(split)) << "l=" << l;
        EXPECT_EQ(bso_even_split_series(l), from_coeffs(split)) << "l=" << l;
    }
}

TEST(Classifying, BoAgainstBso)
{
    for (int l = 0; l <= 6; ++l) {
        // BO(2l) and BO(2l+1) both carry p_1..p_l, like BSO(2l+1).
        const auto want = space_series(ClassifyingSpace::bso(2 * l + 1));
        if (l > 0)
            EXPECT_EQ(space_series(ClassifyingSpace::bo(2 * l)), want);
        EXPECT_EQ(space_series(ClassifyingSpace::bo(2 * l + 1)), want);
        if (l > 0)
            EXPECT_TRUE(dominated_by(space_series(ClassifyingSpace::bo(2 * l)),
                                     space_series(ClassifyingSpace::bso(2 * l))));
    }
}

TEST(Classifying, StableSeriesIsPartitionsIntoFours)
{
    // Coefficient at 4q is the number of partitions of q.
    const int partitions[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176};
    const auto s = space_series(ClassifyingSpace::bso_stable());
    for (int q = 0; q <= 15; ++q) {
        EXPECT_EQ(s.coefficient(4 * q), partitions[q]);
        EXPECT_EQ(s.coefficient(4 * q + 2), 0);
    }
}

TEST(Classifying, MorinBaseRing)
{
    EXPECT_EQ(morin_base_ring(2), GradedRingSpec::polynomial({4}));
    EXPECT_EQ(morin_base_ring(3), GradedRingSpec::polynomial({4}));
    EXPECT_TRUE(morin_base_ring(1).empty());
    EXPECT_EQ(morin_base_ring(9), pontrjagin_ring(4));
}

TEST(Classifying, EulerVerdicts)
{
    FormalBundle g2;
    g2.oriented[2] = 1;
    EXPECT_EQ(euler_class_nonzero(g2), EulerVerdict::yes);

    FormalBundle gk_eps;
    gk_eps.oriented[4] = 1;
    gk_eps.trivial = 1;
    EXPECT_EQ(euler_class_nonzero(gk_eps), EulerVerdict::no);

    FormalBundle prim_bundle;
    prim_bundle.oriented[2] = 1;
    prim_bundle.trivial = 1;
    for (int r = 1; r <= 5; ++r)
        EXPECT_EQ(euler_class_nonzero(r * prim_bundle), EulerVerdict::no);

    FormalBundle odd;
    odd.oriented[3] = 2;
    EXPECT_EQ(euler_class_nonzero(odd), EulerVerdict::no);

    FormalBundle twisted;
    twisted.oriented[2] = 1;
    twisted.non_orientable = 1;
    EXPECT_EQ(euler_class_nonzero(twisted), EulerVerdict::not_applicable);

    EXPECT_EQ(euler_class_nonzero(FormalBundle{}), EulerVerdict::yes);
}

TEST(Classifying, BundleArithmetic)
{
    FormalBundle a;
    a.oriented[2] = 1;
    a.trivial = 1;
    FormalBundle b = 3 * a;
    EXPECT_EQ(b.trivial, 3);
    EXPECT_EQ(b.oriented.at(2), 3);
    EXPECT_EQ(to_string(b), "eps^3 + 3*gammaSO_2");
    EXPECT_EQ(to_string(FormalBundle{}), "0");
}
