#include <random>

#include <gtest/gtest.h>

#include "kazcalc/bordism.hpp"
#include "kazcalc/classifying.hpp"
#include "kazcalc/error.hpp"
#include "test_util.hpp"

using namespace kazcalc;

namespace
{

BettiProfile profile(int degree, int value)
{
    return BettiProfile(std::map<int, Integer>{{degree, Integer(value)}});
}

SingularityFamily point_family(int k)
{
    StratumSpec s;
    s.index = 0;
    return SingularityFamily::custom(k, {s});
}

// Smallest prime > n/2 + 1, the slow way.
std::uint64_t naive_safe_prime(std::uint64_t n)
{
    for (std::uint64_t p = 2;; ++p) {
        if (2 * p <= n + 2)
            continue;
        bool prime = true;
        for (std::uint64_t d = 2; d < p; ++d)
            if (p % d == 0)
                prime = false;
        if (prime)
            return p;
    }
}

} // namespace

TEST(Bordism, SpSeriesExamples)
{
    EXPECT_EQ(sp_series(profile(2, 1)), geometric_factor(2));
    EXPECT_EQ(sp_series(profile(3, 1)), exterior_factor(3));
    EXPECT_EQ(sp_series(BettiProfile{}), TruncatedSeries::one(60));
    // b_0 is excluded.
    EXPECT_EQ(sp_series(profile(0, 5)), TruncatedSeries::one(60));
    // Multiplicities become powers.
    EXPECT_EQ(sp_series(profile(2, 2)), geometric_factor(2) * geometric_factor(2));
    EXPECT_EQ(sp_series(profile(3, 2)), exterior_factor(3) * exterior_factor(3));
    EXPECT_THROW(profile(2, -1), UsageError);
}

TEST(Bordism, SpMultiplicative)
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> degree(1, 15), value(0, 3), terms(0, 5);
    for (int trial = 0; trial < 100; ++trial) {
        BettiProfile a, b;
        for (auto *p : {&a, &b}) {
            const int count = terms(rng);
            for (int i = 0; i < count; ++i) {
                const int d = degree(rng);
                p->set(d, (*p)[d] + value(rng));
            }
        }
        ASSERT_EQ(sp_series(wedge(a, b)), sp_series(a) * sp_series(b));
    }
}

TEST(Bordism, FTau)
{
    EXPECT_EQ(f_tau(point_family(1)), exterior_factor(1));
    EXPECT_EQ(f_tau(point_family(2)), geometric_factor(2));
    TruncatedSeries want = TruncatedSeries::one(60);
    for (int d = 1; d <= 60; d += 2)
        want = want * exterior_factor(d);
    EXPECT_EQ(f_tau(SingularityFamily::prim(1)), want);
}

TEST(Bordism, GeneratingFunction)
{
    EXPECT_EQ(bordism_rank(point_family(1), 3), 1);
    EXPECT_EQ(bordism_rank(SingularityFamily::sigma1r(1, 1), 3), 1);
    // BSO contributes only its unit below degree 4.
    for (int k = 1; k <= 3; ++k)
        EXPECT_EQ(bordism_rank(SingularityFamily::morin(k), 0), f_tau(SingularityFamily::morin(k)).coefficient(k));
    EXPECT_EQ(bordism_rank(SingularityFamily::morin(4), 0), f_tau(SingularityFamily::morin(4)).coefficient(4) + 1);
    // Even-supported F_tau and BSO: odd total degree vanishes.
    for (int n = 1; n <= 40; n += 2)
        EXPECT_EQ(bordism_rank(point_family(2), n), 0);
}

TEST(Bordism, Framed)
{
    EXPECT_EQ(framed_bordism_rank(SingularityFamily::morin(2), 4), 2);
    EXPECT_EQ(framed_bordism_rank(SingularityFamily::prim(1), 2), 1);
    for (int k = 1; k <= 6; ++k)
        EXPECT_EQ(framed_bordism_rank(SingularityFamily::prim(k), 0), 1);
    // Independent convolution with monomial counts.
    const auto k_series = oracle::count_monomials({2}, 60); // BSO(2)
    const auto bso = oracle::count_monomials({4, 8, 12, 16, 20, 24, 28, 32, 36, 40, 44, 48, 52, 56, 60}, 60);
    const auto conv = oracle::convolve(k_series, bso);
    for (int n = 0; n <= 60; ++n)
        EXPECT_EQ(framed_bordism_rank(SingularityFamily::prim(1), n), conv[static_cast<std::size_t>(n)]);
}

TEST(Bordism, Alpha3)
{
    EXPECT_EQ(alpha3(0), 0u);
    EXPECT_EQ(alpha3(9), 1u);
    EXPECT_EQ(alpha3(17), 5u);
    EXPECT_EQ(alpha3(26), 6u);
}

TEST(Bordism, FoldTorsion)
{
    EXPECT_EQ(fold_torsion(1).t, 1u);
    EXPECT_EQ(fold_torsion(8).t, 2u);
    for (std::uint64_t m = 1; m <= 200; ++m) {
        const auto rep = fold_torsion(m);
        EXPECT_EQ(rep.m, m);
        EXPECT_EQ(rep.rank_part, 0);
        EXPECT_FALSE(rep.torsion_descriptor.empty());
    }
    EXPECT_THROW(fold_torsion(0), UsageError);
}

TEST(Bordism, SafePrime)
{
    EXPECT_EQ(safe_prime_bound(2), 3u);
    EXPECT_EQ(safe_prime_bound(10), 7u);
    EXPECT_EQ(safe_prime_bound(3), 3u);
    for (std::uint64_t n = 2; n <= 300; ++n)
        EXPECT_EQ(safe_prime_bound(n), naive_safe_prime(n)) << "n=" << n;
    EXPECT_THROW(safe_prime_bound(1), UsageError);
}
