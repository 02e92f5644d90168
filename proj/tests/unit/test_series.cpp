#include <random>

#include <gtest/gtest.h>

#include "kazcalc/error.hpp"
#include "kazcalc/series.hpp"
#include "test_util.hpp"

using namespace kazcalc;

namespace
{

TruncatedSeries random_series(std::mt19937_64 &rng, int n)
{
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::vector<Integer> c;
    for (int i = 0; i <= n; ++i)
        c.emplace_back(coeff(rng));
    return TruncatedSeries(std::move(c));
}

} // namespace

TEST(Series, AddExamples)
{
    const int n = 8;
    auto a = TruncatedSeries::one(n) + TruncatedSeries::monomial(4, n);
    EXPECT_EQ(a + TruncatedSeries::monomial(2, n), series_of({1, 0, 1, 0, 1, 0, 0, 0, 0}));
    EXPECT_EQ(a + TruncatedSeries(n), a);
    auto g = geometric_factor(4, 12);
    EXPECT_EQ(g + g, series_of({2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2}));
}

TEST(Series, MulExamples)
{
    auto g4 = geometric_factor(4);
    EXPECT_EQ((g4 * g4).coefficient(8), 3);
    EXPECT_EQ((g4 * geometric_factor(8)).coefficient(8), 2);
    EXPECT_EQ(g4 * TruncatedSeries::one(default_truncation), g4);
}

TEST(Series, ShiftExamples)
{
    EXPECT_EQ(shift(TruncatedSeries::one(10), 3), TruncatedSeries::monomial(3, 10));
    auto g = geometric_factor(4, 12);
    EXPECT_EQ(shift(g, 0), g);
    EXPECT_EQ(shift(g, 3), series_of({0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0}));
    EXPECT_TRUE(shift(g, 13).is_zero());
}

TEST(Series, FactorExamples)
{
    EXPECT_EQ(geometric_factor(2, 6), series_of({1, 0, 1, 0, 1, 0, 1}));
    EXPECT_EQ(geometric_factor(default_truncation + 1), TruncatedSeries::one(default_truncation));
    EXPECT_EQ(geometric_factor(4).coefficient(12), 1);
    EXPECT_EQ(exterior_factor(3, 5), series_of({1, 0, 0, 1, 0, 0}));
    auto e1 = exterior_factor(1);
    EXPECT_EQ((e1 * e1).coefficient(2), 1);
    EXPECT_EQ(exterior_factor(5).coefficient(10), 0);
    EXPECT_EQ(finite_geometric(4, 1), TruncatedSeries::one(default_truncation));
    EXPECT_EQ(finite_geometric(4, 2, 8), series_of({1, 0, 0, 0, 1, 0, 0, 0, 0}));
    EXPECT_EQ(finite_geometric(8, 3).coefficient(16), 1);
    EXPECT_EQ(finite_geometric(8, 3).coefficient(24), 0);
}

TEST(Series, FactorErrors)
{
    EXPECT_THROW(geometric_factor(0), UsageError);
    EXPECT_THROW(exterior_factor(0), UsageError);
    EXPECT_THROW(finite_geometric(0, 2), UsageError);
    EXPECT_THROW(finite_geometric(4, 0), UsageError);
}

TEST(Series, TruncationMismatch)
{
    TruncatedSeries a(10), b(12);
    EXPECT_THROW(a + b, UsageError);
    EXPECT_THROW(a * b, UsageError);
    EXPECT_THROW(a - b, UsageError);
}

TEST(Series, ToString)
{
    auto s = TruncatedSeries::one(60) + TruncatedSeries::monomial(4, 60);
    s += TruncatedSeries::monomial(8, 60);
    s += TruncatedSeries::monomial(8, 60);
    EXPECT_EQ(to_string(s), "1 + t^4 + 2*t^8 + O(t^61)");
    EXPECT_EQ(to_string(TruncatedSeries(5)), "0 + O(t^6)");
}

TEST(Series, ValuationAndDomination)
{
    auto g = shift(geometric_factor(4, 20), 6);
    EXPECT_EQ(g.valuation(), 6);
    EXPECT_TRUE(dominated_by(g, geometric_factor(2, 20)));
    EXPECT_FALSE(dominated_by(geometric_factor(2, 20), g));
}

TEST(Series, MulCommutesAndAssociates)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 30;
        auto a = random_series(rng, n), b = random_series(rng, n), c = random_series(rng, n);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(Series, MulMatchesNaiveConvolution)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> coeff(-50, 50);
    for (int trial = 0; trial < 100; ++trial) {
        oracle::Coeffs a(25), b(25);
        for (auto &x : a)
            x = coeff(rng);
        for (auto &x : b)
            x = coeff(rng);
        ASSERT_EQ(from_coeffs(a) * from_coeffs(b), from_coeffs(oracle::convolve(a, b)));
    }
}

TEST(Series, ShiftIsMulByMonomial)
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_series(rng, 40);
        const int d = trial % 45;
        ASSERT_EQ(shift(a, d), a * TruncatedSeries::monomial(d, 40));
    }
}

TEST(Series, FiniteGeometricIdentity)
{
    // (1 - t^d) * finite_geometric(d, s) == 1 - t^{ds}
    for (int d = 1; d <= 12; ++d)
        for (int s = 1; s <= 10; ++s) {
            auto lhs = (TruncatedSeries::one(60) - TruncatedSeries::monomial(d, 60)) * finite_geometric(d, s);
            auto rhs = TruncatedSeries::one(60) - TruncatedSeries::monomial(d * s, 60);
            ASSERT_EQ(lhs, rhs) << "d=" << d << " s=" << s;
        }
}

TEST(Series, GeometricInvertsOneMinus)
{
    for (int d = 1; d <= 20; ++d) {
        auto lhs = (TruncatedSeries::one(60) - TruncatedSeries::monomial(d, 60)) * geometric_factor(d);
        ASSERT_EQ(lhs, TruncatedSeries::one(60));
    }
}

TEST(Series, InPlaceFactorsMatchProducts)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_series(rng, 30);
        const int d = 1 + trial % 9;
        auto g = a;
        g.mul_geometric(d);
        ASSERT_EQ(g, a * geometric_factor(d, 30));
        auto e = a;
        e.mul_exterior(d);
        ASSERT_EQ(e, a * exterior_factor(d, 30));
    }
}

TEST(RingSeries, Examples)
{
    EXPECT_EQ(ring_series(GradedRingSpec::polynomial({4})), geometric_factor(4));
    EXPECT_EQ(ring_series(GradedRingSpec{}), TruncatedSeries::one(default_truncation));
    EXPECT_EQ(ring_series(GradedRingSpec::polynomial({4, 8})).coefficient(12), 2);
    EXPECT_THROW(ring_series(GradedRingSpec::polynomial({0})), UsageError);
    GradedRingSpec ext;
    ext.add_exterior(3).add_exterior(5);
    EXPECT_EQ(ring_series(ext, 10), series_of({1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0}));
}

TEST(RingSeries, MatchesMonomialCount)
{
    const std::vector<std::vector<int>> specs = {{2}, {4, 8}, {4, 8, 12}, {2, 4, 6, 8}, {3, 5}, {4, 4, 6}, {1, 2, 3}};
    for (const auto &degrees : specs)
        EXPECT_EQ(ring_series(GradedRingSpec::polynomial(degrees)), from_coeffs(oracle::count_monomials(degrees, 60)));
}

TEST(RingSeries, KunnethProduct)
{
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> deg(1, 12), count(0, 3), kind(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        GradedRingSpec a, b;
        for (auto *spec : {&a, &b}) {
            const int c = count(rng);
            for (int i = 0; i < c; ++i) {
                if (kind(rng))
                    spec->add_exterior(deg(rng));
                else
                    spec->add_polynomial(deg(rng));
            }
        }
        ASSERT_EQ(ring_series(a + b), ring_series(a) * ring_series(b));
    }
}
