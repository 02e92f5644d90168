#include <gtest/gtest.h>

#include "kazcalc/error.hpp"
#include "kazcalc/thom.hpp"

using namespace kazcalc;
using Kind = SingularityFamily::Kind;

TEST(Thom, Examples)
{
    EXPECT_EQ(thom_polynomial(Kind::prim, 1, 2).polynomial, CharClassPoly::generator(CharClass::euler(2), 2));
    EXPECT_EQ(to_string(thom_polynomial(Kind::prim, 1, 2).polynomial), "chi_2^2");
    EXPECT_EQ(thom_polynomial(Kind::morin, 3, 2).polynomial, CharClassPoly::generator(CharClass::pontrjagin(2)));
    EXPECT_TRUE(thom_polynomial(Kind::morin, 3, 3).polynomial.is_zero());
    EXPECT_THROW(thom_polynomial(Kind::morin, 3, 0), UsageError);
}

TEST(Thom, EvenCodimensionVanishes)
{
    for (int k : {2, 4, 6})
        for (int i = 1; i <= 5; ++i)
            for (auto kind : {Kind::prim, Kind::morin}) {
                const auto res = thom_polynomial(kind, k, i);
                EXPECT_TRUE(res.polynomial.is_zero());
                EXPECT_FALSE(res.notes.empty());
            }
}

TEST(Thom, HigherExamples)
{
    const auto a = higher_thom_polynomial(Kind::prim, 3, 1, {1}).polynomial;
    EXPECT_EQ(a, CharClassPoly::generator(CharClass::euler(4)) * CharClassPoly::generator(CharClass::pontrjagin(1)));
    EXPECT_EQ(to_string(a), "chi_4*p_1");
    EXPECT_EQ(higher_thom_polynomial(Kind::morin, 3, 4, {}).polynomial,
              CharClassPoly::generator(CharClass::pontrjagin(2), 2));
    EXPECT_TRUE(higher_thom_polynomial(Kind::morin, 2, 2, {1}).polynomial.is_zero());
    EXPECT_THROW(higher_thom_polynomial(Kind::prim, 3, 1, {2}), UsageError);
    EXPECT_THROW(higher_thom_polynomial(Kind::prim, 3, 1, {0}), UsageError);
}

TEST(Thom, DegreeLaw)
{
    for (auto kind : {Kind::prim, Kind::morin})
        for (int k = 1; k <= 9; ++k)
            for (int i = 1; i <= 10; ++i) {
                const auto p = thom_polynomial(kind, k, i).polynomial;
                if (p.is_zero())
                    continue;
                EXPECT_TRUE(p.is_homogeneous());
                EXPECT_EQ(p.degree(), i * (k + 1));
            }
}

TEST(Thom, PontrjaginBound)
{
    EXPECT_EQ(pontrjagin_vanishing_bound(3), 2);
    EXPECT_EQ(pontrjagin_vanishing_bound(1), 1);
    EXPECT_EQ(pontrjagin_vanishing_bound(7), 4);
    EXPECT_THROW(pontrjagin_vanishing_bound(4), UsageError);
}

TEST(Thom, PolynomialArithmetic)
{
    auto p1 = CharClassPoly::generator(CharClass::pontrjagin(1));
    auto p2 = CharClassPoly::generator(CharClass::pontrjagin(2));
    auto sum = p1 * p1;
    sum += p2;
    sum += p2;
    EXPECT_EQ(to_string(sum), "p_1^2 + 2*p_2");
    EXPECT_TRUE(sum.is_homogeneous());
    EXPECT_EQ(sum.degree(), 8);
    EXPECT_EQ(sum.max_pontrjagin_index(), 2);
    auto mixed = p1;
    mixed += CharClassPoly::constant(1);
    EXPECT_FALSE(mixed.is_homogeneous());
    EXPECT_EQ(to_string(CharClassPoly{}), "0");
    EXPECT_EQ(CharClassPoly{}.degree(), -1);
}
