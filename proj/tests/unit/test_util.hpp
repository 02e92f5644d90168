#ifndef KAZCALC_TESTS_UTIL_HPP
#define KAZCALC_TESTS_UTIL_HPP

#include "kazcalc/series.hpp"
#include "oracles.hpp"

inline kazcalc::TruncatedSeries from_coeffs(const oracle::Coeffs &c)
{
    std::vector<kazcalc::Integer> v(c.begin(), c.end());
    return kazcalc::TruncatedSeries(std::move(v));
}

inline kazcalc::TruncatedSeries series_of(std::initializer_list<int> c)
{
    std::vector<kazcalc::Integer> v(c.begin(), c.end());
    return kazcalc::TruncatedSeries(std::move(v));
}

#endif
