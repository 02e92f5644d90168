#ifndef KAZCALC_SERIES_HPP
#define KAZCALC_SERIES_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kazcalc
{

using Integer = boost::multiprecision::cpp_int;

inline constexpr int default_truncation = 60;

// Exact formal power series sum_{i=0}^{N} c_i t^i with integer coefficients.
//
// The truncation degree N travels with the value. Every binary operation
// requires both operands to carry the same N and throws UsageError otherwise;
// nothing is ever re-truncated implicitly.
class TruncatedSeries
{
public:
    // The zero series truncated at degree `truncation`.
    explicit TruncatedSeries(int truncation = default_truncation);
    // Takes ownership of the coefficient vector; N = coeffs.size() - 1.
    explicit TruncatedSeries(std::vector<Integer> coeffs);

    static TruncatedSeries one(int truncation);
    // t^degree, or zero if degree > truncation.
    static TruncatedSeries monomial(int degree, int truncation);

    int truncation() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    // Coefficient of t^degree; zero for degrees outside [0, N].
    Integer coefficient(int degree) const;
    const Integer &operator[](std::size_t degree) const { return coeffs_[degree]; }
    Integer &operator[](std::size_t degree) { return coeffs_[degree]; }
    const std::vector<Integer> &coefficients() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool is_nonnegative() const;
    // Smallest degree with a nonzero coefficient, or -1 for the zero series.
    int valuation() const;

    bool operator==(const TruncatedSeries &) const = default;

    TruncatedSeries &operator+=(const TruncatedSeries &other);
    TruncatedSeries &operator-=(const TruncatedSeries &other);
    TruncatedSeries &operator*=(const TruncatedSeries &other);

    // In-place multiplication by 1/(1 - t^d) and by (1 + t^d); O(N) each.
    TruncatedSeries &mul_geometric(int d);
    TruncatedSeries &mul_exterior(int d);

private:
    void require_same_truncation(const TruncatedSeries &other, const char *op) const;

    std::vector<Integer> coeffs_;
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b);
TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);

// Multiplication by t^d. Degrees pushed above N are dropped.
TruncatedSeries shift(const TruncatedSeries &a, int d);

// 1 + t^d + t^{2d} + ...
TruncatedSeries geometric_factor(int d, int truncation = default_truncation);
// 1 + t^d
TruncatedSeries exterior_factor(int d, int truncation = default_truncation);
// 1 + t^d + ... + t^{d(s-1)}: the series of Q[x]/(x^s) with deg x = d.
TruncatedSeries finite_geometric(int d, int s, int truncation = default_truncation);

// a_i <= b_i for every degree (same truncation required).
bool dominated_by(const TruncatedSeries &a, const TruncatedSeries &b);

// Human readable form such as "1 + t^4 + 2*t^8 + O(t^61)".
std::string to_string(const TruncatedSeries &a);
std::ostream &operator<<(std::ostream &os, const TruncatedSeries &a);

enum class GeneratorKind
{
    polynomial,
    exterior,
};

struct RingGenerator
{
    int degree;
    GeneratorKind kind = GeneratorKind::polynomial;

    bool operator==(const RingGenerator &) const = default;
};

// Free graded-commutative ring on a multiset of generators.
class GradedRingSpec
{
public:
    GradedRingSpec() = default;
    explicit GradedRingSpec(std::vector<RingGenerator> generators);

    // Q[x_1, ..., x_m] with the given degrees.
    static GradedRingSpec polynomial(std::vector<int> degrees);

    GradedRingSpec &add_polynomial(int degree);
    GradedRingSpec &add_exterior(int degree);

    const std::vector<RingGenerator> &generators() const noexcept { return generators_; }
    bool empty() const noexcept { return generators_.empty(); }

    // Tensor product of the two rings (disjoint union of generator sets).
    friend GradedRingSpec operator+(GradedRingSpec a, const GradedRingSpec &b);

    bool operator==(const GradedRingSpec &) const = default;

private:
    std::vector<RingGenerator> generators_;
};

// Poincare series: product of 1/(1-t^d) per polynomial and (1+t^d) per exterior generator.
TruncatedSeries ring_series(const GradedRingSpec &spec, int truncation = default_truncation);

} // namespace kazcalc

#endif
