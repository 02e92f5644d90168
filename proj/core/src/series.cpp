#include "kazcalc/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "kazcalc/error.hpp"

namespace kazcalc
{

namespace
{

void require_truncation(int truncation)
{
    if (truncation < 0)
        throw UsageError("truncation degree must be non-negative, got " + std::to_string(truncation));
}

void require_positive(int d, const char *what)
{
    if (d < 1)
        throw UsageError(std::string(what) + " must be positive, got " + std::to_string(d));
}

} // namespace

TruncatedSeries::TruncatedSeries(int truncation)
{
    require_truncation(truncation);
    coeffs_.assign(static_cast<std::size_t>(truncation) + 1, Integer(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw UsageError("a truncated series needs at least the constant coefficient");
}

TruncatedSeries TruncatedSeries::one(int truncation)
{
    return monomial(0, truncation);
}

TruncatedSeries TruncatedSeries::monomial(int degree, int truncation)
{
    if (degree < 0)
        throw UsageError("monomial degree must be non-negative");
    TruncatedSeries s(truncation);
    if (degree <= truncation)
        s.coeffs_[static_cast<std::size_t>(degree)] = 1;
    return s;
}

Integer TruncatedSeries::coefficient(int degree) const
{
    if (degree < 0 || degree > truncation())
        return Integer(0);
    return coeffs_[static_cast<std::size_t>(degree)];
}

bool TruncatedSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer &c) { return c.is_zero(); });
}

bool TruncatedSeries::is_nonnegative() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer &c) { return c.sign() >= 0; });
}

int TruncatedSeries::valuation() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero())
            return static_cast<int>(i);
    return -1;
}

void TruncatedSeries::require_same_truncation(const TruncatedSeries &other, const char *op) const
{
    if (truncation() != other.truncation())
        throw UsageError(std::string("truncation mismatch in ") + op + ": " + std::to_string(truncation())
                         + " vs " + std::to_string(other.truncation()));
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &other)
{
    require_same_truncation(other, "add");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &other)
{
    require_same_truncation(other, "subtract");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    return *this;
}

TruncatedSeries &TruncatedSeries::operator*=(const TruncatedSeries &other)
{
    *this = *this * other;
    return *this;
}

TruncatedSeries &TruncatedSeries::mul_geometric(int d)
{
    require_positive(d, "geometric factor degree");
    const auto step = static_cast<std::size_t>(d);
    for (std::size_t i = step; i < coeffs_.size(); ++i)
        coeffs_[i] += coeffs_[i - step];
    return *this;
}

TruncatedSeries &TruncatedSeries::mul_exterior(int d)
{
    require_positive(d, "exterior factor degree");
    const auto step = static_cast<std::size_t>(d);
    for (std::size_t i = coeffs_.size(); i-- > step;)
        coeffs_[i] += coeffs_[i - step];
    return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b)
{
    a += b;
    return a;
}

TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b)
{
    a -= b;
    return a;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    if (a.truncation() != b.truncation())
        throw UsageError("truncation mismatch in mul: " + std::to_string(a.truncation()) + " vs "
                         + std::to_string(b.truncation()));
    const auto n = static_cast<std::size_t>(a.truncation());
    TruncatedSeries out(a.truncation());
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            if (!b[j].is_zero())
                out[i + j] += a[i] * b[j];
    }
    return out;
}

TruncatedSeries shift(const TruncatedSeries &a, int d)
{
    if (d < 0)
        throw UsageError("shift degree must be non-negative");
    TruncatedSeries out(a.truncation());
    for (int i = d; i <= a.truncation(); ++i)
        out[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i - d)];
    return out;
}

TruncatedSeries geometric_factor(int d, int truncation)
{
    require_positive(d, "geometric factor degree");
    TruncatedSeries s(truncation);
    for (int i = 0; i <= truncation; i += d)
        s[static_cast<std::size_t>(i)] = 1;
    return s;
}

TruncatedSeries exterior_factor(int d, int truncation)
{
    require_positive(d, "exterior factor degree");
    TruncatedSeries s = TruncatedSeries::one(truncation);
    if (d <= truncation)
        s[static_cast<std::size_t>(d)] += 1;
    return s;
}

TruncatedSeries finite_geometric(int d, int s, int truncation)
{
    require_positive(d, "finite geometric degree");
    require_positive(s, "finite geometric length");
    TruncatedSeries out(truncation);
    for (int j = 0; j < s && j * d <= truncation; ++j)
        out[static_cast<std::size_t>(j * d)] = 1;
    return out;
}

bool dominated_by(const TruncatedSeries &a, const TruncatedSeries &b)
{
    if (a.truncation() != b.truncation())
        throw UsageError("truncation mismatch in comparison");
    for (std::size_t i = 0; i < a.coefficients().size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

std::string to_string(const TruncatedSeries &a)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
        const Integer &c = a[i];
        if (c.is_zero())
            continue;
        if (!first)
            os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0)
            os << "-";
        first = false;
        const Integer mag = abs(c);
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != 1)
            os << mag << "*";
        os << "t";
        if (i > 1)
            os << "^" << i;
    }
    if (first)
        os << "0";
    os << " + O(t^" << (a.truncation() + 1) << ")";
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const TruncatedSeries &a)
{
    return os << to_string(a);
}

GradedRingSpec::GradedRingSpec(std::vector<RingGenerator> generators) : generators_(std::move(generators)) {}

GradedRingSpec GradedRingSpec::polynomial(std::vector<int> degrees)
{
    GradedRingSpec spec;
    for (int d : degrees)
        spec.add_polynomial(d);
    return spec;
}

GradedRingSpec &GradedRingSpec::add_polynomial(int degree)
{
    generators_.push_back({degree, GeneratorKind::polynomial});
    return *this;
}

GradedRingSpec &GradedRingSpec::add_exterior(int degree)
{
    generators_.push_back({degree, GeneratorKind::exterior});
    return *this;
}

GradedRingSpec operator+(GradedRingSpec a, const GradedRingSpec &b)
{
    a.generators_.insert(a.generators_.end(), b.generators_.begin(), b.generators_.end());
    return a;
}

TruncatedSeries ring_series(const GradedRingSpec &spec, int truncation)
{
    TruncatedSeries s = TruncatedSeries::one(truncation);
    for (const RingGenerator &g : spec.generators()) {
        if (g.degree < 1)
            throw UsageError("ring generator of degree " + std::to_string(g.degree)
                             + "; generators must have positive degree");
        if (g.kind == GeneratorKind::polynomial)
            s.mul_geometric(g.degree);
        else
            s.mul_exterior(g.degree);
    }
    return s;
}

} // namespace kazcalc
