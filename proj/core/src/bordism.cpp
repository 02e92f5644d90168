#include "kazcalc/bordism.hpp"

#include "kazcalc/classifying.hpp"
#include "kazcalc/error.hpp"

namespace kazcalc
{

BettiProfile::BettiProfile(std::map<int, Integer> b)
{
    for (auto &[degree, value] : b)
        set(degree, std::move(value));
}

BettiProfile BettiProfile::from_series(const TruncatedSeries &s)
{
    BettiProfile p;
    for (int i = 0; i <= s.truncation(); ++i)
        p.set(i, s[static_cast<std::size_t>(i)]);
    return p;
}

Integer BettiProfile::operator[](int degree) const
{
    auto it = b_.find(degree);
    return it == b_.end() ? Integer(0) : it->second;
}

void BettiProfile::set(int degree, Integer value)
{
    if (degree < 0)
        throw UsageError("Betti number degree must be non-negative");
    if (value.sign() < 0)
        throw UsageError("Betti numbers must be non-negative");
    if (value.is_zero())
        b_.erase(degree);
    else
        b_[degree] = std::move(value);
}

BettiProfile wedge(const BettiProfile &a, const BettiProfile &b)
{
    BettiProfile out = a;
    for (const auto &[degree, value] : b.b_)
        if (degree > 0)
            out.set(degree, out[degree] + value);
    return out;
}

namespace
{

// (1 - t^d)^{-e} = sum_j C(e + j - 1, j) t^{dj}  and  (1 + t^d)^e = sum_j C(e, j) t^{dj}.
void multiply_power(TruncatedSeries &s, int d, const Integer &e, bool even)
{
    const int n = s.truncation();
    std::vector<Integer> binom;
    binom.emplace_back(1);
    for (int j = 1; j * d <= n; ++j) {
        const Integer prev = binom.back();
        Integer next = even ? Integer(prev * (e + j - 1) / j) : Integer(prev * (e - j + 1) / j);
        if (next.is_zero())
            break;
        binom.push_back(std::move(next));
    }
    if (binom.size() == 1)
        return;
    TruncatedSeries out(n);
    for (int i = 0; i <= n; ++i) {
        const Integer &c = s[static_cast<std::size_t>(i)];
        if (c.is_zero())
            continue;
        for (std::size_t j = 0; j < binom.size() && i + static_cast<int>(j) * d <= n; ++j)
            out[static_cast<std::size_t>(i + static_cast<int>(j) * d)] += c * binom[j];
    }
    s = std::move(out);
}

} // namespace

TruncatedSeries sp_series(const BettiProfile &profile, int truncation)
{
    TruncatedSeries s = TruncatedSeries::one(truncation);
    for (const auto &[degree, b] : profile.numbers()) {
        if (degree == 0 || degree > truncation)
            continue;
        multiply_power(s, degree, b, degree % 2 == 0);
    }
    return s;
}

TruncatedSeries f_tau(const SingularityFamily &family, int truncation)
{
    const int k = family.codim();
    const TruncatedSeries homology = kazarian_homology_series(family, truncation);
    BettiProfile suspended;
    for (int i = k; i <= truncation; ++i)
        suspended.set(i, homology.coefficient(i - k));
    return sp_series(suspended, truncation);
}

TruncatedSeries bordism_generating_function(const SingularityFamily &family, int truncation)
{
    return f_tau(family, truncation) * space_series(ClassifyingSpace::bso_stable(), truncation);
}

Integer bordism_rank(const SingularityFamily &family, int n, int truncation)
{
    if (n < 0)
        throw UsageError("dimension n must be non-negative");
    const int degree = n + family.codim();
    if (degree > truncation)
        throw TruncationError(truncation, degree);
    return bordism_generating_function(family, truncation).coefficient(degree);
}

Integer framed_bordism_rank(const SingularityFamily &family, int n, int truncation)
{
    if (n < 0)
        throw UsageError("dimension n must be non-negative");
    if (n > truncation)
        throw TruncationError(truncation, n);
    const TruncatedSeries product =
        kazarian_homology_series(family, truncation) * space_series(ClassifyingSpace::bso_stable(), truncation);
    return product.coefficient(n);
}

unsigned alpha3(std::uint64_t x)
{
    unsigned sum = 0;
    for (; x > 0; x /= 3)
        sum += static_cast<unsigned>(x % 3);
    return sum;
}

std::uint64_t fold_torsion_parameter(std::uint64_t m)
{
    if (m < 1)
        throw UsageError("fold torsion needs m >= 1");
    // alpha3(2m + j) <= log_3(2m + j) * 2 + 2, so the search ends long before j overflows.
    std::uint64_t j = 0;
    while (alpha3(2 * m + j) > 3 * j)
        ++j;
    return j;
}

FoldTorsionReport fold_torsion(std::uint64_t m)
{
    const std::uint64_t t = fold_torsion_parameter(m);
    FoldTorsionReport report;
    report.m = m;
    report.t = t;
    // Omega_{4m-1} (x) Q = 0: H^*(BSO; Q) is concentrated in degrees divisible by 4.
    report.rank_part = 0;
    report.torsion_descriptor = "3-primary cyclic of parameter t(m) = " + std::to_string(t);
    return report;
}

namespace
{

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace

std::uint64_t safe_prime_bound(std::uint64_t n)
{
    if (n < 2)
        throw UsageError("the safe-prime bound needs n >= 2");
    // p > n/2 + 1  <=>  2p > n + 2
    std::uint64_t p = (n + 2) / 2 + 1;
    while (!is_prime(p))
        ++p;
    return p;
}

} // namespace kazcalc
