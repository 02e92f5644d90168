#ifndef KAZCALC_BORDISM_HPP
#define KAZCALC_BORDISM_HPP

#include <cstdint>
#include <map>
#include <string>

#include "kazcalc/spectral.hpp"

namespace kazcalc
{

// Rational Betti numbers b_i of a space, finitely supported.
class BettiProfile
{
public:
    BettiProfile() = default;
    explicit BettiProfile(std::map<int, Integer> b);

    // b_i = coefficient i of the series.
    static BettiProfile from_series(const TruncatedSeries &s);

    const std::map<int, Integer> &numbers() const noexcept { return b_; }
    Integer operator[](int degree) const;
    void set(int degree, Integer value);

    // Betti numbers of the one-point union (sum in positive degrees).
    friend BettiProfile wedge(const BettiProfile &a, const BettiProfile &b);

private:
    std::map<int, Integer> b_;
};

// prod_{i even} (1 - t^i)^{-b_i} * prod_{i odd} (1 + t^i)^{b_i}, over i >= 1.
TruncatedSeries sp_series(const BettiProfile &profile, int truncation = default_truncation);

// SP series of S^k(K_tau^+): b_i = rk H_{i-k}(K_tau; Q) for i >= k.
TruncatedSeries f_tau(const SingularityFamily &family, int truncation = default_truncation);

// tau(t) = F_tau(t) * P_BSO(t); rk Bord_tau(n) is the coefficient of t^{n+k}.
TruncatedSeries bordism_generating_function(const SingularityFamily &family, int truncation = default_truncation);
Integer bordism_rank(const SingularityFamily &family, int n, int truncation = default_truncation);

// rk Omega_n(K_tau) (x) Q = sum_a rk H_a(K_tau) * rk Omega_{n-a} (x) Q.
Integer framed_bordism_rank(const SingularityFamily &family, int n, int truncation = default_truncation);

// Sum of base-3 digits.
unsigned alpha3(std::uint64_t x);

struct FoldTorsionReport
{
    std::uint64_t m;
    std::uint64_t t;
    Integer rank_part;
    std::string torsion_descriptor;
};

// t(m) = min { j : alpha3(2m + j) <= 3j } by direct search.
std::uint64_t fold_torsion_parameter(std::uint64_t m);
FoldTorsionReport fold_torsion(std::uint64_t m);

// Smallest prime p > n/2 + 1; from p on, the p-components of Cob_tau(n, k) and H_n(K_tau) agree.
std::uint64_t safe_prime_bound(std::uint64_t n);

} // namespace kazcalc

#endif
