#ifndef KAZCALC_COBORDISM_HPP
#define KAZCALC_COBORDISM_HPP

#include <string>
#include <vector>

#include "kazcalc/spectral.hpp"

namespace kazcalc
{

// Rational cohomology Betti numbers b^0..b^q of a target P^q. For an open
// target the profile is that of compactly supported cohomology, so Euclidean
// space R^q is the profile with a single 1 in degree q.
class TargetProfile
{
public:
    TargetProfile() = default;
    explicit TargetProfile(std::vector<Integer> betti);

    static TargetProfile euclidean(int dim);
    static TargetProfile sphere(int dim);
    // Kunneth product of two profiles.
    static TargetProfile product(const TargetProfile &a, const TargetProfile &b);

    // P x R^j.
    TargetProfile times_euclidean(int j) const;

    int dim() const noexcept { return static_cast<int>(betti_.size()) - 1; }
    const std::vector<Integer> &betti() const noexcept { return betti_; }
    Integer betti(int degree) const;

private:
    std::vector<Integer> betti_;
};

// rk Cob_tau(n, k) (x) Q: coefficient of t^n in the Kazarian homology series.
Integer cob_rank(const SingularityFamily &family, int n, int truncation = default_truncation);

// The closed-form Poincare series of K_tau that the engine must reproduce:
// BSO(k+1) for prim, BO(k)/BO(k+1) for Morin, the quotient ring / leftover
// column description for Sigma^{1_r}, and the plain column sum for custom families.
TruncatedSeries closed_form_series(const SingularityFamily &family, int truncation = default_truncation);
Integer cob_rank_closed(const SingularityFamily &family, int n, int truncation = default_truncation);

// sum_{j >= k} b^j(P) * rk H_{j-k}(K_tau; Q).
Integer cob_rank_over_target(const SingularityFamily &family, const TargetProfile &target,
                             int truncation = default_truncation);

// Poincare series of the Thom space of xi~_i: the E1 column series shifted by k.
TruncatedSeries target_thom_series(const StratumSpec &stratum, int k, int truncation = default_truncation);

// rk Imm^{xi~_i}(P) (x) Q = rk Hom(H^*(T xi~_i; Q), H^*(P; Q)).
Integer imm_rank(const StratumSpec &stratum, int k, const TargetProfile &target);

// Rank of the complete obstruction group for eliminating the top stratum r.
// For truncated families r must be the top index; r = 0 is rejected.
Integer elimination_obstruction_rank(const SingularityFamily &family, int r, const TargetProfile &target);

// rk pi_m(B): coefficient of total degree m - k in column r of E_infinity.
Integer decomposition_B_ranks(const SingularityFamily &family, int r, int m, int truncation = default_truncation);

enum class SplitVerdict
{
    splits,
    unknown,
};

std::string to_string(SplitVerdict v);

struct SplittingReport
{
    SplitVerdict verdict;
    FormalBundle source_bundle;
    FormalBundle target_bundle;
    EulerVerdict source_euler;
    EulerVerdict target_euler;
    // Last-column E_infinity data, reported whatever the verdict.
    TruncatedSeries last_column;
};

// Sufficient criterion only: the key fibration splits if xi_r or xi~_r has a
// nonzero rational Euler class. Never answers "does not split".
SplittingReport splitting_verdict(const SingularityFamily &family, int r, int truncation = default_truncation);

struct TowerStage
{
    std::vector<int> strata;
    std::vector<int> bottom_degrees; // c_i + k per fibre
};

struct TowerDescription
{
    std::vector<TowerStage> stages;
};

// Simplified Postnikov-like tower for the family cut at stratum r: one stage per parity block.
TowerDescription postnikov_tower(const SingularityFamily &family, int r);

struct TowerE1Entry
{
    int stratum;
    int j;
    Integer rank;
};

// E1^{i,j} = rk Imm^{xi~_i}(P x R^j) (x) Q for the strata of the tower and 0 <= j <= max_j.
std::vector<TowerE1Entry> tower_e1_table(const SingularityFamily &family, int r, const TargetProfile &target,
                                         int max_j);

// Cob_{Sigma^{1_r}}(P) (x) Q == sum over even strata 2i <= r of Imm^{xi~_{2i}}(P) (x) Q, for odd k.
// Requires target.dim() == n + k.
bool morin_splitting_identity_check(int k, int r, int n, const TargetProfile &target);

} // namespace kazcalc

#endif
