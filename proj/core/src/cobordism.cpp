#include "kazcalc/cobordism.hpp"

#include <algorithm>

#include "kazcalc/error.hpp"

namespace kazcalc
{

namespace
{

void require_degree_in_range(int degree, int truncation)
{
    if (degree > truncation)
        throw TruncationError(truncation, degree);
}

// Strata of the family cut at index r, in hierarchy order.
std::vector<StratumSpec> strata_up_to(const SingularityFamily &family, int r)
{
    if (!family.has_stratum(r))
        throw UsageError(family.name() + " has no stratum with index " + std::to_string(r));
    std::vector<StratumSpec> out;
    if (family.kind() == SingularityFamily::Kind::custom) {
        for (const StratumSpec &s : family.custom_strata())
            if (s.index <= r)
                out.push_back(s);
        return out;
    }
    for (int i = 0; i <= r; ++i)
        out.push_back(family.stratum(i));
    return out;
}

} // namespace

TargetProfile::TargetProfile(std::vector<Integer> betti) : betti_(std::move(betti))
{
    if (betti_.empty())
        throw UsageError("a target profile needs at least b^0");
    for (const Integer &b : betti_)
        if (b.sign() < 0)
            throw UsageError("Betti numbers must be non-negative");
}

TargetProfile TargetProfile::euclidean(int dim)
{
    if (dim < 0)
        throw UsageError("Euclidean target dimension must be non-negative");
    std::vector<Integer> b(static_cast<std::size_t>(dim) + 1, Integer(0));
    b.back() = 1;
    return TargetProfile(std::move(b));
}

TargetProfile TargetProfile::sphere(int dim)
{
    if (dim < 1)
        throw UsageError("sphere dimension must be positive");
    std::vector<Integer> b(static_cast<std::size_t>(dim) + 1, Integer(0));
    b.front() = 1;
    b.back() = 1;
    return TargetProfile(std::move(b));
}

TargetProfile TargetProfile::product(const TargetProfile &a, const TargetProfile &b)
{
    std::vector<Integer> out(static_cast<std::size_t>(a.dim() + b.dim()) + 1, Integer(0));
    for (std::size_t i = 0; i < a.betti_.size(); ++i)
        for (std::size_t j = 0; j < b.betti_.size(); ++j)
            out[i + j] += a.betti_[i] * b.betti_[j];
    return TargetProfile(std::move(out));
}

TargetProfile TargetProfile::times_euclidean(int j) const
{
    return product(*this, euclidean(j));
}

Integer TargetProfile::betti(int degree) const
{
    if (degree < 0 || degree > dim())
        return Integer(0);
    return betti_[static_cast<std::size_t>(degree)];
}

Integer cob_rank(const SingularityFamily &family, int n, int truncation)
{
    if (n < 0)
        throw UsageError("dimension n must be non-negative");
    require_degree_in_range(n, truncation);
    return kazarian_homology_series(family, truncation).coefficient(n);
}

TruncatedSeries closed_form_series(const SingularityFamily &family, int truncation)
{
    const int k = family.codim();
    switch (family.kind()) {
    case SingularityFamily::Kind::prim:
        return space_series(ClassifyingSpace::bso(k + 1), truncation);
    case SingularityFamily::Kind::morin:
        return space_series(ClassifyingSpace::bo(k % 2 == 0 ? k : k + 1), truncation);
    case SingularityFamily::Kind::sigma1r: {
        const int r = *family.top_index();
        const TruncatedSeries a = ring_series(morin_base_ring(k), truncation);
        if (k % 2 == 1)
            return a * finite_geometric(2 * (k + 1), r / 2 + 1, truncation);
        if (r % 2 == 1)
            return a;
        return a + shift(a, r * (k + 1) + k);
    }
    case SingularityFamily::Kind::custom: {
        TruncatedSeries sum(truncation);
        for (const StratumSpec &s : family.custom_strata())
            sum += stratum_column_series(s, truncation);
        return sum;
    }
    }
    throw UsageError("unknown family kind");
}

Integer cob_rank_closed(const SingularityFamily &family, int n, int truncation)
{
    if (n < 0)
        throw UsageError("dimension n must be non-negative");
    require_degree_in_range(n, truncation);
    return closed_form_series(family, truncation).coefficient(n);
}

Integer cob_rank_over_target(const SingularityFamily &family, const TargetProfile &target, int truncation)
{
    const int k = family.codim();
    if (target.dim() < k)
        return Integer(0);
    require_degree_in_range(target.dim() - k, truncation);
    const TruncatedSeries series = kazarian_homology_series(family, truncation);
    Integer sum = 0;
    for (int j = k; j <= target.dim(); ++j)
        sum += target.betti(j) * series.coefficient(j - k);
    return sum;
}

TruncatedSeries target_thom_series(const StratumSpec &stratum, int k, int truncation)
{
    return shift(stratum_column_series(stratum, truncation), k);
}

Integer imm_rank(const StratumSpec &stratum, int k, const TargetProfile &target)
{
    const TruncatedSeries thom = target_thom_series(stratum, k, target.dim());
    Integer sum = 0;
    for (int j = 0; j <= target.dim(); ++j)
        sum += target.betti(j) * thom.coefficient(j);
    return sum;
}

Integer elimination_obstruction_rank(const SingularityFamily &family, int r, const TargetProfile &target)
{
    if (r <= 0)
        throw UsageError("elimination needs a stratum above the regular one (r >= 1)");
    const auto top = family.top_index();
    if (top && r != *top)
        throw UsageError("stratum " + std::to_string(r) + " is not the top stratum of " + family.name());
    return imm_rank(family.stratum(r), family.codim(), target);
}

Integer decomposition_B_ranks(const SingularityFamily &family, int r, int m, int truncation)
{
    if (!family.has_stratum(r))
        throw UsageError(family.name() + " has no stratum with index " + std::to_string(r));
    const int degree = m - family.codim();
    if (degree < 0)
        return Integer(0);
    require_degree_in_range(degree, truncation);
    const Page page = e_infinity(family, truncation);
    const Column *col = page.find(r);
    return col ? col->total().coefficient(degree) : Integer(0);
}

std::string to_string(SplitVerdict v)
{
    return v == SplitVerdict::splits ? "splits" : "unknown";
}

SplittingReport splitting_verdict(const SingularityFamily &family, int r, int truncation)
{
    const StratumSpec s = family.stratum(r);
    if (!s.source_bundle || !s.target_bundle)
        throw UsageError("stratum " + std::to_string(r) + " of " + family.name()
                         + " has no normal bundle descriptors");
    const auto top = family.top_index();
    if (top && r != *top)
        throw UsageError("stratum " + std::to_string(r) + " is not the top stratum of " + family.name());

    SplittingReport report{SplitVerdict::unknown,
                           *s.source_bundle,
                           *s.target_bundle,
                           euler_class_nonzero(*s.source_bundle),
                           euler_class_nonzero(*s.target_bundle),
                           TruncatedSeries(truncation)};
    if (report.source_euler == EulerVerdict::yes || report.target_euler == EulerVerdict::yes)
        report.verdict = SplitVerdict::splits;
    const Page page = e_infinity(family, truncation);
    if (const Column *col = page.find(r))
        report.last_column = col->total();
    return report;
}

TowerDescription postnikov_tower(const SingularityFamily &family, int r)
{
    const int k = family.codim();
    TowerDescription tower;
    int parity = -1;
    for (const StratumSpec &s : strata_up_to(family, r)) {
        if (s.zero_column)
            continue;
        if (tower.stages.empty() || s.source_codim % 2 != parity)
            tower.stages.emplace_back();
        parity = s.source_codim % 2;
        tower.stages.back().strata.push_back(s.index);
        tower.stages.back().bottom_degrees.push_back(s.source_codim + k);
    }
    return tower;
}

std::vector<TowerE1Entry> tower_e1_table(const SingularityFamily &family, int r, const TargetProfile &target,
                                         int max_j)
{
    if (max_j < 0)
        throw UsageError("max_j must be non-negative");
    std::vector<TowerE1Entry> table;
    for (const StratumSpec &s : strata_up_to(family, r)) {
        if (s.zero_column)
            continue;
        for (int j = 0; j <= max_j; ++j)
            table.push_back({s.index, j, imm_rank(s, family.codim(), target.times_euclidean(j))});
    }
    return table;
}

bool morin_splitting_identity_check(int k, int r, int n, const TargetProfile &target)
{
    if (k < 1 || k % 2 == 0)
        throw UsageError("the Morin splitting identity needs odd codimension k");
    if (r < 0 || n < 0)
        throw UsageError("r and n must be non-negative");
    if (target.dim() != n + k)
        throw UsageError("target dimension " + std::to_string(target.dim()) + " differs from n + k = "
                         + std::to_string(n + k));
    const SingularityFamily family = SingularityFamily::sigma1r(k, r);
    const int truncation = std::max(default_truncation, target.dim());
    const Integer lhs = cob_rank_over_target(family, target, truncation);
    Integer rhs = 0;
    for (int i = 0; i <= r; i += 2)
        rhs += imm_rank(family.stratum(i), k, target);
    return lhs == rhs;
}

} // namespace kazcalc
