#ifndef KAZCALC_SPECTRAL_HPP
#define KAZCALC_SPECTRAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "kazcalc/classifying.hpp"
#include "kazcalc/series.hpp"

namespace kazcalc
{

// One singularity stratum eta_i: its source codimension c_i, the rational
// cohomology ring of its symmetry group, and an optional cup factor (e.g. an
// Euler class) by which the Thom-space cohomology is generated.
struct StratumSpec
{
    int index = 0;
    int source_codim = 0;
    GradedRingSpec column_base;
    int extra_shift = 0;
    bool zero_column = false;
    // Normal bundle of the stratum in the source (xi) and in the target (xi~).
    std::optional<FormalBundle> source_bundle;
    std::optional<FormalBundle> target_bundle;
};

// t^{c_i + extra_shift} * P(column_base), or zero.
TruncatedSeries stratum_column_series(const StratumSpec &stratum, int truncation = default_truncation);

class SingularityFamily
{
public:
    enum class Kind
    {
        prim,
        morin,
        sigma1r,
        custom,
    };

    static SingularityFamily prim(int k);
    static SingularityFamily morin(int k);
    // Morin maps with at most Sigma^{1_r} points: columns 0..r of the Morin sequence.
    static SingularityFamily sigma1r(int k, int r);
    // Strata must be listed in increasing index order. Base-ring generators and
    // extra shifts must have even degree (rational cohomology of a compact Lie group).
    static SingularityFamily custom(int k, std::vector<StratumSpec> strata);

    Kind kind() const noexcept { return kind_; }
    int codim() const noexcept { return codim_; }
    // Index of the top stratum; nullopt for the unbounded prim/morin hierarchies.
    std::optional<int> top_index() const;
    const std::vector<StratumSpec> &custom_strata() const noexcept { return strata_; }

    bool has_stratum(int index) const;
    // Descriptor of stratum `index`; throws UsageError if the family has no such stratum.
    StratumSpec stratum(int index) const;
    // All strata whose source codimension is at most `truncation`.
    std::vector<StratumSpec> strata(int truncation = default_truncation) const;

    std::string name() const;

private:
    SingularityFamily(Kind kind, int codim, int top) : kind_(kind), codim_(codim), top_(top) {}

    Kind kind_;
    int codim_;
    int top_; // -1 when unbounded
    std::vector<StratumSpec> strata_;
};

std::string to_string(SingularityFamily::Kind kind);

enum class PageKind
{
    e1,
    e_infinity,
};

// A column of the rank-level spectral sequence, in total cohomological degree.
// `base` is the Thom class times A; `euler` is the part carrying an extra Euler
// class factor (U_r * chi * A). Only even-codimension prim/Morin columns use it.
struct Column
{
    int index = 0;
    int source_codim = 0;
    TruncatedSeries base;
    TruncatedSeries euler;

    TruncatedSeries total() const { return base + euler; }
};

class Page
{
public:
    Page(PageKind kind, int truncation) : kind_(kind), truncation_(truncation) {}

    PageKind kind() const noexcept { return kind_; }
    int truncation() const noexcept { return truncation_; }
    const std::vector<Column> &columns() const noexcept { return columns_; }
    std::vector<Column> &columns() noexcept { return columns_; }

    const Column *find(int index) const;
    Column *find(int index);
    // Sum of all columns.
    TruncatedSeries total() const;

private:
    PageKind kind_;
    int truncation_;
    std::vector<Column> columns_;
};

struct CancellationStep
{
    int from_index;
    int to_index;
    // Rank (within the truncation) of the part killed in the source column.
    Integer rank;
};

struct D1Result
{
    Page page;
    std::vector<CancellationStep> steps;
};

Page build_e1(const SingularityFamily &family, int truncation = default_truncation);

// Maximal runs of consecutive nonzero columns whose source codimensions share a parity.
std::vector<std::vector<int>> parity_blocks(const SingularityFamily &family, int truncation = default_truncation);

// Rank-level d1. For odd codimension (and for validated custom families) the
// page is returned unchanged. For even codimension the Euler part of column i
// cancels the base part of column i+1 one degree higher; every step asserts
// that the two series agree exactly and throws ConsistencyError otherwise.
D1Result apply_d1_traced(const Page &page, const SingularityFamily &family);
Page apply_d1(const Page &page, const SingularityFamily &family);

Page e_infinity(const SingularityFamily &family, int truncation = default_truncation);

// Poincare series of H_*(K_tau; Q): sum of the E_infinity columns.
TruncatedSeries kazarian_homology_series(const SingularityFamily &family, int truncation = default_truncation);
TruncatedSeries truncated_homology_series(int k, int r, int truncation = default_truncation);

// Every nonzero coefficient in column i sits in a degree congruent to c_i mod 2.
bool satisfies_parity_vanishing(const Page &page);

// Throws UsageError when two nonzero columns of different parity admit a
// possible differential (column i nonzero in degree n, a later column nonzero in n+1).
void validate_block_degenerate(const SingularityFamily &family, int truncation = default_truncation);

} // namespace kazcalc

#endif
