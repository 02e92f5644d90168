#include "kazcalc/spectral.hpp"

#include <algorithm>

#include "kazcalc/error.hpp"

namespace kazcalc
{

namespace
{

void require_codim(int k)
{
    if (k < 1)
        throw UsageError("codimension must be at least 1, got " + std::to_string(k));
}

int ceil_half(int x) { return (x + 1) / 2; }

// Universal normal bundles of the Sigma^{1_r} stratum. Prim: r*(gamma_k + eps).
// Morin: the representation ceil((r-1)/2)*1 + floor((r+1)/2)*gamma_1
// + ceil(r/2)*(gamma_1 x gamma_k) + floor(r/2)*gamma_k, where every summand
// twisted by the O(1) factor is non-orientable over BG_r.
FormalBundle prim_source_bundle(int k, int r)
{
    FormalBundle b;
    b.trivial = r;
    if (r > 0)
        b.oriented[k] = r;
    return b;
}

FormalBundle morin_source_bundle(int k, int r)
{
    if (r == 0)
        return {};
    FormalBundle b;
    b.trivial = ceil_half(r - 1);
    b.non_orientable = (r + 1) / 2 + ceil_half(r);
    if (r % 2 == 0)
        b.oriented[k] = r / 2;
    else
        b.non_orientable += r / 2;
    return b;
}

// xi~ = xi + nu, with nu the (rank k) normal bundle of the map along the stratum.
FormalBundle with_map_normal(FormalBundle b, int k, bool oriented)
{
    if (oriented)
        b.oriented[k] += 1;
    else
        b.non_orientable += 1;
    return b;
}

void require_even_degrees(const StratumSpec &s)
{
    for (const RingGenerator &g : s.column_base.generators())
        if (g.degree < 1 || g.degree % 2 != 0)
            throw UsageError("stratum " + std::to_string(s.index) + ": base ring generator of degree "
                             + std::to_string(g.degree) + " (must be positive and even)");
    if (s.extra_shift < 0 || s.extra_shift % 2 != 0)
        throw UsageError("stratum " + std::to_string(s.index) + ": extra shift "
                         + std::to_string(s.extra_shift) + " must be a non-negative even number");
}

} // namespace

TruncatedSeries stratum_column_series(const StratumSpec &stratum, int truncation)
{
    if (stratum.zero_column)
        return TruncatedSeries(truncation);
    return shift(ring_series(stratum.column_base, truncation), stratum.source_codim + stratum.extra_shift);
}

SingularityFamily SingularityFamily::prim(int k)
{
    require_codim(k);
    return SingularityFamily(Kind::prim, k, -1);
}

SingularityFamily SingularityFamily::morin(int k)
{
    require_codim(k);
    return SingularityFamily(Kind::morin, k, -1);
}

SingularityFamily SingularityFamily::sigma1r(int k, int r)
{
    require_codim(k);
    if (r < 0)
        throw UsageError("Sigma^{1_r} needs r >= 0, got " + std::to_string(r));
    return SingularityFamily(Kind::sigma1r, k, r);
}

SingularityFamily SingularityFamily::custom(int k, std::vector<StratumSpec> strata)
{
    require_codim(k);
    for (std::size_t i = 0; i < strata.size(); ++i) {
        const StratumSpec &s = strata[i];
        if (s.index < 0)
            throw UsageError("stratum index must be non-negative");
        if (i > 0 && s.index <= strata[i - 1].index)
            throw UsageError("strata must be listed in strictly increasing hierarchy order (index "
                             + std::to_string(s.index) + " after " + std::to_string(strata[i - 1].index) + ")");
        if (s.source_codim < 0)
            throw UsageError("stratum " + std::to_string(s.index) + ": negative source codimension");
        require_even_degrees(s);
    }
    const int top = strata.empty() ? -1 : strata.back().index;
    SingularityFamily family(Kind::custom, k, top);
    family.strata_ = std::move(strata);
    return family;
}

std::optional<int> SingularityFamily::top_index() const
{
    if (kind_ == Kind::prim || kind_ == Kind::morin)
        return std::nullopt;
    return top_;
}

bool SingularityFamily::has_stratum(int index) const
{
    if (index < 0)
        return false;
    switch (kind_) {
    case Kind::prim:
    case Kind::morin:
        return true;
    case Kind::sigma1r:
        return index <= top_;
    case Kind::custom:
        return std::any_of(strata_.begin(), strata_.end(), [&](const StratumSpec &s) { return s.index == index; });
    }
    return false;
}

StratumSpec SingularityFamily::stratum(int index) const
{
    if (!has_stratum(index))
        throw UsageError(name() + " has no stratum with index " + std::to_string(index));
    if (kind_ == Kind::custom)
        return *std::find_if(strata_.begin(), strata_.end(), [&](const StratumSpec &s) { return s.index == index; });

    const int k = codim_;
    const int r = index;
    StratumSpec s;
    s.index = r;
    s.source_codim = r * (k + 1);
    if (kind_ == Kind::prim) {
        s.column_base = ClassifyingSpace::bso(k).generators();
        s.source_bundle = prim_source_bundle(k, r);
        s.target_bundle = with_map_normal(*s.source_bundle, k, true);
        return s;
    }
    // Morin and its truncations.
    if (r == 0) {
        s.column_base = ClassifyingSpace::bso(k).generators();
    } else {
        s.column_base = morin_base_ring(k);
        if (k % 2 == 0 && r % 2 == 0)
            s.extra_shift = k;
        if (k % 2 == 1 && r % 2 == 1)
            s.zero_column = true;
    }
    s.source_bundle = morin_source_bundle(k, r);
    s.target_bundle = with_map_normal(*s.source_bundle, k, r % 2 == 0);
    return s;
}

std::vector<StratumSpec> SingularityFamily::strata(int truncation) const
{
    std::vector<StratumSpec> out;
    if (kind_ == Kind::custom) {
        for (const StratumSpec &s : strata_)
            if (s.source_codim <= truncation)
                out.push_back(s);
        return out;
    }
    for (int r = 0; r * (codim_ + 1) <= truncation; ++r) {
        if (top_ >= 0 && r > top_)
            break;
        out.push_back(stratum(r));
    }
    return out;
}

std::string to_string(SingularityFamily::Kind kind)
{
    switch (kind) {
    case SingularityFamily::Kind::prim:
        return "prim";
    case SingularityFamily::Kind::morin:
        return "morin";
    case SingularityFamily::Kind::sigma1r:
        return "sigma1r";
    case SingularityFamily::Kind::custom:
        return "custom";
    }
    return "?";
}

std::string SingularityFamily::name() const
{
    std::string n = to_string(kind_) + "(k=" + std::to_string(codim_);
    if (kind_ == Kind::sigma1r)
        n += ", r=" + std::to_string(top_);
    return n + ")";
}

const Column *Page::find(int index) const
{
    auto it = std::find_if(columns_.begin(), columns_.end(), [&](const Column &c) { return c.index == index; });
    return it == columns_.end() ? nullptr : &*it;
}

Column *Page::find(int index)
{
    auto it = std::find_if(columns_.begin(), columns_.end(), [&](const Column &c) { return c.index == index; });
    return it == columns_.end() ? nullptr : &*it;
}

TruncatedSeries Page::total() const
{
    TruncatedSeries sum(truncation_);
    for (const Column &c : columns_) {
        sum += c.base;
        sum += c.euler;
    }
    return sum;
}

Page build_e1(const SingularityFamily &family, int truncation)
{
    if (family.kind() == SingularityFamily::Kind::custom)
        validate_block_degenerate(family, truncation);

    Page page(PageKind::e1, truncation);
    const int k = family.codim();
    const bool split_euler = k % 2 == 0 && family.kind() != SingularityFamily::Kind::custom;
    const TruncatedSeries a_series =
        family.kind() == SingularityFamily::Kind::custom ? TruncatedSeries(truncation)
                                                         : ring_series(morin_base_ring(k), truncation);

    for (const StratumSpec &s : family.strata(truncation)) {
        Column col{s.index, s.source_codim, TruncatedSeries(truncation), TruncatedSeries(truncation)};
        if (!split_euler) {
            col.base = stratum_column_series(s, truncation);
        } else {
            // BSO(2l) = A + chi*A; Morin columns carry one of the two summands.
            const bool has_base = family.kind() == SingularityFamily::Kind::prim || s.index == 0 || s.index % 2 == 1;
            const bool has_euler = family.kind() == SingularityFamily::Kind::prim || s.index % 2 == 0;
            if (has_base)
                col.base = shift(a_series, s.source_codim);
            if (has_euler)
                col.euler = shift(a_series, s.source_codim + k);
        }
        page.columns().push_back(std::move(col));
    }
    return page;
}

std::vector<std::vector<int>> parity_blocks(const SingularityFamily &family, int truncation)
{
    const Page page = build_e1(family, truncation);
    std::vector<std::vector<int>> blocks;
    int current_parity = -1;
    for (const Column &c : page.columns()) {
        if (c.total().is_zero())
            continue;
        const int parity = c.source_codim % 2;
        if (blocks.empty() || parity != current_parity)
            blocks.emplace_back();
        blocks.back().push_back(c.index);
        current_parity = parity;
    }
    return blocks;
}

D1Result apply_d1_traced(const Page &page, const SingularityFamily &family)
{
    D1Result result{page, {}};
    result.page = Page(PageKind::e_infinity, page.truncation());
    result.page.columns() = page.columns();

    const bool trivial = family.codim() % 2 == 1 || family.kind() == SingularityFamily::Kind::custom;
    if (trivial)
        return result;

    auto &cols = result.page.columns();
    const auto top = family.top_index();
    for (std::size_t i = 0; i < cols.size(); ++i) {
        Column &source = cols[i];
        const int next_index = source.index + 1;
        Column *target = result.page.find(next_index);
        const bool next_exists = !top.has_value() || next_index <= *top;
        if (!next_exists)
            continue; // the top column of a truncated family keeps its Euler part
        // A missing target column lies entirely above the truncation degree.
        const TruncatedSeries target_series = target ? target->base : TruncatedSeries(page.truncation());
        const TruncatedSeries image = shift(source.euler, 1);
        if (image != target_series)
            throw ConsistencyError("d1 mismatch from column " + std::to_string(source.index) + " to column "
                                   + std::to_string(next_index) + " of " + family.name() + ": image "
                                   + to_string(image) + " vs target " + to_string(target_series));
        Integer rank = 0;
        for (const Integer &c : source.euler.coefficients())
            rank += c;
        if (!rank.is_zero())
            result.steps.push_back({source.index, next_index, rank});
        source.euler = TruncatedSeries(page.truncation());
        if (target)
            target->base = TruncatedSeries(page.truncation());
    }
    return result;
}

Page apply_d1(const Page &page, const SingularityFamily &family)
{
    return apply_d1_traced(page, family).page;
}

Page e_infinity(const SingularityFamily &family, int truncation)
{
    return apply_d1(build_e1(family, truncation), family);
}

TruncatedSeries kazarian_homology_series(const SingularityFamily &family, int truncation)
{
    return e_infinity(family, truncation).total();
}

TruncatedSeries truncated_homology_series(int k, int r, int truncation)
{
    return kazarian_homology_series(SingularityFamily::sigma1r(k, r), truncation);
}

bool satisfies_parity_vanishing(const Page &page)
{
    for (const Column &c : page.columns()) {
        const TruncatedSeries total = c.total();
        for (int n = 0; n <= total.truncation(); ++n)
            if ((n - c.source_codim) % 2 != 0 && !total[static_cast<std::size_t>(n)].is_zero())
                return false;
    }
    return true;
}

void validate_block_degenerate(const SingularityFamily &family, int truncation)
{
    std::vector<std::pair<int, TruncatedSeries>> columns;
    for (const StratumSpec &s : family.strata(truncation)) {
        TruncatedSeries series = stratum_column_series(s, truncation);
        if (!series.is_zero())
            columns.emplace_back(s.index, std::move(series));
    }
    for (std::size_t i = 0; i < columns.size(); ++i) {
        for (std::size_t j = i + 1; j < columns.size(); ++j) {
            const TruncatedSeries &lo = columns[i].second;
            const TruncatedSeries &hi = columns[j].second;
            for (int n = 0; n < truncation; ++n) {
                if (!lo[static_cast<std::size_t>(n)].is_zero() && !hi[static_cast<std::size_t>(n + 1)].is_zero())
                    throw UsageError("custom family is not block-degenerate: a differential from column "
                                     + std::to_string(columns[i].first) + " (degree " + std::to_string(n)
                                     + ") to column " + std::to_string(columns[j].first) + " (degree "
                                     + std::to_string(n + 1) + ") is not excluded by parity");
            }
        }
    }
}

} // namespace kazcalc
