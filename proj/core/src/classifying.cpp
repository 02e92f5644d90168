#include "kazcalc/classifying.hpp"

#include <sstream>

#include "kazcalc/error.hpp"

namespace kazcalc
{

namespace
{

void require_rank(int k)
{
    if (k < 1)
        throw UsageError("classifying space rank must be at least 1, got " + std::to_string(k));
}

} // namespace

ClassifyingSpace ClassifyingSpace::bso(int k)
{
    require_rank(k);
    const int l = k / 2;
    GradedRingSpec ring;
    if (k % 2 == 1) {
        ring = pontrjagin_ring(l);
    } else {
        ring = pontrjagin_ring(l - 1);
        ring.add_polynomial(k);
    }
    return ClassifyingSpace(Kind::bso, k, std::move(ring));
}

ClassifyingSpace ClassifyingSpace::bo(int k)
{
    require_rank(k);
    return ClassifyingSpace(Kind::bo, k, pontrjagin_ring(k / 2));
}

ClassifyingSpace ClassifyingSpace::bso_stable()
{
    return ClassifyingSpace(Kind::bso_stable, 0, GradedRingSpec{});
}

ClassifyingSpace ClassifyingSpace::polynomial_ring(GradedRingSpec spec)
{
    return ClassifyingSpace(Kind::polynomial_ring, 0, std::move(spec));
}

GradedRingSpec ClassifyingSpace::generators(int truncation) const
{
    if (kind_ == Kind::bso_stable)
        return pontrjagin_ring(truncation / 4);
    return ring_;
}

std::string ClassifyingSpace::name() const
{
    switch (kind_) {
    case Kind::bso:
        return "BSO(" + std::to_string(rank_) + ")";
    case Kind::bo:
        return "BO(" + std::to_string(rank_) + ")";
    case Kind::bso_stable:
        return "BSO";
    case Kind::polynomial_ring:
        break;
    }
    std::ostringstream os;
    os << "Q[";
    bool first = true;
    for (const RingGenerator &g : ring_.generators()) {
        os << (first ? "" : ",") << g.degree << (g.kind == GeneratorKind::exterior ? "e" : "");
        first = false;
    }
    os << "]";
    return os.str();
}

TruncatedSeries space_series(const ClassifyingSpace &space, int truncation)
{
    return ring_series(space.generators(truncation), truncation);
}

GradedRingSpec pontrjagin_ring(int count)
{
    GradedRingSpec spec;
    for (int i = 1; i <= count; ++i)
        spec.add_polynomial(4 * i);
    return spec;
}

TruncatedSeries bso_even_split_series(int l, int truncation)
{
    if (l < 1)
        throw UsageError("BSO(2l) needs l >= 1");
    return ring_series(pontrjagin_ring(l), truncation).mul_exterior(2 * l);
}

GradedRingSpec morin_base_ring(int k)
{
    require_rank(k);
    return pontrjagin_ring(k % 2 == 0 ? k / 2 : (k - 1) / 2);
}

int FormalBundle::rank_without_non_orientable() const
{
    int r = trivial;
    for (const auto &[d, mult] : oriented)
        r += d * mult;
    return r;
}

FormalBundle &operator+=(FormalBundle &a, const FormalBundle &b)
{
    a.trivial += b.trivial;
    for (const auto &[d, mult] : b.oriented)
        a.oriented[d] += mult;
    a.non_orientable += b.non_orientable;
    return a;
}

FormalBundle operator+(FormalBundle a, const FormalBundle &b)
{
    a += b;
    return a;
}

FormalBundle operator*(int r, const FormalBundle &b)
{
    FormalBundle out;
    out.trivial = r * b.trivial;
    for (const auto &[d, mult] : b.oriented)
        if (r * mult != 0)
            out.oriented[d] = r * mult;
    out.non_orientable = r * b.non_orientable;
    return out;
}

std::string to_string(const FormalBundle &b)
{
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first)
            os << " + ";
        first = false;
    };
    if (b.trivial > 0) {
        sep();
        os << "eps^" << b.trivial;
    }
    for (const auto &[d, mult] : b.oriented) {
        if (mult == 0)
            continue;
        sep();
        if (mult != 1)
            os << mult << "*";
        os << "gammaSO_" << d;
    }
    if (b.non_orientable > 0) {
        sep();
        os << b.non_orientable << "*nonorientable";
    }
    if (first)
        os << "0";
    return os.str();
}

std::string to_string(EulerVerdict v)
{
    switch (v) {
    case EulerVerdict::yes:
        return "yes";
    case EulerVerdict::no:
        return "no";
    case EulerVerdict::not_applicable:
        return "not_applicable";
    }
    return "?";
}

EulerVerdict euler_class_nonzero(const FormalBundle &bundle)
{
    if (bundle.non_orientable > 0)
        return EulerVerdict::not_applicable;
    if (bundle.trivial > 0)
        return EulerVerdict::no;
    for (const auto &[d, mult] : bundle.oriented)
        if (mult > 0 && d % 2 == 1)
            return EulerVerdict::no;
    return EulerVerdict::yes;
}

} // namespace kazcalc
