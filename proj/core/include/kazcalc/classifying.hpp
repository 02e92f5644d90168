#ifndef KAZCALC_CLASSIFYING_HPP
#define KAZCALC_CLASSIFYING_HPP

#include <map>
#include <string>

#include "kazcalc/series.hpp"

namespace kazcalc
{

// Rational cohomology data of the classifying spaces that show up as strata
// bases: BSO(k), BO(k), stable BSO and arbitrary free polynomial rings.
class ClassifyingSpace
{
public:
    enum class Kind
    {
        bso,
        bo,
        bso_stable,
        polynomial_ring,
    };

    static ClassifyingSpace bso(int k);
    static ClassifyingSpace bo(int k);
    static ClassifyingSpace bso_stable();
    static ClassifyingSpace polynomial_ring(GradedRingSpec spec);

    Kind kind() const noexcept { return kind_; }
    // Bundle rank k; 0 for the stable and polynomial kinds.
    int rank() const noexcept { return rank_; }

    // Generator presentation. For BSO(2l) this is p_1..p_{l-1} together with
    // the Euler class in degree 2l; for the stable space it lists p_i with 4i <= truncation.
    GradedRingSpec generators(int truncation = default_truncation) const;

    std::string name() const;

private:
    ClassifyingSpace(Kind kind, int rank, GradedRingSpec ring) : kind_(kind), rank_(rank), ring_(std::move(ring)) {}

    Kind kind_;
    int rank_;
    GradedRingSpec ring_;
};

TruncatedSeries space_series(const ClassifyingSpace &space, int truncation = default_truncation);

// Q[p_1, ..., p_count], deg p_i = 4i.
GradedRingSpec pontrjagin_ring(int count);

// (1 + t^{2l}) * P(Q[p_1..p_l]): the A + chi*A presentation of BSO(2l).
TruncatedSeries bso_even_split_series(int l, int truncation = default_truncation);

// The ring A = Q[p_1..p_l] attached to Morin maps of codimension k:
// l = k/2 for even k and (k-1)/2 for odd k.
GradedRingSpec morin_base_ring(int k);

// Symbolic vector bundle over a classifying space, kept only at the level of
// its summands: trivial lines, oriented universal bundles gamma^SO_d, and
// summands that are not orientable over the base (e.g. gamma_1 (x) gamma_k).
struct FormalBundle
{
    int trivial = 0;
    std::map<int, int> oriented; // rank d -> multiplicity of gamma^SO_d
    int non_orientable = 0;

    int rank_without_non_orientable() const;
    bool operator==(const FormalBundle &) const = default;
};

FormalBundle &operator+=(FormalBundle &a, const FormalBundle &b);
FormalBundle operator+(FormalBundle a, const FormalBundle &b);
// r copies of the bundle.
FormalBundle operator*(int r, const FormalBundle &b);

std::string to_string(const FormalBundle &b);

enum class EulerVerdict
{
    yes,
    no,
    not_applicable,
};

std::string to_string(EulerVerdict v);

// Is the rational Euler class nonzero? Non-orientable summands put the bundle
// outside the oriented setting (not_applicable); a trivial summand or an
// odd-rank oriented summand forces the Euler class to vanish.
EulerVerdict euler_class_nonzero(const FormalBundle &bundle);

} // namespace kazcalc

#endif
