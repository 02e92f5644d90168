#include "kazcalc/consistency.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <utility>

#include "kazcalc/bordism.hpp"
#include "kazcalc/classifying.hpp"
#include "kazcalc/cobordism.hpp"
#include "kazcalc/error.hpp"
#include "kazcalc/spectral.hpp"
#include "kazcalc/thom.hpp"

namespace kazcalc
{

namespace
{

// Collects mismatches; a check passes when none were recorded.
class Mismatches
{
public:
    void add(const std::string &what)
    {
        if (count_++ < 3)
            os_ << (count_ > 1 ? "; " : "") << what;
    }

    template <typename A, typename B>
    void expect_equal(const A &got, const B &want, const std::string &what)
    {
        if (!(got == want))
            add(what);
    }

    bool empty() const { return count_ == 0; }
    std::string summary(const std::string &ok) const
    {
        if (count_ == 0)
            return ok;
        std::ostringstream os;
        os << count_ << " mismatch(es): " << os_.str();
        return os.str();
    }

private:
    int count_ = 0;
    std::ostringstream os_;
};

CheckOutcome timed(int id, std::string name, const std::function<std::pair<bool, std::string>()> &body)
{
    const auto start = std::chrono::steady_clock::now();
    CheckOutcome out{id, std::move(name), false, {}, 0.0};
    try {
        auto [passed, detail] = body();
        out.passed = passed;
        out.detail = std::move(detail);
    } catch (const std::exception &e) {
        out.passed = false;
        out.detail = std::string("exception: ") + e.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::string tag(const std::string &family, int k, int extra = -1)
{
    std::string s = family + " k=" + std::to_string(k);
    if (extra >= 0)
        s += " r=" + std::to_string(extra);
    return s;
}

// Number of partitions of q into positive parts (p(q)), via Euler's recurrence.
std::vector<Integer> partition_numbers(int max_q)
{
    std::vector<Integer> p(static_cast<std::size_t>(max_q) + 1, Integer(0));
    p[0] = 1;
    for (int q = 1; q <= max_q; ++q) {
        Integer sum = 0;
        for (int j = 1;; ++j) {
            const int g1 = j * (3 * j - 1) / 2;
            if (g1 > q)
                break;
            const int sign = (j % 2 == 1) ? 1 : -1;
            sum += sign * p[static_cast<std::size_t>(q - g1)];
            const int g2 = j * (3 * j + 1) / 2;
            if (g2 <= q)
                sum += sign * p[static_cast<std::size_t>(q - g2)];
        }
        p[static_cast<std::size_t>(q)] = sum;
    }
    return p;
}

} // namespace

CheckOutcome check_prim_odd_identity(int truncation)
{
    return timed(1, "prim odd-k identity: sum_r t^{r(k+1)} P(BSO(k)) == P(BSO(k+1))", [&] {
        Mismatches bad;
        for (int k : {1, 3, 5, 7, 9}) {
            const TruncatedSeries bso_k = space_series(ClassifyingSpace::bso(k), truncation);
            TruncatedSeries sum(truncation);
            for (int r = 0; r * (k + 1) <= truncation; ++r)
                sum += shift(bso_k, r * (k + 1));
            const TruncatedSeries want = space_series(ClassifyingSpace::bso(k + 1), truncation);
            bad.expect_equal(sum, want, "column sum " + tag("prim", k));
            bad.expect_equal(kazarian_homology_series(SingularityFamily::prim(k), truncation), want,
                             "engine " + tag("prim", k));
        }
        return std::pair{bad.empty(), bad.summary("k in {1,3,5,7,9}")};
    });
}

CheckOutcome check_prim_even_collapse(int truncation)
{
    return timed(2, "prim even-k collapse: E_inf == P(BSO(k+1)), d1 steps exact", [&] {
        Mismatches bad;
        for (int k : {2, 4, 6, 8}) {
            const SingularityFamily family = SingularityFamily::prim(k);
            bad.expect_equal(kazarian_homology_series(family, truncation),
                             space_series(ClassifyingSpace::bso(k + 1), truncation), "engine " + tag("prim", k));
            // Deep enough that column 20 exists and column 19's Euler part is visible.
            const int deep = 20 * (k + 1) + k + 1;
            const D1Result d1 = apply_d1_traced(build_e1(family, deep), family);
            for (int i = 0; i < 20; ++i) {
                const bool found = std::any_of(d1.steps.begin(), d1.steps.end(), [&](const CancellationStep &s) {
                    return s.from_index == i && s.to_index == i + 1;
                });
                if (!found)
                    bad.add("missing d1 step " + std::to_string(i) + "->" + std::to_string(i + 1) + " "
                            + tag("prim", k));
            }
            bad.expect_equal(d1.page.total(), space_series(ClassifyingSpace::bso(k + 1), deep),
                             "deep engine " + tag("prim", k));
        }
        return std::pair{bad.empty(), bad.summary("k in {2,4,6,8}, cancellation chain through column 20")};
    });
}

CheckOutcome check_morin_homology(int truncation)
{
    return timed(3, "Morin: H_*(K) == BO(k) (k even) / BO(k+1) (k odd)", [&] {
        Mismatches bad;
        for (int k = 1; k <= 9; ++k) {
            const TruncatedSeries want = space_series(ClassifyingSpace::bo(k % 2 == 0 ? k : k + 1), truncation);
            bad.expect_equal(kazarian_homology_series(SingularityFamily::morin(k), truncation), want,
                             tag("morin", k));
        }
        return std::pair{bad.empty(), bad.summary("k = 1..9")};
    });
}

CheckOutcome check_sigma1r_closed_form(int truncation)
{
    return timed(4, "Sigma^{1_r}: engine == closed-form contract", [&] {
        Mismatches bad;
        for (int k = 1; k <= 7; ++k) {
            for (int r = 0; r <= 10; ++r) {
                const SingularityFamily family = SingularityFamily::sigma1r(k, r);
                bad.expect_equal(truncated_homology_series(k, r, truncation), closed_form_series(family, truncation),
                                 tag("sigma1r", k, r));
            }
        }
        return std::pair{bad.empty(), bad.summary("k <= 7, r <= 10")};
    });
}

CheckOutcome check_morin_splitting_identity()
{
    return timed(5, "Morin odd-k splitting: Cob(P) == sum of Imm over even strata", [&] {
        Mismatches bad;
        const std::vector<std::pair<std::string, TargetProfile>> closed = {
            {"S2", TargetProfile::sphere(2)},
            {"S4", TargetProfile::sphere(4)},
            {"S2xS2", TargetProfile::product(TargetProfile::sphere(2), TargetProfile::sphere(2))},
        };
        int cases = 0;
        for (int k : {1, 3, 5, 7}) {
            for (int r = 0; r <= 8; ++r) {
                for (int n = 0; n <= 40; ++n) {
                    ++cases;
                    if (!morin_splitting_identity_check(k, r, n, TargetProfile::euclidean(n + k)))
                        bad.add("R^" + std::to_string(n + k) + " " + tag("sigma1r", k, r));
                    for (const auto &[label, profile] : closed) {
                        const int j = n + k - profile.dim();
                        if (j < 0)
                            continue;
                        ++cases;
                        if (!morin_splitting_identity_check(k, r, n, profile.times_euclidean(j)))
                            bad.add(label + "xR^" + std::to_string(j) + " " + tag("sigma1r", k, r));
                    }
                }
            }
        }
        return std::pair{bad.empty(), bad.summary(std::to_string(cases) + " target/family cases")};
    });
}

CheckOutcome check_thom_degree_law()
{
    return timed(6, "Thom polynomials: homogeneous of degree i(k+1); morin k=3 i=2 is p_2", [&] {
        Mismatches bad;
        for (auto family : {SingularityFamily::Kind::prim, SingularityFamily::Kind::morin}) {
            for (int k = 1; k <= 9; ++k) {
                for (int i = 1; i <= 10; ++i) {
                    const CharClassPoly tp = thom_polynomial(family, k, i).polynomial;
                    if (tp.is_zero())
                        continue;
                    if (!tp.is_homogeneous() || tp.degree() != i * (k + 1))
                        bad.add(to_string(family) + " k=" + std::to_string(k) + " i=" + std::to_string(i));
                    if (family == SingularityFamily::Kind::morin && k % 2 == 1
                        && tp.max_pontrjagin_index() > pontrjagin_vanishing_bound(k))
                        bad.add("Pontrjagin index above bound, k=" + std::to_string(k));
                }
            }
        }
        bad.expect_equal(thom_polynomial(SingularityFamily::Kind::morin, 3, 2).polynomial,
                         CharClassPoly::generator(CharClass::pontrjagin(2)), "morin k=3 i=2");
        return std::pair{bad.empty(), bad.summary("k <= 9, i <= 10")};
    });
}

CheckOutcome check_parity_vanishing(int truncation)
{
    return timed(7, "parity vanishing on every E1 and E_inf page", [&] {
        Mismatches bad;
        int pages = 0;
        auto check = [&](const SingularityFamily &family) {
            const Page e1 = build_e1(family, truncation);
            const Page einf = apply_d1(e1, family);
            pages += 2;
            if (!satisfies_parity_vanishing(e1))
                bad.add("E1 " + family.name());
            if (!satisfies_parity_vanishing(einf))
                bad.add("E_inf " + family.name());
        };
        for (int k = 1; k <= 9; ++k) {
            check(SingularityFamily::prim(k));
            check(SingularityFamily::morin(k));
            for (int r = 0; r <= 10; ++r)
                check(SingularityFamily::sigma1r(k, r));
        }
        return std::pair{bad.empty(), bad.summary(std::to_string(pages) + " pages")};
    });
}

CheckOutcome check_fold_torsion()
{
    return timed(8, "fold torsion: t(m) minimal for m <= 10^4; t(1)=1, t(8)=2", [&] {
        Mismatches bad;
        for (std::uint64_t m = 1; m <= 10000; ++m) {
            const std::uint64_t t = fold_torsion_parameter(m);
            if (alpha3(2 * m + t) > 3 * t)
                bad.add("t(" + std::to_string(m) + ") does not satisfy the bound");
            for (std::uint64_t j = 0; j < t; ++j)
                if (alpha3(2 * m + j) <= 3 * j) {
                    bad.add("t(" + std::to_string(m) + ") not minimal");
                    break;
                }
        }
        bad.expect_equal(fold_torsion_parameter(1), 1u, "t(1)");
        bad.expect_equal(fold_torsion_parameter(8), 2u, "t(8)");
        return std::pair{bad.empty(), bad.summary("m = 1..10000")};
    });
}

CheckOutcome check_sp_and_framed_bordism(int truncation)
{
    return timed(9, "SP multiplicativity and framed bordism convolution", [&] {
        Mismatches bad;
        std::mt19937_64 rng(20240601);
        std::uniform_int_distribution<int> degree(1, 12);
        std::uniform_int_distribution<int> betti(0, 3);
        std::uniform_int_distribution<int> terms(0, 4);
        auto random_profile = [&] {
            BettiProfile p;
            const int count = terms(rng);
            for (int i = 0; i < count; ++i) {
                const int d = degree(rng);
                p.set(d, p[d] + betti(rng));
            }
            return p;
        };
        for (int trial = 0; trial < 100; ++trial) {
            const BettiProfile a = random_profile();
            const BettiProfile b = random_profile();
            bad.expect_equal(sp_series(wedge(a, b), truncation), sp_series(a, truncation) * sp_series(b, truncation),
                             "SP trial " + std::to_string(trial));
        }

        const std::vector<Integer> partitions = partition_numbers(truncation / 4 + 1);
        std::uniform_int_distribution<int> kind(0, 2);
        std::uniform_int_distribution<int> codim(1, 9);
        std::uniform_int_distribution<int> top(0, 10);
        std::uniform_int_distribution<int> dim(0, truncation);
        std::map<std::string, TruncatedSeries> cache;
        for (int trial = 0; trial < 100; ++trial) {
            const int k = codim(rng);
            const int which = kind(rng);
            const SingularityFamily family = which == 0   ? SingularityFamily::prim(k)
                                             : which == 1 ? SingularityFamily::morin(k)
                                                          : SingularityFamily::sigma1r(k, top(rng));
            const int n = dim(rng);
            auto [it, inserted] = cache.try_emplace(family.name(), truncation);
            if (inserted)
                it->second = kazarian_homology_series(family, truncation);
            Integer expected = 0;
            for (int a = 0; a <= n; ++a) {
                const int rest = n - a;
                if (rest % 4 == 0)
                    expected += it->second.coefficient(a) * partitions[static_cast<std::size_t>(rest / 4)];
            }
            bad.expect_equal(framed_bordism_rank(family, n, truncation), expected,
                             "framed " + family.name() + " n=" + std::to_string(n));
        }
        return std::pair{bad.empty(), bad.summary("100 profile pairs, 100 (family, n) pairs")};
    });
}

CheckOutcome check_decomposition_ranks(int truncation)
{
    return timed(10, "H-space decomposition ranks from the last E_inf column", [&] {
        Mismatches bad;
        for (int k : {2, 4, 6, 8}) {
            const SingularityFamily family = SingularityFamily::morin(k);
            for (int r = 1; r <= 10; ++r)
                for (int m = 0; m <= truncation + k; ++m)
                    if (decomposition_B_ranks(family, r, m, truncation) != 0)
                        bad.add("nonzero B rank " + tag("morin", k, r) + " m=" + std::to_string(m));
        }
        for (int k : {1, 3, 5, 7, 9}) {
            for (int r = 0; r <= 10; ++r) {
                const SingularityFamily family = SingularityFamily::sigma1r(k, r);
                const Page e1 = build_e1(family, truncation);
                const Column *last = e1.find(r);
                for (int m = 0; m <= truncation + k; ++m) {
                    const Integer want = (last && m >= k) ? last->total().coefficient(m - k) : Integer(0);
                    bad.expect_equal(decomposition_B_ranks(family, r, m, truncation), want,
                                     tag("sigma1r", k, r) + " m=" + std::to_string(m));
                }
            }
        }
        return std::pair{bad.empty(), bad.summary("even-k Morin vanish; odd-k last column matches E1")};
    });
}

std::vector<CheckOutcome> run_consistency_suite(int truncation)
{
    return {
        check_prim_odd_identity(truncation),
        check_prim_even_collapse(truncation),
        check_morin_homology(truncation),
        check_sigma1r_closed_form(truncation),
        check_morin_splitting_identity(),
        check_thom_degree_law(),
        check_parity_vanishing(truncation),
        check_fold_torsion(),
        check_sp_and_framed_bordism(truncation),
        check_decomposition_ranks(truncation),
    };
}

} // namespace kazcalc
