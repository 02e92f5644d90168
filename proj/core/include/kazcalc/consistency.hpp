#ifndef KAZCALC_CONSISTENCY_HPP
#define KAZCALC_CONSISTENCY_HPP

#include <functional>
#include <string>
#include <vector>

#include "kazcalc/series.hpp"

namespace kazcalc
{

// Cross-oracle checks: every number the engine produces is compared with an
// independently computed closed form. Each check returns one outcome line.
struct CheckOutcome
{
    int id;
    std::string name;
    bool passed;
    std::string detail;
    double seconds = 0.0;
};

CheckOutcome check_prim_odd_identity(int truncation = default_truncation);
CheckOutcome check_prim_even_collapse(int truncation = default_truncation);
CheckOutcome check_morin_homology(int truncation = default_truncation);
CheckOutcome check_sigma1r_closed_form(int truncation = default_truncation);
CheckOutcome check_morin_splitting_identity();
CheckOutcome check_thom_degree_law();
CheckOutcome check_parity_vanishing(int truncation = default_truncation);
CheckOutcome check_fold_torsion();
CheckOutcome check_sp_and_framed_bordism(int truncation = default_truncation);
CheckOutcome check_decomposition_ranks(int truncation = default_truncation);

std::vector<CheckOutcome> run_consistency_suite(int truncation = default_truncation);

} // namespace kazcalc

#endif
