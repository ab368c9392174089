#pragma once

#include "gtx/admissibility.hpp"
#include "gtx/modules_generic.hpp"

namespace gtx {

// Tableau realization of an sl_n-module induced from sl_2 or sl_3: the inner
// seed fills the bottom rows, the outer parameters v_{sub_rank+1..n} repeat
// down the columns of every higher row.
struct InducedSpec {
    int n;
    int sub_rank; // 2 or 3
    std::vector<Rational> inner; // sl_2: (u21, u22, u11); sl_3: (u31,u32,u33,u21,u22,u11)
    std::vector<Rational> outer; // v_{sub_rank+1} .. v_n
    Rational inner_level_shifted; // k_sub + sub_rank = p/q when built from level data, else 0
    ModuleSpec spec;
};

InducedSpec build_induced(int n, int sub_rank, const std::vector<Rational>& inner,
                          const std::vector<Rational>& outer);

struct SimplicityReport {
    bool simple = true;
    std::vector<OmegaTriple> witnesses; // integral adjacent-row pairs of the inner seed
};

SimplicityReport simplicity_flags(const InducedSpec& spec);

// Outer parameters from the level recursion v_i - v_{i+1} - 1 =
// lambda_i - (p/q)(mu_i + 1); lambda/mu lists have n-1 entries. Checks the
// box constraints and the admissibility of the restricted inner level.
InducedSpec admissible_induced_parameters(const AdmissibleLevel& level, int sub_rank,
                                          const std::vector<long>& lambdas, const std::vector<long>& mus);

} // namespace gtx
