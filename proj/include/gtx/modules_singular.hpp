#pragma once

#include <vector>

#include "gtx/basis.hpp"
#include "gtx/gt_action.hpp"
#include "gtx/polynomial.hpp"

namespace gtx {

struct Canonicalized {
    BasisElement elem;
    int sign = 1;
    bool zero = false; // tau-fixed derivative
};

// Canonical sector: Plain z21 >= z22, Derivative z21 < z22; derivative
// elements flip sign under the row-2 swap and vanish on its fixed locus.
Canonicalized canonicalize(BasisElement::Kind kind, const ShiftVector& z);

// Spec-facing variant: throws ZeroElement on the tau-fixed derivative.
std::pair<BasisElement, int> canonicalize_checked(BasisElement::Kind kind, const ShiftVector& z);

// Coefficient of one target shift in a generator action, as a rational
// function of t after substituting v21 = x + t, v22 = x - t at a critical
// seed (x the common row-2 value).
struct SymbolicTerm {
    RationalFunction1V coeff;
    ShiftVector target;
};

std::vector<SymbolicTerm> symbolic_generic_action(SimpleGen g, const ShiftVector& z, const Tableau& seed);

// Action on the 1-singular sl_3 module: canonical basis element in, exact
// combination of canonical plain/derivative elements out.
TableauVector singular_apply(SimpleGen g, const BasisElement& b, const Tableau& seed);

// Same computation at an arbitrary (possibly non-canonical) representative;
// outputs are canonicalized. Exposed for the tau-equivariance checks.
TableauVector singular_apply_at_rep(SimpleGen g, BasisElement::Kind kind, const ShiftVector& rep,
                                    const Tableau& seed);

} // namespace gtx
