#pragma once

#include <cstdint>
#include <map>

#include "gtx/gt_action.hpp"
#include "gtx/module_spec.hpp"

namespace gtx {

// All basis elements of the spec inside the window, in lexicographic shift
// order (enlarging the window never removes elements).
std::vector<BasisElement> enumerate_basis(const ModuleSpec& spec, const Window& w);

struct ClosureViolation {
    BasisElement source;
    SimpleGen gen;
    BasisElement target;
    Rational coeff;
};

// Closure of the spanning set under the raw generator action. Escaping terms
// are sorted three ways: outside the window (boundary-censored), inside the
// window but unable to reach back into the span (these belong to the
// complementary ideal of the subquotient and are censored by the quotient),
// and genuine violations that could re-enter.
struct ClosureReport {
    std::vector<ClosureViolation> violations;
    long quotient_censored = 0;
    long boundary_censored = 0;
    long checked_elements = 0;
    bool pass() const { return violations.empty(); }
};

ClosureReport verify_closure(const ModuleSpec& spec, const Window& w, long margin = 1);

struct RelationFailure {
    int a, b, c, d;
    BasisElement elem;
};

struct RelationReport {
    long checked_pairs = 0;
    long checked_applications = 0;
    std::vector<RelationFailure> failures;
    bool pass() const { return failures.empty(); }
};

enum class ElementMode { All, Sample };

// [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb, exactly, on basis elements of
// the spec (the module's own, predicate-projected action). Always runs every
// generator pair; ElementMode::Sample tests per_pair randomly chosen elements
// per pair instead of the full window.
RelationReport verify_relations(const ModuleSpec& spec, const Window& w, ElementMode mode = ElementMode::All,
                                size_t per_pair = 0, long margin = 1, uint64_t rng_seed = 1);

struct CensusEntry {
    long count = 0;
    long max_slack = -1;
};

using WeightCensus = std::map<std::vector<Rational>, CensusEntry>;

WeightCensus multiplicity_census(const ModuleSpec& spec, const Window& w);

// Largest count among weights having a witness of slack >= interior_slack.
long max_interior_multiplicity(const WeightCensus& census, long interior_slack);

} // namespace gtx
