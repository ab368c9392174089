#pragma once

#include <unordered_map>

#include "gtx/gt_action.hpp"
#include "gtx/modules_generic.hpp"

namespace gtx {

// Negative root datum: f_alpha = E_{rs} with r > s. Supported: (2,1) in any
// rank, plus (3,2) and (3,1) on sl_3 windows.
struct RootAlpha {
    int r, s;
    bool operator==(const RootAlpha&) const = default;
};

// (ad f_alpha)^i(u) for a single generator u, reduced to a linear combination
// of single generators via [E_rs, E_ab] = d_sa E_rb - d_br E_as.
UEElement ad_power(int n, RootAlpha alpha, GenIndex u, unsigned i);

// One term of Theta_a(u): coeff * (generator word) * f^{fexp}.
struct LocalizedTerm {
    Rational coeff;
    GenIndex gen;
    bool identity = false; // term is coeff * f^{fexp} with no generator factor
    int fexp = 0;
};
using LocalizedElement = std::vector<LocalizedTerm>;

// Theta_a(u) = sum_i binom(a,i) (ad f)^i(u) f^{-i}; finite because ad f is
// nilpotent on generators.
LocalizedElement theta(GenIndex u, RootAlpha alpha, const Rational& a, int n);

// f_alpha powers and the twisted action on one module's window, with caching.
class Localizer {
  public:
    Localizer(const ModuleSpec& spec, RootAlpha alpha, Project proj = Project::Predicate);

    const ModuleSpec& spec() const { return spec_; }
    Action& action() { return act_; }

    TableauVector f_apply(const TableauVector& v);
    // Unique preimage under f_alpha within the module span; NotInvertible
    // with a witness when the bidiagonal chain system has no exact solution.
    TableauVector f_inverse_elem(const BasisElement& b);
    TableauVector f_inverse(const TableauVector& v);
    TableauVector f_power(long e, const TableauVector& v);

    // Theta_a(u) . v evaluated concretely (f^{-i} via f_inverse).
    TableauVector twisted(GenIndex u, const Rational& a, const TableauVector& v);
    // Twisted action of a word (letters act right to left).
    TableauVector twisted_word(const Word& w, const Rational& a, const TableauVector& v);

  private:
    const ModuleSpec& spec_;
    RootAlpha alpha_;
    Action act_;
    std::unordered_map<BasisElement, TableauVector, BasisElementHash> inv_cache_;
};

TableauVector inverse_f_action(const ModuleSpec& spec, RootAlpha alpha, const BasisElement& b,
                               Project proj = Project::Predicate);
TableauVector twisted_action(const ModuleSpec& spec, GenIndex u, RootAlpha alpha, const Rational& a,
                             const TableauVector& v, Project proj = Project::Predicate);

struct LocalizationLemmaReport {
    bool theta_zero_is_identity = true;
    bool power_composition = true;      // (iii) f^a (f^b v) = f^{a+b} v
    bool conjugation_identity = true;   // (iv) f^a (u (f^{-a} v)) = Theta_a(u) v
    bool bracket_preservation = true;   // twisted operators satisfy the gl brackets
    bool character_invariance = true;   // central character unchanged by the twist
    long checked_vectors = 0;
    bool pass() const {
        return theta_zero_is_identity && power_composition && conjugation_identity && bracket_preservation &&
               character_invariance;
    }
};

LocalizationLemmaReport verify_localization_lemma(const ModuleSpec& spec, RootAlpha alpha, const Rational& a,
                                                  const Rational& b, const Window& w);

} // namespace gtx
