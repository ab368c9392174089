#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "gtx/basis.hpp"
#include "gtx/module_spec.hpp"

namespace gtx {

// Raise(k) = E_{k,k+1}, Lower(k) = E_{k+1,k} (1 <= k <= n-1), Diag(k) = E_{kk}.
struct SimpleGen {
    enum class Kind { Raise, Lower, Diag };
    Kind kind;
    int k;

    static SimpleGen raise(int k) { return {Kind::Raise, k}; }
    static SimpleGen lower(int k) { return {Kind::Lower, k}; }
    static SimpleGen diag(int k) { return {Kind::Diag, k}; }

    bool operator==(const SimpleGen&) const = default;
};

// Whether generator output is filtered by the spec's predicate (the
// subquotient action) or left as the raw formal combination.
enum class Project { None, Predicate };

using GenIndex = std::pair<int, int>;
using Word = std::vector<GenIndex>; // product of generators; rightmost acts first

struct UETerm {
    Rational coeff;
    Word word;
};
using UEElement = std::vector<UETerm>;

// c_{mk} = sum over (i1..ik) in {1..m}^k of E_{i1 i2} E_{i2 i3} ... E_{ik i1}.
UEElement casimir_generator(int m, int k);

// Generator action bound to one module spec; memoizes per-element simple
// actions so verification drivers can sweep windows cheaply.
class Action {
  public:
    Action(const ModuleSpec& spec, Project proj) : spec_(spec), proj_(proj) {}

    const ModuleSpec& spec() const { return spec_; }
    Project projection() const { return proj_; }

    const TableauVector& simple(SimpleGen g, const BasisElement& b) const;
    TableauVector simple(SimpleGen g, const TableauVector& v) const;

    // E_{ij} via the fixed commutator recursion with pivot j-+1.
    TableauVector generator(int i, int j, const TableauVector& v) const;
    TableauVector word(const Word& w, const TableauVector& v) const;
    TableauVector ue(const UEElement& u, const TableauVector& v) const;

  private:
    struct Key {
        int kind;
        int k;
        BasisElement b;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        size_t operator()(const Key& key) const {
            return BasisElementHash{}(key.b) * 31 + static_cast<size_t>(key.kind * 7 + key.k);
        }
    };

    TableauVector compute_simple(SimpleGen g, const BasisElement& b) const;

    const ModuleSpec& spec_;
    Project proj_;
    mutable std::unordered_map<Key, TableauVector, KeyHash> cache_;
};

// One-shot wrappers.
TableauVector apply_simple_generator(const ModuleSpec& spec, SimpleGen g, const BasisElement& b,
                                     Project proj = Project::None);
TableauVector apply_generator(const ModuleSpec& spec, int i, int j, const TableauVector& v,
                              Project proj = Project::None);
TableauVector apply_ue_element(const ModuleSpec& spec, const UEElement& u, const TableauVector& v,
                               Project proj = Project::None);

// (gamma_1..gamma_n), gamma_k = k-1 + sum_i v_{ki} - sum_i v_{k-1,i} at seed+z.
std::vector<Rational> weight_of(const ModuleContext& ctx, const BasisElement& b);

// Eigenvalues of c_{n,1}..c_{n,n} on the probe; NotEigenvector if any c_{nk}
// fails to act by a scalar there.
std::vector<Rational> central_character(const ModuleSpec& spec, const BasisElement& probe,
                                        Project proj = Project::None);

} // namespace gtx
