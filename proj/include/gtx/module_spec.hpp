#pragma once

#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "gtx/basis.hpp"
#include "gtx/tableau.hpp"

namespace gtx {

enum class Regime { Generic, Singular1 };

// Seed tableau plus regime. Generic requires a generic seed; Singular1
// requires n = 3 and a critical seed.
struct ModuleContext {
    Tableau seed;
    Regime regime;

    ModuleContext(Tableau s, Regime r) : seed(std::move(s)), regime(r) {
        if (regime == Regime::Generic) {
            if (!is_generic(seed)) throw ShapeError("generic regime needs a generic seed");
        } else {
            if (seed.n() != 3) throw RankError("singular regime is n = 3 only");
            if (!is_critical(seed)) throw ShapeError("singular regime needs a critical seed");
        }
    }
    int n() const { return seed.n(); }
};

// One affine condition a.(m,n,k) REL b0 + bt*t on the region coordinates
// (m,n,k) = (z21, z22, z11) of an sl_3 shift.
struct RegionAtom {
    enum class Rel { Le, Lt, Ge, Gt };
    int cm = 0, cn = 0, ck = 0;
    Rel rel = Rel::Le;
    long b0 = 0; // bound: b0 + bt * t, instantiated before evaluation
    int bt = 0;

    bool eval(long m, long n, long k, long t) const {
        long lhs = cm * m + cn * n + ck * k;
        long rhs = b0 + bt * t;
        switch (rel) {
            case Rel::Le: return lhs <= rhs;
            case Rel::Lt: return lhs < rhs;
            case Rel::Ge: return lhs >= rhs;
            case Rel::Gt: return lhs > rhs;
        }
        return false;
    }
};

// Union of conjunctive systems over (m,n,k); membership by pure integer
// comparisons.
struct RegionPredicate {
    std::vector<std::vector<RegionAtom>> systems;
    long t = 1;

    bool contains(long m, long n, long k) const {
        for (const auto& sys : systems) {
            bool ok = true;
            for (const auto& a : sys)
                if (!a.eval(m, n, k, t)) {
                    ok = false;
                    break;
                }
            if (ok) return true;
        }
        return false;
    }
};

struct FullLatticePredicate {};
struct OmegaClassPredicate {
    OmegaSet ref; // target Omega^+ set
};
struct VermaPredicate {};
struct InducedPredicate {
    int sub_rank; // 2 or 3
};

using Predicate =
    std::variant<FullLatticePredicate, OmegaClassPredicate, VermaPredicate, RegionPredicate, InducedPredicate>;

// Basis sub-lattice of a module window: context plus membership predicate.
struct ModuleSpec {
    ModuleContext ctx;
    Predicate predicate;

    ModuleSpec(ModuleContext c, Predicate p);

    bool member(const BasisElement& b) const;
    bool is_full() const { return std::holds_alternative<FullLatticePredicate>(predicate); }

    static ModuleSpec full(ModuleContext c) { return ModuleSpec(std::move(c), FullLatticePredicate{}); }
    static ModuleSpec omega_class(ModuleContext c, const ShiftVector& ref_shift);
    static ModuleSpec verma(ModuleContext c) { return ModuleSpec(std::move(c), VermaPredicate{}); }
};

// Per-coordinate box bounds on shift coordinates.
struct Window {
    std::vector<std::pair<long, long>> bounds; // lo, hi per canonical coordinate

    static Window radius(int n, long r) {
        Window w;
        w.bounds.assign(static_cast<size_t>(n) * (n - 1) / 2, {-r, r});
        return w;
    }

    bool contains(const ShiftVector& z) const {
        for (size_t i = 0; i < bounds.size(); ++i)
            if (z.data()[i] < bounds[i].first || z.data()[i] > bounds[i].second) return false;
        return true;
    }
    // Minimal distance to any face; negative if outside.
    long slack(const ShiftVector& z) const {
        long s = std::numeric_limits<long>::max();
        for (size_t i = 0; i < bounds.size(); ++i) {
            s = std::min(s, z.data()[i] - bounds[i].first);
            s = std::min(s, bounds[i].second - z.data()[i]);
        }
        return s;
    }
};

} // namespace gtx
