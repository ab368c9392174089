#include "gtx/module_spec.hpp"

namespace gtx {

ModuleSpec::ModuleSpec(ModuleContext c, Predicate p) : ctx(std::move(c)), predicate(std::move(p)) {
    if (std::holds_alternative<OmegaClassPredicate>(predicate) && ctx.regime != Regime::Generic)
        throw ShapeError("omega-class predicate is legal only in the generic regime");
    if (std::holds_alternative<RegionPredicate>(predicate) && ctx.n() != 3)
        throw RankError("region predicates are n = 3 only");
}

ModuleSpec ModuleSpec::omega_class(ModuleContext c, const ShiftVector& ref_shift) {
    OmegaSet ref = omega_plus(shift(c.seed, ref_shift));
    return ModuleSpec(std::move(c), OmegaClassPredicate{std::move(ref)});
}

bool ModuleSpec::member(const BasisElement& b) const {
    const bool singular = ctx.regime == Regime::Singular1;
    if (b.kind == BasisElement::Kind::Derivative) {
        if (!singular) return false;
        if (b.z.get(2, 1) >= b.z.get(2, 2)) return false; // not canonical
    } else if (singular) {
        if (b.z.get(2, 1) < b.z.get(2, 2)) return false; // not canonical
    }

    if (std::holds_alternative<FullLatticePredicate>(predicate)) return true;

    if (const auto* oc = std::get_if<OmegaClassPredicate>(&predicate))
        return omega_plus(shift(ctx.seed, b.z)) == oc->ref;

    if (std::holds_alternative<VermaPredicate>(predicate))
        return omega_plus(shift(ctx.seed, b.z)) == verma_omega_plus(ctx.n());

    if (const auto* rp = std::get_if<RegionPredicate>(&predicate)) {
        long m = b.z.get(2, 1), n = b.z.get(2, 2), k = b.z.get(1, 1);
        // The classification tables constrain the tableau representatives:
        // w with w21 <= w22 names a plain tableau, w with w21 > w22 a
        // derivative one. A canonical element's representative in the table's
        // coordinates is the tau-swap of its shift.
        if (singular) return rp->contains(n, m, k);
        return rp->contains(m, n, k);
    }

    const auto& ip = std::get<InducedPredicate>(predicate);
    Tableau w = shift(ctx.seed, b.z);
    for (int r = ip.sub_rank + 1; r <= ctx.n(); ++r)
        for (int s = 1; s <= r - 1; ++s) {
            Rational d = w.entry(r, s) - w.entry(r - 1, s);
            if (!d.is_nonneg_integer()) return false;
        }
    return true;
}

} // namespace gtx
