#include "gtx/classification.hpp"

#include <algorithm>
#include <array>

namespace gtx {

namespace {

const std::array<const char*, 30> kNames = {
    "L1",  "L2",  "L3",  "L4",  "L5",  "L6",  "L7",  "L8",  "L9",  "L10",
    "L11", "L12", "L13", "L14", "L15", "L16", "L17", "L18", "L19", "L20",
    "S-L1", "S-L2", "S-L3", "S-L4", "S-L5", "S-L6", "S-L7", "S-L8", "S-L9", "S-L10"};

} // namespace

std::string family_name(FamilyId id) { return kNames[static_cast<int>(id)]; }

std::optional<FamilyId> family_from_name(const std::string& name) {
    for (size_t i = 0; i < kNames.size(); ++i)
        if (name == kNames[i]) return static_cast<FamilyId>(i);
    // Accept "SL5" for "S-L5".
    if (name.size() > 2 && name[0] == 'S' && name[1] == 'L') return family_from_name("S-L" + name.substr(2));
    return std::nullopt;
}

bool family_is_minimal_orbit(FamilyId id) { return static_cast<int>(id) < 20; }

const FamilyDescriptor& family_descriptor(FamilyId id) {
    static const std::vector<FamilyDescriptor> table = [] {
        std::vector<FamilyDescriptor> t;
        auto add = [&](FamilyId id, Regime regime, std::vector<std::string> params, MultiplicityProfile prof,
                       ModuleClass cls) { t.push_back({id, regime, std::move(params), prof, cls}); };
        using MP = MultiplicityProfile;
        using MC = ModuleClass;
        for (FamilyId id : {FamilyId::L1, FamilyId::L2, FamilyId::L3, FamilyId::L4})
            add(id, Regime::Generic, {}, MP::BoundedByT, MC::HighestWeight);
        for (FamilyId id : {FamilyId::L5, FamilyId::L6})
            add(id, Regime::Generic, {"z"}, MP::BoundedByT, MC::Sl2Induced);
        add(FamilyId::L7, Regime::Generic, {"z", "y"}, MP::EqualT, MC::Cuspidal);
        for (FamilyId id : {FamilyId::L8, FamilyId::L9})
            add(id, Regime::Generic, {"z"}, MP::BoundedByT, MC::Sl2Induced);
        for (FamilyId id : {FamilyId::L10, FamilyId::L11, FamilyId::L12, FamilyId::L13})
            add(id, Regime::Generic, {}, MP::BoundedByT, MC::HighestWeight);
        for (FamilyId id : {FamilyId::L14, FamilyId::L15})
            add(id, Regime::Generic, {"y"}, MP::BoundedByT, MC::Sl2Induced);
        for (FamilyId id : {FamilyId::L16, FamilyId::L17, FamilyId::L18, FamilyId::L19})
            add(id, Regime::Singular1, {}, MP::BoundedByT, MC::HighestWeight);
        add(FamilyId::L20, Regime::Singular1, {"z"}, MP::EqualT, MC::Cuspidal);
        for (FamilyId id : {FamilyId::SL1, FamilyId::SL2, FamilyId::SL3, FamilyId::SL4})
            add(id, Regime::Singular1, {}, MP::Infinite, MC::Sl2Induced);
        add(FamilyId::SL5, Regime::Singular1, {}, MP::Infinite, MC::Cuspidal);
        for (FamilyId id : {FamilyId::SL6, FamilyId::SL7})
            add(id, Regime::Singular1, {"a"}, MP::Infinite, MC::Cuspidal);
        for (FamilyId id : {FamilyId::SL8, FamilyId::SL9})
            add(id, Regime::Singular1, {"a"}, MP::Infinite, MC::Cuspidal);
        add(FamilyId::SL10, Regime::Singular1, {"a", "c"}, MP::Infinite, MC::Cuspidal);
        std::sort(t.begin(), t.end(),
                  [](const FamilyDescriptor& x, const FamilyDescriptor& y) { return x.id < y.id; });
        return t;
    }();
    return table[static_cast<int>(id)];
}

Rational ParameterChooser::next(const std::vector<Rational>& avoid) {
    static const long primes[] = {7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67};
    for (; idx_ < static_cast<int>(std::size(primes)); ++idx_) {
        Rational cand = base_ + Rational(idx_ + 1, primes[idx_]);
        bool ok = true;
        for (const auto& av : avoid)
            if (integral_difference(cand, av)) {
                ok = false;
                break;
            }
        if (ok) {
            ++idx_;
            return cand;
        }
    }
    throw Error("parameter chooser exhausted its candidate list");
}

namespace {

// Atom builders over the table coordinates (m, n, k).
using Rel = RegionAtom::Rel;
RegionAtom A(int cm, int cn, int ck, Rel rel, long b0, int bt = 0) { return {cm, cn, ck, rel, b0, bt}; }
// m <= b, m > b, ...
RegionAtom m_le(long b0, int bt = 0) { return A(1, 0, 0, Rel::Le, b0, bt); }
RegionAtom m_gt(long b0, int bt = 0) { return A(1, 0, 0, Rel::Gt, b0, bt); }
RegionAtom n_le(long b0, int bt = 0) { return A(0, 1, 0, Rel::Le, b0, bt); }
RegionAtom n_gt(long b0, int bt = 0) { return A(0, 1, 0, Rel::Gt, b0, bt); }
// k - m <= 0 (k <= m) and m - k < 0 (m < k), etc.
RegionAtom k_le_m() { return A(-1, 0, 1, Rel::Le, 0); }
RegionAtom m_lt_k() { return A(1, 0, -1, Rel::Lt, 0); }
RegionAtom k_le_n() { return A(0, -1, 1, Rel::Le, 0); }
RegionAtom n_lt_k() { return A(0, 1, -1, Rel::Lt, 0); }
RegionAtom m_le_n() { return A(1, -1, 0, Rel::Le, 0); }
RegionAtom n_lt_m() { return A(1, -1, 0, Rel::Gt, 0); }

RegionPredicate family_region(FamilyId id, long t) {
    RegionPredicate rp;
    rp.t = t;
    auto sys = [&](std::vector<RegionAtom> atoms) { rp.systems.push_back(std::move(atoms)); };
    switch (id) {
        case FamilyId::L1: sys({n_gt(0, -1), n_le(0), m_le(0), k_le_m()}); break;
        case FamilyId::L2: sys({n_gt(0, -1), n_le(0), m_le(0), m_lt_k()}); break;
        case FamilyId::L3: sys({n_gt(0, -1), n_le(0), m_gt(0), k_le_m()}); break;
        case FamilyId::L4: sys({n_gt(0, -1), n_le(0), m_gt(0), m_lt_k()}); break;
        case FamilyId::L5: sys({n_gt(0, -1), n_le(0), m_le(0)}); break;
        case FamilyId::L6: sys({n_gt(0, -1), n_le(0), m_gt(0)}); break;
        case FamilyId::L7: sys({n_gt(0, -1), n_le(0)}); break;
        case FamilyId::L8: sys({n_gt(0, -1), n_le(0), m_lt_k()}); break;
        case FamilyId::L9: sys({n_gt(0, -1), n_le(0), k_le_m()}); break;
        case FamilyId::L10: sys({m_gt(0, -1), m_le(0), n_le(0), k_le_m()}); break;
        case FamilyId::L11: sys({m_gt(0, -1), m_le(0), n_le(0), m_lt_k()}); break;
        case FamilyId::L12: sys({m_gt(0, -1), m_le(0), n_gt(0), k_le_m()}); break;
        case FamilyId::L13: sys({m_gt(0, -1), m_le(0), n_gt(0), m_lt_k()}); break;
        case FamilyId::L14: sys({m_gt(0, -1), m_le(0), k_le_m()}); break;
        case FamilyId::L15: sys({m_gt(0, -1), m_le(0), m_lt_k()}); break;
        case FamilyId::L16: sys({n_gt(0, -1), n_le(0), m_le(0, -1), m_lt_k(), k_le_n()}); break;
        case FamilyId::L17: sys({m_gt(0, -1), m_le(0), n_gt(0), m_lt_k(), k_le_n()}); break;
        case FamilyId::L18:
            sys({m_le_n(), m_gt(0, -1), m_le(0), n_gt(0), k_le_m()});
            sys({m_le_n(), m_gt(0, -1), m_le(0), n_le(0), k_le_n()});
            sys({n_lt_m(), m_gt(0, -1), m_le(0), k_le_n()});
            break;
        case FamilyId::L19:
            sys({m_le_n(), m_gt(0, -1), m_le(0), n_lt_k()});
            sys({n_lt_m(), m_gt(0, -1), m_le(0), n_le(0, -1), m_lt_k()});
            sys({n_lt_m(), m_gt(0, -1), m_le(0), n_gt(0, -1), n_le(0), n_lt_k()});
            break;
        case FamilyId::L20:
            // Published strip of the second case reads -t < n <= 0; on the
            // tau-orbit representatives that breaks both the full weight
            // support and the multiplicity-t count, so the strip is taken on
            // m in both cases (see the L18/L19 structure it extends).
            sys({m_le_n(), m_gt(0, -1), m_le(0)});
            sys({n_lt_m(), m_gt(0, -1), m_le(0)});
            break;
        case FamilyId::SL1:
            sys({m_le(0), n_gt(0), k_le_m()});
            sys({m_le(0), n_le(0), k_le_n()});
            break;
        case FamilyId::SL2:
            sys({m_gt(0), n_gt(0), n_lt_k()});
            sys({m_gt(0), n_le(0), m_lt_k()});
            break;
        case FamilyId::SL3: sys({m_le(0), n_lt_k()}); break;
        case FamilyId::SL4: sys({m_gt(0), k_le_n()}); break;
        case FamilyId::SL5: sys({m_le(0), n_gt(0), m_lt_k(), k_le_n()}); break;
        case FamilyId::SL6:
            sys({m_le_n(), m_le(0)});
            sys({n_lt_m(), m_le(0)});
            break;
        case FamilyId::SL7:
            sys({m_le_n(), m_gt(0)});
            sys({n_lt_m(), m_gt(0)});
            break;
        case FamilyId::SL8:
            sys({m_le_n(), k_le_n()});
            sys({n_lt_m(), k_le_n()});
            break;
        case FamilyId::SL9:
            sys({m_le_n(), n_lt_k()});
            sys({n_lt_m(), n_lt_k()});
            break;
        case FamilyId::SL10: break; // full lattice
        default: throw Error("family has no region table");
    }
    return rp;
}

Tableau family_seed_minimal(FamilyId id, const Rational& c, const Rational& x, long t,
                            const std::map<std::string, Rational>& par) {
    Rational xt = x - Rational(t);
    auto P = [&](const std::string& name) { return par.at(name); };
    std::vector<Rational> row3 = {c, x, xt};
    switch (id) {
        case FamilyId::L1: case FamilyId::L2: case FamilyId::L3: case FamilyId::L4:
            return Tableau(3, {{c}, {c, x}, row3});
        case FamilyId::L5: case FamilyId::L6:
            return Tableau(3, {{P("z")}, {c, x}, row3});
        case FamilyId::L7:
            return Tableau(3, {{P("z")}, {P("y"), x}, row3});
        case FamilyId::L8: case FamilyId::L9:
            return Tableau(3, {{P("z")}, {P("z"), x}, row3});
        case FamilyId::L10: case FamilyId::L11: case FamilyId::L12: case FamilyId::L13:
            return Tableau(3, {{x}, {x, c}, row3});
        case FamilyId::L14: case FamilyId::L15:
            return Tableau(3, {{x}, {x, P("y")}, row3});
        case FamilyId::L16: case FamilyId::L17: case FamilyId::L18: case FamilyId::L19:
            return Tableau(3, {{x}, {x, x}, row3});
        case FamilyId::L20:
            return Tableau(3, {{P("z")}, {x, x}, row3});
        default: throw Error("not a minimal-orbit family");
    }
}

Tableau family_seed_principal(FamilyId id, const Rational& x, const Rational& y, const Rational& z,
                              const std::map<std::string, Rational>& par) {
    auto P = [&](const std::string& name) { return par.at(name); };
    std::vector<Rational> row3 = {x, y, z};
    switch (id) {
        case FamilyId::SL1: case FamilyId::SL2: case FamilyId::SL3: case FamilyId::SL4: case FamilyId::SL5:
            return Tableau(3, {{x}, {x, x}, row3});
        case FamilyId::SL6: case FamilyId::SL7:
            return Tableau(3, {{P("a")}, {x, x}, row3});
        case FamilyId::SL8: case FamilyId::SL9:
            return Tableau(3, {{P("a")}, {P("a"), P("a")}, row3});
        case FamilyId::SL10:
            return Tableau(3, {{P("c")}, {P("a"), P("a")}, row3});
        default: throw Error("not a principal-orbit singular family");
    }
}

} // namespace

FamilyInstance build_family(FamilyId id, const AdmissibleLevel& level, long lambda1, long lambda2, long a,
                            long mu1, long mu2, const std::map<std::string, Rational>* supplied) {
    if (level.n != 3) throw RankError("classification families are sl_3 only");
    const FamilyDescriptor& desc = family_descriptor(id);
    const Rational poq = level.p_over_q();

    if (lambda1 < 0 || lambda2 < 0) throw ConstraintViolation("lambda coordinates must be nonnegative");
    if (lambda1 + lambda2 > level.p - 3) throw ConstraintViolation("lambda1+lambda2 must be <= p-3");

    FamilyInstance inst{desc, level, lambda1, lambda2, a, mu1, mu2, lambda2 + 1, {},
                        ModuleSpec::full(ModuleContext(Tableau(2, {{Rational(0)}, {Rational(1), Rational(0)}}),
                                                       Regime::Generic))};

    if (family_is_minimal_orbit(id)) {
        if (level.q < 2) throw OrbitEmpty("minimal-orbit families need q >= 2");
        if (a < 1 || a > level.q - 1) throw ConstraintViolation("twist index a must satisfy 1 <= a <= q-1");
        Rational ap = Rational(a) * poq;
        Rational c = (Rational(lambda2) + Rational(2 * lambda1) - Rational(2) * ap) / Rational(3);
        Rational x = (Rational(lambda2) - Rational(lambda1) + ap) / Rational(3) - Rational(1);
        if (integral_difference(c, x)) throw ParameterClash("degenerate family data: c - x is integral");

        ParameterChooser chooser(x);
        std::vector<Rational> chosen_avoid = {c, x};
        for (const auto& name : desc.free_params) {
            Rational value;
            if (supplied && supplied->count(name)) {
                value = supplied->at(name);
                for (const auto& av : chosen_avoid)
                    if (integral_difference(value, av))
                        throw ParameterClash("supplied parameter " + name + " hits an integral difference");
            } else {
                value = chooser.next(chosen_avoid);
            }
            inst.params[name] = value;
            chosen_avoid.push_back(value);
        }

        Tableau seed = family_seed_minimal(id, c, x, inst.t, inst.params);
        ModuleContext ctx(std::move(seed), desc.regime);
        inst.spec = ModuleSpec(std::move(ctx), family_region(id, inst.t));
        return inst;
    }

    // q >= 3 principal-orbit singular families.
    if (level.q < 3) throw OrbitEmpty("q >= 3 families need denominator at least 3");
    if (mu1 < 0 || mu2 < 0) throw ConstraintViolation("mu coordinates must be nonnegative");
    if (mu1 + mu2 > level.q - 3) throw ConstraintViolation("mu1+mu2 must be <= q-3");
    Rational a1 = (Rational(2 * lambda1 + lambda2) - poq * Rational(2 * mu1 + mu2 + 3)) / Rational(3);
    Rational a2 = (Rational(lambda2 - lambda1) - poq * Rational(mu2 - mu1)) / Rational(3);
    Rational a3 = -(Rational(lambda1 + 2 * lambda2) - poq * Rational(mu1 + 2 * mu2 + 3)) / Rational(3);
    Rational x = a1, y = a2 - Rational(1), z = a3 - Rational(2);
    if (integral_difference(x, y) || integral_difference(x, z) || integral_difference(y, z))
        throw ParameterClash("degenerate principal data: top-row differences integral");

    ParameterChooser chooser(x);
    for (const auto& name : desc.free_params) {
        std::vector<Rational> avoid =
            (name == "c") ? std::vector<Rational>{inst.params.at("a")} : std::vector<Rational>{x, y, z};
        Rational value;
        if (supplied && supplied->count(name)) {
            value = supplied->at(name);
            for (const auto& av : avoid)
                if (integral_difference(value, av))
                    throw ParameterClash("supplied parameter " + name + " hits an integral difference");
        } else {
            value = chooser.next(avoid);
        }
        inst.params[name] = value;
    }

    Tableau seed = family_seed_principal(id, x, y, z, inst.params);
    ModuleContext ctx(std::move(seed), desc.regime);
    if (id == FamilyId::SL10)
        inst.spec = ModuleSpec(std::move(ctx), FullLatticePredicate{});
    else
        inst.spec = ModuleSpec(std::move(ctx), family_region(id, 1));
    return inst;
}

FamilyReport verify_family(const FamilyInstance& inst, const VerifyOptions& opts) {
    FamilyReport report;
    Window w = Window::radius(3, opts.radius);
    report.closure = verify_closure(inst.spec, w, opts.margin);
    report.relations =
        verify_relations(inst.spec, w, opts.relation_mode, opts.relation_sample, opts.margin, 7);
    report.census = multiplicity_census(inst.spec, w);

    const long t = inst.t;
    switch (inst.desc.profile) {
        case MultiplicityProfile::BoundedByT: {
            for (const auto& [wt, entry] : report.census)
                if (entry.max_slack >= t + 1 && entry.count > t) report.multiplicities_ok = false;
            break;
        }
        case MultiplicityProfile::EqualT: {
            bool any = false;
            for (const auto& [wt, entry] : report.census)
                if (entry.max_slack >= t + 1) {
                    any = true;
                    if (entry.count != t) report.multiplicities_ok = false;
                }
            if (!any) report.multiplicities_ok = false;
            break;
        }
        case MultiplicityProfile::Infinite: {
            long prev = -1;
            for (long r : opts.growth_radii) {
                WeightCensus c = multiplicity_census(inst.spec, Window::radius(3, r));
                long mx = 0;
                for (const auto& [wt, entry] : c) mx = std::max(mx, entry.count);
                report.growth_max.push_back(mx);
                if (prev >= 0 && mx <= prev) report.growth_ok = false;
                prev = mx;
            }
            break;
        }
    }
    return report;
}

std::optional<BasisElement> interior_probe(const ModuleSpec& spec, long radius) {
    for (long r = radius; r <= radius + 4; ++r) {
        Window w = Window::radius(spec.ctx.n(), r);
        std::optional<BasisElement> best;
        long best_slack = -1;
        for (const auto& b : enumerate_basis(spec, w)) {
            long s = w.slack(b.z);
            if (s > best_slack) {
                best_slack = s;
                best = b;
            }
        }
        if (best) return best;
    }
    return std::nullopt;
}

CrossCharacterReport cross_character_check(const std::vector<FamilyInstance>& instances, long probe_radius) {
    CrossCharacterReport report;
    for (const auto& inst : instances) {
        auto probe = interior_probe(inst.spec, probe_radius);
        if (!probe) throw Error("no interior probe for family " + family_name(inst.desc.id));
        report.characters.push_back(
            {inst.desc.id, central_character(inst.spec, *probe, Project::Predicate)});
    }
    for (size_t i = 1; i < report.characters.size(); ++i)
        if (report.characters[i].second != report.characters[0].second) report.pass = false;
    return report;
}

} // namespace gtx
