#include "gtx/json_io.hpp"

namespace gtx {

json to_json(const Rational& r) { return r.str(); }

json to_json(const Tableau& t) {
    json rows = json::array();
    for (int i = 1; i <= t.n(); ++i) {
        json row = json::array();
        for (const auto& e : t.row(i)) row.push_back(e.str());
        rows.push_back(std::move(row));
    }
    return json{{"n", t.n()}, {"rows", rows}};
}

json to_json(const ShiftVector& z) {
    json arr = json::array();
    for (long v : z.data()) arr.push_back(v);
    return arr;
}

json to_json(const BasisElement& b) {
    return json{{"kind", b.kind == BasisElement::Kind::Plain ? "plain" : "deriv"}, {"z", to_json(b.z)}};
}

json to_json(const TableauVector& v) {
    json arr = json::array();
    for (const auto& [b, c] : v.terms()) arr.push_back(json{{"basis", to_json(b)}, {"coeff", c.str()}});
    return arr;
}

json to_json(const Window& w) {
    json arr = json::array();
    for (const auto& [lo, hi] : w.bounds) arr.push_back(json::array({lo, hi}));
    return json{{"bounds", arr}};
}

namespace {

json predicate_to_json(const Predicate& p) {
    if (std::holds_alternative<FullLatticePredicate>(p)) return json{{"kind", "full"}};
    if (std::holds_alternative<VermaPredicate>(p)) return json{{"kind", "verma"}};
    if (const auto* oc = std::get_if<OmegaClassPredicate>(&p)) {
        json triples = json::array();
        for (const auto& t : oc->ref) triples.push_back(json::array({t[0], t[1], t[2]}));
        return json{{"kind", "omega_class"}, {"omega_plus", triples}};
    }
    if (const auto* rp = std::get_if<RegionPredicate>(&p)) {
        json systems = json::array();
        for (const auto& sys : rp->systems) {
            json atoms = json::array();
            for (const auto& a : sys) {
                const char* rel = a.rel == RegionAtom::Rel::Le   ? "<="
                                  : a.rel == RegionAtom::Rel::Lt ? "<"
                                  : a.rel == RegionAtom::Rel::Ge ? ">="
                                                                 : ">";
                atoms.push_back(json{{"coeffs", json::array({a.cm, a.cn, a.ck})},
                                     {"rel", rel},
                                     {"b0", a.b0},
                                     {"bt", a.bt}});
            }
            systems.push_back(std::move(atoms));
        }
        return json{{"kind", "region"}, {"t", rp->t}, {"systems", systems}};
    }
    const auto& ip = std::get<InducedPredicate>(p);
    return json{{"kind", "induced"}, {"sub", ip.sub_rank}};
}

Predicate predicate_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "full") return FullLatticePredicate{};
    if (kind == "verma") return VermaPredicate{};
    if (kind == "omega_class") {
        OmegaClassPredicate oc;
        for (const auto& t : j.at("omega_plus")) oc.ref.insert({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
        return oc;
    }
    if (kind == "region") {
        RegionPredicate rp;
        rp.t = j.value("t", 1);
        for (const auto& sys : j.at("systems")) {
            std::vector<RegionAtom> atoms;
            for (const auto& a : sys) {
                RegionAtom atom;
                atom.cm = a.at("coeffs").at(0).get<int>();
                atom.cn = a.at("coeffs").at(1).get<int>();
                atom.ck = a.at("coeffs").at(2).get<int>();
                std::string rel = a.at("rel").get<std::string>();
                atom.rel = rel == "<="   ? RegionAtom::Rel::Le
                           : rel == "<"  ? RegionAtom::Rel::Lt
                           : rel == ">=" ? RegionAtom::Rel::Ge
                                         : RegionAtom::Rel::Gt;
                atom.b0 = a.at("b0").get<long>();
                atom.bt = a.value("bt", 0);
                atoms.push_back(atom);
            }
            rp.systems.push_back(std::move(atoms));
        }
        return rp;
    }
    if (kind == "induced") return InducedPredicate{j.at("sub").get<int>()};
    throw ParseError("unknown predicate kind: " + kind);
}

} // namespace

json to_json(const ModuleSpec& spec) {
    return json{{"regime", spec.ctx.regime == Regime::Generic ? "generic" : "singular1"},
                {"tableau", to_json(spec.ctx.seed)},
                {"predicate", predicate_to_json(spec.predicate)}};
}

json to_json(const ClosureReport& r) {
    json viol = json::array();
    for (const auto& v : r.violations) {
        const char* g = v.gen.kind == SimpleGen::Kind::Raise ? "raise" : "lower";
        viol.push_back(json{{"source", to_json(v.source)},
                            {"generator", std::string(g) + "(" + std::to_string(v.gen.k) + ")"},
                            {"target", to_json(v.target)},
                            {"coeff", v.coeff.str()}});
    }
    return json{{"pass", r.pass()},
                {"violations", viol},
                {"quotient_censored", r.quotient_censored},
                {"boundary_censored", r.boundary_censored},
                {"checked_elements", r.checked_elements}};
}

json to_json(const RelationReport& r) {
    json fails = json::array();
    for (const auto& f : r.failures)
        fails.push_back(json{{"pair", json::array({f.a, f.b, f.c, f.d})}, {"element", to_json(f.elem)}});
    return json{{"pass", r.pass()},
                {"checked_pairs", r.checked_pairs},
                {"checked_applications", r.checked_applications},
                {"failures", fails}};
}

json to_json(const WeightCensus& census) {
    json arr = json::array();
    for (const auto& [wt, entry] : census) {
        json w = json::array();
        for (const auto& c : wt) w.push_back(c.str());
        arr.push_back(json{{"weight", w}, {"count", entry.count}, {"max_slack", entry.max_slack}});
    }
    return arr;
}

json to_json(const FamilyReport& r) {
    json out{{"pass", r.pass()},
             {"closure", to_json(r.closure)},
             {"relations", to_json(r.relations)},
             {"multiplicities_ok", r.multiplicities_ok},
             {"census", to_json(r.census)}};
    if (!r.growth_max.empty()) {
        out["growth_max"] = r.growth_max;
        out["growth_ok"] = r.growth_ok;
    }
    return out;
}

json to_json(const LocalizationLemmaReport& r) {
    return json{{"pass", r.pass()},
                {"theta_zero_is_identity", r.theta_zero_is_identity},
                {"power_composition", r.power_composition},
                {"conjugation_identity", r.conjugation_identity},
                {"bracket_preservation", r.bracket_preservation},
                {"character_invariance", r.character_invariance},
                {"checked_vectors", r.checked_vectors}};
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return Rational::parse(j.get<std::string>());
}

Tableau tableau_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j.at("rows")) {
        std::vector<Rational> r;
        for (const auto& e : row) r.push_back(rational_from_json(e));
        rows.push_back(std::move(r));
    }
    return Tableau(n, std::move(rows));
}

ModuleSpec module_spec_from_json(const json& j) {
    Tableau seed = tableau_from_json(j.at("tableau"));
    Regime regime = j.at("regime").get<std::string>() == "generic" ? Regime::Generic : Regime::Singular1;
    ModuleContext ctx(std::move(seed), regime);
    return ModuleSpec(std::move(ctx), predicate_from_json(j.at("predicate")));
}

} // namespace gtx
