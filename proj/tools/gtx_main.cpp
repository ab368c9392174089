#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "gtx/json_io.hpp"

using namespace gtx;

namespace {

std::vector<long> parse_longs(const std::string& csv) {
    std::vector<long> out;
    std::string cur;
    for (char ch : csv + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(std::stol(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

int run_admissible(int n, long p, long q, const std::string& orbit) {
    AdmissibleLevel level = make_level(n, p, q);
    OrbitKind kind = orbit == "prin"  ? OrbitKind::Principal
                     : orbit == "min" ? OrbitKind::Minimal
                                      : OrbitKind::Zero;
    PrEnumeration en = enumerate_pr(level, kind);
    OrbitLabel dense = orbit_for_denominator(n, q);

    json out;
    out["n"] = n;
    out["p"] = p;
    out["q"] = q;
    out["k"] = level.k.str();
    out["orbit"] = orbit;
    out["dense_orbit_partition"] = dense.parts;
    out["collisions"] = en.collisions;
    json weights = json::array();
    for (const auto& w : en.classes) {
        json coords = json::array();
        for (const auto& c : w.coords) coords.push_back(c.str());
        GlWeight gl = sl_to_gl_weight(w);
        json glj = json::array(), top = json::array();
        for (const auto& c : gl) glj.push_back(c.str());
        for (const auto& c : gl_to_top_row(gl)) top.push_back(c.str());
        weights.push_back(json{{"coords", coords},
                               {"var_dimension", var_dimension(w)},
                               {"gl_weight", glj},
                               {"top_row", top}});
    }
    out["weights"] = weights;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_classify(long p, long q, long l1, long l2, long a, long mu1, long mu2, const std::string& family,
                 long radius, bool verify, const std::string& emit_spec) {
    AdmissibleLevel level = make_level(3, p, q);
    std::vector<FamilyId> ids;
    if (family == "all") {
        for (int i = 0; i < 30; ++i) {
            FamilyId id = static_cast<FamilyId>(i);
            if (family_is_minimal_orbit(id) ? (q >= 2) : (q >= 3)) ids.push_back(id);
        }
    } else {
        auto id = family_from_name(family);
        if (!id) {
            std::cerr << "unknown family: " << family << "\n";
            return 2;
        }
        ids.push_back(*id);
    }

    json out = json::array();
    bool all_pass = true;
    for (FamilyId id : ids) {
        FamilyInstance inst = build_family(id, level, l1, l2, a, mu1, mu2);
        json entry;
        entry["family"] = family_name(id);
        entry["t"] = inst.t;
        entry["spec"] = to_json(inst.spec);
        json params;
        for (const auto& [name, value] : inst.params) params[name] = value.str();
        entry["params"] = params;
        if (!emit_spec.empty() && ids.size() == 1) {
            std::ofstream f(emit_spec);
            f << to_json(inst.spec).dump(2) << "\n";
        }
        if (verify) {
            VerifyOptions opts;
            opts.radius = radius;
            opts.growth_radii = {radius - 2, radius, radius + 2};
            FamilyReport rep = verify_family(inst, opts);
            entry["report"] = to_json(rep);
            entry["window"] = to_json(Window::radius(3, radius));
            entry["pass"] = rep.pass();
            all_pass &= rep.pass();
        }
        out.push_back(std::move(entry));
    }
    std::cout << out.dump(2) << "\n";
    return verify && !all_pass ? 1 : 0;
}

int run_induce(int n, int sub, long p, long q, const std::string& lambdas, const std::string& mus, long radius,
               bool verify) {
    AdmissibleLevel level = make_level(n, p, q);
    InducedSpec sp = admissible_induced_parameters(level, sub, parse_longs(lambdas), parse_longs(mus));
    json out;
    out["spec"] = to_json(sp.spec);
    json inner = json::array(), outer = json::array();
    for (const auto& v : sp.inner) inner.push_back(v.str());
    for (const auto& v : sp.outer) outer.push_back(v.str());
    out["inner_seed"] = inner;
    out["outer_params"] = outer;
    out["restricted_level"] = restricted_level(level, sub).str();
    SimplicityReport simple = simplicity_flags(sp);
    out["simple"] = simple.simple;
    bool pass = true;
    if (verify) {
        Window w = Window::radius(n, radius);
        ClosureReport closure = verify_closure(sp.spec, w);
        RelationReport relations =
            verify_relations(sp.spec, w, n >= 4 ? ElementMode::Sample : ElementMode::All, 3, 1, 11);
        out["closure"] = to_json(closure);
        out["relations"] = to_json(relations);
        out["census"] = to_json(multiplicity_census(sp.spec, w));
        pass = closure.pass() && relations.pass();
        out["pass"] = pass;
    }
    std::cout << out.dump(2) << "\n";
    return pass ? 0 : 1;
}

int run_twist(const std::string& alpha_str, const std::string& a_str, const std::string& b_str,
              const std::string& spec_file, long radius, bool verify_lemma) {
    RootAlpha alpha{};
    if (alpha_str == "21")
        alpha = {2, 1};
    else if (alpha_str == "32")
        alpha = {3, 2};
    else if (alpha_str == "31")
        alpha = {3, 1};
    else {
        std::cerr << "alpha must be one of 21, 32, 31\n";
        return 2;
    }
    std::ifstream f(spec_file);
    if (!f) {
        std::cerr << "cannot open spec file " << spec_file << "\n";
        return 2;
    }
    json j = json::parse(f);
    ModuleSpec spec = module_spec_from_json(j);
    Rational a = Rational::parse(a_str);
    Rational b = Rational::parse(b_str);

    json out;
    out["alpha"] = alpha_str;
    out["a"] = a.str();
    if (verify_lemma) {
        LocalizationLemmaReport rep =
            verify_localization_lemma(spec, alpha, a, b, Window::radius(spec.ctx.n(), radius));
        out["lemma"] = to_json(rep);
        std::cout << out.dump(2) << "\n";
        return rep.pass() ? 0 : 1;
    }
    // Without --verify-lemma: report the twisted diagonal spectrum on the
    // window probe.
    auto probe = interior_probe(spec, radius);
    if (!probe) {
        std::cerr << "window holds no module elements\n";
        return 2;
    }
    Localizer loc(spec, alpha);
    json diag = json::array();
    TableauVector v = TableauVector::unit(*probe);
    for (int i = 1; i <= spec.ctx.n(); ++i) {
        Rational c;
        if (!loc.twisted({i, i}, a, v).is_multiple_of(*probe, c)) {
            std::cerr << "twisted diagonal is not diagonal on the probe\n";
            return 1;
        }
        diag.push_back(c.str());
    }
    out["probe"] = to_json(*probe);
    out["twisted_diagonal"] = diag;
    std::cout << out.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Gelfand-Tsetlin tableau module workbench for sl_n"};
    app.require_subcommand(1);

    auto* adm = app.add_subcommand("admissible", "enumerate admissible weight classes per nilpotent orbit");
    int an = 3;
    long ap = 3, aq = 2;
    std::string orbit = "min";
    adm->add_option("--n", an, "rank parameter of sl_n")->required();
    adm->add_option("--p", ap, "level numerator (k + n = p/q)")->required();
    adm->add_option("--q", aq, "level denominator")->required();
    adm->add_option("--orbit", orbit, "prin | min | zero")->check(CLI::IsMember({"prin", "min", "zero"}));

    auto* cls = app.add_subcommand("classify", "build and verify sl_3 classification families");
    long cp = 3, cq = 2, cl1 = 0, cl2 = 0, ca = 1, cmu1 = 0, cmu2 = 0, cradius = 6;
    std::string family = "all", emit_spec;
    bool cverify = false;
    cls->add_option("--p", cp)->required();
    cls->add_option("--q", cq)->required();
    cls->add_option("--lambda1", cl1);
    cls->add_option("--lambda2", cl2);
    cls->add_option("--a", ca, "twist index for minimal-orbit families");
    cls->add_option("--mu1", cmu1, "denominator box for S-families");
    cls->add_option("--mu2", cmu2);
    cls->add_option("--family", family, "family name (L1..L20, S-L1..S-L10) or 'all'");
    cls->add_option("--radius", cradius);
    cls->add_flag("--verify", cverify, "run closure/relations/census verification");
    cls->add_option("--emit-spec", emit_spec, "write the module spec JSON to a file");

    auto* ind = app.add_subcommand("induce", "build and verify induced-module specs");
    int in_n = 4, in_sub = 2;
    long ip = 5, iq = 4, iradius = 3;
    std::string lambdas = "0,0,0", mus = "0,0,0";
    bool iverify = false;
    ind->add_option("--n", in_n)->required();
    ind->add_option("--sub", in_sub)->required();
    ind->add_option("--p", ip)->required();
    ind->add_option("--q", iq)->required();
    ind->add_option("--lambdas", lambdas, "comma-separated, n-1 entries");
    ind->add_option("--mus", mus, "comma-separated, n-1 entries");
    ind->add_option("--radius", iradius);
    ind->add_flag("--verify", iverify);

    auto* tw = app.add_subcommand("twist", "twisted localization checks on a module spec");
    std::string alpha = "21", a_str = "1/2", b_str = "2", spec_file;
    long tradius = 4;
    bool verify_lemma = false;
    tw->add_option("--alpha", alpha, "21 | 32 | 31")->required();
    tw->add_option("--a", a_str, "twist parameter (rational)")->required();
    tw->add_option("--b", b_str, "second parameter for the power-composition identity");
    tw->add_option("--spec", spec_file, "module spec JSON file")->required();
    tw->add_option("--radius", tradius);
    tw->add_flag("--verify-lemma", verify_lemma);

    CLI11_PARSE(app, argc, argv);

    try {
        if (adm->parsed()) return run_admissible(an, ap, aq, orbit);
        if (cls->parsed())
            return run_classify(cp, cq, cl1, cl2, ca, cmu1, cmu2, family, cradius, cverify, emit_spec);
        if (ind->parsed()) return run_induce(in_n, in_sub, ip, iq, lambdas, mus, iradius, iverify);
        if (tw->parsed()) return run_twist(alpha, a_str, b_str, spec_file, tradius, verify_lemma);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
