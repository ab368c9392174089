#include "gtx/localization.hpp"

#include <algorithm>
#include <map>

namespace gtx {

namespace {

using GenCombo = std::map<GenIndex, Rational>;

GenCombo ad_once(RootAlpha f, const GenCombo& u) {
    GenCombo out;
    auto add = [&](GenIndex g, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = out.try_emplace(g, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (const auto& [g, c] : u) {
        // [E_rs, E_ab] = d_sa E_rb - d_br E_as
        if (f.s == g.first) add({f.r, g.second}, c);
        if (g.second == f.r) add({g.first, f.s}, -c);
    }
    return out;
}

UEElement combo_to_ue(const GenCombo& combo) {
    UEElement out;
    for (const auto& [g, c] : combo) out.push_back({c, Word{g}});
    return out;
}

} // namespace

UEElement ad_power(int n, RootAlpha alpha, GenIndex u, unsigned i) {
    if (alpha.r <= alpha.s || alpha.r > n) throw RankError("alpha must name a lowering generator");
    GenCombo cur{{u, Rational(1)}};
    for (unsigned s = 0; s < i; ++s) cur = ad_once(alpha, cur);
    return combo_to_ue(cur);
}

LocalizedElement theta(GenIndex u, RootAlpha alpha, const Rational& a, int n) {
    LocalizedElement out;
    GenCombo cur{{u, Rational(1)}};
    for (int i = 0; !cur.empty(); ++i) {
        Rational bc = binom_rational(a, static_cast<unsigned>(i));
        for (const auto& [g, c] : cur) {
            Rational coeff = bc * c;
            if (!coeff.is_zero()) out.push_back({coeff, g, false, -i});
        }
        cur = ad_once(alpha, cur);
        if (i > 2 * n) throw Error("theta series failed to terminate");
    }
    return out;
}

Localizer::Localizer(const ModuleSpec& spec, RootAlpha alpha, Project proj)
    : spec_(spec), alpha_(alpha), act_(spec, spec.is_full() ? Project::None : proj) {
    const int n = spec.ctx.n();
    bool ok = (alpha.r == 2 && alpha.s == 1) ||
              (n == 3 && ((alpha.r == 3 && alpha.s == 2) || (alpha.r == 3 && alpha.s == 1)));
    if (!ok) throw RankError("unsupported localization root");
}

TableauVector Localizer::f_apply(const TableauVector& v) { return act_.generator(alpha_.r, alpha_.s, v); }

TableauVector Localizer::f_inverse_elem(const BasisElement& b) {
    auto hit = inv_cache_.find(b);
    if (hit != inv_cache_.end()) return hit->second;
    if (spec_.ctx.regime != Regime::Generic)
        throw NotInvertible("f-inverse chain solver supports the generic regime only");

    const int n = spec_.ctx.n();
    // Source displacement(s) of f_alpha and the chain direction coupling them.
    std::vector<ShiftVector> sources;
    ShiftVector d1(n);
    if (alpha_.r == 2 && alpha_.s == 1) {
        d1 = d1.plus_delta(1, 1, +1);
        sources.push_back(b.z + d1);
    } else {
        ShiftVector base(n);
        if (alpha_.s == 1) base = base.plus_delta(1, 1, +1); // E31 also steps row 1
        ShiftVector e(n);
        e = e.plus_delta(2, 1, +1).plus_delta(2, 2, -1);
        const long kCap = 64;
        ShiftVector first = b.z + base.plus_delta(2, 1, +1);
        for (long j = -kCap; j <= kCap; ++j) {
            ShiftVector cand = first;
            for (long s = 0; s < std::abs(j); ++s) cand = (j > 0) ? cand + e : cand + e.negated();
            sources.push_back(cand);
        }
    }

    std::vector<BasisElement> unknowns;
    for (const auto& z : sources) {
        BasisElement cand = BasisElement::plain(z);
        if (spec_.member(cand)) unknowns.push_back(std::move(cand));
    }
    if (unknowns.empty()) throw NotInvertible("no in-module preimage candidates");

    // Small exact linear solve: columns = candidate sources, rows = every
    // basis element their images touch.
    std::vector<TableauVector> images;
    images.reserve(unknowns.size());
    std::map<BasisElement, size_t> rows;
    for (const auto& u : unknowns) {
        images.push_back(f_apply(TableauVector::unit(u)));
        for (const auto& [target, c] : images.back().terms()) rows.try_emplace(target, rows.size());
    }
    rows.try_emplace(b, rows.size());
    size_t nr = rows.size(), nc = unknowns.size();
    std::vector<std::vector<Rational>> mat(nr, std::vector<Rational>(nc + 1));
    for (size_t c = 0; c < nc; ++c)
        for (const auto& [target, coeff] : images[c].terms()) mat[rows.at(target)][c] = coeff;
    mat[rows.at(b)][nc] = Rational(1);

    // Gaussian elimination with consistency and uniqueness checks.
    std::vector<long> pivot_row(nc, -1);
    size_t rr = 0;
    for (size_t c = 0; c < nc && rr < nr; ++c) {
        size_t p = rr;
        while (p < nr && mat[p][c].is_zero()) ++p;
        if (p == nr) continue;
        std::swap(mat[p], mat[rr]);
        Rational inv = Rational(1) / mat[rr][c];
        for (size_t k = c; k <= nc; ++k) mat[rr][k] *= inv;
        for (size_t r2 = 0; r2 < nr; ++r2) {
            if (r2 == rr || mat[r2][c].is_zero()) continue;
            Rational factor = mat[r2][c];
            for (size_t k = c; k <= nc; ++k) mat[r2][k] -= factor * mat[rr][k];
        }
        pivot_row[c] = static_cast<long>(rr);
        ++rr;
    }
    for (size_t r2 = rr; r2 < nr; ++r2)
        if (!mat[r2][nc].is_zero()) throw NotInvertible("f-inverse system inconsistent");
    for (size_t c = 0; c < nc; ++c)
        if (pivot_row[c] < 0) throw NotInvertible("f-inverse underdetermined (chain does not close)");

    TableauVector x;
    for (size_t c = 0; c < nc; ++c) x.add(unknowns[c], mat[static_cast<size_t>(pivot_row[c])][nc]);
    if (!(f_apply(x) == TableauVector::unit(b))) throw NotInvertible("f-inverse verification failed");
    inv_cache_.emplace(b, x);
    return x;
}

TableauVector Localizer::f_inverse(const TableauVector& v) {
    TableauVector out;
    for (const auto& [b, c] : v.terms()) out.add_scaled(f_inverse_elem(b), c);
    return out;
}

TableauVector Localizer::f_power(long e, const TableauVector& v) {
    TableauVector cur = v;
    for (long s = 0; s < e; ++s) cur = f_apply(cur);
    for (long s = 0; s > e; --s) cur = f_inverse(cur);
    return cur;
}

TableauVector Localizer::twisted(GenIndex u, const Rational& a, const TableauVector& v) {
    const int n = spec_.ctx.n();
    TableauVector out;
    TableauVector shifted = v; // f^{-i} v, built up incrementally
    for (int i = 0;; ++i) {
        UEElement adi = ad_power(n, alpha_, u, static_cast<unsigned>(i));
        if (adi.empty()) break;
        if (i > 0) shifted = f_inverse(shifted);
        Rational bc = binom_rational(a, static_cast<unsigned>(i));
        if (!bc.is_zero()) out.add_scaled(act_.ue(adi, shifted), bc);
        if (i > 2 * n) throw Error("theta series failed to terminate");
    }
    return out;
}

TableauVector Localizer::twisted_word(const Word& w, const Rational& a, const TableauVector& v) {
    TableauVector cur = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = twisted(*it, a, cur);
    return cur;
}

TableauVector inverse_f_action(const ModuleSpec& spec, RootAlpha alpha, const BasisElement& b, Project proj) {
    Localizer loc(spec, alpha, proj);
    return loc.f_inverse_elem(b);
}

TableauVector twisted_action(const ModuleSpec& spec, GenIndex u, RootAlpha alpha, const Rational& a,
                             const TableauVector& v, Project proj) {
    Localizer loc(spec, alpha, proj);
    return loc.twisted(u, a, v);
}

namespace {

// f^{s} v with fractional s carried as a formal twist marker in [0,1) and
// integral parts acted concretely.
struct Marked {
    Rational marker;
    TableauVector vec;
};

long floor_long(const Rational& r) {
    mpz_class f = r.floor();
    if (!f.fits_slong_p()) throw Error("exponent out of range");
    return f.get_si();
}

Marked f_pow_marked(Localizer& loc, const Rational& e, Marked mv) {
    long m = floor_long(e);
    Rational s = e - Rational(m);
    mv.marker += s;
    while (mv.marker >= Rational(1)) {
        mv.marker -= Rational(1);
        mv.vec = loc.f_apply(mv.vec);
    }
    mv.vec = loc.f_power(m, mv.vec);
    return mv;
}

Marked gen_marked(Localizer& loc, GenIndex u, Marked mv) {
    mv.vec = loc.twisted(u, -mv.marker, mv.vec);
    return mv;
}

} // namespace

LocalizationLemmaReport verify_localization_lemma(const ModuleSpec& spec, RootAlpha alpha, const Rational& a,
                                                  const Rational& b, const Window& w) {
    LocalizationLemmaReport report;
    Localizer loc(spec, alpha);
    Action& act = loc.action();
    const int n = spec.ctx.n();

    // Probe elements: highest-slack members of the window.
    std::vector<std::pair<long, BasisElement>> ranked;
    for (const auto& elem : enumerate_basis(spec, w)) ranked.push_back({w.slack(elem.z), elem});
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    std::vector<BasisElement> probes;
    for (const auto& [slack, elem] : ranked) {
        probes.push_back(elem);
        if (probes.size() == 4) break;
    }
    if (probes.empty()) throw Error("window holds no module elements");

    std::vector<GenIndex> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) gens.push_back({i, j});

    for (const auto& probe : probes) {
        TableauVector v = TableauVector::unit(probe);
        ++report.checked_vectors;

        for (const auto& u : gens)
            if (!(loc.twisted(u, Rational(0), v) == act.generator(u.first, u.second, v)))
                report.theta_zero_is_identity = false;

        // (iii)
        Marked lhs = f_pow_marked(loc, a, f_pow_marked(loc, b, {Rational(0), v}));
        Marked rhs = f_pow_marked(loc, a + b, {Rational(0), v});
        if (!(lhs.marker == rhs.marker && lhs.vec == rhs.vec)) report.power_composition = false;

        // (iv)
        for (const auto& u : gens) {
            Marked m = f_pow_marked(loc, a, gen_marked(loc, u, f_pow_marked(loc, -a, {Rational(0), v})));
            if (!m.marker.is_zero() || !(m.vec == loc.twisted(u, a, v))) report.conjugation_identity = false;
        }

        // Twisted brackets.
        for (const auto& u1 : gens)
            for (const auto& u2 : gens) {
                TableauVector lhs2 = loc.twisted(u1, a, loc.twisted(u2, a, v)) -
                                     loc.twisted(u2, a, loc.twisted(u1, a, v));
                TableauVector rhs2;
                if (u1.second == u2.first) rhs2 = rhs2 + loc.twisted({u1.first, u2.second}, a, v);
                if (u2.second == u1.first) rhs2 = rhs2 - loc.twisted({u2.first, u1.second}, a, v);
                if (!((lhs2 - rhs2).is_zero())) report.bracket_preservation = false;
            }
    }

    // Central character invariance at the best probe.
    const BasisElement& probe = probes.front();
    std::vector<Rational> untwisted = central_character(spec, probe, Project::Predicate);
    std::vector<Rational> twisted_char;
    for (int k = 1; k <= n; ++k) {
        TableauVector r;
        for (const auto& term : casimir_generator(n, k))
            r.add_scaled(loc.twisted_word(term.word, a, TableauVector::unit(probe)), term.coeff);
        Rational c;
        if (!r.is_multiple_of(probe, c)) {
            report.character_invariance = false;
            break;
        }
        twisted_char.push_back(c);
    }
    if (report.character_invariance && twisted_char != untwisted) report.character_invariance = false;

    return report;
}

} // namespace gtx
