#include "gtx/gt_action.hpp"

#include "gtx/modules_singular.hpp"

namespace gtx {

UEElement casimir_generator(int m, int k) {
    if (k < 1 || m < k) throw RankError("casimir indices need 1 <= k <= m");
    UEElement out;
    std::vector<int> tup(k, 1);
    while (true) {
        Word w;
        for (int a = 0; a < k; ++a) w.push_back({tup[a], tup[(a + 1) % k]});
        out.push_back({Rational(1), std::move(w)});
        int pos = k - 1;
        while (pos >= 0 && tup[pos] == m) tup[pos--] = 1;
        if (pos < 0) break;
        ++tup[pos];
    }
    return out;
}

namespace {

TableauVector generic_simple(const ModuleContext& ctx, SimpleGen g, const BasisElement& b) {
    const Tableau& seed = ctx.seed;
    const int n = ctx.n();
    auto e = [&](int i, int j) -> Rational {
        if (i == n) return seed.entry(i, j);
        return seed.entry(i, j) + Rational(b.z.get(i, j));
    };
    TableauVector out;
    switch (g.kind) {
        case SimpleGen::Kind::Raise: {
            int k = g.k;
            if (k < 1 || k > n - 1) throw RankError("raise index out of range");
            for (int i = 1; i <= k; ++i) {
                Rational num = 1;
                for (int j = 1; j <= k + 1; ++j) num *= e(k, i) - e(k + 1, j);
                Rational den = 1;
                for (int j = 1; j <= k; ++j)
                    if (j != i) den *= e(k, i) - e(k, j);
                if (den.is_zero()) throw DenominatorZero("raise coefficient denominator vanished");
                out.add(BasisElement::plain(b.z.plus_delta(k, i, +1)), -(num / den));
            }
            break;
        }
        case SimpleGen::Kind::Lower: {
            int k = g.k;
            if (k < 1 || k > n - 1) throw RankError("lower index out of range");
            for (int i = 1; i <= k; ++i) {
                Rational num = 1;
                for (int j = 1; j <= k - 1; ++j) num *= e(k, i) - e(k - 1, j);
                Rational den = 1;
                for (int j = 1; j <= k; ++j)
                    if (j != i) den *= e(k, i) - e(k, j);
                if (den.is_zero()) throw DenominatorZero("lower coefficient denominator vanished");
                out.add(BasisElement::plain(b.z.plus_delta(k, i, -1)), num / den);
            }
            break;
        }
        case SimpleGen::Kind::Diag: {
            int k = g.k;
            if (k < 1 || k > n) throw RankError("diag index out of range");
            Rational c = k - 1;
            for (int i = 1; i <= k; ++i) c += e(k, i);
            for (int i = 1; i <= k - 1; ++i) c -= e(k - 1, i);
            out.add(b, c);
            break;
        }
    }
    return out;
}

} // namespace

TableauVector Action::compute_simple(SimpleGen g, const BasisElement& b) const {
    TableauVector raw = (spec_.ctx.regime == Regime::Generic)
                            ? generic_simple(spec_.ctx, g, b)
                            : singular_apply(g, b, spec_.ctx.seed);
    if (proj_ == Project::None || spec_.is_full()) return raw;
    TableauVector kept;
    for (const auto& [elem, c] : raw.terms())
        if (spec_.member(elem)) kept.add(elem, c);
    return kept;
}

const TableauVector& Action::simple(SimpleGen g, const BasisElement& b) const {
    Key key{static_cast<int>(g.kind), g.k, b};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(std::move(key), compute_simple(g, b)).first->second;
}

TableauVector Action::simple(SimpleGen g, const TableauVector& v) const {
    TableauVector out;
    for (const auto& [b, c] : v.terms()) out.add_scaled(simple(g, b), c);
    return out;
}

TableauVector Action::generator(int i, int j, const TableauVector& v) const {
    const int n = spec_.ctx.n();
    if (i < 1 || j < 1 || i > n || j > n) throw RankError("generator index out of range");
    if (i == j) return simple(SimpleGen::diag(i), v);
    if (j == i + 1) return simple(SimpleGen::raise(i), v);
    if (i == j + 1) return simple(SimpleGen::lower(j), v);
    if (i < j) {
        // E_ij = [E_{i,j-1}, E_{j-1,j}]
        TableauVector a = generator(i, j - 1, generator(j - 1, j, v));
        TableauVector b = generator(j - 1, j, generator(i, j - 1, v));
        return a - b;
    }
    // E_ij = [E_{i,j+1}, E_{j+1,j}]
    TableauVector a = generator(i, j + 1, generator(j + 1, j, v));
    TableauVector b = generator(j + 1, j, generator(i, j + 1, v));
    return a - b;
}

TableauVector Action::word(const Word& w, const TableauVector& v) const {
    TableauVector cur = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = generator(it->first, it->second, cur);
    return cur;
}

TableauVector Action::ue(const UEElement& u, const TableauVector& v) const {
    TableauVector out;
    for (const auto& term : u) out.add_scaled(word(term.word, v), term.coeff);
    return out;
}

TableauVector apply_simple_generator(const ModuleSpec& spec, SimpleGen g, const BasisElement& b, Project proj) {
    Action act(spec, proj);
    return act.simple(g, b);
}

TableauVector apply_generator(const ModuleSpec& spec, int i, int j, const TableauVector& v, Project proj) {
    Action act(spec, proj);
    return act.generator(i, j, v);
}

TableauVector apply_ue_element(const ModuleSpec& spec, const UEElement& u, const TableauVector& v, Project proj) {
    Action act(spec, proj);
    return act.ue(u, v);
}

std::vector<Rational> weight_of(const ModuleContext& ctx, const BasisElement& b) {
    const int n = ctx.n();
    auto e = [&](int i, int j) -> Rational {
        if (i == n) return ctx.seed.entry(i, j);
        return ctx.seed.entry(i, j) + Rational(b.z.get(i, j));
    };
    std::vector<Rational> gamma;
    gamma.reserve(n);
    for (int k = 1; k <= n; ++k) {
        Rational g = k - 1;
        for (int i = 1; i <= k; ++i) g += e(k, i);
        for (int i = 1; i <= k - 1; ++i) g -= e(k - 1, i);
        gamma.push_back(g);
    }
    return gamma;
}

std::vector<Rational> central_character(const ModuleSpec& spec, const BasisElement& probe, Project proj) {
    Action act(spec, proj);
    const int n = spec.ctx.n();
    std::vector<Rational> out;
    out.reserve(n);
    for (int k = 1; k <= n; ++k) {
        TableauVector r = act.ue(casimir_generator(n, k), TableauVector::unit(probe));
        Rational c;
        if (!r.is_multiple_of(probe, c))
            throw NotEigenvector("c_{n," + std::to_string(k) + "} is not diagonal on the probe");
        out.push_back(c);
    }
    return out;
}

} // namespace gtx
