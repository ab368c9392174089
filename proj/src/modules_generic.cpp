#include "gtx/modules_generic.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <unordered_map>

namespace gtx {

namespace {

// Visits every lattice point of the window box in lexicographic order.
template <typename F>
void for_each_lattice_point(int n, const Window& w, F&& f) {
    size_t dim = static_cast<size_t>(n) * (n - 1) / 2;
    std::vector<long> z(dim);
    for (size_t i = 0; i < dim; ++i) z[i] = w.bounds[i].first;
    while (true) {
        f(ShiftVector(n, z));
        size_t pos = dim;
        while (pos > 0) {
            --pos;
            if (z[pos] < w.bounds[pos].second) {
                ++z[pos];
                for (size_t q = pos + 1; q < dim; ++q) z[q] = w.bounds[q].first;
                break;
            }
            if (pos == 0) return;
        }
    }
}

// The canonical element living at a lattice point (plain everywhere in the
// generic regime; kind decided by the sector in the singular one).
BasisElement canonical_at(const ModuleSpec& spec, const ShiftVector& z) {
    if (spec.ctx.regime == Regime::Singular1 && z.get(2, 1) < z.get(2, 2)) return BasisElement::deriv(z);
    return BasisElement::plain(z);
}

std::vector<SimpleGen> moving_generators(int n) {
    std::vector<SimpleGen> gens;
    for (int k = 1; k <= n - 1; ++k) {
        gens.push_back(SimpleGen::raise(k));
        gens.push_back(SimpleGen::lower(k));
    }
    return gens;
}

} // namespace

std::vector<BasisElement> enumerate_basis(const ModuleSpec& spec, const Window& w) {
    std::vector<BasisElement> out;
    for_each_lattice_point(spec.ctx.n(), w, [&](const ShiftVector& z) {
        BasisElement b = canonical_at(spec, z);
        if (spec.member(b)) out.push_back(std::move(b));
    });
    return out;
}

ClosureReport verify_closure(const ModuleSpec& spec, const Window& w, long margin) {
    ClosureReport report;
    Action raw(spec, Project::None);
    const auto gens = moving_generators(spec.ctx.n());

    struct Escape {
        BasisElement source;
        SimpleGen gen;
        BasisElement target;
        Rational coeff;
    };
    std::vector<Escape> escapes;

    for_each_lattice_point(spec.ctx.n(), w, [&](const ShiftVector& z) {
        BasisElement b = canonical_at(spec, z);
        if (!spec.member(b) || w.slack(z) < margin) return;
        ++report.checked_elements;
        for (const auto& g : gens) {
            for (const auto& [target, coeff] : raw.simple(g, b).terms()) {
                if (!w.contains(target.z)) {
                    ++report.boundary_censored;
                    continue;
                }
                if (!spec.member(target)) escapes.push_back({b, g, target, coeff});
            }
        }
    });

    if (escapes.empty()) return report;

    // Escaped terms are legitimate exactly when they cannot act back into the
    // span: then they live in the quotiented-away ideal. Certify by
    // reachability over the raw action graph of the window.
    std::vector<BasisElement> nodes;
    std::unordered_map<BasisElement, int, BasisElementHash> index;
    for_each_lattice_point(spec.ctx.n(), w, [&](const ShiftVector& z) {
        BasisElement b = canonical_at(spec, z);
        index.emplace(b, static_cast<int>(nodes.size()));
        nodes.push_back(std::move(b));
    });
    std::vector<std::vector<int>> radj(nodes.size());
    std::vector<char> is_member(nodes.size(), 0);
    for (size_t u = 0; u < nodes.size(); ++u) {
        if (spec.member(nodes[u])) is_member[u] = 1;
        for (const auto& g : gens)
            for (const auto& [target, coeff] : raw.simple(g, nodes[u]).terms()) {
                auto it = index.find(target);
                if (it != index.end()) radj[it->second].push_back(static_cast<int>(u));
            }
    }
    std::vector<char> reaches_member(nodes.size(), 0);
    std::queue<int> bfs;
    for (size_t v = 0; v < nodes.size(); ++v)
        if (is_member[v]) {
            reaches_member[v] = 1;
            bfs.push(static_cast<int>(v));
        }
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int u : radj[v])
            if (!reaches_member[u]) {
                reaches_member[u] = 1;
                bfs.push(u);
            }
    }
    for (auto& e : escapes) {
        int idx = index.at(e.target);
        if (reaches_member[idx])
            report.violations.push_back({e.source, e.gen, e.target, e.coeff});
        else
            ++report.quotient_censored;
    }
    return report;
}

RelationReport verify_relations(const ModuleSpec& spec, const Window& w, ElementMode mode, size_t per_pair,
                                long margin, uint64_t rng_seed) {
    RelationReport report;
    const int n = spec.ctx.n();
    Action act(spec, spec.is_full() ? Project::None : Project::Predicate);

    std::vector<BasisElement> pool;
    for (const auto& b : enumerate_basis(spec, w))
        if (w.slack(b.z) >= margin) pool.push_back(b);
    if (pool.empty()) return report;

    std::mt19937_64 rng(rng_seed);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int d = 1; d <= n; ++d) {
                    ++report.checked_pairs;
                    std::vector<const BasisElement*> elems;
                    if (mode == ElementMode::All || per_pair == 0 || per_pair >= pool.size()) {
                        for (const auto& e : pool) elems.push_back(&e);
                    } else {
                        for (size_t s = 0; s < per_pair; ++s)
                            elems.push_back(&pool[rng() % pool.size()]);
                    }
                    for (const BasisElement* e : elems) {
                        TableauVector v = TableauVector::unit(*e);
                        TableauVector lhs = act.generator(a, b, act.generator(c, d, v)) -
                                            act.generator(c, d, act.generator(a, b, v));
                        TableauVector rhs;
                        if (b == c) rhs = rhs + act.generator(a, d, v);
                        if (d == a) rhs = rhs - act.generator(c, b, v);
                        ++report.checked_applications;
                        if (!((lhs - rhs).is_zero())) report.failures.push_back({a, b, c, d, *e});
                    }
                }
    return report;
}

WeightCensus multiplicity_census(const ModuleSpec& spec, const Window& w) {
    WeightCensus census;
    for (const auto& b : enumerate_basis(spec, w)) {
        auto& entry = census[weight_of(spec.ctx, b)];
        entry.count += 1;
        entry.max_slack = std::max(entry.max_slack, w.slack(b.z));
    }
    return census;
}

long max_interior_multiplicity(const WeightCensus& census, long interior_slack) {
    long mx = 0;
    for (const auto& [wt, entry] : census)
        if (entry.max_slack >= interior_slack) mx = std::max(mx, entry.count);
    return mx;
}

} // namespace gtx
