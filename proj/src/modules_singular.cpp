#include "gtx/modules_singular.hpp"

namespace gtx {

Canonicalized canonicalize(BasisElement::Kind kind, const ShiftVector& z) {
    long m = z.get(2, 1), n = z.get(2, 2);
    if (kind == BasisElement::Kind::Plain) {
        if (m >= n) return {BasisElement::plain(z), 1, false};
        return {BasisElement::plain(z.tau()), 1, false};
    }
    if (m == n) return {BasisElement::deriv(z), 1, true};
    if (m < n) return {BasisElement::deriv(z), 1, false};
    return {BasisElement::deriv(z.tau()), -1, false};
}

std::pair<BasisElement, int> canonicalize_checked(BasisElement::Kind kind, const ShiftVector& z) {
    Canonicalized c = canonicalize(kind, z);
    if (c.zero) throw ZeroElement("tau-fixed derivative tableau is zero");
    return {c.elem, c.sign};
}

namespace {

// Entry of the shifted tableau as a function of t: row 2 carries the
// substitution v21 = x + z21 + t, v22 = x + z22 - t.
RationalFunction1V entry_rf(const Tableau& seed, const ShiftVector& z, int i, int j) {
    if (i == seed.n()) return RationalFunction1V(seed.entry(i, j));
    Rational base = seed.entry(i, j) + Rational(z.get(i, j));
    if (i == 2) {
        Rational slope = (j == 1) ? Rational(1) : Rational(-1);
        return RationalFunction1V(Poly::linear(base, slope), Poly(Rational(1)));
    }
    return RationalFunction1V(base);
}

} // namespace

std::vector<SymbolicTerm> symbolic_generic_action(SimpleGen g, const ShiftVector& z, const Tableau& seed) {
    if (seed.n() != 3) throw RankError("symbolic action is n = 3 only");
    const int n = 3;
    std::vector<SymbolicTerm> out;
    auto e = [&](int i, int j) { return entry_rf(seed, z, i, j); };

    switch (g.kind) {
        case SimpleGen::Kind::Raise: {
            int k = g.k;
            if (k < 1 || k > n - 1) throw RankError("raise index out of range");
            for (int i = 1; i <= k; ++i) {
                RationalFunction1V num(Rational(1));
                for (int j = 1; j <= k + 1; ++j) num = num * (e(k, i) - e(k + 1, j));
                RationalFunction1V den(Rational(1));
                for (int j = 1; j <= k; ++j)
                    if (j != i) den = den * (e(k, i) - e(k, j));
                RationalFunction1V coeff = -(num / den);
                if (!coeff.is_zero()) out.push_back({coeff, z.plus_delta(k, i, +1)});
            }
            break;
        }
        case SimpleGen::Kind::Lower: {
            int k = g.k;
            if (k < 1 || k > n - 1) throw RankError("lower index out of range");
            for (int i = 1; i <= k; ++i) {
                RationalFunction1V num(Rational(1));
                for (int j = 1; j <= k - 1; ++j) num = num * (e(k, i) - e(k - 1, j));
                RationalFunction1V den(Rational(1));
                for (int j = 1; j <= k; ++j)
                    if (j != i) den = den * (e(k, i) - e(k, j));
                RationalFunction1V coeff = num / den;
                if (!coeff.is_zero()) out.push_back({coeff, z.plus_delta(k, i, -1)});
            }
            break;
        }
        case SimpleGen::Kind::Diag: {
            int k = g.k;
            if (k < 1 || k > n) throw RankError("diag index out of range");
            RationalFunction1V coeff(Rational(k - 1));
            for (int i = 1; i <= k; ++i) coeff = coeff + e(k, i);
            for (int i = 1; i <= k - 1; ++i) coeff = coeff - e(k - 1, i);
            if (!coeff.is_zero()) out.push_back({coeff, z});
            break;
        }
    }
    return out;
}

namespace {

TableauVector singular_apply_terms(BasisElement::Kind kind, const std::vector<SymbolicTerm>& terms) {
    const RationalFunction1V two_t(Poly{Rational(0), Rational(2)}, Poly(Rational(1)));
    TableauVector out;
    try {
        for (const auto& st : terms) {
            RationalFunction1V g = (kind == BasisElement::Kind::Plain) ? st.coeff * two_t : st.coeff;
            Rational plain_c = rf_derivative_at_zero(g);
            Rational deriv_c = rf_eval(g, Rational(0));
            if (!plain_c.is_zero()) {
                Canonicalized c = canonicalize(BasisElement::Kind::Plain, st.target);
                out.add(c.elem, plain_c * Rational(c.sign));
            }
            if (!deriv_c.is_zero()) {
                Canonicalized c = canonicalize(BasisElement::Kind::Derivative, st.target);
                if (!c.zero) out.add(c.elem, deriv_c * Rational(c.sign));
            }
        }
    } catch (const PoleAtPoint&) {
        throw NonRemovableSingularity("singular action coefficient has a pole at t = 0");
    }
    return out;
}

} // namespace

TableauVector singular_apply_at_rep(SimpleGen g, BasisElement::Kind kind, const ShiftVector& rep,
                                    const Tableau& seed) {
    if (kind == BasisElement::Kind::Derivative && rep.get(2, 1) == rep.get(2, 2))
        throw ZeroElement("derivative tableau at a tau-fixed shift");
    return singular_apply_terms(kind, symbolic_generic_action(g, rep, seed));
}

TableauVector singular_apply(SimpleGen g, const BasisElement& b, const Tableau& seed) {
    long m = b.z.get(2, 1), n = b.z.get(2, 2);
    if (b.kind == BasisElement::Kind::Plain) {
        if (m < n) throw ShapeError("plain basis element not in canonical sector");
    } else {
        if (m >= n) throw ShapeError("derivative basis element not in canonical sector");
    }
    return singular_apply_terms(b.kind, symbolic_generic_action(g, b.z, seed));
}

} // namespace gtx
