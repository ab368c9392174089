#include <doctest.h>

#include <random>

#include "gtx/gt_action.hpp"

using namespace gtx;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

ModuleSpec gl2_spec(Rational v21, Rational v22, Rational v11) {
    return ModuleSpec::full(ModuleContext(Tableau(2, {{v11}, {v21, v22}}), Regime::Generic));
}

// Random generic seed: fractional parts j/P_k within row k keep all row
// differences non-integral for rows < n; the top row is unconstrained.
Tableau random_generic_seed(int n, std::mt19937_64& rng) {
    static const long primes[] = {101, 103, 107, 109};
    std::vector<std::vector<Rational>> rows;
    for (int i = 1; i <= n; ++i) {
        std::vector<Rational> row;
        for (int j = 1; j <= i; ++j) {
            Rational base(static_cast<long>(rng() % 11) - 5);
            if (i < n)
                row.push_back(base + Rational(j, primes[i - 1]));
            else
                row.push_back(base + Rational(static_cast<long>(rng() % 97), 97));
        }
        rows.push_back(std::move(row));
    }
    return Tableau(n, std::move(rows));
}

} // namespace

TEST_CASE("gl_2 simple generator formulas") {
    Rational v21 = R(1, 2), v22 = R(0), v11 = R(1, 5);
    ModuleSpec spec = gl2_spec(v21, v22, v11);
    BasisElement e0 = BasisElement::plain(ShiftVector(2));

    TableauVector up = apply_simple_generator(spec, SimpleGen::raise(1), e0);
    REQUIRE(up.size() == 1);
    CHECK(up.coeff(BasisElement::plain(ShiftVector(2).plus_delta(1, 1, 1))) == -(v11 - v21) * (v11 - v22));

    TableauVector down = apply_simple_generator(spec, SimpleGen::lower(1), e0);
    REQUIRE(down.size() == 1);
    CHECK(down.coeff(BasisElement::plain(ShiftVector(2).plus_delta(1, 1, -1))) == R(1));

    TableauVector diag = apply_simple_generator(spec, SimpleGen::diag(2), e0);
    Rational c;
    REQUIRE(diag.is_multiple_of(e0, c));
    CHECK(c == R(1) + v21 + v22 - v11);
}

TEST_CASE("gl_2 commutator [E12, E21] equals Diag(1) - Diag(2)") {
    Rational v21 = R(2, 3), v22 = R(-1, 7), v11 = R(3, 5);
    ModuleSpec spec = gl2_spec(v21, v22, v11);
    for (long shift : {-2L, 0L, 3L}) {
        ShiftVector z(2);
        z.set(1, 1, shift);
        TableauVector v = TableauVector::unit(BasisElement::plain(z));
        TableauVector lhs = apply_generator(spec, 1, 2, apply_generator(spec, 2, 1, v)) -
                            apply_generator(spec, 2, 1, apply_generator(spec, 1, 2, v));
        Rational c;
        REQUIRE(lhs.is_multiple_of(BasisElement::plain(z), c));
        Rational shifted_v11 = v11 + R(shift);
        CHECK(c == R(2) * shifted_v11 - v21 - v22 - R(1));
    }
}

TEST_CASE("casimir generator words") {
    UEElement c11 = casimir_generator(1, 1);
    REQUIRE(c11.size() == 1);
    CHECK(c11[0].word == Word{{1, 1}});

    UEElement c21 = casimir_generator(2, 1);
    REQUIRE(c21.size() == 2);
    CHECK(c21[0].word == Word{{1, 1}});
    CHECK(c21[1].word == Word{{2, 2}});

    UEElement c22 = casimir_generator(2, 2);
    REQUIRE(c22.size() == 4);
    // Tuples (1,1), (1,2), (2,1), (2,2) in odometer order.
    CHECK(c22[0].word == Word{{1, 1}, {1, 1}});
    CHECK(c22[1].word == Word{{1, 2}, {2, 1}});
    CHECK(c22[2].word == Word{{2, 1}, {1, 2}});
    CHECK(c22[3].word == Word{{2, 2}, {2, 2}});

    CHECK(casimir_generator(3, 2).size() == 9);
    CHECK(casimir_generator(3, 3).size() == 27);
}

TEST_CASE("gl_2 central character") {
    Rational v21 = R(1, 2), v22 = R(0), v11 = R(1, 5);
    ModuleSpec spec = gl2_spec(v21, v22, v11);
    BasisElement probe = BasisElement::plain(ShiftVector(2));
    std::vector<Rational> chi = central_character(spec, probe);
    REQUIRE(chi.size() == 2);
    CHECK(chi[0] == v21 + v22 + R(1));

    // Independent expansion of the four c_22 words with the explicit k = 1
    // coefficient functions.
    auto raise_coeff = [&](long z) { return -(v11 + R(z) - v21) * (v11 + R(z) - v22); };
    Rational e11 = v11;
    Rational e22 = R(1) + v21 + v22 - v11;
    Rational expected = e11 * e11 + raise_coeff(-1) + raise_coeff(0) + e22 * e22;
    CHECK(chi[1] == expected);
    // Equals a1^2 + a2^2 + a1 - a2 at the highest weight (a1, a2) = (v21, v22 + 1).
    Rational a1 = v21, a2 = v22 + R(1);
    CHECK(chi[1] == a1 * a1 + a2 * a2 + a1 - a2);

    // Same eigenvalues at a different probe of the same context.
    ShiftVector z(2);
    z.set(1, 1, -3);
    CHECK(central_character(spec, BasisElement::plain(z)) == chi);
}

TEST_CASE("weights") {
    ModuleSpec spec = gl2_spec(R(1), R(0), R(0));
    BasisElement e0 = BasisElement::plain(ShiftVector(2));
    CHECK(weight_of(spec.ctx, e0) == std::vector<Rational>{R(0), R(2)});
    BasisElement e1 = BasisElement::plain(ShiftVector(2).plus_delta(1, 1, 1));
    CHECK(weight_of(spec.ctx, e1) == std::vector<Rational>{R(1), R(1)});

    // Weight sum telescopes to (top-row sum) + n(n-1)/2, independent of z.
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        Tableau seed = random_generic_seed(n, rng);
        ModuleContext ctx(seed, Regime::Generic);
        ShiftVector z(n);
        for (int i = 1; i <= n - 1; ++i)
            for (int j = 1; j <= i; ++j) z.set(i, j, static_cast<long>(rng() % 7) - 3);
        auto gamma = weight_of(ctx, BasisElement::plain(z));
        Rational sum;
        for (const auto& g : gamma) sum += g;
        Rational expected = Rational(static_cast<long>(n) * (n - 1) / 2);
        for (int j = 1; j <= n; ++j) expected += seed.entry(n, j);
        CHECK(sum == expected);
    }
}

TEST_CASE("commutation relations hold exactly on random generic seeds") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 4; ++trial) {
        int n = 2 + trial % 2; // n = 2, 3
        ModuleSpec spec = ModuleSpec::full(ModuleContext(random_generic_seed(n, rng), Regime::Generic));
        Action act(spec, Project::None);
        ShiftVector z(n);
        TableauVector v = TableauVector::unit(BasisElement::plain(z));
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (int c = 1; c <= n; ++c)
                    for (int d = 1; d <= n; ++d) {
                        TableauVector lhs = act.generator(a, b, act.generator(c, d, v)) -
                                            act.generator(c, d, act.generator(a, b, v));
                        TableauVector rhs;
                        if (b == c) rhs = rhs + act.generator(a, d, v);
                        if (d == a) rhs = rhs - act.generator(c, b, v);
                        CHECK((lhs - rhs).is_zero());
                    }
    }
}

TEST_CASE("simple generators move plain elements by one delta per term") {
    std::mt19937_64 rng(23);
    Tableau seed = random_generic_seed(3, rng);
    ModuleSpec spec = ModuleSpec::full(ModuleContext(seed, Regime::Generic));
    BasisElement e0 = BasisElement::plain(ShiftVector(3));
    for (int k = 1; k <= 2; ++k) {
        for (auto g : {SimpleGen::raise(k), SimpleGen::lower(k)}) {
            TableauVector out = apply_simple_generator(spec, g, e0);
            CHECK(out.size() == static_cast<size_t>(k));
            for (const auto& [b, c] : out.terms()) {
                long total = 0;
                for (long s : b.z.data()) total += std::abs(s);
                CHECK(total == 1);
            }
        }
    }
}

TEST_CASE("every c_mk acts diagonally on generic elements (multiplicity one)") {
    std::mt19937_64 rng(29);
    Tableau seed = random_generic_seed(3, rng);
    ModuleSpec spec = ModuleSpec::full(ModuleContext(seed, Regime::Generic));
    Action act(spec, Project::None);
    for (int trial = 0; trial < 5; ++trial) {
        ShiftVector z(3);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= i; ++j) z.set(i, j, static_cast<long>(rng() % 5) - 2);
        BasisElement probe = BasisElement::plain(z);
        for (int m = 1; m <= 3; ++m)
            for (int k = 1; k <= m; ++k) {
                TableauVector r = act.ue(casimir_generator(m, k), TableauVector::unit(probe));
                Rational c;
                CHECK(r.is_multiple_of(probe, c));
            }
    }
}

TEST_CASE("ue element application: trivial cases") {
    ModuleSpec spec = gl2_spec(R(1, 2), R(0), R(1, 5));
    BasisElement e0 = BasisElement::plain(ShiftVector(2));
    TableauVector v = TableauVector::unit(e0);
    // Empty word is the identity.
    UEElement identity = {{R(1), Word{}}};
    CHECK(apply_ue_element(spec, identity, v) == v);
    // Zero coefficient gives zero.
    UEElement zero = {{R(0), Word{{1, 2}}}};
    CHECK(apply_ue_element(spec, zero, v).is_zero());
    // E12 E21 as a word reproduces the composition.
    UEElement w = {{R(1), Word{{1, 2}, {2, 1}}}};
    TableauVector byword = apply_ue_element(spec, w, v);
    TableauVector bycomp = apply_generator(spec, 1, 2, apply_generator(spec, 2, 1, v));
    CHECK(byword == bycomp);
    // E11 acts diagonally by v11.
    Rational c;
    REQUIRE(apply_generator(spec, 1, 1, v).is_multiple_of(e0, c));
    CHECK(c == R(1, 5));
}

TEST_CASE("central_character rejects non-eigen probes") {
    // A window-projected context whose predicate cuts a non-invariant set
    // makes c_{nk} non-diagonal: fake it by probing a zero-coefficient
    // situation is not possible on full windows, so check the error path via
    // a region that is not action stable.
    RegionPredicate rp;
    rp.systems = {{RegionAtom{0, 0, 1, RegionAtom::Rel::Le, 0, 0}}}; // k <= 0 only
    std::mt19937_64 rng(1);
    ModuleSpec spec(ModuleContext(Tableau(3, {{R(1, 7)}, {R(1, 3), R(1, 2)}, {R(1, 5), R(2, 7), R(3, 11)}}),
                                  Regime::Generic),
                    rp);
    BasisElement probe = BasisElement::plain(ShiftVector(3));
    (void)rng;
    CHECK_THROWS_AS(central_character(spec, probe, Project::Predicate), NotEigenvector);
}
