#include <doctest.h>

#include <random>

#include "gtx/tableau.hpp"

using namespace gtx;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

Tableau sample_seed() {
    // rows bottom to top: the minimal-orbit seed at p=3, q=2, lambda=0, a=1.
    return Tableau(3, {{R(-1)}, {R(-1), R(-1, 2)}, {R(-1), R(-1, 2), R(-3, 2)}});
}

} // namespace

TEST_CASE("make_tableau shape validation") {
    CHECK_NOTHROW(Tableau(2, {{R(0)}, {R(1), R(0)}}));
    CHECK_NOTHROW(sample_seed());
    CHECK_THROWS_AS(Tableau(3, {{R(0)}, {R(1), R(0)}}), ShapeError);
    CHECK_THROWS_AS(Tableau(2, {{R(0), R(1)}, {R(1), R(0)}}), ShapeError);
}

TEST_CASE("genericity predicates") {
    Tableau t = sample_seed();
    CHECK(is_generic(t));
    CHECK_FALSE(is_strongly_generic(t)); // v32 - v33 = 1 is integral
    // n = 2: row 1 has a single entry, so generic is vacuous.
    Tableau t2(2, {{R(0)}, {R(1), R(0)}});
    CHECK(is_generic(t2));
    CHECK_FALSE(is_strongly_generic(t2));
    Tableau t3(3, {{R(0)}, {R(1, 3), R(-1, 3)}, {R(1), R(1, 2), R(0)}});
    CHECK(is_generic(t3));
    CHECK_FALSE(is_strongly_generic(t3)); // v31 - v33 = 1
}

TEST_CASE("singular and critical are n = 3 notions") {
    Tableau crit(3, {{R(0)}, {R(-1, 2), R(-1, 2)}, {R(0), R(1, 3), R(2, 3)}});
    CHECK(is_singular(crit));
    CHECK(is_critical(crit));
    Tableau sing(3, {{R(0)}, {R(1, 2), R(-1, 2)}, {R(0), R(1, 3), R(2, 3)}});
    CHECK(is_singular(sing));
    CHECK_FALSE(is_critical(sing));
    Tableau nons(3, {{R(0)}, {R(1, 3), R(0)}, {R(0), R(1, 3), R(2, 3)}});
    CHECK_FALSE(is_singular(nons));
    Tableau two(2, {{R(0)}, {R(1), R(0)}});
    CHECK_THROWS_AS(is_singular(two), RankError);
}

TEST_CASE("omega sets") {
    Tableau t = sample_seed();
    CHECK(omega(t) == OmegaSet{{2, 1, 1}, {3, 1, 1}, {3, 2, 2}, {3, 3, 2}});
    CHECK(omega_plus(t) == OmegaSet{{2, 1, 1}, {3, 1, 1}, {3, 2, 2}}); // v33 - v22 = -1 drops out
    Tableau sg(3, {{R(1, 7)}, {R(1, 3), R(1, 2)}, {R(1, 5), R(2, 7), R(3, 11)}});
    REQUIRE(is_strongly_generic(sg));
    CHECK(omega(sg).empty());
}

TEST_CASE("shift acts on the lower rows only and is a group action") {
    Tableau t = sample_seed();
    ShiftVector z(3);
    z.set(1, 1, 2);
    z.set(2, 1, -1);
    Tableau s = shift(t, z);
    CHECK(s.entry(1, 1) == R(1));
    CHECK(s.entry(2, 1) == R(-2));
    CHECK(s.entry(3, 1) == t.entry(3, 1)); // top row fixed
    CHECK(shift(s, z.negated()) == t);
    CHECK(shift(t, ShiftVector(3)) == t);
    // Integrality of differences is shift-invariant.
    CHECK(omega(shift(t, z)) == omega(t));
}

TEST_CASE("omega_plus of a shifted tableau stays inside omega") {
    Tableau t = sample_seed();
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        ShiftVector z(3);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= i; ++j) z.set(i, j, static_cast<long>(rng() % 9) - 4);
        Tableau s = shift(t, z);
        OmegaSet om = omega(t);
        for (const auto& triple : omega_plus(s)) CHECK(om.count(triple) == 1);
    }
}

TEST_CASE("row permutation normalization") {
    // Verma-type tableau is already normalized.
    Tableau verma(3, {{R(1, 5)}, {R(1, 5), R(2, 7)}, {R(1, 5), R(2, 7), R(3, 11)}});
    auto r1 = normalize_row_permutation(verma);
    CHECK(r1.tableau == verma);
    // n = 2 with the congruent entry in the wrong slot: swap row 2.
    Tableau swapped(2, {{R(1, 3)}, {R(0), R(1, 3) + R(5)}});
    auto r2 = normalize_row_permutation(swapped);
    CHECK(r2.tableau == Tableau(2, {{R(1, 3)}, {R(1, 3) + R(5), R(0)}}));
    CHECK(omega(r2.tableau) == OmegaSet{{2, 1, 1}});
    // Already in place: identity.
    Tableau inplace(2, {{R(1, 3)}, {R(1, 3) + R(5), R(0)}});
    CHECK(normalize_row_permutation(inplace).tableau == inplace);
    CHECK_THROWS_AS(normalize_row_permutation(sample_seed()), NotStronglyGeneric);
}

TEST_CASE("normalization always lands in the (r,s,s) pattern") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 2);
        // Each entry gets a congruence class c/101 (distinct classes within a
        // row, so the tableau is strongly generic) plus a random integer part;
        // shared classes across rows create the chains the lemma is about.
        std::vector<std::vector<Rational>> rows;
        for (int i = 1; i <= n; ++i) {
            std::vector<int> classes(n + 1);
            for (int c = 0; c <= n; ++c) classes[c] = c + 1;
            std::shuffle(classes.begin(), classes.end(), rng);
            std::vector<Rational> row;
            for (int j = 1; j <= i; ++j)
                row.push_back(R(static_cast<long>(rng() % 7) - 3) + R(classes[j - 1], 101));
            rows.push_back(std::move(row));
        }
        Tableau t(n, rows);
        REQUIRE(is_strongly_generic(t));
        auto res = normalize_row_permutation(t);
        for (const auto& triple : omega(res.tableau)) CHECK(triple[1] == triple[2]);
    }
}
