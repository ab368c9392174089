#include <doctest.h>

#include "gtx/classification.hpp"

using namespace gtx;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

AdmissibleLevel level32() { return make_level(3, 3, 2); }

} // namespace

TEST_CASE("L1 at (3,2,0,0,1): seed and region") {
    FamilyInstance inst = build_family(FamilyId::L1, level32(), 0, 0, 1);
    CHECK(inst.t == 1);
    CHECK(inst.spec.ctx.seed ==
          Tableau(3, {{R(-1)}, {R(-1), R(-1, 2)}, {R(-1), R(-1, 2), R(-3, 2)}}));
    // Region at t = 1: n = 0, m <= 0, k <= m.
    auto in = [&](long m, long n, long k) {
        ShiftVector z(3);
        z.set(2, 1, m);
        z.set(2, 2, n);
        z.set(1, 1, k);
        return inst.spec.member(BasisElement::plain(z));
    };
    CHECK(in(0, 0, 0));
    CHECK(in(-2, 0, -3));
    CHECK_FALSE(in(0, -1, 0));
    CHECK_FALSE(in(1, 0, 0));
    CHECK_FALSE(in(-1, 0, 0)); // k = 0 > m = -1
}

TEST_CASE("L16 at (3,2,0,0,1): singular seed from the substitution") {
    FamilyInstance inst = build_family(FamilyId::L16, level32(), 0, 0, 1);
    CHECK(inst.spec.ctx.regime == Regime::Singular1);
    CHECK(inst.spec.ctx.seed ==
          Tableau(3, {{R(-1, 2)}, {R(-1, 2), R(-1, 2)}, {R(-1), R(-1, 2), R(-3, 2)}}));
}

TEST_CASE("free parameter choice is deterministic") {
    // c = -1, x = -1/2: first candidate z = x + 1/7 = -5/14 passes.
    FamilyInstance l5 = build_family(FamilyId::L5, level32(), 0, 0, 1);
    CHECK(l5.params.at("z") == R(-5, 14));
    FamilyInstance l7 = build_family(FamilyId::L7, level32(), 0, 0, 1);
    CHECK(l7.params.at("z") == R(-5, 14));
    CHECK(l7.params.at("y") == R(-1, 2) + R(2, 11));
    // Supplied parameters are validated.
    std::map<std::string, Rational> bad{{"z", R(-1)}}; // z - c integral
    CHECK_THROWS_AS(build_family(FamilyId::L5, level32(), 0, 0, 1, 0, 0, &bad), ParameterClash);
}

TEST_CASE("family parameter constraints") {
    CHECK_THROWS_AS(build_family(FamilyId::L1, level32(), 0, 0, 2), ConstraintViolation); // a > q-1
    CHECK_THROWS_AS(build_family(FamilyId::L1, level32(), 1, 0, 1), ConstraintViolation); // sum > p-3
    CHECK_THROWS_AS(build_family(FamilyId::SL1, level32(), 0, 0, 0), OrbitEmpty);         // q = 2 < 3
    AdmissibleLevel l41 = make_level(3, 4, 1);
    CHECK_THROWS_AS(build_family(FamilyId::L1, l41, 0, 0, 1), OrbitEmpty);
}

TEST_CASE("L1..L4 regions partition the strip") {
    FamilyInstance f[4] = {build_family(FamilyId::L1, level32(), 0, 0, 1),
                           build_family(FamilyId::L2, level32(), 0, 0, 1),
                           build_family(FamilyId::L3, level32(), 0, 0, 1),
                           build_family(FamilyId::L4, level32(), 0, 0, 1)};
    for (long m = -3; m <= 3; ++m)
        for (long n = -3; n <= 3; ++n)
            for (long k = -3; k <= 3; ++k) {
                ShiftVector z(3);
                z.set(2, 1, m);
                z.set(2, 2, n);
                z.set(1, 1, k);
                int hits = 0;
                for (const auto& inst : f)
                    if (inst.spec.member(BasisElement::plain(z))) ++hits;
                bool in_strip = (n == 0); // t = 1
                CHECK(hits == (in_strip ? 1 : 0));
            }
}

TEST_CASE("L1 closure and relations at a small radius") {
    FamilyInstance inst = build_family(FamilyId::L1, level32(), 0, 0, 1);
    VerifyOptions opts;
    opts.radius = 4;
    FamilyReport rep = verify_family(inst, opts);
    CHECK(rep.closure.pass());
    CHECK(rep.relations.pass());
    CHECK(rep.multiplicities_ok);
    // The raising boundary terms vanish identically rather than being
    // censored; the n-lowering into the quotient ideal is censored.
    CHECK(rep.closure.quotient_censored > 0);
}

TEST_CASE("L7 is cuspidal with interior multiplicity exactly t") {
    FamilyInstance inst = build_family(FamilyId::L7, level32(), 0, 0, 1);
    VerifyOptions opts;
    opts.radius = 5;
    FamilyReport rep = verify_family(inst, opts);
    CHECK(rep.closure.pass());
    CHECK(rep.relations.pass());
    CHECK(rep.multiplicities_ok);

    AdmissibleLevel l43 = make_level(3, 4, 3);
    FamilyInstance t2 = build_family(FamilyId::L7, l43, 0, 1, 1);
    CHECK(t2.t == 2);
    WeightCensus census = multiplicity_census(t2.spec, Window::radius(3, 6));
    bool saw_interior = false;
    for (const auto& [wt, entry] : census)
        if (entry.max_slack >= t2.t + 1) {
            saw_interior = true;
            CHECK(entry.count == 2);
        }
    CHECK(saw_interior);
}

TEST_CASE("L20 weight support is two-sided with multiplicity t") {
    FamilyInstance inst = build_family(FamilyId::L20, level32(), 0, 0, 1);
    WeightCensus census = multiplicity_census(inst.spec, Window::radius(3, 5));
    // Interior weights all have multiplicity 1 and the gamma_2-support runs in
    // both directions (cuspidality proxy).
    bool low = false, high = false;
    for (const auto& [wt, entry] : census) {
        if (entry.max_slack >= 2) CHECK(entry.count == 1);
        if (wt[1] < R(-2)) low = true;
        if (wt[1] > R(2)) high = true;
    }
    CHECK(low);
    CHECK(high);
}

TEST_CASE("cross characters agree between realizations of one annihilator") {
    std::vector<FamilyInstance> fams;
    for (FamilyId id : {FamilyId::L1, FamilyId::L10, FamilyId::L16, FamilyId::L7})
        fams.push_back(build_family(id, level32(), 0, 0, 1));
    CrossCharacterReport rep = cross_character_check(fams, 4);
    CHECK(rep.pass);
}

TEST_CASE("family names round trip") {
    CHECK(family_name(FamilyId::SL5) == "S-L5");
    CHECK(family_from_name("L7") == FamilyId::L7);
    CHECK(family_from_name("S-L10") == FamilyId::SL10);
    CHECK(family_from_name("SL3") == FamilyId::SL3);
    CHECK_FALSE(family_from_name("L21").has_value());
}

TEST_CASE("the full battery holds beyond t = 1") {
    AdmissibleLevel l43 = make_level(3, 4, 3);
    VerifyOptions opts;
    opts.radius = 4;
    opts.growth_radii = {3, 5, 7};
    for (int i = 0; i < 20; ++i) {
        FamilyInstance inst = build_family(static_cast<FamilyId>(i), l43, 0, 1, 2);
        FamilyReport rep = verify_family(inst, opts);
        CHECK(rep.closure.pass());
        CHECK(rep.relations.pass());
        CHECK(rep.multiplicities_ok);
    }
}
