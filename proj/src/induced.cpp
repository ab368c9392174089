#include "gtx/induced.hpp"

#include <numeric>

#include "gtx/classification.hpp"

namespace gtx {

InducedSpec build_induced(int n, int sub_rank, const std::vector<Rational>& inner,
                          const std::vector<Rational>& outer) {
    if (sub_rank != 2 && sub_rank != 3) throw RankError("sub rank must be 2 or 3");
    if (n < sub_rank) throw RankError("target rank below sub rank");
    size_t inner_len = sub_rank == 2 ? 3 : 6;
    if (inner.size() != inner_len) throw ShapeError("inner seed has wrong length");
    if (outer.size() != static_cast<size_t>(n - sub_rank)) throw ShapeError("outer parameter count mismatch");

    // Column values v_1..v_n: the inner top row followed by the outer choices.
    std::vector<Rational> v;
    if (sub_rank == 2) {
        v = {inner[0], inner[1]};
    } else {
        v = {inner[0], inner[1], inner[2]};
    }
    for (const auto& o : outer) v.push_back(o);
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (integral_difference(v[i], v[j]))
                throw ParameterClash("column values v_i - v_j integral at (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + ")");

    std::vector<std::vector<Rational>> rows(n);
    for (int i = 1; i <= n; ++i) {
        rows[i - 1].resize(i);
        for (int j = 1; j <= i; ++j) {
            if (i >= sub_rank) {
                rows[i - 1][j - 1] = v[j - 1];
            } else if (sub_rank == 2) {
                rows[i - 1][j - 1] = inner[2]; // u11
            } else {
                rows[i - 1][j - 1] = (i == 2) ? inner[2 + j] : inner[5]; // u2j / u11
            }
        }
    }
    Tableau seed(n, std::move(rows));

    Regime regime = Regime::Generic;
    if (!is_generic(seed)) {
        if (n == 3 && sub_rank == 3 && is_critical(seed)) {
            regime = Regime::Singular1;
        } else {
            throw ParameterClash("assembled seed is singular; only the n = 3 critical case is supported");
        }
    }

    ModuleContext ctx(std::move(seed), regime);
    ModuleSpec spec(std::move(ctx), InducedPredicate{sub_rank});
    return InducedSpec{n, sub_rank, inner, outer, Rational(0), std::move(spec)};
}

SimplicityReport simplicity_flags(const InducedSpec& sp) {
    SimplicityReport report;
    auto record = [&](int r, int s, int t, const Rational& a, const Rational& b) {
        if (integral_difference(a, b)) {
            report.simple = false;
            report.witnesses.push_back({r, s, t});
        }
    };
    if (sp.sub_rank == 2) {
        record(2, 1, 1, sp.inner[0], sp.inner[2]);
        record(2, 2, 1, sp.inner[1], sp.inner[2]);
    } else {
        // u_{rs} - u_{r-1,t} for r = 2, 3.
        const Rational &u31 = sp.inner[0], &u32 = sp.inner[1], &u33 = sp.inner[2];
        const Rational &u21 = sp.inner[3], &u22 = sp.inner[4], &u11 = sp.inner[5];
        record(2, 1, 1, u21, u11);
        record(2, 2, 1, u22, u11);
        record(3, 1, 1, u31, u21);
        record(3, 1, 2, u31, u22);
        record(3, 2, 1, u32, u21);
        record(3, 2, 2, u32, u22);
        record(3, 3, 1, u33, u21);
        record(3, 3, 2, u33, u22);
    }
    return report;
}

InducedSpec admissible_induced_parameters(const AdmissibleLevel& level, int sub_rank,
                                          const std::vector<long>& lambdas, const std::vector<long>& mus) {
    const int n = level.n;
    if (sub_rank != 2 && sub_rank != 3) throw RankError("sub rank must be 2 or 3");
    if (lambdas.size() != static_cast<size_t>(n - 1) || mus.size() != static_cast<size_t>(n - 1))
        throw ShapeError("lambda/mu lists must have n-1 entries");
    if (level.p < n || level.q < n)
        throw ConstraintViolation("admissible induced parameters need p, q >= n");
    for (long l : lambdas)
        if (l < 0) throw ConstraintViolation("lambda entries must be nonnegative");
    for (long m : mus)
        if (m < 0) throw ConstraintViolation("mu entries must be nonnegative");
    long lam_sum = std::accumulate(lambdas.begin(), lambdas.end(), 0L);
    long mu_sum = std::accumulate(mus.begin(), mus.end(), 0L);
    if (lam_sum > level.p - n) throw ConstraintViolation("sum of lambdas exceeds p - n");
    if (mu_sum > level.q - n) throw ConstraintViolation("sum of mus exceeds q - n");

    const Rational poq = level.p_over_q();
    std::vector<Rational> v(n);
    v[0] = Rational(0);
    for (int i = 1; i < n; ++i)
        v[i] = v[i - 1] - Rational(1) - Rational(lambdas[i - 1]) + poq * Rational(mus[i - 1] + 1);

    // Restricted level of the inner seed must itself be admissible.
    Rational k_sub = restricted_level(level, sub_rank);
    if (!is_admissible_level(sub_rank, k_sub))
        throw ConstraintViolation("restricted level is not admissible for the inner algebra");

    std::vector<Rational> inner;
    ParameterChooser chooser(v[0]);
    if (sub_rank == 2) {
        Rational u11 = chooser.next({v[0], v[1]});
        inner = {v[0], v[1], u11};
    } else {
        Rational u21 = chooser.next({v[0], v[1], v[2]});
        Rational u22 = chooser.next({v[0], v[1], v[2], u21});
        Rational u11 = chooser.next({u21, u22});
        inner = {v[0], v[1], v[2], u21, u22, u11};
    }
    std::vector<Rational> outer(v.begin() + sub_rank, v.end());
    InducedSpec sp = build_induced(n, sub_rank, inner, outer);
    sp.inner_level_shifted = k_sub + Rational(sub_rank);
    return sp;
}

} // namespace gtx
