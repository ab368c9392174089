#include "gtx/admissibility.hpp"

#include <algorithm>
#include <numeric>

namespace gtx {

std::optional<AdmissibleLevel> is_admissible_level(int n, const Rational& k) {
    if (n < 2) throw RankError("rank must be >= 2");
    Rational shifted = k + Rational(n);
    if (shifted.sign() <= 0) return std::nullopt;
    mpz_class num = shifted.numerator(), den = shifted.denominator();
    if (num < n) return std::nullopt;
    if (!num.fits_slong_p() || !den.fits_slong_p()) throw Error("level numerator/denominator out of range");
    return AdmissibleLevel{n, num.get_si(), den.get_si(), k};
}

AdmissibleLevel make_level(int n, long p, long q) {
    if (p < n || q < 1) throw OrbitEmpty("level requires p >= n and q >= 1");
    if (std::gcd(p, q) != 1) throw ConstraintViolation("p and q must be coprime");
    return AdmissibleLevel{n, p, q, Rational(p, q) - Rational(n)};
}

OrbitLabel orbit_for_denominator(int n, long q) {
    if (q < 1) throw OrbitEmpty("denominator must be positive");
    OrbitLabel o;
    long rest = n;
    while (rest >= q) {
        o.parts.push_back(static_cast<int>(q));
        rest -= q;
    }
    if (rest > 0) o.parts.push_back(static_cast<int>(rest));
    return o;
}

namespace {

// Epsilon coordinates of lambda + rho with x_n = 0.
std::vector<Rational> rho_shifted_eps(const SlWeight& w) {
    int n = w.rank();
    std::vector<Rational> x(n);
    x[n - 1] = Rational(0);
    for (int i = n - 2; i >= 0; --i) x[i] = x[i + 1] + w.coords[i] + Rational(1);
    return x;
}

} // namespace

std::optional<std::vector<int>> dot_equivalent(const SlWeight& lambda, const SlWeight& mu) {
    if (lambda.rank() != mu.rank()) throw ShapeError("weights of different rank");
    int n = lambda.rank();
    std::vector<Rational> x = rho_shifted_eps(lambda);
    std::vector<Rational> y = rho_shifted_eps(mu);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        // Compare difference patterns: permuted x must match y up to a common
        // shift, i.e. consecutive differences agree.
        for (int i = 0; i + 1 < n && ok; ++i)
            if (x[perm[i]] - x[perm[i + 1]] != y[i] - y[i + 1]) ok = false;
        if (ok) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::set<std::pair<int, int>> integral_roots(const SlWeight& lambda) {
    std::set<std::pair<int, int>> out;
    int n = lambda.rank();
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Rational pairing;
            for (int k = i; k <= j - 1; ++k) pairing += lambda.coords[k - 1];
            if (pairing.is_integer()) out.insert({i, j});
        }
    return out;
}

long var_dimension(const SlWeight& lambda) {
    int n = lambda.rank();
    long total = static_cast<long>(n) * (n - 1);
    return total - 2 * static_cast<long>(integral_roots(lambda).size());
}

namespace {

// All tuples in Z_{>=0}^len with sum <= bound.
std::vector<std::vector<long>> box_tuples(int len, long bound) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(len, 0);
    while (true) {
        long sum = std::accumulate(cur.begin(), cur.end(), 0L);
        if (sum <= bound) out.push_back(cur);
        int pos = len - 1;
        while (pos >= 0) {
            if (++cur[pos] <= bound) break;
            cur[pos--] = 0;
        }
        if (pos < 0) break;
    }
    return out;
}

} // namespace

PrEnumeration enumerate_pr(const AdmissibleLevel& level, OrbitKind orbit) {
    const int n = level.n;
    const Rational poq = level.p_over_q();
    std::vector<SlWeight> candidates;

    switch (orbit) {
        case OrbitKind::Zero: {
            for (const auto& lam : box_tuples(n - 1, level.p - n)) {
                SlWeight w;
                for (long v : lam) w.coords.push_back(Rational(v));
                candidates.push_back(std::move(w));
            }
            break;
        }
        case OrbitKind::Minimal: {
            if (level.q < 2) throw OrbitEmpty("minimal orbit needs q >= 2");
            for (long a = 1; a <= level.q - 1; ++a)
                for (const auto& lam : box_tuples(n - 1, level.p - n)) {
                    SlWeight w;
                    for (long v : lam) w.coords.push_back(Rational(v));
                    w.coords[0] -= Rational(a) * poq;
                    candidates.push_back(std::move(w));
                }
            break;
        }
        case OrbitKind::Principal: {
            if (level.q < n) throw OrbitEmpty("principal orbit needs q >= n");
            for (const auto& lam : box_tuples(n - 1, level.p - n))
                for (const auto& mu : box_tuples(n - 1, level.q - n)) {
                    SlWeight w;
                    for (int i = 0; i < n - 1; ++i)
                        w.coords.push_back(Rational(lam[i]) - poq * Rational(mu[i] + 1));
                    candidates.push_back(std::move(w));
                }
            break;
        }
    }

    std::sort(candidates.begin(), candidates.end());
    PrEnumeration out;
    for (const auto& c : candidates) {
        bool dup = false;
        for (const auto& kept : out.classes)
            if (dot_equivalent(kept, c)) {
                dup = true;
                ++out.collisions;
                break;
            }
        if (!dup) out.classes.push_back(c);
    }
    return out;
}

GlWeight sl_to_gl_weight(const SlWeight& lambda) {
    int n = lambda.rank();
    std::vector<Rational> b(n);
    b[n - 1] = Rational(0);
    for (int i = n - 2; i >= 0; --i) b[i] = b[i + 1] + lambda.coords[i];
    Rational shift;
    for (const auto& v : b) shift += v;
    shift = -(shift / Rational(n));
    for (auto& v : b) v += shift;
    return b;
}

std::vector<Rational> gl_to_top_row(const GlWeight& a) {
    std::vector<Rational> row;
    row.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) row.push_back(a[i] - Rational(static_cast<long>(i)));
    return row;
}

Rational restricted_level(const AdmissibleLevel& level, int n_sub) {
    if (n_sub < 2 || n_sub >= level.n) throw RankError("restricted rank must satisfy 2 <= n_sub < n");
    return level.p_over_q() - Rational(n_sub);
}

} // namespace gtx
