#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gtx/rational.hpp"

namespace gtx {

// Level data for sl_n: k + n = p/q in lowest terms with p >= n.
struct AdmissibleLevel {
    int n;
    long p;
    long q;
    Rational k;

    Rational p_over_q() const { return Rational(p, q); }
};

std::optional<AdmissibleLevel> is_admissible_level(int n, const Rational& k);
AdmissibleLevel make_level(int n, long p, long q); // validates coprimality and p >= n

// Weight of sl_n in fundamental-weight coordinates (n-1 entries).
struct SlWeight {
    std::vector<Rational> coords;

    int rank() const { return static_cast<int>(coords.size()) + 1; } // = n
    bool operator==(const SlWeight&) const = default;
    auto operator<=>(const SlWeight&) const = default;
};

// Partition of n, parts descending, labelling a nilpotent orbit.
struct OrbitLabel {
    std::vector<int> parts;
    bool operator==(const OrbitLabel&) const = default;
};

// Dense orbit among nilpotents with (ad x)^{2q} = 0: all Jordan blocks <= q,
// greedily (q,...,q,r).
OrbitLabel orbit_for_denominator(int n, long q);

// Searches W = S_n for w with mu = w.(lambda+rho) - rho; returns the witness
// permutation (new position -> epsilon-coordinate index) or nothing.
std::optional<std::vector<int>> dot_equivalent(const SlWeight& lambda, const SlWeight& mu);

// Positive roots alpha_{ij} (i < j) with integral pairing <lambda, alpha^vee>.
std::set<std::pair<int, int>> integral_roots(const SlWeight& lambda);
long var_dimension(const SlWeight& lambda);

enum class OrbitKind { Principal, Minimal, Zero };

struct PrEnumeration {
    std::vector<SlWeight> classes; // pairwise dot-inequivalent representatives
    long collisions = 0;           // candidates merged by dot-equivalence
};

// Explicit representatives per orbit, deduplicated by the finite dot action.
// Principal needs q >= n, minimal q >= 2; OrbitEmpty otherwise.
PrEnumeration enumerate_pr(const AdmissibleLevel& level, OrbitKind orbit);

using GlWeight = std::vector<Rational>; // n coordinates

// b_i = sum_{k=i}^{n-1} <lambda, alpha_k^vee>, b_n = 0, centered so the
// coordinates sum to zero.
GlWeight sl_to_gl_weight(const SlWeight& lambda);
// v_{ni} = a_i - i + 1.
std::vector<Rational> gl_to_top_row(const GlWeight& a);

// k_sub with k_sub + n_sub = k + n (type A: all (theta_i,theta_i) = 2).
Rational restricted_level(const AdmissibleLevel& level, int n_sub);

} // namespace gtx
