#include "gtx/tableau.hpp"

#include <algorithm>
#include <numeric>

namespace gtx {

Tableau::Tableau(int n, std::vector<std::vector<Rational>> rows) : n_(n), rows_(std::move(rows)) {
    if (n_ < 2) throw ShapeError("tableau rank must be >= 2");
    if (rows_.size() != static_cast<size_t>(n_)) throw ShapeError("tableau must have n rows");
    for (int i = 1; i <= n_; ++i)
        if (rows_[i - 1].size() != static_cast<size_t>(i))
            throw ShapeError("row " + std::to_string(i) + " must have " + std::to_string(i) + " entries");
}

Tableau make_tableau(int n, std::vector<std::vector<Rational>> rows) { return Tableau(n, std::move(rows)); }

static bool row_has_integral_pair(const Tableau& t, int k) {
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            if (integral_difference(t.entry(k, i), t.entry(k, j))) return true;
    return false;
}

bool is_generic(const Tableau& t) {
    for (int k = 1; k <= t.n() - 1; ++k)
        if (row_has_integral_pair(t, k)) return false;
    return true;
}

bool is_strongly_generic(const Tableau& t) {
    return is_generic(t) && !row_has_integral_pair(t, t.n());
}

bool is_singular(const Tableau& t) {
    if (t.n() != 3) throw RankError("singularity test is defined for n = 3 only");
    return integral_difference(t.entry(2, 1), t.entry(2, 2));
}

bool is_critical(const Tableau& t) {
    if (t.n() != 3) throw RankError("criticality test is defined for n = 3 only");
    return t.entry(2, 1) == t.entry(2, 2);
}

OmegaSet omega(const Tableau& t) {
    OmegaSet out;
    for (int r = 2; r <= t.n(); ++r)
        for (int s = 1; s <= r; ++s)
            for (int u = 1; u <= r - 1; ++u)
                if (integral_difference(t.entry(r, s), t.entry(r - 1, u))) out.insert({r, s, u});
    return out;
}

OmegaSet omega_plus(const Tableau& t) {
    OmegaSet out;
    for (int r = 2; r <= t.n(); ++r)
        for (int s = 1; s <= r; ++s)
            for (int u = 1; u <= r - 1; ++u) {
                Rational d = t.entry(r, s) - t.entry(r - 1, u);
                if (d.is_nonneg_integer()) out.insert({r, s, u});
            }
    return out;
}

OmegaSet verma_omega_plus(int n) {
    OmegaSet out;
    for (int r = 2; r <= n; ++r)
        for (int s = 1; s <= r - 1; ++s) out.insert({r, s, s});
    return out;
}

Tableau shift(const Tableau& t, const ShiftVector& z) {
    if (z.n() != t.n()) throw ShapeError("shift rank mismatch");
    std::vector<std::vector<Rational>> rows;
    rows.reserve(t.n());
    for (int i = 1; i <= t.n(); ++i) {
        std::vector<Rational> row = t.row(i);
        if (i <= t.n() - 1)
            for (int j = 1; j <= i; ++j) row[j - 1] += Rational(z.get(i, j));
        rows.push_back(std::move(row));
    }
    return Tableau(t.n(), std::move(rows));
}

RowPermutationResult normalize_row_permutation(const Tableau& t) {
    if (!is_strongly_generic(t)) throw NotStronglyGeneric("normalization needs a strongly generic tableau");
    int n = t.n();
    std::vector<std::vector<Rational>> newrows(n);
    std::vector<std::vector<int>> perms(n);

    newrows[0] = t.row(1);
    perms[0] = {0};

    for (int r = 2; r <= n; ++r) {
        const auto& row = t.row(r);
        const auto& below = newrows[r - 2];
        std::vector<int> pos(r, -1);          // pos[old index] = forced position (0-based)
        std::vector<bool> taken(r, false);
        for (int a = 0; a < r; ++a) {
            for (int p = 0; p < r - 1; ++p) {
                if (integral_difference(row[a], below[p])) {
                    pos[a] = p;
                    taken[p] = true;
                    break; // strongly generic: at most one congruent partner
                }
            }
        }
        std::vector<int> free_idx;
        for (int a = 0; a < r; ++a)
            if (pos[a] < 0) free_idx.push_back(a);
        std::sort(free_idx.begin(), free_idx.end(),
                  [&](int a, int b) { return row[a] > row[b]; }); // value descending
        int next = 0;
        for (int a : free_idx) {
            while (taken[next]) ++next;
            pos[a] = next;
            taken[next] = true;
        }
        std::vector<Rational> placed(r);
        std::vector<int> perm(r, -1);
        for (int a = 0; a < r; ++a) {
            placed[pos[a]] = row[a];
            perm[pos[a]] = a;
        }
        newrows[r - 1] = std::move(placed);
        perms[r - 1] = std::move(perm);
    }
    return {std::move(perms), Tableau(n, std::move(newrows))};
}

} // namespace gtx
