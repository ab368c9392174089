#pragma once

#include <array>
#include <compare>
#include <set>
#include <vector>

#include "gtx/rational.hpp"

namespace gtx {

// Integer shift of the lower n-1 rows of a tableau. Coordinates indexed by
// pairs (i,j), 1 <= j <= i <= n-1, stored i ascending then j ascending.
// The top row is never shifted.
class ShiftVector {
  public:
    ShiftVector() : n_(2), z_(1, 0) {}
    explicit ShiftVector(int n) : n_(n), z_(static_cast<size_t>(n) * (n - 1) / 2, 0) {}
    ShiftVector(int n, std::vector<long> z) : n_(n), z_(std::move(z)) {
        if (z_.size() != static_cast<size_t>(n_) * (n_ - 1) / 2)
            throw ShapeError("shift vector has wrong length");
    }

    int n() const { return n_; }
    size_t size() const { return z_.size(); }
    static size_t index(int i, int j) { return static_cast<size_t>(i) * (i - 1) / 2 + (j - 1); }
    long get(int i, int j) const { return z_[index(i, j)]; }
    void set(int i, int j, long v) { z_[index(i, j)] = v; }
    const std::vector<long>& data() const { return z_; }

    ShiftVector plus_delta(int i, int j, long step = 1) const {
        ShiftVector r = *this;
        r.z_[index(i, j)] += step;
        return r;
    }
    ShiftVector negated() const {
        ShiftVector r = *this;
        for (auto& v : r.z_) v = -v;
        return r;
    }
    friend ShiftVector operator+(const ShiftVector& a, const ShiftVector& b) {
        if (a.n_ != b.n_) throw ShapeError("shift rank mismatch");
        ShiftVector r = a;
        for (size_t k = 0; k < r.z_.size(); ++k) r.z_[k] += b.z_[k];
        return r;
    }

    // Swap of the (2,1)/(2,2) coordinates; the tau identification of the
    // n = 3 singular basis.
    ShiftVector tau() const {
        ShiftVector r = *this;
        if (n_ >= 3) std::swap(r.z_[index(2, 1)], r.z_[index(2, 2)]);
        return r;
    }

    auto operator<=>(const ShiftVector&) const = default;

  private:
    int n_;
    std::vector<long> z_;
};

// Gelfand-Tsetlin tableau: row i (1-based, bottom row first) holds i entries.
class Tableau {
  public:
    Tableau(int n, std::vector<std::vector<Rational>> rows);

    int n() const { return n_; }
    const Rational& entry(int i, int j) const { return rows_[i - 1][j - 1]; }
    const std::vector<Rational>& row(int i) const { return rows_[i - 1]; }

    auto operator<=>(const Tableau&) const = default;

  private:
    int n_;
    std::vector<std::vector<Rational>> rows_;
};

Tableau make_tableau(int n, std::vector<std::vector<Rational>> rows);

// No integral differences within rows 1..n-1 (generic), all rows (strongly).
bool is_generic(const Tableau& t);
bool is_strongly_generic(const Tableau& t);

// n = 3 only: the row-2 difference is integral (singular) resp. zero (critical).
bool is_singular(const Tableau& t);
bool is_critical(const Tableau& t);

using OmegaTriple = std::array<int, 3>; // (r, s, t): v_{rs} - v_{r-1,t} integral
using OmegaSet = std::set<OmegaTriple>;

OmegaSet omega(const Tableau& t);
OmegaSet omega_plus(const Tableau& t);

// The Omega^+ set of a Verma-type tableau: {(r,s,s) : 2 <= r <= n, s < r}.
OmegaSet verma_omega_plus(int n);

Tableau shift(const Tableau& t, const ShiftVector& z);

struct RowPermutationResult {
    // perms[i-1][p] = original (0-based) index of the entry placed at
    // position p+1 of row i.
    std::vector<std::vector<int>> perms;
    Tableau tableau;
};

// For strongly generic T, permute each row independently so that
// Omega(T') is contained in {(r,s,s)}. Deterministic: entries congruent to a
// row-below entry inherit its position; the rest fill free positions in value-
// descending order.
RowPermutationResult normalize_row_permutation(const Tableau& t);

} // namespace gtx
