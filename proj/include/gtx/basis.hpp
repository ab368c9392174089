#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>

#include "gtx/tableau.hpp"

namespace gtx {

// Basis symbol of a tableau module window: a plain tableau T(seed+z) or, in
// the n = 3 singular regime, a derivative tableau DT(seed+z).
// Canonical form there: Plain with z21 >= z22, Derivative with z21 < z22.
struct BasisElement {
    enum class Kind { Plain, Derivative };
    Kind kind = Kind::Plain;
    ShiftVector z;

    BasisElement() = default;
    BasisElement(Kind k, ShiftVector zz) : kind(k), z(std::move(zz)) {}
    static BasisElement plain(ShiftVector z) { return {Kind::Plain, std::move(z)}; }
    static BasisElement deriv(ShiftVector z) { return {Kind::Derivative, std::move(z)}; }

    auto operator<=>(const BasisElement&) const = default;
};

struct BasisElementHash {
    size_t operator()(const BasisElement& b) const {
        size_t h = b.kind == BasisElement::Kind::Plain ? 0x9e3779b97f4a7c15ull : 0xc2b2ae3d27d4eb4full;
        for (long v : b.z.data()) h = h * 1099511628211ull + static_cast<size_t>(v + 0x7fffffff);
        return h;
    }
};

// Finite formal rational combination of basis elements; zero coefficients are
// never stored.
class TableauVector {
  public:
    using Map = std::map<BasisElement, Rational>;

    TableauVector() = default;
    static TableauVector unit(const BasisElement& b) {
        TableauVector v;
        v.terms_[b] = Rational(1);
        return v;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }

    void add(const BasisElement& b, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(b, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add_scaled(const TableauVector& v, const Rational& s) {
        if (s.is_zero()) return;
        for (const auto& [b, c] : v.terms_) add(b, c * s);
    }

    Rational coeff(const BasisElement& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    TableauVector scaled(const Rational& s) const {
        TableauVector r;
        if (s.is_zero()) return r;
        for (const auto& [b, c] : terms_) r.terms_[b] = c * s;
        return r;
    }

    friend TableauVector operator+(const TableauVector& a, const TableauVector& b) {
        TableauVector r = a;
        r.add_scaled(b, Rational(1));
        return r;
    }
    friend TableauVector operator-(const TableauVector& a, const TableauVector& b) {
        TableauVector r = a;
        r.add_scaled(b, Rational(-1));
        return r;
    }
    friend bool operator==(const TableauVector& a, const TableauVector& b) { return a.terms_ == b.terms_; }

    // If the vector is c * unit(b), returns true and sets c (zero vector gives
    // c = 0 only when b matches nothing: returns false unless empty).
    bool is_multiple_of(const BasisElement& b, Rational& c) const {
        if (terms_.empty()) {
            c = Rational(0);
            return true;
        }
        if (terms_.size() != 1) return false;
        const auto& [bb, cc] = *terms_.begin();
        if (!(bb == b)) return false;
        c = cc;
        return true;
    }

  private:
    Map terms_;
};

} // namespace gtx
