#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "gtx/rational.hpp"

namespace gtx {

// Univariate polynomial over Q in a formal variable t, coefficients ascending,
// no trailing zeros.
class Poly {
  public:
    Poly() = default;
    Poly(const Rational& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    static Poly from_coeffs(std::vector<Rational> coeffs) {
        Poly p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }
    // b + a*t
    static Poly linear(const Rational& b, const Rational& a) { return Poly{b, a}; }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for 0
    const Rational& coeff(size_t k) const {
        static const Rational zero;
        return k < c_.size() ? c_[k] : zero;
    }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const { return c_.back(); }

    Rational eval(const Rational& t0) const;
    Poly derivative() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly scaled(const Rational& s) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // Remainder of a by b (b nonzero).
    static Poly rem(Poly a, const Poly& b);
    // Monic gcd (gcd of 0,0 is 0).
    static Poly gcd(Poly a, Poly b);
    // Exact division; throws if not exact.
    static Poly divexact(const Poly& a, const Poly& b);

    std::string str() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Quotient of two Polys, normalized: gcd-cancelled and denominator monic.
class RationalFunction1V {
  public:
    RationalFunction1V() : num_(), den_(Rational(1)) {}
    RationalFunction1V(const Rational& c) : num_(c), den_(Rational(1)) {}
    RationalFunction1V(Poly num, Poly den);

    static RationalFunction1V t() { return RationalFunction1V(Poly{Rational(0), Rational(1)}, Poly(Rational(1))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction1V operator+(const RationalFunction1V& a, const RationalFunction1V& b);
    friend RationalFunction1V operator-(const RationalFunction1V& a, const RationalFunction1V& b);
    friend RationalFunction1V operator*(const RationalFunction1V& a, const RationalFunction1V& b);
    friend RationalFunction1V operator/(const RationalFunction1V& a, const RationalFunction1V& b);
    RationalFunction1V operator-() const;

    friend bool operator==(const RationalFunction1V& a, const RationalFunction1V& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const;

  private:
    Poly num_, den_;
};

// Exact value f(t0); PoleAtPoint if the (reduced) denominator vanishes there.
Rational rf_eval(const RationalFunction1V& f, const Rational& t0);

// (1/2) f'(0); PoleAtPoint if f has a pole at 0.
Rational rf_derivative_at_zero(const RationalFunction1V& f);

} // namespace gtx
