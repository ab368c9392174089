#include "gtx/polynomial.hpp"

#include <sstream>

namespace gtx {

Rational Poly::eval(const Rational& t0) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t0 + *it;
    return acc;
}

Poly Poly::derivative() const {
    std::vector<Rational> d;
    for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long>(k)));
    return from_coeffs(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return Poly::from_coeffs(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
    return Poly::from_coeffs(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly::from_coeffs(std::move(c));
}

Poly Poly::operator-() const {
    std::vector<Rational> c(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) c[k] = -c_[k];
    return from_coeffs(std::move(c));
}

Poly Poly::scaled(const Rational& s) const {
    if (s.is_zero()) return Poly();
    std::vector<Rational> c(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) c[k] = c_[k] * s;
    return from_coeffs(std::move(c));
}

Poly Poly::rem(Poly a, const Poly& b) {
    if (b.is_zero()) throw DenominatorZero("polynomial remainder by zero");
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rational q = a.leading() / b.leading();
        int shift = a.degree() - b.degree();
        std::vector<Rational> c(a.c_);
        for (int k = 0; k <= b.degree(); ++k) c[k + shift] -= q * b.coeff(k);
        a = from_coeffs(std::move(c));
    }
    return a;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rational(1) / a.leading()); // monic
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DenominatorZero("polynomial division by zero");
    if (a.is_zero()) return Poly();
    std::vector<Rational> q(a.degree() - b.degree() + 1);
    Poly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Rational c = r.leading() / b.leading();
        int shift = r.degree() - b.degree();
        q[shift] = c;
        std::vector<Rational> rc(r.coeffs());
        for (int k = 0; k <= b.degree(); ++k) rc[k + shift] -= c * b.coeff(k);
        r = from_coeffs(std::move(rc));
    }
    if (!r.is_zero()) throw Error("divexact: division not exact");
    return from_coeffs(std::move(q));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[k].str();
        if (k >= 1) os << "*t";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

RationalFunction1V::RationalFunction1V(Poly num, Poly den) {
    if (den.is_zero()) throw DenominatorZero("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = Poly::gcd(num, den);
    if (g.degree() > 0) {
        num = Poly::divexact(num, g);
        den = Poly::divexact(den, g);
    }
    Rational lead = den.leading();
    num_ = num.scaled(Rational(1) / lead);
    den_ = den.scaled(Rational(1) / lead);
}

RationalFunction1V operator+(const RationalFunction1V& a, const RationalFunction1V& b) {
    return RationalFunction1V(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction1V operator-(const RationalFunction1V& a, const RationalFunction1V& b) {
    return RationalFunction1V(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction1V operator*(const RationalFunction1V& a, const RationalFunction1V& b) {
    return RationalFunction1V(a.num_ * b.num_, a.den_ * b.den_);
}
RationalFunction1V operator/(const RationalFunction1V& a, const RationalFunction1V& b) {
    if (b.is_zero()) throw DenominatorZero("rational function division by zero");
    return RationalFunction1V(a.num_ * b.den_, a.den_ * b.num_);
}
RationalFunction1V RationalFunction1V::operator-() const {
    RationalFunction1V r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string RationalFunction1V::str() const {
    if (den_ == Poly(Rational(1))) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Rational rf_eval(const RationalFunction1V& f, const Rational& t0) {
    Rational d = f.den().eval(t0);
    if (d.is_zero()) throw PoleAtPoint("pole at evaluation point");
    return f.num().eval(t0) / d;
}

Rational rf_derivative_at_zero(const RationalFunction1V& f) {
    Rational d0 = f.den().eval(Rational(0));
    if (d0.is_zero()) throw PoleAtPoint("pole at 0 in derivative");
    Rational n0 = f.num().eval(Rational(0));
    Rational n1 = f.num().derivative().eval(Rational(0));
    Rational d1 = f.den().derivative().eval(Rational(0));
    return (n1 * d0 - n0 * d1) / (d0 * d0 * Rational(2));
}

} // namespace gtx
