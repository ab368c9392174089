#include "gtx/rational.hpp"

#include <ostream>

namespace gtx {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
    if (q.get_den() == 0) throw ParseError("zero denominator in: " + s);
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binom_rational(const Rational& a, unsigned i) {
    Rational num = 1;
    for (unsigned j = 0; j < i; ++j) num *= a - Rational(static_cast<long>(j));
    Rational fact = 1;
    for (unsigned j = 2; j <= i; ++j) fact *= Rational(static_cast<long>(j));
    return num / fact;
}

} // namespace gtx
