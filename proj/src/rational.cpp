#include "arclimit/rational.hpp"

#include "arclimit/errors.hpp"

#include <ostream>

namespace arclimit {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational literal: " + text);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + text);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    mpq_class scaled = v_ * scale;
    mpz_class whole = scaled.get_num() / scaled.get_den();
    mpz_class rem = scaled.get_num() % scaled.get_den();
    // round half away from zero
    if (2 * ::abs(rem) >= scaled.get_den()) whole += (sgn(v_) < 0 ? -1 : 1);
    bool neg = whole < 0;
    mpz_class mag = ::abs(whole);
    std::string s = mag.get_str();
    if ((int)s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    if (neg) s.insert(0, "-");
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace arclimit
