#include "vfcert/ratfunc.hpp"

#include <stdexcept>

namespace vfcert {

void RatFunc::reduce() {
    if (num_.vars() != den_.vars()) throw std::invalid_argument("RatFunc: ambient mismatch");
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.vars(), Rational(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant() || !g.constant_term().is_one()) {
        num_ = exact_divide(num_, g).value();
        den_ = exact_divide(den_, g).value();
    }
    // scale so den is integer-primitive with positive leading coefficient
    Rational c = poly_content(den_);
    if (den_.leading_term(cmp_grlex).second.sign() < 0) c = -c;
    if (!c.is_one()) {
        Rational inv = c.reciprocal();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Poly RatFunc::as_poly() const {
    if (!is_polynomial()) throw std::domain_error("RatFunc: not a polynomial");
    Rational d = den_.constant_term();
    return d.is_one() ? num_ : num_.scaled(d.reciprocal());
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::partial_derivative(std::size_t var) const {
    if (is_polynomial()) return RatFunc(as_poly().partial_derivative(var));
    Poly dn = num_.partial_derivative(var);
    Poly dd = den_.partial_derivative(var);
    return RatFunc(dn * den_ - num_ * dd, den_ * den_);
}

std::string RatFunc::to_string() const {
    if (is_polynomial()) return as_poly().to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace vfcert
