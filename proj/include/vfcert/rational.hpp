#ifndef VFCERT_RATIONAL_HPP
#define VFCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vfcert {

/// Exact rational number. Always canonical: denominator > 0 and coprime
/// to the numerator, zero stored as 0/1.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "a" or "a/b" with optional leading '-'.
    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: bad literal '" + s + "'");
        if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
        q.canonicalize();
        return Rational(q);
    }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(mpq_class(1 / v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational pow(unsigned e) const {
        Rational r(1), b(*this);
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const { return v_.get_str(); }

    double to_double() const { return v_.get_d(); }

  private:
    mpq_class v_;
};

inline Rational abs(const Rational& a) { return a.abs(); }

/// gcd normalized so that gcd(a, b) is the positive generator of aZ + bZ
/// extended to rationals: gcd(p1/q1, p2/q2) = gcd(p1 q2, p2 q1)/(q1 q2).
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class num, den;
    mpz_gcd(num.get_mpz_t(),
            mpz_class(a.numerator() * b.denominator()).get_mpz_t(),
            mpz_class(b.numerator() * a.denominator()).get_mpz_t());
    den = a.denominator() * b.denominator();
    return Rational(num, den);
}

}  // namespace vfcert

#endif
