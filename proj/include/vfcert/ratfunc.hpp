#ifndef VFCERT_RATFUNC_HPP
#define VFCERT_RATFUNC_HPP

#include <string>

#include "vfcert/poly.hpp"

namespace vfcert {

/// Reduced rational function num/den. Canonical: gcd(num, den) is a unit,
/// den is integer-primitive with positive leading coefficient, so equality
/// is structural.
class RatFunc {
  public:
    RatFunc() : den_(Poly::constant({}, Rational(1))) {}  // zero over the empty ambient

    explicit RatFunc(Poly num)
        : num_(std::move(num)), den_(Poly::constant(num_.vars(), Rational(1))) {}

    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static RatFunc zero(const std::vector<std::string>& vars) {
        return RatFunc(Poly::zero(vars));
    }
    static RatFunc constant(const std::vector<std::string>& vars, const Rational& c) {
        return RatFunc(Poly::constant(vars, c));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const std::vector<std::string>& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    /// The numerator when the denominator is 1; throws otherwise.
    Poly as_poly() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// Formal partial derivative by the quotient rule.
    RatFunc partial_derivative(std::size_t var) const;

    std::string to_string() const;

  private:
    void reduce();

    Poly num_, den_;
};

}  // namespace vfcert

#endif
