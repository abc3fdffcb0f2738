#ifndef VFCERT_UNIPOLY_HPP
#define VFCERT_UNIPOLY_HPP

#include <string>
#include <vector>

#include "vfcert/poly.hpp"
#include "vfcert/rational.hpp"

namespace vfcert {

/// Dense univariate polynomial over Q; coefficient i belongs to t^i.
/// Workhorse for Sturm sequences and root isolation.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly from_poly(const Poly& p);
    Poly to_poly(const std::string& var = "t") const;

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(std::size_t i) const { return c_[i]; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const { return c_.back(); }

    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return eval(x).sign(); }
    /// Sign of the polynomial at +infinity (-infinity with negate_odd).
    int sign_at_pos_inf() const { return is_zero() ? 0 : leading().sign(); }
    int sign_at_neg_inf() const;

    UniPoly derivative() const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const Rational& r) const;
    UniPoly neg() const { return scaled(Rational(-1)); }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Division with remainder; b nonzero.
    static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);

    /// Monic gcd.
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);

    /// p / gcd(p, p'), made integer-primitive with positive leading coefficient.
    UniPoly squarefree_part() const;

    /// Integer-primitive scaling (content 1, positive leading coefficient).
    UniPoly primitive() const;

    /// Substitute t -> a*t + b.
    UniPoly compose_affine(const Rational& a, const Rational& b) const;

    std::string to_string(const std::string& var = "t") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Number of distinct real roots of f in the open interval (lo, hi) by a
/// Sturm sequence; f squarefree on callers that iterate.
class SturmSequence {
  public:
    explicit SturmSequence(const UniPoly& f);

    int variations_at(const Rational& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    /// Roots in the half-open interval (lo, hi].
    int count_roots(const Rational& lo, const Rational& hi) const;
    int count_all_roots() const;

  private:
    std::vector<UniPoly> chain_;
};

/// Cauchy bound: every complex root has modulus < the returned value.
Rational cauchy_root_bound(const UniPoly& f);

/// Simplest rational (smallest denominator, then smallest numerator) in the
/// closed interval [lo, hi].
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

/// Resultant of f and g with respect to variable `var`, computed as the
/// determinant of the Sylvester matrix by fraction-free elimination. The
/// result does not involve `var`.
Poly resultant(const Poly& f, const Poly& g, std::size_t var);

}  // namespace vfcert

#endif
