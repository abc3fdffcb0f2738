#ifndef VFCERT_POLY_HPP
#define VFCERT_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vfcert/monomial.hpp"
#include "vfcert/rational.hpp"

namespace vfcert {

/// Degree reported for the zero polynomial ("minus infinity" sentinel).
inline constexpr int kDegreeOfZero = -1;

/// Sparse multivariate polynomial over Q. Terms never store zero
/// coefficients; equality is structural (same ambient, same term map).
class Poly {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialStorageLess>;

    Poly() = default;  // the zero polynomial with an empty ambient
    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly zero(const std::vector<std::string>& vars) { return Poly(vars); }

    static Poly constant(const std::vector<std::string>& vars, const Rational& c) {
        Poly p(vars);
        if (!c.is_zero()) p.terms_.emplace(Monomial::unit(vars.size()), c);
        return p;
    }

    static Poly variable(const std::vector<std::string>& vars, std::size_t idx);

    static Poly term(const std::vector<std::string>& vars, Monomial m, const Rational& c) {
        Poly p(vars);
        if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    /// Total degree; kDegreeOfZero for the zero polynomial.
    int degree() const {
        int d = kDegreeOfZero;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    /// Highest exponent of variable i across all terms (0 when absent).
    std::uint32_t degree_in(std::size_t i) const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exp(i));
        return d;
    }

    bool depends_on(std::size_t i) const { return degree_in(i) > 0; }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coeff(Monomial::unit(vars_.size())); }

    void add_term(const Monomial& m, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Rational& c) const;
    Poly times_monomial(const Monomial& m, const Rational& c) const;
    Poly pow(unsigned e) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly partial_derivative(std::size_t var) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    /// Substitute a rational constant for one variable; ambient unchanged.
    Poly substitute(std::size_t var, const Rational& value) const;

    /// Ring morphism: variable i maps to images[i] (all over a common ambient).
    Poly map_variables(const std::vector<std::string>& new_vars,
                       const std::vector<Poly>& images) const;

    /// Reinterpret over a larger/permuted ambient; index_map[i] is the slot of
    /// old variable i in new_vars.
    Poly embed(const std::vector<std::string>& new_vars,
               const std::vector<std::size_t>& index_map) const;

    /// Restrict to a smaller ambient; every used variable must be kept.
    /// keep[i] is the index (in the old ambient) of new variable i.
    Poly restrict_to(const std::vector<std::string>& new_vars,
                     const std::vector<std::size_t>& keep) const;

    /// Leading term under a comparison function (largest monomial).
    std::pair<Monomial, Rational> leading_term(int (*cmp)(const Monomial&,
                                                          const Monomial&)) const;

    /// Canonical text form: graded-lex descending, re-parseable.
    std::string to_string() const;

  private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Positive rational c with p/c integer-coefficient and content 1; 0 for p = 0.
Rational poly_content(const Poly& p);

/// Multivariate gcd, normalized integer-primitive with positive leading
/// coefficient under the storage order. gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Quotient p / q when the division is exact, nullopt otherwise. q must be nonzero.
std::optional<Poly> exact_divide(const Poly& p, const Poly& q);

}  // namespace vfcert

#endif
