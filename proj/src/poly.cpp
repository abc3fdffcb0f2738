#include "vfcert/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace vfcert {

Poly Poly::variable(const std::vector<std::string>& vars, std::size_t idx) {
    if (idx >= vars.size()) throw std::out_of_range("Poly::variable: index out of range");
    std::vector<std::uint32_t> e(vars.size(), 0);
    e[idx] = 1;
    Poly p(vars);
    p.terms_.emplace(Monomial(std::move(e)), Rational(1));
    return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (vars_ != o.vars_) throw std::invalid_argument("Poly: ambient mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (vars_ != o.vars_) throw std::invalid_argument("Poly: ambient mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("Poly: ambient mismatch");
    Poly r(a.vars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

Poly Poly::times_monomial(const Monomial& m, const Rational& c) const {
    Poly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm.times(m), cc * c);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(vars_, Rational(1));
    Poly b(*this);
    while (e) {
        if (e & 1) r *= b;
        if (e >>= 1) b *= b;
    }
    return r;
}

Poly Poly::partial_derivative(std::size_t var) const {
    if (var >= vars_.size()) throw std::out_of_range("partial_derivative: unknown variable");
    Poly r(vars_);
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m.exp(var);
        if (e == 0) continue;
        std::vector<std::uint32_t> exps = m.exps();
        exps[var] = e - 1;
        r.add_term(Monomial(std::move(exps)), c * Rational(static_cast<long>(e)));
    }
    return r;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size())
        throw std::invalid_argument("evaluate: point arity mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (m.exp(i) > 0) t *= point[i].pow(m.exp(i));
        acc += t;
    }
    return acc;
}

Poly Poly::substitute(std::size_t var, const Rational& value) const {
    Poly r(vars_);
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m.exp(var);
        if (e == 0) {
            r.add_term(m, c);
        } else {
            std::vector<std::uint32_t> exps = m.exps();
            exps[var] = 0;
            r.add_term(Monomial(std::move(exps)), c * value.pow(e));
        }
    }
    return r;
}

Poly Poly::map_variables(const std::vector<std::string>& new_vars,
                         const std::vector<Poly>& images) const {
    if (images.size() != vars_.size())
        throw std::invalid_argument("map_variables: one image per variable required");
    Poly r = Poly::zero(new_vars);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(new_vars, c);
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (m.exp(i) > 0) t *= images[i].pow(m.exp(i));
        r += t;
    }
    return r;
}

Poly Poly::embed(const std::vector<std::string>& new_vars,
                 const std::vector<std::size_t>& index_map) const {
    Poly r(new_vars);
    for (const auto& [m, c] : terms_) {
        std::vector<std::uint32_t> e(new_vars.size(), 0);
        for (std::size_t i = 0; i < vars_.size(); ++i) e[index_map[i]] = m.exp(i);
        r.terms_.emplace(Monomial(std::move(e)), c);
    }
    return r;
}

Poly Poly::restrict_to(const std::vector<std::string>& new_vars,
                       const std::vector<std::size_t>& keep) const {
    std::vector<bool> kept(vars_.size(), false);
    for (std::size_t k : keep) kept[k] = true;
    Poly r(new_vars);
    for (const auto& [m, c] : terms_) {
        std::vector<std::uint32_t> e(new_vars.size(), 0);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (m.exp(i) == 0) continue;
            if (!kept[i])
                throw std::invalid_argument("restrict_to: polynomial uses a dropped variable");
        }
        for (std::size_t j = 0; j < keep.size(); ++j) e[j] = m.exp(keep[j]);
        r.terms_.emplace(Monomial(std::move(e)), c);
    }
    return r;
}

std::pair<Monomial, Rational> Poly::leading_term(int (*cmp)(const Monomial&,
                                                            const Monomial&)) const {
    if (terms_.empty()) throw std::domain_error("leading_term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (cmp(it->first, best->first) > 0) best = it;
    return {best->first, best->second};
}

namespace {

void print_monomial(std::ostringstream& os, const Monomial& m,
                    const std::vector<std::string>& vars, bool with_leading_star) {
    bool first = !with_leading_star;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!first) os << "*";
        first = false;
        os << vars[i];
        if (m.exp(i) > 1) os << "^" << m.exp(i);
    }
}

}  // namespace

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // storage order is grlex ascending; print descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        const Rational& c = it->second;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (m.is_one()) {
            os << a.to_string();
        } else if (a.is_one()) {
            print_monomial(os, m, vars_, false);
        } else {
            os << a.to_string();
            print_monomial(os, m, vars_, true);
        }
    }
    return os.str();
}

Rational poly_content(const Poly& p) {
    Rational g(0);
    for (const auto& [m, c] : p.terms()) g = rational_gcd(g, c);
    return g;
}

std::optional<Poly> exact_divide(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::domain_error("exact_divide: zero divisor");
    if (p.vars() != q.vars()) throw std::invalid_argument("exact_divide: ambient mismatch");
    Poly quotient(p.vars());
    Poly r = p;
    auto [qm, qc] = q.leading_term(cmp_grlex);
    while (!r.is_zero()) {
        auto [rm, rc] = r.leading_term(cmp_grlex);
        if (!qm.divides(rm)) return std::nullopt;
        Monomial t = qm.divide_into(rm);
        Rational c = rc / qc;
        quotient.add_term(t, c);
        r -= q.times_monomial(t, c);
    }
    return quotient;
}

namespace {

// Split p by the exponent of variable `var`: coefficient polynomials
// (still over the full ambient, free of `var`) indexed by that exponent.
std::map<std::uint32_t, Poly> coeffs_in(const Poly& p, std::size_t var) {
    std::map<std::uint32_t, Poly> out;
    for (const auto& [m, c] : p.terms()) {
        std::uint32_t e = m.exp(var);
        std::vector<std::uint32_t> exps = m.exps();
        exps[var] = 0;
        auto it = out.find(e);
        if (it == out.end()) it = out.emplace(e, Poly::zero(p.vars())).first;
        it->second.add_term(Monomial(std::move(exps)), c);
    }
    return out;
}

Poly monomial_in(const std::vector<std::string>& vars, std::size_t var, std::uint32_t e) {
    std::vector<std::uint32_t> exps(vars.size(), 0);
    exps[var] = e;
    return Poly::term(vars, Monomial(std::move(exps)), Rational(1));
}

// gcd treating everything through the last genuinely-used variable.
// Content/primitive-part recursion with a primitive pseudo-remainder
// sequence; the known hot spot at scale, fine on desk-sized inputs.
Poly gcd_rec(const Poly& a, const Poly& b);

// largest variable index used by either polynomial, or npos if both constant
std::size_t top_variable(const Poly& a, const Poly& b) {
    for (std::size_t i = a.nvars(); i-- > 0;)
        if (a.depends_on(i) || b.depends_on(i)) return i;
    return static_cast<std::size_t>(-1);
}

// content of p viewed as a univariate in `var` with polynomial coefficients
Poly content_wrt(const Poly& p, std::size_t var) {
    Poly g = Poly::zero(p.vars());
    for (auto& [e, coeff] : coeffs_in(p, var)) g = gcd_rec(g, coeff);
    return g;
}

// pseudo-remainder of a by b as univariates in `var` (deg_var(a) >= deg_var(b))
Poly pseudo_rem(Poly a, const Poly& b, std::size_t var) {
    auto bc = coeffs_in(b, var);
    std::uint32_t db = b.degree_in(var);
    Poly lead_b = bc.at(db);
    while (!a.is_zero() && a.degree_in(var) >= db) {
        std::uint32_t da = a.degree_in(var);
        Poly lead_a = coeffs_in(a, var).at(da);
        a = a * lead_b - b * (lead_a * monomial_in(a.vars(), var, da - db));
        if (!a.is_zero() && a.degree_in(var) >= da)
            throw std::logic_error("pseudo_rem: leading term did not cancel");
    }
    return a;
}

Poly make_primitive(const Poly& p) {
    Rational c = poly_content(p);
    if (c.is_zero()) return p;
    Poly q = p.scaled(c.reciprocal());
    if (q.leading_term(cmp_grlex).second.sign() < 0) q = -q;
    return q;
}

Poly gcd_rec(const Poly& a, const Poly& b) {
    if (a.is_zero()) return make_primitive(b);
    if (b.is_zero()) return make_primitive(a);
    std::size_t var = top_variable(a, b);
    if (var == static_cast<std::size_t>(-1))
        return Poly::constant(a.vars(), Rational(1));  // both nonzero constants

    Poly ca = content_wrt(a, var), cb = content_wrt(b, var);
    Poly cg = gcd_rec(ca, cb);
    std::optional<Poly> pa = exact_divide(a, ca), pb = exact_divide(b, cb);
    Poly u = make_primitive(*pa), v = make_primitive(*pb);
    if (u.degree_in(var) < v.degree_in(var)) std::swap(u, v);
    while (!v.is_zero()) {
        if (v.degree_in(var) == 0) {  // primitive, hence a unit: parts are coprime
            u = v;
            break;
        }
        Poly r = pseudo_rem(u, v, var);
        u = v;
        v = r.is_zero() ? r : make_primitive(exact_divide(r, content_wrt(r, var)).value());
        if (!v.is_zero() && v.degree_in(var) >= u.degree_in(var))
            throw std::logic_error("gcd_rec: PRS not decreasing");
    }
    return make_primitive(cg * u);
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.vars() != b.vars()) throw std::invalid_argument("poly_gcd: ambient mismatch");
    if (a.is_zero() && b.is_zero()) return a;
    return gcd_rec(a, b);
}

}  // namespace vfcert
