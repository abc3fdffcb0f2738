#include "vfcert/unipoly.hpp"

#include <stdexcept>

namespace vfcert {

UniPoly UniPoly::from_poly(const Poly& p) {
    if (p.nvars() != 1) throw std::invalid_argument("UniPoly: polynomial is not univariate");
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, p.degree() + 1)), Rational(0));
    for (const auto& [m, coeff] : p.terms()) c[m.exp(0)] = coeff;
    return UniPoly(std::move(c));
}

Poly UniPoly::to_poly(const std::string& var) const {
    Poly p({var});
    for (std::size_t i = 0; i < c_.size(); ++i)
        p.add_term(Monomial(std::vector<std::uint32_t>{static_cast<std::uint32_t>(i)}), c_[i]);
    return p;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

int UniPoly::sign_at_neg_inf() const {
    if (is_zero()) return 0;
    int s = leading().sign();
    return (degree() % 2 == 0) ? s : -s;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rational& r) const {
    std::vector<Rational> c(c_);
    for (auto& x : c) x *= r;
    return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("UniPoly: division by zero");
    std::vector<Rational> r = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
    Rational inv = b.leading().reciprocal();
    for (int i = a.degree(); i >= db; --i) {
        Rational f = r[static_cast<std::size_t>(i)] * inv;
        if (f.is_zero()) continue;
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(i - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly u = a, v = b;
    while (!v.is_zero()) {
        UniPoly r = divrem(u, v).second;
        u = v;
        v = r;
    }
    if (u.is_zero()) return u;
    return u.scaled(u.leading().reciprocal());
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return *this;
    Rational g(0);
    for (const auto& x : c_) g = rational_gcd(g, x);
    if (leading().sign() < 0) g = -g;
    return scaled(g.reciprocal());
}

UniPoly UniPoly::squarefree_part() const {
    if (is_zero()) return *this;
    UniPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return primitive();
    return divrem(*this, g).first.primitive();
}

UniPoly UniPoly::compose_affine(const Rational& a, const Rational& b) const {
    // Horner on t -> a t + b
    UniPoly lin(std::vector<Rational>{b, a});
    UniPoly acc;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * lin;
        acc = acc + UniPoly(std::vector<Rational>{c_[i]});
    }
    return acc;
}

std::string UniPoly::to_string(const std::string& var) const { return to_poly(var).to_string(); }

SturmSequence::SturmSequence(const UniPoly& f) {
    chain_.push_back(f);
    if (f.degree() >= 1) {
        chain_.push_back(f.derivative());
        while (chain_.back().degree() >= 1) {
            UniPoly r = UniPoly::divrem(chain_[chain_.size() - 2], chain_.back()).second;
            if (r.is_zero()) break;
            r = r.neg();
            // rescale by a positive constant only; sign flips would break the chain
            Rational g(0);
            for (const auto& x : r.coeffs()) g = rational_gcd(g, x);
            chain_.push_back(r.scaled(g.reciprocal()));
        }
    }
}

namespace {

int count_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

int SturmSequence::variations_at(const Rational& x) const {
    std::vector<int> signs;
    for (const auto& p : chain_) signs.push_back(p.sign_at(x));
    return count_variations(signs);
}

int SturmSequence::variations_at_neg_inf() const {
    std::vector<int> signs;
    for (const auto& p : chain_) signs.push_back(p.sign_at_neg_inf());
    return count_variations(signs);
}

int SturmSequence::variations_at_pos_inf() const {
    std::vector<int> signs;
    for (const auto& p : chain_) signs.push_back(p.sign_at_pos_inf());
    return count_variations(signs);
}

int SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
    return variations_at(lo) - variations_at(hi);
}

int SturmSequence::count_all_roots() const {
    return variations_at_neg_inf() - variations_at_pos_inf();
}

Rational cauchy_root_bound(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("cauchy_root_bound: zero polynomial");
    Rational m(0);
    Rational inv = f.leading().abs().reciprocal();
    for (int i = 0; i < f.degree(); ++i) {
        Rational r = f.coeff(static_cast<std::size_t>(i)).abs() * inv;
        if (r > m) m = r;
    }
    return m + Rational(2);
}

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("simplest_rational_in: empty interval");
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (hi.sign() < 0) return -simplest_rational_in(-hi, -lo);
    // 0 < lo <= hi: Stern-Brocot descent
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.numerator().get_mpz_t(), lo.denominator().get_mpz_t());
    Rational floor_lo{fl};
    Rational ceil_lo = (floor_lo == lo) ? lo : Rational(mpz_class(fl + 1));
    if (ceil_lo <= hi) return ceil_lo;
    // same integer part: simplest = fl + 1/simplest(1/(hi-fl), 1/(lo-fl))
    Rational rec = simplest_rational_in((hi - floor_lo).reciprocal(), (lo - floor_lo).reciprocal());
    return floor_lo + rec.reciprocal();
}

namespace {

// Bareiss fraction-free determinant of a matrix with Poly entries.
Poly poly_determinant(std::vector<std::vector<Poly>> m, const std::vector<std::string>& vars) {
    std::size_t n = m.size();
    if (n == 0) return Poly::constant(vars, Rational(1));
    Poly denom = Poly::constant(vars, Rational(1));
    int sign = 1;
    for (std::size_t k = 0; k < n - 1; ++k) {
        // pivot selection: first nonzero in column k at or below row k
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return Poly::zero(vars);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_divide(num, denom).value();
            }
            m[i][k] = Poly::zero(vars);
        }
        denom = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

Poly resultant(const Poly& f, const Poly& g, std::size_t var) {
    const std::vector<std::string>& vars = f.vars();
    if (g.vars() != vars) throw std::invalid_argument("resultant: ambient mismatch");
    int df = static_cast<int>(f.degree_in(var));
    int dg = static_cast<int>(g.degree_in(var));
    if (f.is_zero() || g.is_zero()) return Poly::zero(vars);
    if (df == 0 && dg == 0) return Poly::constant(vars, Rational(1));
    // coefficient extraction by exponent of `var`
    auto coeff_of = [&](const Poly& p, int e) {
        Poly c(vars);
        for (const auto& [m, cc] : p.terms()) {
            if (static_cast<int>(m.exp(var)) != e) continue;
            std::vector<std::uint32_t> ex = m.exps();
            ex[var] = 0;
            c.add_term(Monomial(std::move(ex)), cc);
        }
        return c;
    };
    std::size_t n = static_cast<std::size_t>(df + dg);
    std::vector<std::vector<Poly>> s(n, std::vector<Poly>(n, Poly::zero(vars)));
    for (int r = 0; r < dg; ++r)
        for (int i = 0; i <= df; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = coeff_of(f, df - i);
    for (int r = 0; r < df; ++r)
        for (int i = 0; i <= dg; ++i)
            s[static_cast<std::size_t>(dg + r)][static_cast<std::size_t>(r + i)] = coeff_of(g, dg - i);
    return poly_determinant(std::move(s), vars);
}

}  // namespace vfcert
