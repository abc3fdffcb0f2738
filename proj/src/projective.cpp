#include "vfcert/projective.hpp"

#include <algorithm>
#include <stdexcept>

namespace vfcert {

namespace {

bool homogeneous_of_degree(const Poly& p, int d) {
    for (const auto& [m, c] : p.terms())
        if (m.degree() != d) return false;
    return true;
}

}  // namespace

std::vector<std::string> projective_vars(std::size_t n) {
    std::vector<std::string> vars;
    for (std::size_t i = 0; i <= n; ++i) vars.push_back("X" + std::to_string(i));
    return vars;
}

HomogeneousField HomogeneousField::make(std::vector<Poly> components, int twist_degree) {
    if (components.size() < 2)
        throw std::invalid_argument("HomogeneousField: needs at least two components");
    HomogeneousField h;
    h.vars = projective_vars(components.size() - 1);
    for (const Poly& f : components) {
        if (f.vars() != h.vars)
            throw std::invalid_argument("HomogeneousField: components must live on X0..Xn");
        if (!f.is_zero() && !homogeneous_of_degree(f, twist_degree + 1))
            throw std::invalid_argument(
                "HomogeneousField: components must be homogeneous of degree twist + 1");
    }
    h.components = std::move(components);
    h.twist_degree = twist_degree;
    return h;
}

HomogeneousField euler_field(std::size_t n) {
    if (n < 1) throw std::invalid_argument("euler_field: n must be at least 1");
    std::vector<std::string> vars = projective_vars(n);
    std::vector<Poly> comps;
    for (std::size_t i = 0; i <= n; ++i) comps.push_back(Poly::variable(vars, i));
    return HomogeneousField::make(std::move(comps), 0);
}

HomogeneousField homogenize_affine(const VectorField& v, unsigned d) {
    if (!v.is_polynomial())
        throw std::invalid_argument("homogenize_affine: field must be polynomial");
    AffineDegree deg = affine_degree(v);
    if (!deg.zero_field && deg.value > d)
        throw std::invalid_argument("homogenize_affine: affine degree exceeds d");
    std::size_t n = v.dimension();
    std::vector<std::string> vars = projective_vars(n);
    std::vector<Poly> comps(n + 1, Poly::zero(vars));
    for (std::size_t i = 0; i < n; ++i) {
        Poly f = v.poly_component(i);
        Poly F(vars);
        for (const auto& [m, c] : f.terms()) {
            std::vector<std::uint32_t> e(n + 1, 0);
            e[0] = d - static_cast<std::uint32_t>(m.degree());
            for (std::size_t j = 0; j < n; ++j) e[j + 1] = m.exp(j);
            F.add_term(Monomial(std::move(e)), c);
        }
        comps[i + 1] = F;
    }
    return HomogeneousField::make(std::move(comps), static_cast<int>(d) - 1);
}

namespace {

std::vector<std::string> default_affine_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

}  // namespace

VectorField dehomogenize(const HomogeneousField& h, std::vector<std::string> names) {
    if (!h.components[0].is_zero())
        throw std::invalid_argument(
            "dehomogenize: F0 != 0; subtract the Euler multiple (F0/X0) E first");
    std::size_t n = h.projective_dim();
    if (names.empty()) names = default_affine_names(n);
    if (names.size() != n) throw std::invalid_argument("dehomogenize: need n chart names");
    std::vector<Poly> images;
    images.push_back(Poly::constant(names, Rational(1)));  // X0 -> 1
    for (std::size_t j = 0; j < n; ++j) images.push_back(Poly::variable(names, j));
    std::vector<Poly> comps;
    for (std::size_t i = 1; i <= n; ++i)
        comps.push_back(h.components[i].map_variables(names, images));
    return VectorField::from_polys(names, comps);
}

VectorField chart_derivation(const HomogeneousField& h, std::size_t chart,
                             std::vector<std::string> names) {
    std::size_t n = h.projective_dim();
    if (chart > n) throw std::invalid_argument("chart_derivation: chart index out of range");
    if (names.empty()) {
        if (chart == 0) {
            names = default_affine_names(n);
        } else {
            for (std::size_t j = 0; j <= n; ++j)
                if (j != chart) names.push_back("u" + std::to_string(j));
        }
    }
    if (names.size() != n) throw std::invalid_argument("chart_derivation: need n chart names");
    // X_j -> u_j (j != chart), X_chart -> 1
    std::vector<Poly> images;
    std::size_t pos = 0;
    for (std::size_t j = 0; j <= n; ++j) {
        if (j == chart)
            images.push_back(Poly::constant(names, Rational(1)));
        else
            images.push_back(Poly::variable(names, pos++));
    }
    Poly f_chart = h.components[chart].map_variables(names, images);
    std::vector<Poly> comps;
    pos = 0;
    for (std::size_t j = 0; j <= n; ++j) {
        if (j == chart) continue;
        Poly fj = h.components[j].map_variables(names, images);
        comps.push_back(fj - Poly::variable(names, pos) * f_chart);
        ++pos;
    }
    return VectorField::from_polys(names, comps);
}

bool hyperplane_invariant(const HomogeneousField& h) {
    if (h.components[0].is_zero()) return true;
    return exact_divide(h.components[0], Poly::variable(h.vars, 0)).has_value();
}

bool modulo_euler_equal(const HomogeneousField& h1, const HomogeneousField& h2) {
    if (h1.vars != h2.vars || h1.twist_degree != h2.twist_degree)
        throw std::invalid_argument("modulo_euler_equal: incompatible fields");
    std::size_t n = h1.projective_dim();
    std::vector<Poly> diff;
    bool all_zero = true;
    for (std::size_t i = 0; i <= n; ++i) {
        diff.push_back(h1.components[i] - h2.components[i]);
        all_zero = all_zero && diff.back().is_zero();
    }
    if (all_zero) return true;
    // find the multiplier from the first nonzero difference
    Poly f(h1.vars);
    for (std::size_t i = 0; i <= n; ++i) {
        if (diff[i].is_zero()) continue;
        auto q = exact_divide(diff[i], Poly::variable(h1.vars, i));
        if (!q) return false;
        f = *q;
        break;
    }
    for (std::size_t i = 0; i <= n; ++i)
        if (diff[i] != f * Poly::variable(h1.vars, i)) return false;
    return true;
}

unsigned pole_order(const VectorField& v, const std::string& hyperplane_var) {
    auto it = std::find(v.vars().begin(), v.vars().end(), hyperplane_var);
    if (it == v.vars().end())
        throw std::invalid_argument("pole_order: unknown hyperplane variable");
    std::size_t idx = static_cast<std::size_t>(it - v.vars().begin());
    auto min_exp = [&](const Poly& p) {
        std::uint32_t m = 0;
        bool first = true;
        for (const auto& [mon, c] : p.terms()) {
            if (first || mon.exp(idx) < m) m = mon.exp(idx);
            first = false;
        }
        return static_cast<long>(m);
    };
    long worst = 0;
    for (const RatFunc& c : v.components()) {
        if (c.is_zero()) continue;
        long val = min_exp(c.num()) - min_exp(c.den());
        worst = std::min(worst, val);
    }
    return static_cast<unsigned>(-worst);
}

}  // namespace vfcert
