#include "vfcert/prolongation.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "vfcert/linalg.hpp"

namespace vfcert {

namespace {

// combined ambient (x..., y...) and the embedding of the base block
std::vector<std::string> cotangent_vars(const std::vector<std::string>& base,
                                        const std::vector<std::string>& fiber) {
    std::vector<std::string> all = base;
    all.insert(all.end(), fiber.begin(), fiber.end());
    return all;
}

std::vector<std::size_t> base_embedding(std::size_t n) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    return idx;
}

bool fiber_homogeneous(const Poly& g, std::size_t base_count) {
    if (g.is_zero()) return true;
    int deg = -1;
    for (const auto& [m, c] : g.terms()) {
        int d = 0;
        for (std::size_t i = base_count; i < m.nvars(); ++i) d += static_cast<int>(m.exp(i));
        if (deg == -1) deg = d;
        if (d != deg) return false;
    }
    return true;
}

}  // namespace

HorizontalIdeal HorizontalIdeal::make(std::vector<std::string> base_vars,
                                      std::vector<std::string> fiber_vars,
                                      const std::vector<Poly>& generators) {
    HorizontalIdeal h;
    h.base_vars = std::move(base_vars);
    h.fiber_vars = std::move(fiber_vars);
    std::vector<std::string> all = cotangent_vars(h.base_vars, h.fiber_vars);
    for (const Poly& g : generators) {
        if (g.vars() != all) throw std::invalid_argument("HorizontalIdeal: ambient mismatch");
        if (!fiber_homogeneous(g, h.base_vars.size()))
            throw std::invalid_argument(
                "HorizontalIdeal: generator is not homogeneous in the fiber block");
    }
    h.ideal = Ideal::make(all, generators);
    h.homogeneous = true;
    return h;
}

ProlongedField first_prolongation(const VectorField& v) {
    if (!v.is_polynomial())
        throw std::invalid_argument(
            "first_prolongation: field must be polynomial (clear denominators first)");
    std::size_t n = v.dimension();
    std::vector<std::string> fiber = fiber_variable_names(v.vars());
    std::vector<std::string> all = cotangent_vars(v.vars(), fiber);
    auto embed = base_embedding(n);

    std::vector<RatFunc> comps;
    for (std::size_t i = 0; i < n; ++i)
        comps.emplace_back(v.poly_component(i).embed(all, embed));
    for (std::size_t i = 0; i < n; ++i) {
        Poly yi(all);
        for (std::size_t j = 0; j < n; ++j) {
            Poly d = v.poly_component(j).partial_derivative(i);
            if (d.is_zero()) continue;
            yi += d.embed(all, embed) * Poly::variable(all, n + j);
        }
        comps.emplace_back(-yi);
    }
    return ProlongedField{v, VectorField(all, std::move(comps)), std::move(fiber)};
}

Poly tautological_form(const VectorField& w, const std::vector<std::string>& fiber_vars) {
    if (!w.is_polynomial())
        throw std::invalid_argument("tautological_form: field must be polynomial");
    std::size_t n = w.dimension();
    std::vector<std::string> all = cotangent_vars(w.vars(), fiber_vars);
    auto embed = base_embedding(n);
    Poly acc(all);
    for (std::size_t i = 0; i < n; ++i)
        acc += w.poly_component(i).embed(all, embed) * Poly::variable(all, n + i);
    return acc;
}

Poly tautological_form(const VectorField& w) {
    return tautological_form(w, fiber_variable_names(w.vars()));
}

HorizontalIdeal canonical_hypersurface(const VectorField& v) {
    if (v.is_zero()) throw std::invalid_argument("canonical_hypersurface: zero field");
    std::vector<std::string> fiber = fiber_variable_names(v.vars());
    return HorizontalIdeal::make(v.vars(), fiber, {tautological_form(v, fiber)});
}

Check check_horizontal_invariant(const ProlongedField& pv, const HorizontalIdeal& h,
                                 const GroebnerOptions& opts) {
    if (pv.full.vars() != h.ideal.vars)
        throw std::invalid_argument("check_horizontal_invariant: ambient mismatch");
    try {
        GroebnerBasis gb = buchberger(h.ideal, MonomialOrder::grevlex(), opts);
        for (const Poly& g : h.ideal.generators) {
            RatFunc dg = apply_derivation(pv.full, RatFunc(g));
            if (!normal_form(dg.as_poly(), gb, opts).is_zero()) return Check::False;
        }
        return Check::True;
    } catch (const BudgetExhausted&) {
        return Check::Indeterminate;
    }
}

HorizontalIdeal distribution_conormal_ideal(const std::vector<VectorField>& spanning,
                                            std::uint64_t seed) {
    if (spanning.empty())
        throw std::invalid_argument("distribution_conormal_ideal: empty spanning set");
    const std::vector<std::string>& base = spanning.front().vars();
    std::size_t n = base.size(), r = spanning.size();
    for (const auto& xi : spanning) {
        if (xi.vars() != base)
            throw std::invalid_argument("distribution_conormal_ideal: ambient mismatch");
        if (!xi.is_polynomial())
            throw std::invalid_argument("distribution_conormal_ideal: fields must be polynomial");
    }
    if (r > n)
        throw std::invalid_argument("distribution_conormal_ideal: more fields than dimension");

    // probe generic linear independence at random rational points
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 7);
    std::string witness;
    bool independent = false;
    for (int attempt = 0; attempt < 3 && !independent; ++attempt) {
        std::vector<Rational> pt;
        for (std::size_t i = 0; i < n; ++i) pt.emplace_back(num(rng), den(rng));
        QMatrix m(r, n);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = spanning[i].poly_component(j).evaluate(pt);
        if (m.rank() == r) {
            independent = true;
        } else {
            auto ker = nullspace(m.transpose());
            std::ostringstream os;
            os << "point (";
            for (std::size_t i = 0; i < n; ++i)
                os << (i ? ", " : "") << pt[i].to_string();
            os << ")";
            if (!ker.empty()) {
                os << ", dependence (";
                for (std::size_t i = 0; i < ker[0].size(); ++i)
                    os << (i ? ", " : "") << ker[0][i].to_string();
                os << ")";
            }
            witness = os.str();
        }
    }
    if (!independent)
        throw std::invalid_argument(
            "distribution_conormal_ideal: spanning set dependent at probe " + witness);

    std::vector<std::string> fiber = fiber_variable_names(base);
    std::vector<Poly> gens;
    for (const auto& xi : spanning) gens.push_back(tautological_form(xi, fiber));
    return HorizontalIdeal::make(base, fiber, gens);
}

bool bott_restriction_check(const VectorField& v, const Poly& f) {
    if (v.is_zero()) throw std::invalid_argument("bott_restriction_check: zero field");
    if (f.vars() != v.vars())
        throw std::invalid_argument("bott_restriction_check: ambient mismatch");
    std::size_t n = v.dimension();
    std::vector<Poly> scaled;
    for (std::size_t i = 0; i < n; ++i) scaled.push_back(f * v.poly_component(i));
    ProlongedField pf = first_prolongation(VectorField::from_polys(v.vars(), scaled));
    ProlongedField pv = first_prolongation(v);
    const std::vector<std::string>& all = pv.full.vars();
    auto embed = base_embedding(n);
    Poly f_up = f.embed(all, embed);
    Poly vbar = tautological_form(v, pv.fiber_vars);
    for (std::size_t i = 0; i < n; ++i) {
        Poly diff = pf.full.poly_component(n + i) - f_up * pv.full.poly_component(n + i);
        if (diff.is_zero()) continue;
        if (!exact_divide(diff, vbar).has_value()) return false;
    }
    return true;
}

}  // namespace vfcert
