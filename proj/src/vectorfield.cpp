#include "vfcert/vectorfield.hpp"

#include <algorithm>
#include <stdexcept>

namespace vfcert {

VectorField::VectorField(std::vector<std::string> vars, std::vector<RatFunc> components)
    : vars_(std::move(vars)), components_(std::move(components)) {
    if (vars_.empty()) throw std::invalid_argument("VectorField: needs at least one variable");
    if (components_.size() != vars_.size())
        throw std::invalid_argument("VectorField: one component per variable required");
    for (const auto& c : components_)
        if (c.vars() != vars_) throw std::invalid_argument("VectorField: ambient mismatch");
}

VectorField VectorField::from_polys(const std::vector<std::string>& vars,
                                    const std::vector<Poly>& components) {
    std::vector<RatFunc> cs;
    cs.reserve(components.size());
    for (const Poly& p : components) cs.emplace_back(p);
    return VectorField(vars, std::move(cs));
}

VectorField VectorField::zero(const std::vector<std::string>& vars) {
    std::vector<RatFunc> cs(vars.size(), RatFunc::zero(vars));
    return VectorField(vars, std::move(cs));
}

bool VectorField::is_polynomial() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const RatFunc& c) { return c.is_polynomial(); });
}

bool VectorField::is_zero() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const RatFunc& c) { return c.is_zero(); });
}

VectorField VectorField::operator+(const VectorField& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("VectorField: ambient mismatch");
    std::vector<RatFunc> cs;
    for (std::size_t i = 0; i < components_.size(); ++i)
        cs.push_back(components_[i] + o.components_[i]);
    return VectorField(vars_, std::move(cs));
}

VectorField VectorField::operator-() const {
    std::vector<RatFunc> cs;
    for (const auto& c : components_) cs.push_back(-c);
    return VectorField(vars_, std::move(cs));
}

VectorField VectorField::scaled(const RatFunc& f) const {
    std::vector<RatFunc> cs;
    for (const auto& c : components_) cs.push_back(c * f);
    return VectorField(vars_, std::move(cs));
}

RatFunc apply_derivation(const VectorField& v, const RatFunc& f) {
    if (f.vars() != v.vars()) throw std::invalid_argument("apply_derivation: ambient mismatch");
    RatFunc acc = RatFunc::zero(v.vars());
    for (std::size_t i = 0; i < v.dimension(); ++i) {
        if (v.component(i).is_zero()) continue;
        acc += v.component(i) * f.partial_derivative(i);
    }
    return acc;
}

Poly apply_derivation(const VectorField& v, const Poly& f) {
    if (f.vars() != v.vars()) throw std::invalid_argument("apply_derivation: ambient mismatch");
    Poly acc(v.vars());
    for (std::size_t i = 0; i < v.dimension(); ++i)
        acc += v.poly_component(i) * f.partial_derivative(i);
    return acc;
}

VectorField lie_bracket(const VectorField& v, const VectorField& w) {
    if (v.vars() != w.vars()) throw std::invalid_argument("lie_bracket: ambient mismatch");
    std::vector<RatFunc> cs;
    for (std::size_t i = 0; i < v.dimension(); ++i)
        cs.push_back(apply_derivation(v, w.component(i)) - apply_derivation(w, v.component(i)));
    return VectorField(v.vars(), std::move(cs));
}

AffineDegree affine_degree(const VectorField& v) {
    if (!v.is_polynomial())
        throw std::invalid_argument("affine_degree: field has rational components");
    AffineDegree d;
    if (v.is_zero()) {
        d.zero_field = true;
        return d;
    }
    int deg = 0;
    for (std::size_t i = 0; i < v.dimension(); ++i)
        deg = std::max(deg, v.poly_component(i).degree());
    d.value = static_cast<unsigned>(deg);
    return d;
}

JetSequence jet_sequence(const VectorField& v, const RatFunc& f, unsigned order) {
    if (order < 1) throw std::invalid_argument("jet_sequence: order must be at least 1");
    JetSequence js;
    js.observable = f;
    js.entries.push_back(f);
    for (unsigned k = 0; k < order; ++k)
        js.entries.push_back(apply_derivation(v, js.entries.back()));
    return js;
}

std::string fresh_variable_name(const std::string& stem, const std::vector<std::string>& taken) {
    auto used = [&](const std::string& s) {
        return std::find(taken.begin(), taken.end(), s) != taken.end();
    };
    if (!used(stem)) return stem;
    for (int i = 0;; ++i) {
        std::string cand = stem + std::to_string(i);
        if (!used(cand)) return cand;
    }
}

std::vector<std::string> fiber_variable_names(const std::vector<std::string>& vars) {
    for (const std::string& stem : {"y", "yf", "eta"}) {
        std::vector<std::string> names;
        bool clash = false;
        for (std::size_t i = 1; i <= vars.size() && !clash; ++i) {
            std::string n = stem + std::to_string(i);
            clash = std::find(vars.begin(), vars.end(), n) != vars.end();
            names.push_back(n);
        }
        if (!clash) return names;
    }
    throw std::logic_error("fiber_variable_names: no stem available");
}

OdeExtraction extract_ode(const VectorField& v, const RatFunc& f, unsigned order,
                          const GroebnerOptions& opts) {
    if (!v.is_polynomial()) throw std::invalid_argument("extract_ode: field must be polynomial");
    if (f.vars() != v.vars()) throw std::invalid_argument("extract_ode: ambient mismatch");

    const std::vector<std::string>& base = v.vars();
    bool rational_obs = !f.is_polynomial();

    // working ambient: base variables (+ inverse-of-denominator when the
    // observable is rational) + jet variables
    std::vector<std::string> work = base;
    std::string inv_name;
    if (rational_obs) {
        inv_name = fresh_variable_name("s", work);
        work.push_back(inv_name);
    }
    std::vector<std::string> jets;
    {
        std::vector<std::string> taken = work;
        std::string stem = "Y";
        bool clash = false;
        for (unsigned k = 0; k <= order; ++k) {
            std::string n = stem + std::to_string(k);
            if (std::find(taken.begin(), taken.end(), n) != taken.end()) clash = true;
        }
        if (clash) stem = fresh_variable_name("Yjet", taken) + "_";
        for (unsigned k = 0; k <= order; ++k) jets.push_back(stem + std::to_string(k));
        for (const auto& j : jets) work.push_back(j);
    }

    std::vector<std::size_t> base_embed(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) base_embed[i] = i;

    // polynomial derivation on the working ring extending v; when an inverse
    // variable s = 1/den is present, ds = -s^2 * dv(den)
    std::vector<Poly> images;
    for (std::size_t i = 0; i < base.size(); ++i)
        images.push_back(apply_derivation(v, RatFunc(Poly::variable(base, i))).as_poly().embed(
            work, base_embed));
    Poly sat = Poly::zero(work);
    if (rational_obs) {
        Poly den_w = f.den().embed(work, base_embed);
        Poly dden_w = apply_derivation(v, f.den()).embed(work, base_embed);
        std::size_t s_idx = base.size();
        Poly s = Poly::variable(work, s_idx);
        images.push_back(-(s * s * dden_w));
        sat = den_w * s - Poly::constant(work, Rational(1));
    }
    auto derive = [&](const Poly& p) {
        Poly acc(work);
        for (std::size_t i = 0; i < images.size(); ++i)
            acc += images[i] * p.partial_derivative(i);
        return acc;
    };

    Poly g = rational_obs
                 ? f.num().embed(work, base_embed) * Poly::variable(work, base.size())
                 : f.as_poly().embed(work, base_embed);
    std::vector<Poly> gens;
    std::size_t jet0 = base.size() + (rational_obs ? 1 : 0);
    for (unsigned k = 0; k <= order; ++k) {
        gens.push_back(Poly::variable(work, jet0 + k) - g);
        if (k < order) g = derive(g);
    }
    if (rational_obs) gens.push_back(sat);

    Ideal full = Ideal::make(work, gens);
    Ideal elim = eliminate(full, jets, opts);
    return OdeExtraction{elim, elim.generators.size() == 1};
}

std::vector<std::vector<RatFunc>> variational_matrix(const VectorField& v) {
    std::size_t n = v.dimension();
    std::vector<std::vector<RatFunc>> a(n, std::vector<RatFunc>(n, RatFunc::zero(v.vars())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = v.component(j).partial_derivative(i);
    return a;
}

}  // namespace vfcert
