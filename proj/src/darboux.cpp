#include "vfcert/darboux.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "vfcert/roots.hpp"
#include "vfcert/unipoly.hpp"

namespace vfcert {

std::optional<Poly> cofactor_of(const VectorField& v, const Poly& g) {
    if (!v.is_polynomial()) throw std::invalid_argument("cofactor_of: field must be polynomial");
    if (g.is_constant()) throw std::invalid_argument("cofactor_of: g must be nonconstant");
    if (g.vars() != v.vars()) throw std::invalid_argument("cofactor_of: ambient mismatch");
    return exact_divide(apply_derivation(v, g), g);
}

RationalPointSolve solve_rational_points(const Ideal& ideal, const GroebnerOptions& opts) {
    RationalPointSolve out;
    std::size_t n = ideal.vars.size();
    if (ideal.generators.empty()) {
        // zero ideal: whole space
        if (n == 0)
            out.points.push_back({});
        else
            out.zero_dimensional = false;
        return out;
    }
    // cheap grevlex pass first: most systems are inconsistent or settle
    // zero-dimensionality without paying for a lex basis
    GroebnerBasis pre = buchberger(ideal, MonomialOrder::grevlex(), opts);
    for (const Poly& g : pre.basis)
        if (g.is_constant() && !g.is_zero()) {
            out.basis_text.push_back(g.to_string());
            return out;  // unit ideal: no points
        }
    GroebnerBasis gb = buchberger(Ideal::make(ideal.vars, pre.basis), MonomialOrder::lex(), opts);
    for (const Poly& g : gb.basis) out.basis_text.push_back(g.to_string());
    for (const Poly& g : gb.basis)
        if (g.is_constant() && !g.is_zero()) return out;  // unit ideal: no points
    if (!is_zero_dimensional(gb)) {
        out.zero_dimensional = false;
        std::vector<bool> has_power(n, false);
        for (const Poly& g : gb.basis) {
            Monomial lm = g.terms().begin()->first;
            for (const auto& [m, c] : g.terms())
                if (gb.order.compare(m, lm) > 0) lm = m;
            for (std::size_t i = 0; i < n; ++i)
                if (lm.is_pure_power_of(i)) has_power[i] = true;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (!has_power[i]) out.free_vars.push_back(i);
        return out;
    }

    // univariate element in the lex-smallest variable
    const Poly* uni = nullptr;
    for (const Poly& g : gb.basis) {
        bool only_last = true;
        for (std::size_t i = 0; i + 1 < n && only_last; ++i)
            if (g.depends_on(i)) only_last = false;
        if (only_last && g.depends_on(n - 1)) {
            uni = &g;
            break;
        }
    }
    if (uni == nullptr) throw std::logic_error("solve_rational_points: no univariate element");

    UniPoly f = UniPoly::from_poly(uni->restrict_to({ideal.vars[n - 1]}, {n - 1}));
    RationalRoots rr = rational_roots(f);
    out.irrational_branches += rr.irrational;
    for (const Rational& alpha : rr.roots) {
        if (n == 1) {
            out.points.push_back({alpha});
            continue;
        }
        std::vector<std::string> rest(ideal.vars.begin(), ideal.vars.end() - 1);
        std::vector<std::size_t> keep(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) keep[i] = i;
        std::vector<Poly> sub;
        for (const Poly& g : gb.basis) {
            Poly s = g.substitute(n - 1, alpha);
            if (!s.is_zero()) sub.push_back(s.restrict_to(rest, keep));
        }
        RationalPointSolve rec = solve_rational_points(Ideal::make(rest, sub), opts);
        if (!rec.zero_dimensional)
            throw std::logic_error("solve_rational_points: fiber not zero-dimensional");
        out.irrational_branches += rec.irrational_branches;
        for (auto& p : rec.points) {
            p.push_back(alpha);
            out.points.push_back(std::move(p));
        }
    }
    return out;
}

namespace {

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned maxdeg) {
    // all monomials of total degree <= maxdeg, grevlex ascending
    std::vector<Monomial> out;
    std::vector<std::uint32_t> e(nvars, 0);
    // enumerate by odometer over the degree-bounded box, then sort
    for (;;) {
        int deg = 0;
        for (auto x : e) deg += static_cast<int>(x);
        if (deg <= static_cast<int>(maxdeg)) out.push_back(Monomial(e));
        std::size_t pos = nvars;
        while (pos > 0) {
            --pos;
            if (e[pos] < maxdeg) {
                ++e[pos];
                for (std::size_t q = pos + 1; q < nvars; ++q) e[q] = 0;
                break;
            }
            if (pos == 0) {
                pos = nvars;
                break;
            }
        }
        if (pos == nvars) break;
    }
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return cmp_grevlex(a, b) < 0; });
    return out;
}

struct StratumSystem {
    Ideal ideal;                          // over the coefficient variables
    std::vector<std::string> coeff_vars;  // c..., e...
};

// coefficient equations of dv(g) - h g = 0 for the stratum with leading
// monomial `m`; unknowns are the coefficients of the smaller monomials of g
// and all coefficients of h
StratumSystem stratum_system(const VectorField& v, const Monomial& m,
                             const std::vector<Monomial>& smaller,
                             const std::vector<Monomial>& h_mons) {
    const std::vector<std::string>& xv = v.vars();
    std::size_t n = xv.size();
    std::vector<std::string> cvars, evars;
    for (std::size_t i = 0; i < smaller.size(); ++i) cvars.push_back("c" + std::to_string(i));
    for (std::size_t j = 0; j < h_mons.size(); ++j) evars.push_back("e" + std::to_string(j));
    std::vector<std::string> all = xv;
    all.insert(all.end(), cvars.begin(), cvars.end());
    all.insert(all.end(), evars.begin(), evars.end());
    std::size_t nc = cvars.size();

    auto lift_mon = [&](const Monomial& mm) {
        std::vector<std::uint32_t> e(all.size(), 0);
        for (std::size_t i = 0; i < n; ++i) e[i] = mm.exp(i);
        return Monomial(std::move(e));
    };

    Poly g(all);
    g.add_term(lift_mon(m), Rational(1));
    for (std::size_t i = 0; i < smaller.size(); ++i)
        g += Poly::term(all, lift_mon(smaller[i]), Rational(1)) * Poly::variable(all, n + i);
    Poly h(all);
    for (std::size_t j = 0; j < h_mons.size(); ++j)
        h += Poly::term(all, lift_mon(h_mons[j]), Rational(1)) *
             Poly::variable(all, n + nc + j);

    std::vector<std::size_t> embed(n);
    for (std::size_t i = 0; i < n; ++i) embed[i] = i;
    Poly defect(all);
    for (std::size_t k = 0; k < n; ++k)
        defect += v.poly_component(k).embed(all, embed) * g.partial_derivative(k);
    defect -= h * g;

    // group by the x-part of each monomial
    std::vector<std::string> coeff_vars = cvars;
    coeff_vars.insert(coeff_vars.end(), evars.begin(), evars.end());
    std::vector<std::size_t> keep(coeff_vars.size());
    for (std::size_t i = 0; i < coeff_vars.size(); ++i) keep[i] = n + i;
    std::map<std::vector<std::uint32_t>, Poly> by_x;
    for (const auto& [mon, c] : defect.terms()) {
        std::vector<std::uint32_t> xpart(mon.exps().begin(), mon.exps().begin() + static_cast<long>(n));
        std::vector<std::uint32_t> cepart(mon.exps().begin() + static_cast<long>(n), mon.exps().end());
        auto it = by_x.find(xpart);
        if (it == by_x.end()) it = by_x.emplace(xpart, Poly(coeff_vars)).first;
        it->second.add_term(Monomial(std::move(cepart)), c);
    }
    std::vector<Poly> eqs;
    for (auto& [x, p] : by_x)
        if (!p.is_zero()) eqs.push_back(p);
    return StratumSystem{Ideal::make(coeff_vars, eqs), coeff_vars};
}

Poly assemble(const std::vector<std::string>& xv, const Monomial* lead,
              const std::vector<Monomial>& mons, const std::vector<Rational>& coeffs) {
    Poly p(xv);
    if (lead) p.add_term(*lead, Rational(1));
    for (std::size_t i = 0; i < mons.size(); ++i) p.add_term(mons[i], coeffs[i]);
    return p;
}

// Substitute a polynomial (free of variable j, same ambient) for variable j.
Poly substitute_variable(const Poly& p, std::size_t j, const Poly& def) {
    std::map<std::uint32_t, Poly> parts;
    for (const auto& [m, c] : p.terms()) {
        std::uint32_t e = m.exp(j);
        std::vector<std::uint32_t> ex = m.exps();
        ex[j] = 0;
        auto it = parts.find(e);
        if (it == parts.end()) it = parts.emplace(e, Poly(p.vars())).first;
        it->second.add_term(Monomial(std::move(ex)), c);
    }
    Poly out(p.vars());
    for (auto& [e, q] : parts) out += q * def.pow(e);
    return out;
}

// Constant-pivot elimination: repeatedly solve an equation a*z_j + rest = 0
// with a a nonzero rational and rest free of z_j, substitute everywhere, and
// remember the assignment. Shrinks the bilinear stratum systems to a core
// the Groebner machinery handles cheaply.
struct Presolve {
    std::vector<Poly> remaining;                        // free of solved variables
    std::vector<std::pair<std::size_t, Poly>> solved;   // z_j -> definition (in scan order)
    std::vector<bool> is_solved;
};

Presolve presolve_linear(const Ideal& sys) {
    Presolve ps;
    ps.remaining = sys.generators;
    ps.is_solved.assign(sys.vars.size(), false);
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t ei = 0; ei < ps.remaining.size() && !progress; ++ei) {
            const Poly& eq = ps.remaining[ei];
            for (std::size_t j = 0; j < sys.vars.size() && !progress; ++j) {
                if (ps.is_solved[j]) continue;
                // linear in z_j with a constant coefficient: the only term
                // containing z_j is a * z_j
                Rational a(0);
                bool ok = true;
                for (const auto& [m, c] : eq.terms()) {
                    if (m.exp(j) == 0) continue;
                    if (m.exp(j) == 1 && m.degree() == 1) {
                        if (!a.is_zero()) ok = false;  // two z_j terms cannot happen
                        a = c;
                    } else {
                        ok = false;
                    }
                }
                if (!ok || a.is_zero()) continue;
                Poly def = (Poly::variable(sys.vars, j).scaled(a) - eq).scaled(a.reciprocal());
                std::vector<Poly> next;
                for (std::size_t k = 0; k < ps.remaining.size(); ++k) {
                    if (k == ei) continue;
                    Poly s = substitute_variable(ps.remaining[k], j, def);
                    if (!s.is_zero()) next.push_back(s);
                }
                ps.remaining.swap(next);
                ps.solved.emplace_back(j, def);
                ps.is_solved[j] = true;
                progress = true;
            }
        }
    }
    return ps;
}

}  // namespace

SearchReport darboux_search(const VectorField& v, unsigned D, const GroebnerOptions& opts) {
    if (!v.is_polynomial())
        throw std::invalid_argument("darboux_search: field must be polynomial");
    if (v.is_zero()) throw std::invalid_argument("darboux_search: zero field");
    SearchReport report;
    report.degree_bound = D;
    if (D == 0) return report;

    const std::vector<std::string>& xv = v.vars();
    AffineDegree deg = affine_degree(v);
    unsigned hdeg = deg.value > 0 ? deg.value - 1 : 0;
    std::vector<Monomial> all_mons = monomials_up_to(xv.size(), D);
    std::vector<Monomial> h_mons = monomials_up_to(xv.size(), hdeg);

    for (std::size_t si = 0; si < all_mons.size(); ++si) {
        const Monomial& m = all_mons[si];
        if (m.degree() < 1) continue;
        std::vector<Monomial> smaller(all_mons.begin(), all_mons.begin() + static_cast<long>(si));
        StratumSystem sys = stratum_system(v, m, smaller, h_mons);
        std::size_t nc = smaller.size();

        Presolve ps = presolve_linear(sys.ideal);
        bool inconsistent = false;
        for (const Poly& eq : ps.remaining)
            if (eq.is_constant() && !eq.is_zero()) inconsistent = true;
        if (inconsistent) continue;
        std::vector<std::string> core_vars;
        std::vector<std::size_t> core_idx;
        for (std::size_t j = 0; j < sys.coeff_vars.size(); ++j)
            if (!ps.is_solved[j]) {
                core_idx.push_back(j);
                core_vars.push_back(sys.coeff_vars[j]);
            }
        std::vector<Poly> core_gens;
        for (const Poly& eq : ps.remaining)
            core_gens.push_back(eq.restrict_to(core_vars, core_idx));

        RationalPointSolve sol;
        try {
            sol = solve_rational_points(Ideal::make(core_vars, core_gens), opts);
            if (!sol.zero_dimensional) {
                std::ostringstream os;
                os << "leading monomial "
                   << Poly::term(xv, m, Rational(1)).to_string() << ": core solution ideal {";
                for (std::size_t i = 0; i < sol.basis_text.size(); ++i)
                    os << (i ? "; " : "") << sol.basis_text[i];
                os << "} with " << sol.free_vars.size() << " free coefficient(s) ("
                   << ps.solved.size() << " determined)";
                report.positive_dimensional_families.push_back(os.str());
                // materialize the zero specialization of the free coefficients
                std::vector<Poly> aug = core_gens;
                for (std::size_t fv : sol.free_vars)
                    aug.push_back(Poly::variable(core_vars, fv));
                sol = solve_rational_points(Ideal::make(core_vars, aug), opts);
                if (!sol.zero_dimensional) continue;
            }
        } catch (const BudgetExhausted&) {
            report.status = SearchReport::Status::BudgetExhausted;
            return report;
        }
        report.irrational_branches += sol.irrational_branches;

        for (const auto& core_pt : sol.points) {
            // reconstruct the full coefficient assignment through the
            // presolved definitions, most recent first
            std::vector<Rational> full(sys.coeff_vars.size(), Rational(0));
            for (std::size_t t = 0; t < core_idx.size(); ++t) full[core_idx[t]] = core_pt[t];
            for (auto it = ps.solved.rbegin(); it != ps.solved.rend(); ++it)
                full[it->first] = it->second.evaluate(full);
            std::vector<Rational> cvals(full.begin(), full.begin() + static_cast<long>(nc));
            std::vector<Rational> evals(full.begin() + static_cast<long>(nc), full.end());
            Poly g = assemble(xv, &m, smaller, cvals);
            Poly h = assemble(xv, nullptr, h_mons, evals);
            auto check = cofactor_of(v, g);
            if (!check || *check != h)
                throw std::logic_error("darboux_search: candidate failed the cofactor recheck");
            bool reducible = false;
            for (const auto& prior : report.found) {
                if (exact_divide(g, prior.g).has_value()) {
                    reducible = true;
                    break;
                }
            }
            if (!reducible) report.found.push_back(DarbouxPair{g, h});
        }
    }
    return report;
}

bool invariant_ideal_check(const VectorField& v, const Ideal& ideal,
                           const GroebnerOptions& opts) {
    if (!v.is_polynomial())
        throw std::invalid_argument("invariant_ideal_check: field must be polynomial");
    if (ideal.vars != v.vars())
        throw std::invalid_argument("invariant_ideal_check: ambient mismatch");
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex(), opts);
    for (const Poly& g : ideal.generators)
        if (!normal_form(apply_derivation(v, g), gb, opts).is_zero()) return false;
    return true;
}

std::optional<RatFunc> codim1_invariant(const VectorField& v, const OneForm& w) {
    if (!v.is_polynomial())
        throw std::invalid_argument("codim1_invariant: field must be polynomial");
    std::size_t n = v.dimension();
    if (w.components.size() != n)
        throw std::invalid_argument("codim1_invariant: one form has wrong arity");
    bool all_zero = true;
    for (const Poly& c : w.components) all_zero = all_zero && c.is_zero();
    if (all_zero) throw std::invalid_argument("codim1_invariant: zero one-form");

    std::vector<Poly> nabla(n, Poly(v.vars()));
    for (std::size_t j = 0; j < n; ++j) {
        Poly acc = apply_derivation(v, w.components[j]);
        for (std::size_t i = 0; i < n; ++i)
            acc += v.poly_component(i).partial_derivative(j) * w.components[i];
        nabla[j] = acc;
    }
    // cross-multiplication: nabla_i w_j = nabla_j w_i for all pairs
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (nabla[i] * w.components[j] != nabla[j] * w.components[i])
                return std::nullopt;
    std::size_t pivot = 0;
    while (w.components[pivot].is_zero()) ++pivot;
    RatFunc h = RatFunc(nabla[pivot], w.components[pivot]);
    // all components agree by cross-multiplication; h may still be rational
    return h;
}

bool tangency_identity_check(const VectorField& v, const OneForm& w) {
    auto h = codim1_invariant(v, w);
    if (!h)
        throw std::invalid_argument("tangency_identity_check: one-form is not invariant");
    Poly g(v.vars());
    for (std::size_t i = 0; i < v.dimension(); ++i)
        g += v.poly_component(i) * w.components[i];
    return RatFunc(apply_derivation(v, g)) == *h * RatFunc(g);
}

}  // namespace vfcert
