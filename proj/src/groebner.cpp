#include "vfcert/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace vfcert {

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
        case Kind::GrevLex:
            return cmp_grevlex(a, b);
        case Kind::Lex:
            return cmp_lex(a, b);
        case Kind::Block: {
            // compare the eliminated block first (grevlex within each block)
            int d1a = 0, d1b = 0;
            for (std::size_t i = 0; i < split; ++i) {
                d1a += static_cast<int>(a.exp(i));
                d1b += static_cast<int>(b.exp(i));
            }
            if (d1a != d1b) return d1a < d1b ? -1 : 1;
            for (std::size_t i = split; i-- > 0;)
                if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
            int d2a = 0, d2b = 0;
            for (std::size_t i = split; i < a.nvars(); ++i) {
                d2a += static_cast<int>(a.exp(i));
                d2b += static_cast<int>(b.exp(i));
            }
            if (d2a != d2b) return d2a < d2b ? -1 : 1;
            for (std::size_t i = a.nvars(); i-- > split;)
                if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
            return 0;
        }
    }
    return 0;
}

std::string MonomialOrder::name() const {
    switch (kind) {
        case Kind::GrevLex: return "grevlex";
        case Kind::Lex: return "lex";
        case Kind::Block: return "block(" + std::to_string(split) + ")";
    }
    return "?";
}

Ideal Ideal::make(std::vector<std::string> vars, const std::vector<Poly>& gens) {
    Ideal i;
    i.vars = std::move(vars);
    for (const Poly& g : gens) {
        if (g.vars() != i.vars) throw std::invalid_argument("Ideal: ambient mismatch");
        if (!g.is_zero()) i.generators.push_back(g);
    }
    return i;
}

namespace {

struct OrderLess {
    const MonomialOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return ord->compare(a, b) > 0;  // descending: begin() is the leading term
    }
};

using OrdMap = std::map<Monomial, Rational, OrderLess>;

struct BasisElem {
    std::vector<std::pair<Monomial, Rational>> terms;  // descending
    Monomial lm;
    Rational lc;
    int sugar;

    BasisElem() : lm(Monomial::unit(0)) {}
};

struct Counter {
    std::uint64_t used = 0;
    std::uint64_t budget;
    void tick() {
        if (++used > budget) throw BudgetExhausted("Groebner basis computation");
    }
};

OrdMap to_ordmap(const Poly& p, const MonomialOrder& ord) {
    OrdMap m(OrderLess{&ord});
    for (const auto& [mon, c] : p.terms()) m.emplace(mon, c);
    return m;
}

Poly to_poly(const OrdMap& m, const std::vector<std::string>& vars) {
    Poly p(vars);
    for (const auto& [mon, c] : m) p.add_term(mon, c);
    return p;
}

BasisElem make_elem(const OrdMap& m, int sugar) {
    BasisElem e;
    e.terms.assign(m.begin(), m.end());
    e.lm = e.terms.front().first;
    e.lc = e.terms.front().second;
    e.sugar = sugar;
    return e;
}

// integer-primitive scaling keeps GMP coefficients small during the run
void make_primitive_ordmap(OrdMap& f) {
    if (f.empty()) return;
    Rational c(0);
    for (const auto& [m, cc] : f) c = rational_gcd(c, cc);
    if (f.begin()->second.sign() < 0) c = -c;
    if (c.is_one()) return;
    Rational inv = c.reciprocal();
    for (auto& [m, cc] : f) cc *= inv;
}

// f -= (coeff * x^shift) * g; the caller aligns leading terms
void subtract_multiple(OrdMap& f, const BasisElem& g, const Monomial& shift,
                       const Rational& coeff) {
    for (const auto& [m, c] : g.terms) {
        Monomial mm = m.times(shift);
        Rational cc = c * coeff;
        auto [it, inserted] = f.emplace(mm, cc);
        if (!inserted) {
            it->second += cc;
            if (it->second.is_zero()) f.erase(it);
        }
    }
}

// Full normal form of f against the basis, fraction-free: the working
// polynomial is rescaled by reducer leading coefficients instead of divided,
// with periodic content stripping; emitted terms are exact (tracked by M).
OrdMap reduce_full(OrdMap f, const std::vector<BasisElem>& basis, Counter& counter,
                   int* sugar_io = nullptr) {
    OrdMap out(f.key_comp());
    Rational M(1);
    auto strip = [&]() {
        if (f.empty()) return;
        Rational d(0);
        for (const auto& [mm, cc] : f) d = rational_gcd(d, cc);
        if (!d.is_one() && !d.is_zero()) {
            Rational inv = d.reciprocal();
            for (auto& [mm, cc] : f) cc *= inv;
            M *= inv;
        }
    };
    strip();
    unsigned steps = 0;
    while (!f.empty()) {
        auto [m, c] = *f.begin();
        const BasisElem* reducer = nullptr;
        for (const BasisElem& g : basis) {
            if (g.lm.divides(m)) {
                reducer = &g;
                break;
            }
        }
        if (reducer == nullptr) {
            out.emplace(m, c / M);
            f.erase(f.begin());
            continue;
        }
        counter.tick();
        Monomial shift = reducer->lm.divide_into(m);
        if (!reducer->lc.is_one()) {
            for (auto& [mm, cc] : f) cc *= reducer->lc;
            M *= reducer->lc;
        }
        subtract_multiple(f, *reducer, shift, -c);
        if (sugar_io)
            *sugar_io = std::max(*sugar_io, reducer->sugar + shift.degree());
        if (++steps % 4 == 0) strip();
    }
    return out;
}

struct Pair {
    int sugar;
    std::uint64_t index;  // creation order
    std::size_t i, j;     // i < j
    Monomial lcm;

    bool operator<(const Pair& o) const {
        if (sugar != o.sugar) return sugar < o.sugar;
        return index < o.index;
    }
};

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const GroebnerOptions& opts) {
    Counter counter{0, opts.step_budget};
    std::vector<BasisElem> basis;
    std::set<Pair> pairs;
    std::uint64_t pair_counter = 0;

    auto pair_sugar = [&](std::size_t i, std::size_t j, const Monomial& lcm) {
        int si = basis[i].sugar + lcm.degree() - basis[i].lm.degree();
        int sj = basis[j].sugar + lcm.degree() - basis[j].lm.degree();
        return std::max(si, sj);
    };

    // Gebauer-Moeller pair update for a newly appended basis element
    auto update_pairs = [&](std::size_t t) {
        const Monomial& lmt = basis[t].lm;
        std::vector<bool> keep(t, true);
        std::vector<Monomial> lcms;
        lcms.reserve(t);
        for (std::size_t i = 0; i < t; ++i) lcms.push_back(lmt.lcm_with(basis[i].lm));
        // M criterion: drop (i,t) when another new pair's lcm strictly divides its lcm
        for (std::size_t i = 0; i < t; ++i) {
            if (!keep[i]) continue;
            for (std::size_t j = 0; j < t; ++j) {
                if (i == j || !keep[j]) continue;
                if (lcms[j].divides(lcms[i]) && lcms[j] != lcms[i]) {
                    keep[i] = false;
                    break;
                }
            }
        }
        // F criterion: among equal lcms keep the first
        for (std::size_t i = 0; i < t; ++i) {
            if (!keep[i]) continue;
            for (std::size_t j = i + 1; j < t; ++j)
                if (keep[j] && lcms[i] == lcms[j]) keep[j] = false;
        }
        // B criterion: prune old pairs made redundant by the new element
        for (auto it = pairs.begin(); it != pairs.end();) {
            const Pair& p = *it;
            if (lmt.divides(p.lcm) && basis[p.i].lm.lcm_with(lmt) != p.lcm &&
                basis[p.j].lm.lcm_with(lmt) != p.lcm)
                it = pairs.erase(it);
            else
                ++it;
        }
        // product criterion last: coprime pairs may still shadow others above
        for (std::size_t i = 0; i < t; ++i) {
            if (!keep[i] || lmt.coprime_with(basis[i].lm)) continue;
            pairs.insert(Pair{pair_sugar(i, t, lcms[i]), pair_counter++, i, t, lcms[i]});
        }
    };

    // seed with the normalized generators, in input order
    for (const Poly& g : ideal.generators) {
        OrdMap m = to_ordmap(g, order);
        make_primitive_ordmap(m);
        basis.push_back(make_elem(m, g.degree()));
        update_pairs(basis.size() - 1);
    }

    while (!pairs.empty()) {
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        const BasisElem &gi = basis[p.i], &gj = basis[p.j];
        OrdMap s(OrderLess{&order});
        subtract_multiple(s, gi, gi.lm.divide_into(p.lcm), gj.lc);
        subtract_multiple(s, gj, gj.lm.divide_into(p.lcm), -gi.lc);
        counter.tick();
        int sugar = p.sugar;
        OrdMap r = reduce_full(std::move(s), basis, counter, &sugar);
        if (r.empty()) continue;
        make_primitive_ordmap(r);
        basis.push_back(make_elem(r, sugar));
        update_pairs(basis.size() - 1);
    }

    // reduce: drop elements whose lm is divisible by another's, tail-reduce, make monic
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (basis[j].lm.divides(basis[i].lm) &&
                (basis[j].lm != basis[i].lm || j < i))
                redundant = true;
        }
        if (!redundant) kept.push_back(i);
    }
    std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
        return order.compare(basis[a].lm, basis[b].lm) < 0;
    });
    std::vector<BasisElem> reduced;
    for (std::size_t idx : kept) reduced.push_back(basis[idx]);
    std::vector<Poly> out;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<BasisElem> others;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        OrdMap m(OrderLess{&order});
        for (const auto& [mon, c] : reduced[i].terms) m.emplace(mon, c);
        OrdMap r = reduce_full(std::move(m), others, counter);
        if (r.empty()) continue;  // cannot happen for a minimal basis
        Rational inv = r.begin()->second.reciprocal();
        for (auto& [mon, c] : r) c *= inv;
        out.push_back(to_poly(r, ideal.vars));
        reduced[i] = make_elem(to_ordmap(out.back(), order), reduced[i].sugar);
    }
    return GroebnerBasis{ideal, order, std::move(out)};
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb, const GroebnerOptions& opts) {
    if (p.vars() != gb.ideal.vars) throw std::invalid_argument("normal_form: ambient mismatch");
    Counter counter{0, opts.step_budget};
    std::vector<BasisElem> basis;
    for (const Poly& g : gb.basis) basis.push_back(make_elem(to_ordmap(g, gb.order), g.degree()));
    OrdMap r = reduce_full(to_ordmap(p, gb.order), basis, counter);
    return to_poly(r, p.vars());
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep,
                const GroebnerOptions& opts) {
    // permuted ambient: eliminated variables first, kept ones after
    std::vector<std::size_t> elim_idx, keep_idx;
    for (std::size_t i = 0; i < ideal.vars.size(); ++i) {
        if (std::find(keep.begin(), keep.end(), ideal.vars[i]) == keep.end())
            elim_idx.push_back(i);
    }
    for (const std::string& k : keep) {
        auto it = std::find(ideal.vars.begin(), ideal.vars.end(), k);
        if (it == ideal.vars.end())
            throw std::invalid_argument("eliminate: '" + k + "' is not an ambient variable");
        keep_idx.push_back(static_cast<std::size_t>(it - ideal.vars.begin()));
    }
    std::vector<std::string> perm_vars;
    std::vector<std::size_t> index_map(ideal.vars.size());
    for (std::size_t i : elim_idx) {
        index_map[i] = perm_vars.size();
        perm_vars.push_back(ideal.vars[i]);
    }
    for (std::size_t i : keep_idx) {
        index_map[i] = perm_vars.size();
        perm_vars.push_back(ideal.vars[i]);
    }
    std::vector<Poly> perm_gens;
    for (const Poly& g : ideal.generators) perm_gens.push_back(g.embed(perm_vars, index_map));

    GroebnerBasis gb =
        buchberger(Ideal::make(perm_vars, perm_gens), MonomialOrder::block(elim_idx.size()), opts);

    std::vector<Poly> out;
    std::vector<std::size_t> restrict_idx;
    for (std::size_t j = 0; j < keep.size(); ++j) restrict_idx.push_back(elim_idx.size() + j);
    for (const Poly& g : gb.basis) {
        bool pure = true;
        for (std::size_t i = 0; i < elim_idx.size() && pure; ++i)
            if (g.depends_on(i)) pure = false;
        if (!pure) continue;
        Poly r = g.restrict_to(keep, restrict_idx);
        Rational c = poly_content(r);  // integer-primitive presentation
        if (!c.is_zero() && !c.is_one()) r = r.scaled(c.reciprocal());
        out.push_back(r);
    }
    return Ideal::make(keep, out);
}

namespace {

Monomial leading_monomial(const Poly& g, const MonomialOrder& order) {
    Monomial lm = g.terms().begin()->first;
    for (const auto& [m, c] : g.terms())
        if (order.compare(m, lm) > 0) lm = m;
    return lm;
}

}  // namespace

bool is_zero_dimensional(const GroebnerBasis& gb) {
    std::size_t n = gb.ideal.vars.size();
    for (const Poly& g : gb.basis)
        if (g.is_constant() && !g.is_zero()) return true;  // unit ideal, empty variety
    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (const Poly& g : gb.basis) {
            if (g.is_zero()) continue;
            if (leading_monomial(g, gb.order).is_pure_power_of(i)) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace vfcert
