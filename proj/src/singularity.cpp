#include "vfcert/singularity.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "vfcert/unipoly.hpp"

namespace vfcert {

Ideal singular_ideal(const VectorField& v) {
    if (!v.is_polynomial())
        throw std::invalid_argument("singular_ideal: field must be polynomial");
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < v.dimension(); ++i) gens.push_back(v.poly_component(i));
    return Ideal::make(v.vars(), gens);
}

bool sing_locus_finite(const VectorField& v, const GroebnerOptions& opts) {
    return is_zero_dimensional(buchberger(singular_ideal(v), MonomialOrder::grevlex(), opts));
}

VerifySingular verify_singular(const VectorField& v, const std::vector<Rational>& coords) {
    if (coords.size() != v.dimension())
        throw std::invalid_argument("verify_singular: arity mismatch");
    VerifySingular r;
    for (std::size_t i = 0; i < v.dimension(); ++i) {
        RatFunc c = v.component(i);
        Rational num = c.num().evaluate(coords);
        Rational den = c.den().evaluate(coords);
        if (den.is_zero())
            throw std::domain_error("verify_singular: component has a pole at the point");
        if (!num.is_zero()) {
            r.singular = false;
            r.failing_component = i;
            r.failing_value = num / den;
            return r;
        }
    }
    r.singular = true;
    r.point.coords = coords;
    return r;
}

QMatrix linear_part(const VectorField& v, const SingularPoint& p) {
    VerifySingular chk = verify_singular(v, p.coords);
    if (!chk.singular)
        throw std::invalid_argument("linear_part: point is not singular");
    std::size_t n = v.dimension();
    QMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        RatFunc ci = v.component(i);
        for (std::size_t j = 0; j < n; ++j) {
            RatFunc d = ci.partial_derivative(j);
            Rational den = d.den().evaluate(p.coords);
            if (den.is_zero())
                throw std::domain_error("linear_part: derivative has a pole at the point");
            a.at(i, j) = d.num().evaluate(p.coords) / den;
        }
    }
    return a;
}

namespace {

// Yun's squarefree decomposition: f = prod f_i^i, factors squarefree and
// pairwise coprime; constant factors omitted.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly a = UniPoly::gcd(f, f.derivative());
    if (a.degree() == 0) {
        out.emplace_back(f.primitive(), 1);
        return out;
    }
    UniPoly b = UniPoly::divrem(f, a).first;
    UniPoly c = UniPoly::divrem(f.derivative(), a).first;
    UniPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly fi = UniPoly::gcd(b, d);
        if (fi.degree() > 0) out.emplace_back(fi.primitive(), i);
        b = UniPoly::divrem(b, fi).first;
        c = UniPoly::divrem(d, fi).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

bool enclosure_contains_root_of(const UniPoly& g, RootEnclosure& e) {
    switch (e.kind) {
        case RootEnclosure::Kind::Exact:
            return g.eval(e.center_re).is_zero();
        case RootEnclosure::Kind::RealInterval: {
            if (g.eval(e.lo).is_zero() || g.eval(e.hi).is_zero()) refine_enclosure(e);
            SturmSequence s(g);
            return s.count_roots(e.lo, e.hi) > 0;
        }
        case RootEnclosure::Kind::Box: {
            for (int attempt = 0; attempt < 12; ++attempt) {
                try {
                    detail::Box b{e.x1, e.x2, e.y1, e.y2};
                    return detail::count_roots_in_box(g, b) > 0;
                } catch (const std::logic_error&) {
                    refine_enclosure(e);  // move the boundary off g's bad set
                }
            }
            throw std::logic_error("enclosure_contains_root_of: box never became generic");
        }
    }
    return false;
}

// normalize so the first nonzero entry is positive
void normalize_witness(std::vector<long>& k) {
    for (long x : k) {
        if (x > 0) return;
        if (x < 0) {
            for (auto& y : k) y = -y;
            return;
        }
    }
}

struct Expanded {
    std::vector<RootEnclosure> eigen;  // n entries, duplicates adjacent
    std::vector<std::size_t> rep;      // index of the representative enclosure
};

// resolvent whose roots are all values sum_i k_i * mu_i with each mu_i an
// arbitrary root of its slot's squarefree polynomial
UniPoly relation_resolvent(const std::vector<long>& k, const UniPoly& s) {
    std::vector<std::string> xy{"rx", "ry"};
    UniPoly acc;  // roots {k_0 * lambda}
    bool first = true;
    for (long ki : k) {
        if (ki == 0) continue;
        // roots {ki * lambda: s(lambda) = 0}: substitute t -> t / ki, clear
        std::vector<Rational> cs(s.coeffs());
        Rational kq(ki);
        // coefficient of t^j gets k^(deg - j)
        for (int j = 0; j <= s.degree(); ++j)
            cs[static_cast<std::size_t>(j)] *= kq.pow(static_cast<unsigned>(s.degree() - j));
        UniPoly scaled = UniPoly(std::move(cs)).squarefree_part();
        if (first) {
            acc = scaled;
            first = false;
            continue;
        }
        // sum-composition: Res_y(acc(y), scaled(x - y))
        Poly a = acc.to_poly("ry").embed(xy, {1});
        Poly shift = Poly::variable(xy, 0) - Poly::variable(xy, 1);  // x - y
        Poly b(xy);
        {
            const auto& c2 = scaled.coeffs();
            for (std::size_t j = 0; j < c2.size(); ++j)
                b += shift.pow(static_cast<unsigned>(j)).scaled(c2[j]);
        }
        Poly res = resultant(a, b, 1);
        acc = UniPoly::from_poly(res.restrict_to({"rx"}, {0})).squarefree_part();
    }
    return acc;
}

}  // namespace

ResonanceVerdict resonance_check(const QMatrix& a, unsigned K, unsigned precision_budget) {
    if (a.rows() != a.cols()) throw std::invalid_argument("resonance_check: non-square matrix");
    std::size_t n = a.rows();
    ResonanceVerdict verdict;
    verdict.height_bound = K;

    Poly chi = char_poly(a);
    UniPoly f = UniPoly::from_poly(chi);
    auto factors = squarefree_decomposition(f);
    UniPoly s(std::vector<Rational>{Rational(1)});
    for (auto& [fi, m] : factors) s = s * fi;
    s = s.primitive();

    Rational initial_precision(mpz_class(1), mpz_class(1) << 32);
    std::vector<RootEnclosure> roots = isolate_roots(s.to_poly("t"), initial_precision);

    // multiplicities: each root of s belongs to exactly one squarefree factor
    std::vector<int> mult(roots.size(), 1);
    if (factors.size() > 1 || factors[0].second > 1) {
        std::vector<bool> assigned(roots.size(), false);
        long pairs_left = 0;
        std::vector<std::pair<std::size_t, int>> complex_factor_pairs;
        for (std::size_t fi = 0; fi < factors.size(); ++fi) {
            int assigned_real = 0;
            for (std::size_t r = 0; r < roots.size(); ++r) {
                if (roots[r].kind == RootEnclosure::Kind::Box) continue;
                if (enclosure_contains_root_of(factors[fi].first, roots[r])) {
                    mult[r] = factors[fi].second;
                    assigned[r] = true;
                    ++assigned_real;
                }
            }
            int complex_pairs =
                (factors[fi].first.degree() - assigned_real) / 2;
            if (complex_pairs > 0) complex_factor_pairs.emplace_back(fi, complex_pairs);
            pairs_left += complex_pairs;
        }
        if (pairs_left > 0) {
            if (complex_factor_pairs.size() == 1) {
                std::size_t fi = complex_factor_pairs[0].first;
                for (std::size_t r = 0; r < roots.size(); ++r)
                    if (!assigned[r]) mult[r] = factors[fi].second;
            } else {
                for (std::size_t r = 0; r < roots.size(); ++r) {
                    if (assigned[r]) continue;
                    for (auto& [fi, cnt] : complex_factor_pairs)
                        if (enclosure_contains_root_of(factors[fi].first, roots[r]))
                            mult[r] = factors[fi].second;
                }
            }
        }
    }

    Expanded ex;
    for (std::size_t r = 0; r < roots.size(); ++r)
        for (int c = 0; c < mult[r]; ++c) {
            ex.eigen.push_back(roots[r]);
            ex.rep.push_back(r);
        }
    if (ex.eigen.size() != n)
        throw std::logic_error("resonance_check: eigenvalue multiplicities do not add up");
    verdict.eigenvalues = ex.eigen;

    // repeated eigenvalue: distinctness is necessary for non-resonance
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (ex.rep[i] == ex.rep[i + 1]) {
            verdict.status = ResonanceVerdict::Status::Resonant;
            verdict.witness.assign(n, 0);
            verdict.witness[i] = 1;
            verdict.witness[i + 1] = -1;
            return verdict;
        }
    }

    // exact zero eigenvalue
    for (std::size_t i = 0; i < n; ++i) {
        if (ex.eigen[i].is_exact() && ex.eigen[i].center_re.is_zero()) {
            verdict.status = ResonanceVerdict::Status::Resonant;
            verdict.witness.assign(n, 0);
            verdict.witness[i] = 1;
            return verdict;
        }
    }

    // two rational eigenvalues are always Z-dependent in dimension >= 2
    if (n >= 2) {
        std::vector<std::size_t> rational_idx;
        for (std::size_t i = 0; i < n; ++i)
            if (ex.eigen[i].is_exact()) rational_idx.push_back(i);
        if (rational_idx.size() >= 2) {
            std::size_t i = rational_idx[0], j = rational_idx[1];
            mpz_class pi = ex.eigen[i].center_re.numerator(),
                      qi = ex.eigen[i].center_re.denominator();
            mpz_class pj = ex.eigen[j].center_re.numerator(),
                      qj = ex.eigen[j].center_re.denominator();
            mpz_class ki = pj * qi, kj = -pi * qj, g;
            mpz_gcd(g.get_mpz_t(), ki.get_mpz_t(), kj.get_mpz_t());
            ki /= g;
            kj /= g;
            if (ki.fits_slong_p() && kj.fits_slong_p()) {
                verdict.status = ResonanceVerdict::Status::Resonant;
                verdict.witness.assign(n, 0);
                verdict.witness[i] = ki.get_si();
                verdict.witness[j] = kj.get_si();
                normalize_witness(verdict.witness);
                return verdict;
            }
        }
    }

    // bounded enumeration over k with max |k_i| <= K, first nonzero positive
    auto excluded = [&](const std::vector<long>& k) {
        Rational cre(0), cim(0), rad(0);
        for (std::size_t i = 0; i < n; ++i) {
            if (k[i] == 0) continue;
            Rational ki(k[i]);
            cre += ki * ex.eigen[i].center_re;
            cim += ki * ex.eigen[i].center_im;
            rad += ki.abs() * ex.eigen[i].radius;
        }
        return cre * cre + cim * cim > rad * rad;
    };
    auto refine_all = [&]() {
        for (auto& e : ex.eigen)
            if (!e.is_exact()) refine_enclosure(e);
    };

    std::vector<std::vector<long>> straddlers;
    {
        std::vector<long> k(n, 0);
        // iterate all tuples in lexicographic order, skip those whose first
        // nonzero entry is negative and the zero tuple
        for (;;) {
            std::size_t pos = n;
            while (pos > 0) {
                --pos;
                if (k[pos] < static_cast<long>(K)) {
                    ++k[pos];
                    for (std::size_t q = pos + 1; q < n; ++q) k[q] = -static_cast<long>(K);
                    break;
                }
                if (pos == 0) {
                    pos = n;  // done
                    break;
                }
            }
            if (pos == n) break;
            long first = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (k[i] != 0) {
                    first = k[i];
                    break;
                }
            if (first <= 0) continue;
            if (!excluded(k)) straddlers.push_back(k);
        }
    }

    unsigned halvings = 0;
    while (!straddlers.empty() && halvings < precision_budget) {
        refine_all();
        ++halvings;
        std::vector<std::vector<long>> still;
        for (auto& k : straddlers)
            if (!excluded(k)) still.push_back(k);
        straddlers.swap(still);
    }

    // exact fallback for survivors
    for (auto& k : straddlers) {
        UniPoly res = relation_resolvent(k, s);
        if (!res.coeff(0).is_zero()) continue;  // nonzero at 0: excluded exactly
        // 0 is a root of the resolvent; decide whether the actual assignment
        // attains it:  strip the power of t, lower-bound the nonzero roots
        std::vector<Rational> cs(res.coeffs());
        std::size_t shift = 0;
        while (shift < cs.size() && cs[shift].is_zero()) ++shift;
        UniPoly tail(std::vector<Rational>(cs.begin() + static_cast<long>(shift), cs.end()));
        Rational lower;
        if (tail.degree() < 1) {
            lower = Rational(1);  // only root is 0
        } else {
            std::vector<Rational> rev(tail.coeffs().rbegin(), tail.coeffs().rend());
            lower = cauchy_root_bound(UniPoly(std::move(rev))).reciprocal();
        }
        bool settled = false;
        for (unsigned extra = 0; extra < 256 && !settled; ++extra) {
            if (excluded(k)) {
                settled = true;  // nonzero after all
                break;
            }
            // disk of the actual value: center sum, radius sum
            Rational cre(0), cim(0), rad(0);
            for (std::size_t i = 0; i < n; ++i) {
                if (k[i] == 0) continue;
                Rational ki(k[i]);
                cre += ki * ex.eigen[i].center_re;
                cim += ki * ex.eigen[i].center_im;
                rad += ki.abs() * ex.eigen[i].radius;
            }
            // inside the punctured ball only 0 remains
            Rational reach2 = (cre * cre + cim * cim);
            Rational margin = lower - rad;
            if (margin.sign() > 0 && reach2 < margin * margin) {
                verdict.status = ResonanceVerdict::Status::Resonant;
                verdict.witness.assign(k.begin(), k.end());
                verdict.eigenvalues = ex.eigen;
                return verdict;
            }
            refine_all();
        }
        if (!settled) verdict.unresolved.push_back(k);
    }

    verdict.eigenvalues = ex.eigen;
    if (!verdict.unresolved.empty()) {
        verdict.status = ResonanceVerdict::Status::Unresolved;
        return verdict;
    }
    verdict.status = ResonanceVerdict::Status::NonResonantUpTo;
    return verdict;
}

}  // namespace vfcert
