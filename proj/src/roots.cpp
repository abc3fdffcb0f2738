#include "vfcert/roots.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace vfcert {

namespace detail {

namespace {

struct QC {
    Rational re, im;
};

QC eval_complex(const UniPoly& f, const Rational& x, const Rational& y) {
    Rational ar(0), ai(0);
    for (std::size_t k = f.coeffs().size(); k-- > 0;) {
        Rational nr = ar * x - ai * y + f.coeff(k);
        Rational ni = ar * y + ai * x;
        ar = nr;
        ai = ni;
    }
    return {ar, ai};
}

// real and imaginary parts of f(z0 + t*dz) as polynomials in t
std::pair<UniPoly, UniPoly> edge_parts(const UniPoly& f, const QC& z0, const QC& dz) {
    UniPoly lr(std::vector<Rational>{z0.re, dz.re});
    UniPoly li(std::vector<Rational>{z0.im, dz.im});
    UniPoly ar, ai;
    for (std::size_t k = f.coeffs().size(); k-- > 0;) {
        UniPoly nr = ar * lr - ai * li;
        UniPoly ni = ar * li + ai * lr;
        nr = nr + UniPoly(std::vector<Rational>{f.coeff(k)});
        ar = nr;
        ai = ni;
    }
    return {ar, ai};
}

bool corner_generic(const UniPoly& f, const Rational& x, const Rational& y) {
    QC v = eval_complex(f, x, y);
    return !v.re.is_zero() && !v.im.is_zero();
}

// no common root of (u, w) in (0, 1): together with generic corners this
// means f has no root on the closed edge
bool edge_root_free(const UniPoly& u, const UniPoly& w) {
    UniPoly g = UniPoly::gcd(u, w);
    if (g.is_zero()) return false;  // u = w = 0 identically: degenerate
    if (g.degree() < 1) return true;
    SturmSequence s(g);
    return s.count_roots(Rational(0), Rational(1)) == 0;
}

bool box_generic(const UniPoly& f, const Box& b) {
    const Rational xs[4] = {b.x1, b.x2, b.x2, b.x1};
    const Rational ys[4] = {b.y1, b.y1, b.y2, b.y2};
    for (int i = 0; i < 4; ++i)
        if (!corner_generic(f, xs[i], ys[i])) return false;
    for (int e = 0; e < 4; ++e) {
        QC z0{xs[e], ys[e]};
        QC dz{xs[(e + 1) % 4] - xs[e], ys[(e + 1) % 4] - ys[e]};
        auto [u, w] = edge_parts(f, z0, dz);
        if (!edge_root_free(u, w)) return false;
    }
    return true;
}

int quadrant(int su, int sw) {
    if (su == 0 || sw == 0) throw std::logic_error("quadrant undefined on axis");
    if (su > 0) return sw > 0 ? 0 : 3;
    return sw > 0 ? 1 : 2;
}

// bisection refinement of an isolating interval, endpoints stay non-roots
void shrink_interval(const UniPoly& f, const SturmSequence& s, Rational& lo, Rational& hi) {
    static const long num[] = {1, 33, 31, 17, 15};
    static const long den[] = {2, 64, 64, 32, 32};
    for (int i = 0; i < 5; ++i) {
        Rational m = lo + (hi - lo) * Rational(num[i], den[i]);
        if (f.eval(m).is_zero()) continue;
        if (s.count_roots(lo, m) == 1)
            hi = m;
        else
            lo = m;
        return;
    }
    throw std::logic_error("shrink_interval: no valid split point found");
}

}  // namespace

std::vector<std::pair<Rational, Rational>> isolate_real_roots_in(const UniPoly& f,
                                                                 const Rational& a,
                                                                 const Rational& b) {
    if (f.is_zero()) throw std::domain_error("isolate_real_roots_in: zero polynomial");
    if (f.eval(a).is_zero() || f.eval(b).is_zero())
        throw std::invalid_argument("isolate_real_roots_in: endpoint is a root");
    std::vector<std::pair<Rational, Rational>> out;
    if (f.degree() < 1) return out;
    SturmSequence s(f);
    std::vector<std::pair<Rational, Rational>> work{{a, b}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        int n = s.count_roots(lo, hi);
        if (n == 0) continue;
        if (n == 1) {
            out.emplace_back(lo, hi);
            continue;
        }
        // split at a non-root point
        static const long num[] = {1, 33, 31, 17, 15, 35, 29};
        static const long den[] = {2, 64, 64, 32, 32, 64, 64};
        bool split = false;
        for (int i = 0; i < 7 && !split; ++i) {
            Rational m = lo + (hi - lo) * Rational(num[i], den[i]);
            if (f.eval(m).is_zero()) continue;
            work.emplace_back(lo, m);
            work.emplace_back(m, hi);
            split = true;
        }
        if (!split) throw std::logic_error("isolate_real_roots_in: could not split interval");
    }
    std::sort(out.begin(), out.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    return out;
}

int count_roots_in_box(const UniPoly& f, const Box& b) {
    const Rational xs[4] = {b.x1, b.x2, b.x2, b.x1};
    const Rational ys[4] = {b.y1, b.y1, b.y2, b.y2};
    std::vector<int> qs;
    for (int e = 0; e < 4; ++e) {
        QC z0{xs[e], ys[e]};
        QC dz{xs[(e + 1) % 4] - xs[e], ys[(e + 1) % 4] - ys[e]};
        auto [u, w] = edge_parts(f, z0, dz);
        qs.push_back(quadrant(u.sign_at(Rational(0)), w.sign_at(Rational(0))));

        // isolating intervals for the roots of u and of w, made pairwise disjoint
        struct Iv {
            Rational lo, hi;
            bool of_u;
        };
        std::vector<Iv> ivs;
        if (u.degree() >= 1)
            for (auto& [lo, hi] : isolate_real_roots_in(u, Rational(0), Rational(1)))
                ivs.push_back({lo, hi, true});
        if (w.degree() >= 1)
            for (auto& [lo, hi] : isolate_real_roots_in(w, Rational(0), Rational(1)))
                ivs.push_back({lo, hi, false});
        SturmSequence su(u), sw(w);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < ivs.size() && !changed; ++i)
                for (std::size_t j = i + 1; j < ivs.size() && !changed; ++j) {
                    if (ivs[i].hi <= ivs[j].lo || ivs[j].hi <= ivs[i].lo) continue;
                    shrink_interval(ivs[i].of_u ? u : w, ivs[i].of_u ? su : sw, ivs[i].lo,
                                    ivs[i].hi);
                    shrink_interval(ivs[j].of_u ? u : w, ivs[j].of_u ? su : sw, ivs[j].lo,
                                    ivs[j].hi);
                    changed = true;
                }
        }
        std::sort(ivs.begin(), ivs.end(), [](const Iv& p, const Iv& q) { return p.lo < q.lo; });
        for (std::size_t i = 1; i < ivs.size(); ++i) {
            Rational m = (ivs[i - 1].hi + ivs[i].lo) * Rational(1, 2);
            qs.push_back(quadrant(u.sign_at(m), w.sign_at(m)));
        }
    }
    qs.push_back(qs.front());  // close the loop
    int quarters = 0;
    for (std::size_t i = 1; i < qs.size(); ++i) {
        int d = ((qs[i] - qs[i - 1]) % 4 + 4) % 4;
        if (d == 1)
            ++quarters;
        else if (d == 3)
            --quarters;
        else if (d == 2)
            throw std::logic_error("count_roots_in_box: root on the boundary");
    }
    if (quarters % 4 != 0) throw std::logic_error("count_roots_in_box: open winding");
    return quarters / 4;
}

Box prepare_box(const UniPoly& f, Box b) {
    Rational bw = (b.x2 - b.x1) * Rational(1, 64);
    Rational bh = (b.y2 - b.y1) * Rational(1, 64);
    for (long j = 0; j < 200; ++j) {
        Rational jr(j);
        Box c{b.x1 - jr * bw, b.x2 + jr * bw, b.y1 / Rational(j + 1), b.y2 + jr * bh};
        if (box_generic(f, c)) return c;
    }
    throw std::logic_error("prepare_box: could not find a generic box");
}

namespace {

// split a generic box along generic interior lines into four tiles
std::array<Box, 4> split_box(const UniPoly& f, const Box& b) {
    static const long num[] = {1, 33, 31, 17, 15, 35, 29, 9, 7, 37, 27, 19, 13, 41, 23};
    static const long den[] = {2, 64, 64, 32, 32, 64, 64, 16, 16, 64, 64, 32, 32, 64, 64};
    Rational w = b.x2 - b.x1, h = b.y2 - b.y1;
    for (int a = 0; a < 15; ++a) {
        Rational xm = b.x1 + w * Rational(num[a], den[a]);
        for (int c = 0; c < 15; ++c) {
            Rational ym = b.y1 + h * Rational(num[c], den[c]);
            // new corner points must be generic
            bool ok = corner_generic(f, xm, b.y1) && corner_generic(f, xm, b.y2) &&
                      corner_generic(f, b.x1, ym) && corner_generic(f, b.x2, ym) &&
                      corner_generic(f, xm, ym);
            if (!ok) continue;
            // split segments must carry no roots of f
            auto [uv, wv] = edge_parts(f, {xm, b.y1}, {Rational(0), h});
            auto [uh, wh] = edge_parts(f, {b.x1, ym}, {w, Rational(0)});
            if (!edge_root_free(uv, wv) || !edge_root_free(uh, wh)) continue;
            return {Box{b.x1, xm, b.y1, ym}, Box{xm, b.x2, b.y1, ym}, Box{b.x1, xm, ym, b.y2},
                    Box{xm, b.x2, ym, b.y2}};
        }
    }
    throw std::logic_error("split_box: could not find generic split lines");
}

}  // namespace

}  // namespace detail

namespace {

using detail::Box;

void update_derived(RootEnclosure& e) {
    switch (e.kind) {
        case RootEnclosure::Kind::Exact:
            e.radius = Rational(0);
            break;
        case RootEnclosure::Kind::RealInterval:
            e.center_re = (e.lo + e.hi) * Rational(1, 2);
            e.center_im = Rational(0);
            e.radius = (e.hi - e.lo) * Rational(1, 2);
            break;
        case RootEnclosure::Kind::Box: {
            e.center_re = (e.x1 + e.x2) * Rational(1, 2);
            Rational im = (e.y1 + e.y2) * Rational(1, 2);
            e.center_im = e.mirrored ? -im : im;
            // (w + h)/2 dominates the half diagonal and stays rational
            e.radius = ((e.x2 - e.x1) + (e.y2 - e.y1)) * Rational(1, 2);
            break;
        }
    }
}

UniPoly enclosure_unipoly(const RootEnclosure& e) {
    return UniPoly::from_poly(e.refine_poly.is_zero() ? e.poly : e.refine_poly);
}

void refine_once(RootEnclosure& e) {
    if (e.kind == RootEnclosure::Kind::Exact) return;
    if (e.kind == RootEnclosure::Kind::RealInterval) {
        UniPoly f = enclosure_unipoly(e);
        Rational m = (e.lo + e.hi) * Rational(1, 2);
        Rational fm = f.eval(m);
        if (fm.is_zero()) {
            e.kind = RootEnclosure::Kind::Exact;
            e.center_re = m;
            e.center_im = Rational(0);
            update_derived(e);
            return;
        }
        if (f.eval(e.lo).sign() * fm.sign() < 0)
            e.hi = m;
        else
            e.lo = m;
        update_derived(e);
        return;
    }
    // Box: quadrisect and keep the tile holding the root
    UniPoly f = enclosure_unipoly(e);
    Box b{e.x1, e.x2, e.y1, e.y2};
    auto tiles = detail::split_box(f, b);
    for (const Box& t : tiles) {
        if (detail::count_roots_in_box(f, t) == 1) {
            e.x1 = t.x1;
            e.x2 = t.x2;
            e.y1 = t.y1;
            e.y2 = t.y2;
            update_derived(e);
            return;
        }
    }
    throw std::logic_error("refine_enclosure: root lost during subdivision");
}

}  // namespace

void refine_enclosure(RootEnclosure& e) {
    Rational target = e.radius * Rational(1, 2);
    while (e.kind != RootEnclosure::Kind::Exact && e.radius > target) refine_once(e);
}

void refine_to(RootEnclosure& e, const Rational& target) {
    while (e.kind != RootEnclosure::Kind::Exact && e.radius > target) refine_once(e);
}

std::vector<RootEnclosure> isolate_roots(const Poly& p, const Rational& precision) {
    if (p.nvars() != 1) throw std::invalid_argument("isolate_roots: not univariate");
    if (p.is_zero()) throw std::domain_error("isolate_roots: zero polynomial");
    if (precision.sign() <= 0) throw std::invalid_argument("isolate_roots: precision must be positive");
    UniPoly f0 = UniPoly::from_poly(p);
    {
        UniPoly g = UniPoly::gcd(f0, f0.derivative());
        if (g.degree() > 0)
            throw std::invalid_argument("isolate_roots: polynomial must be squarefree");
    }
    std::vector<RootEnclosure> out;
    if (f0.degree() < 1) return out;

    UniPoly f = f0.primitive();

    // exact rational roots first, deflating as they are found
    bool progress = true;
    while (progress && f.degree() >= 1) {
        progress = false;
        Rational m = cauchy_root_bound(f);
        auto ivs = detail::isolate_real_roots_in(f, -m, m);
        mpz_class lcz = f.leading().numerator();  // integer-primitive: positive integer
        Rational width_target(mpz_class(1), mpz_class(2) * lcz * lcz);
        SturmSequence s(f);
        for (auto& [lo, hi] : ivs) {
            Rational clo = lo, chi = hi;
            bool exact = false;
            while (chi - clo >= width_target) {
                Rational mid = (clo + chi) * Rational(1, 2);
                if (f.eval(mid).is_zero()) {
                    clo = chi = mid;
                    exact = true;
                    break;
                }
                if (s.count_roots(clo, mid) == 1)
                    chi = mid;
                else
                    clo = mid;
            }
            Rational cand = exact ? clo : simplest_rational_in(clo, chi);
            if (f.eval(cand).is_zero()) {
                RootEnclosure e;
                e.poly = p;
                e.refine_poly = p;
                e.kind = RootEnclosure::Kind::Exact;
                e.center_re = cand;
                e.center_im = Rational(0);
                update_derived(e);
                out.push_back(e);
                // deflate by (q t - r) with cand = r/q
                UniPoly lin(std::vector<Rational>{Rational(mpz_class(-cand.numerator())),
                                                  Rational(cand.denominator())});
                auto [q, r] = UniPoly::divrem(f, lin);
                if (!r.is_zero()) throw std::logic_error("isolate_roots: deflation failed");
                f = q.primitive();
                progress = true;
                break;
            }
        }
    }

    std::size_t real_count = out.size();
    if (f.degree() >= 1) {
        Rational m = cauchy_root_bound(f);
        auto ivs = detail::isolate_real_roots_in(f, -m, m);
        real_count += ivs.size();
        for (auto& [lo, hi] : ivs) {
            RootEnclosure e;
            e.poly = p;
            e.refine_poly = f.to_poly(p.vars()[0]);
            e.kind = RootEnclosure::Kind::RealInterval;
            e.lo = lo;
            e.hi = hi;
            update_derived(e);
            out.push_back(e);
        }

        int nonreal = f.degree() - static_cast<int>(ivs.size());
        if (nonreal > 0) {
            if (nonreal % 2 != 0)
                throw std::logic_error("isolate_roots: odd number of non-real roots");
            // lower bound for the imaginary part of any non-real root, from a
            // (crude but safe) root separation bound for integer polynomials
            mpz_class s(1);
            for (const auto& c : f.coeffs()) {
                mpz_class a = c.numerator();  // integer-primitive coefficients
                s += a < 0 ? mpz_class(-a) : a;
            }
            int n = f.degree();
            mpz_class nn(1), sn(1);
            for (int i = 0; i < n; ++i) {
                nn *= n;
                sn *= s;
            }
            Rational gamma(mpz_class(1), mpz_class(2) * nn * sn);
            Box b0 = detail::prepare_box(f, Box{-m, m, gamma, m});
            std::vector<Box> work{b0}, ones;
            while (!work.empty()) {
                Box b = work.back();
                work.pop_back();
                int c = detail::count_roots_in_box(f, b);
                if (c == 0) continue;
                if (c == 1) {
                    ones.push_back(b);
                    continue;
                }
                auto tiles = detail::split_box(f, b);
                for (const Box& t : tiles) work.push_back(t);
            }
            if (static_cast<int>(ones.size()) != nonreal / 2)
                throw std::logic_error("isolate_roots: winding counts do not add up");
            for (const Box& b : ones) {
                RootEnclosure e;
                e.poly = p;
                e.refine_poly = f.to_poly(p.vars()[0]);
                e.kind = RootEnclosure::Kind::Box;
                e.x1 = b.x1;
                e.x2 = b.x2;
                e.y1 = b.y1;
                e.y2 = b.y2;
                update_derived(e);
                // keep the disk strictly off the real axis
                while (e.radius >= e.y1) refine_once(e);
                RootEnclosure mirror = e;
                mirror.mirrored = true;
                update_derived(mirror);
                out.push_back(e);
                out.push_back(mirror);
            }
        }
    }

    for (auto& e : out) refine_to(e, precision);

    // pairwise disjointness: refine overlapping pairs until separated
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < out.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < out.size() && !changed; ++j) {
                Rational dx = out[i].center_re - out[j].center_re;
                Rational dy = out[i].center_im - out[j].center_im;
                Rational rr = out[i].radius + out[j].radius;
                if (dx * dx + dy * dy > rr * rr) continue;
                if (out[i].is_exact() && out[j].is_exact())
                    throw std::logic_error("isolate_roots: coincident exact roots");
                refine_enclosure(out[i]);
                refine_enclosure(out[j]);
                changed = true;
            }
    }

    std::sort(out.begin(), out.end(), [](const RootEnclosure& a, const RootEnclosure& b) {
        if (a.center_re != b.center_re) return a.center_re < b.center_re;
        return a.center_im < b.center_im;
    });
    return out;
}


RationalRoots rational_roots(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    RationalRoots out;
    UniPoly s = f.squarefree_part();
    if (s.degree() < 1) return out;
    Rational m = cauchy_root_bound(s);
    auto ivs = detail::isolate_real_roots_in(s, -m, m);
    mpz_class lcz = s.leading().numerator();
    Rational width_target(mpz_class(1), mpz_class(2) * lcz * lcz);
    SturmSequence sturm(s);
    unsigned long rational_found = 0;
    for (auto& [lo, hi] : ivs) {
        Rational clo = lo, chi = hi;
        bool exact = false;
        while (chi - clo >= width_target) {
            Rational mid = (clo + chi) * Rational(1, 2);
            if (s.eval(mid).is_zero()) {
                clo = chi = mid;
                exact = true;
                break;
            }
            if (sturm.count_roots(clo, mid) == 1)
                chi = mid;
            else
                clo = mid;
        }
        Rational cand = exact ? clo : simplest_rational_in(clo, chi);
        if (s.eval(cand).is_zero()) {
            out.roots.push_back(cand);
            ++rational_found;
        }
    }
    out.irrational = static_cast<unsigned long>(s.degree()) - rational_found;
    return out;
}

}  // namespace vfcert
