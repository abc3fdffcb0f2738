#ifndef VFCERT_ROOTS_HPP
#define VFCERT_ROOTS_HPP

#include <vector>

#include "vfcert/poly.hpp"
#include "vfcert/unipoly.hpp"

namespace vfcert {

/// Certified enclosure of a single complex root: the closed disk
/// (center, radius) contains exactly one root of poly.
struct RootEnclosure {
    Poly poly;  // the univariate squarefree polynomial enclosed
    Rational center_re, center_im;
    Rational radius;
    int multiplicity = 1;

    enum class Kind { Exact, RealInterval, Box };
    Kind kind = Kind::Exact;

    // RealInterval refinement state: endpoints are not roots, exactly one
    // root lies in (lo, hi)
    Rational lo, hi;
    // Box refinement state (upper half plane, exactly one root strictly
    // inside); mirrored enclosures track the conjugate of the stored box
    Rational x1, x2, y1, y2;
    bool mirrored = false;
    // Refinement runs against this factor of `poly` (rational roots are
    // deflated before isolation, so sign bisection stays valid).
    Poly refine_poly;

    bool is_real() const { return kind != Kind::Box; }
    bool is_exact() const { return kind == Kind::Exact; }
};

/// Pairwise-disjoint certified enclosures of all complex roots of a nonzero
/// squarefree univariate p, radii at most `precision`. Real roots get real
/// centers (Sturm isolation; exact rational roots get radius 0); non-real
/// roots come in conjugate pairs, counted by exact winding numbers on boxes.
std::vector<RootEnclosure> isolate_roots(const Poly& p, const Rational& precision);

/// One refinement step: at least halves the radius. No-op on exact roots.
void refine_enclosure(RootEnclosure& e);

/// Refine until radius <= target.
void refine_to(RootEnclosure& e, const Rational& target);

struct RationalRoots {
    std::vector<Rational> roots;      // all rational roots, each once
    unsigned long irrational = 0;     // distinct non-rational roots (complex included)
};

/// Exact rational roots of a nonzero univariate polynomial (simplest-rational
/// detection on isolating intervals; no factorization).
RationalRoots rational_roots(const UniPoly& f);

namespace detail {

/// Exact number of roots of f strictly inside the box (no roots may lie on
/// the boundary; the caller prepares generic boxes).
struct Box {
    Rational x1, x2, y1, y2;
};

int count_roots_in_box(const UniPoly& f, const Box& b);

/// Expand the box outward (bottom stays positive) until the boundary is
/// generic for f: no roots on it and all corner values have nonzero real
/// and imaginary parts.
Box prepare_box(const UniPoly& f, Box b);

/// Isolating intervals (lo, hi) for the distinct real roots of f in (a, b);
/// interval endpoints are never roots.
std::vector<std::pair<Rational, Rational>> isolate_real_roots_in(const UniPoly& f,
                                                                 const Rational& a,
                                                                 const Rational& b);

}  // namespace detail

}  // namespace vfcert

#endif
