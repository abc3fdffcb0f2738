#ifndef VFCERT_DARBOUX_HPP
#define VFCERT_DARBOUX_HPP

#include <optional>
#include <string>
#include <vector>

#include "vfcert/vectorfield.hpp"

namespace vfcert {

/// g with dv(g) = h * g; g monic under grevlex, h the cofactor (h = 0 means
/// g is a first integral).
struct DarbouxPair {
    Poly g;
    Poly h;
};

/// Polynomial one-form sum_i w_i dx_i (not all components zero).
struct OneForm {
    std::vector<Poly> components;
};

struct SearchReport {
    unsigned degree_bound = 0;
    std::vector<DarbouxPair> found;  // Q-irreducible surrogate: no found proper divisor
    enum class Status { Complete, BudgetExhausted } status = Status::Complete;
    std::vector<std::string> positive_dimensional_families;
    unsigned long irrational_branches = 0;
};

/// Cofactor h with dv(g) = h * g, or nullopt when g does not divide dv(g).
std::optional<Poly> cofactor_of(const VectorField& v, const Poly& g);

/// Rational points of a zero-dimensional ideal by lex Groebner bases and
/// back-substitution; non-rational branches are counted, not materialized.
struct RationalPointSolve {
    bool zero_dimensional = true;
    std::vector<std::vector<Rational>> points;
    unsigned long irrational_branches = 0;
    std::vector<std::size_t> free_vars;     // without a pure-power leading monomial
    std::vector<std::string> basis_text;    // printed lex basis, for reports
};

RationalPointSolve solve_rational_points(const Ideal& ideal, const GroebnerOptions& opts = {});

/// Complete search for Q-coefficient Darboux polynomials of degree <= D by
/// leading-monomial strata: per stratum the bilinear coefficient system is
/// solved over Q, rational points enumerated by lex Groebner back-substitution,
/// positive-dimensional solution sets reported symbolically (with the
/// zero-specialization representative materialized when it solves the system).
SearchReport darboux_search(const VectorField& v, unsigned D, const GroebnerOptions& opts = {});

/// dv(I) subset I, tested generator by generator against a Groebner basis.
bool invariant_ideal_check(const VectorField& v, const Ideal& ideal,
                           const GroebnerOptions& opts = {});

/// Dual-connection action on a one-form: (nabla w)_j = dv(w_j) + sum_i
/// (da_i/dx_j) w_i; returns h with nabla w = h * w when the distribution
/// ker(w) is invariant, nullopt otherwise.
std::optional<RatFunc> codim1_invariant(const VectorField& v, const OneForm& w);

/// Executable identity: g = i_v(w) satisfies dv(g) = h * g for the cofactor
/// h of an invariant one-form. Requires codim1_invariant(v, w) to succeed.
bool tangency_identity_check(const VectorField& v, const OneForm& w);

}  // namespace vfcert

#endif
