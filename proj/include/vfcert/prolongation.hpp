#ifndef VFCERT_PROLONGATION_HPP
#define VFCERT_PROLONGATION_HPP

#include <cstdint>
#include <vector>

#include "vfcert/vectorfield.hpp"

namespace vfcert {

/// Three-valued answer for checks that can exhaust their computation budget.
enum class Check { False, True, Indeterminate };

/// The lift of a polynomial field to the cotangent coordinates: base on
/// x_1..x_n, full on (x_1..x_n, y_1..y_n), linear in the fiber block.
struct ProlongedField {
    VectorField base;
    VectorField full;
    std::vector<std::string> fiber_vars;
};

/// Ideal of a fiberwise-homogeneous cone in the cotangent space.
struct HorizontalIdeal {
    Ideal ideal;  // over base_vars + fiber_vars
    std::vector<std::string> base_vars;
    std::vector<std::string> fiber_vars;
    bool homogeneous = true;

    static HorizontalIdeal make(std::vector<std::string> base_vars,
                                std::vector<std::string> fiber_vars,
                                const std::vector<Poly>& generators);
};

/// v^[1]: x-components are those of v, y-component i is
/// -sum_j (da_j/dx_i) y_j.
ProlongedField first_prolongation(const VectorField& v);

/// The fiber-linear function induced by a polynomial field:
/// w-bar = sum_i w_i y_i over (x, y).
Poly tautological_form(const VectorField& w, const std::vector<std::string>& fiber_vars);
Poly tautological_form(const VectorField& w);

/// Principal ideal <v-bar>: the cone over the canonical invariant
/// hypersurface of the projectivized cotangent space.
HorizontalIdeal canonical_hypersurface(const VectorField& v);

/// Invariance of the cone: the derivation of every generator lies in the
/// ideal. Indeterminate when the Groebner budget runs out.
Check check_horizontal_invariant(const ProlongedField& pv, const HorizontalIdeal& h,
                                 const GroebnerOptions& opts = {});

/// Conormal ideal <xi_1-bar, ..., xi_r-bar> of the distribution spanned by
/// the given fields; linear independence is probed at seeded random rational
/// points (three attempts) and rejected with a witness on failure.
HorizontalIdeal distribution_conormal_ideal(const std::vector<VectorField>& spanning,
                                            std::uint64_t seed = 0);

/// Every y-component of (f v)^[1] - f (v^[1]) is exactly divisible by v-bar;
/// the coordinate content of the Bott lift being linear over functions.
bool bott_restriction_check(const VectorField& v, const Poly& f);

}  // namespace vfcert

#endif
