#ifndef VFCERT_VECTORFIELD_HPP
#define VFCERT_VECTORFIELD_HPP

#include <string>
#include <vector>

#include "vfcert/groebner.hpp"
#include "vfcert/ratfunc.hpp"

namespace vfcert {

/// v = sum_i a_i d/dx_i with rational-function coefficients a_i.
class VectorField {
  public:
    VectorField(std::vector<std::string> vars, std::vector<RatFunc> components);

    static VectorField from_polys(const std::vector<std::string>& vars,
                                  const std::vector<Poly>& components);
    static VectorField zero(const std::vector<std::string>& vars);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t dimension() const { return vars_.size(); }
    const std::vector<RatFunc>& components() const { return components_; }
    const RatFunc& component(std::size_t i) const { return components_[i]; }

    bool is_polynomial() const;
    bool is_zero() const;
    /// Component i as a Poly; all components must have unit denominator.
    Poly poly_component(std::size_t i) const { return components_[i].as_poly(); }

    friend bool operator==(const VectorField& a, const VectorField& b) {
        return a.vars_ == b.vars_ && a.components_ == b.components_;
    }
    friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

    VectorField operator+(const VectorField& o) const;
    VectorField operator-() const;
    VectorField scaled(const RatFunc& f) const;

  private:
    std::vector<std::string> vars_;
    std::vector<RatFunc> components_;
};

/// The derivation of the function field: f -> sum_i a_i df/dx_i.
RatFunc apply_derivation(const VectorField& v, const RatFunc& f);
Poly apply_derivation(const VectorField& v, const Poly& f);

/// Commutator [v, w]: component i = sum_j (v_j dw_i/dx_j - w_j dv_i/dx_j).
VectorField lie_bracket(const VectorField& v, const VectorField& w);

struct AffineDegree {
    unsigned value = 0;
    bool zero_field = false;  // degree 0 by convention, flagged explicitly
};

/// Max total degree over the (polynomial) components.
AffineDegree affine_degree(const VectorField& v);

struct JetSequence {
    RatFunc observable;
    std::vector<RatFunc> entries;  // (f, dv f, ..., dv^order f)
};

JetSequence jet_sequence(const VectorField& v, const RatFunc& f, unsigned order);

struct OdeExtraction {
    Ideal ideal;     // over the jet variables Y0..Y_order
    bool principal;  // single generator: the scalar equation F = 0
};

/// Scalar equation satisfied by the jet of the observable f along v:
/// eliminate the base variables from <Y_k - dv^k f>. Rational observables
/// are handled by an auxiliary inverse variable with its saturation relation.
OdeExtraction extract_ode(const VectorField& v, const RatFunc& f, unsigned order,
                          const GroebnerOptions& opts = {});

/// n x n matrix with entry (i, j) = d a_j / d x_i, the coefficient matrix of
/// the linearized system along v.
std::vector<std::vector<RatFunc>> variational_matrix(const VectorField& v);

/// Fiber variable names for the cotangent coordinates over `vars`: y1..yn,
/// with a deterministic fallback on collision.
std::vector<std::string> fiber_variable_names(const std::vector<std::string>& vars);

/// A fresh variable name starting from `stem` that avoids `taken`.
std::string fresh_variable_name(const std::string& stem, const std::vector<std::string>& taken);

}  // namespace vfcert

#endif
