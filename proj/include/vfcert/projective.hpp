#ifndef VFCERT_PROJECTIVE_HPP
#define VFCERT_PROJECTIVE_HPP

#include <string>
#include <vector>

#include "vfcert/vectorfield.hpp"

namespace vfcert {

/// Homogeneous vector field on the cone over P^n: components F_0..F_n in
/// X_0..X_n, all nonzero ones homogeneous of degree twist_degree + 1.
struct HomogeneousField {
    std::vector<std::string> vars;  // "X0".."Xn"
    std::vector<Poly> components;
    int twist_degree = 0;

    static HomogeneousField make(std::vector<Poly> components, int twist_degree);
    std::size_t projective_dim() const { return vars.size() - 1; }

    friend bool operator==(const HomogeneousField& a, const HomogeneousField& b) {
        return a.vars == b.vars && a.components == b.components &&
               a.twist_degree == b.twist_degree;
    }
};

std::vector<std::string> projective_vars(std::size_t n);

/// E = sum_i X_i d/dX_i, twist degree 0.
HomogeneousField euler_field(std::size_t n);

/// Degree-d affine field to the cone: F_0 = 0, F_i = X_0^d f_i(X/X_0);
/// twist degree d - 1.
HomogeneousField homogenize_affine(const VectorField& v, unsigned d);

/// Inverse of homogenize_affine on representatives with F_0 = 0; default
/// chart names x1..xn.
VectorField dehomogenize(const HomogeneousField& h, std::vector<std::string> names = {});

/// Restriction to the chart X_i != 0: coordinate X_j/X_i goes to
/// F_j/X_i - X_j F_i / X_i^2, rewritten in the chart coordinates.
/// Chart 0 defaults to names x1..xn; chart i to u0..un (skipping u_i).
VectorField chart_derivation(const HomogeneousField& h, std::size_t chart,
                             std::vector<std::string> names = {});

/// The hyperplane X_0 = 0 is invariant: X_0 divides F_0.
bool hyperplane_invariant(const HomogeneousField& h);

/// h1 - h2 is f * Euler for some homogeneous f of degree twist_degree.
bool modulo_euler_equal(const HomogeneousField& h1, const HomogeneousField& h2);

/// Pole order of the field along the coordinate hyperplane {var = 0}:
/// max(0, -min_i val_var(component i)) on reduced components.
unsigned pole_order(const VectorField& v, const std::string& hyperplane_var);

}  // namespace vfcert

#endif
