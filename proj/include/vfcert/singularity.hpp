#ifndef VFCERT_SINGULARITY_HPP
#define VFCERT_SINGULARITY_HPP

#include <vector>

#include "vfcert/linalg.hpp"
#include "vfcert/roots.hpp"
#include "vfcert/vectorfield.hpp"

namespace vfcert {

/// A common zero of all components of a vector field.
struct SingularPoint {
    std::vector<Rational> coords;
};

struct VerifySingular {
    bool singular = false;
    SingularPoint point;
    std::size_t failing_component = 0;  // first nonvanishing component when not singular
    Rational failing_value;
};

/// Outcome of the bounded integer-relation search on the eigenvalues of a
/// linear part.
struct ResonanceVerdict {
    enum class Status { Resonant, NonResonantUpTo, Unresolved };
    Status status = Status::Unresolved;
    std::vector<long> witness;                  // Resonant: sum k_i lambda_i = 0 exactly
    unsigned height_bound = 0;                  // K
    std::vector<std::vector<long>> unresolved;  // candidates that could not be settled
    std::vector<RootEnclosure> eigenvalues;     // n entries, repeated per multiplicity
};

/// <a_1, ..., a_n>, the ideal of the singular locus.
Ideal singular_ideal(const VectorField& v);

/// Zero-dimensionality of the singular locus (true for an empty locus).
bool sing_locus_finite(const VectorField& v, const GroebnerOptions& opts = {});

/// Constructs the point iff every component vanishes there.
VerifySingular verify_singular(const VectorField& v, const std::vector<Rational>& coords);

/// Jacobian at a singular point: entry (i, j) = d a_i / d x_j evaluated at p.
QMatrix linear_part(const VectorField& v, const SingularPoint& p);

/// Certified resonance status of the eigenvalues of A up to height K.
/// Repeated or multiple rational eigenvalues short-circuit to Resonant;
/// otherwise every nonzero k with max |k_i| <= K (first nonzero entry
/// positive) is excluded by enclosure arithmetic, escalating to an exact
/// resultant-composition test and enclosure shrinking before giving up.
ResonanceVerdict resonance_check(const QMatrix& a, unsigned K, unsigned precision_budget = 96);

}  // namespace vfcert

#endif
