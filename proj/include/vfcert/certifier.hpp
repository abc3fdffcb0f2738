#ifndef VFCERT_CERTIFIER_HPP
#define VFCERT_CERTIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "vfcert/darboux.hpp"
#include "vfcert/singularity.hpp"

namespace vfcert {

/// Bundled bounded-evidence verdict for the minimality-criterion hypotheses
/// at a rational singular point: (a) non-resonance of the linear part,
/// (b) no invariant proper positive-dimensional subvariety through the point.
struct Certificate {
    std::string field_fingerprint;
    SingularPoint point;
    ResonanceVerdict resonance;
    SearchReport darboux;
    std::vector<std::pair<Poly, bool>> point_membership;  // found g, g(point) == 0
    bool sing_finite = false;
    bool sing_finite_known = true;

    enum class Verdict {
        EvidenceForMinimality,
        HypothesisAFails,
        HypothesisBFails,
        Inconclusive
    };
    Verdict verdict = Verdict::Inconclusive;
    unsigned degree_bound = 0;
    unsigned height_bound = 0;
    std::optional<Poly> witness_g;       // hypothesis (b) failure by Darboux search
    std::optional<Ideal> witness_ideal;  // hypothesis (b) failure by a supplied ideal
    std::vector<std::string> reasons;    // when inconclusive
};

struct CertifyOptions {
    unsigned degree_bound = 3;   // D: Darboux search degree
    unsigned height_bound = 50;  // K: integer-relation height
    unsigned precision_budget = 96;
    GroebnerOptions groebner;
    std::optional<Ideal> user_ideal;  // extra invariant-subvariety candidate
};

/// Runs the full pipeline: singular-point verification, linear part,
/// bounded resonance, singular-locus finiteness, Darboux search, point
/// membership, and assembles the verdict. Deterministic for fixed inputs.
Certificate certify(const VectorField& v, const std::vector<Rational>& point,
                    const CertifyOptions& opts = {});

/// Informational survey: finiteness of the singular locus, rational singular
/// points, affine degree, and degenerate low-degree notes.
struct StructureReport {
    bool sing_finite = false;
    bool sing_finite_known = true;
    std::vector<std::vector<Rational>> rational_singular_points;
    bool points_enumerated = false;
    unsigned long irrational_branches = 0;
    AffineDegree degree;
    std::vector<std::string> notes;
};

StructureReport structure_report(const VectorField& v, const GroebnerOptions& opts = {});

/// Canonical 64-bit FNV-1a fingerprint of the field's canonical JSON text.
std::string field_fingerprint(const VectorField& v);

std::string render_certificate_text(const Certificate& c);
std::string render_structure_text(const StructureReport& r);

}  // namespace vfcert

#endif
