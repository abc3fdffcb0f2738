#include "vfcert/certifier.hpp"

#include <sstream>
#include <stdexcept>

namespace vfcert {

namespace {

std::string canonical_field_text(const VectorField& v) {
    std::ostringstream os;
    os << "{\"vars\":[";
    for (std::size_t i = 0; i < v.vars().size(); ++i)
        os << (i ? "," : "") << '"' << v.vars()[i] << '"';
    os << "],\"components\":[";
    for (std::size_t i = 0; i < v.components().size(); ++i)
        os << (i ? "," : "") << '"' << v.component(i).to_string() << '"';
    os << "]}";
    return os.str();
}

std::string fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex;
    for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xF);
    return os.str();
}

std::string point_text(const std::vector<Rational>& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i].to_string();
    os << ")";
    return os.str();
}

}  // namespace

std::string field_fingerprint(const VectorField& v) {
    return fnv1a64(canonical_field_text(v));
}

Certificate certify(const VectorField& v, const std::vector<Rational>& point,
                    const CertifyOptions& opts) {
    if (!v.is_polynomial()) throw std::invalid_argument("certify: field must be polynomial");
    if (v.is_zero()) throw std::invalid_argument("certify: zero field");
    VerifySingular chk = verify_singular(v, point);
    if (!chk.singular)
        throw std::invalid_argument("certify: the point is not singular (component " +
                                    std::to_string(chk.failing_component + 1) +
                                    " evaluates to " + chk.failing_value.to_string() + ")");

    Certificate cert;
    cert.field_fingerprint = field_fingerprint(v);
    cert.point = chk.point;
    cert.degree_bound = opts.degree_bound;
    cert.height_bound = opts.height_bound;

    QMatrix a = linear_part(v, cert.point);
    cert.resonance = resonance_check(a, opts.height_bound, opts.precision_budget);

    try {
        cert.sing_finite = sing_locus_finite(v, opts.groebner);
        cert.sing_finite_known = true;
    } catch (const BudgetExhausted&) {
        cert.sing_finite_known = false;
    }

    cert.darboux = darboux_search(v, opts.degree_bound, opts.groebner);
    for (const auto& pair : cert.darboux.found)
        cert.point_membership.emplace_back(pair.g,
                                           pair.g.evaluate(cert.point.coords).is_zero());

    // hypothesis (a)
    if (cert.resonance.status == ResonanceVerdict::Status::Resonant) {
        cert.verdict = Certificate::Verdict::HypothesisAFails;
        return cert;
    }

    // hypothesis (b): a found Darboux polynomial through the point, re-checked
    // independently before emission
    for (const auto& [g, vanishes] : cert.point_membership) {
        if (!vanishes) continue;
        auto h = cofactor_of(v, g);
        if (h.has_value() && g.evaluate(cert.point.coords).is_zero()) {
            cert.verdict = Certificate::Verdict::HypothesisBFails;
            cert.witness_g = g;
            return cert;
        }
    }
    // hypothesis (b): a user-supplied invariant ideal containing the point;
    // it must cut out a positive-dimensional set, a zero-dimensional invariant
    // ideal says nothing against (b)
    if (opts.user_ideal.has_value()) {
        try {
            bool invariant = invariant_ideal_check(v, *opts.user_ideal, opts.groebner);
            bool through_point = true;
            for (const Poly& g : opts.user_ideal->generators)
                through_point = through_point && g.evaluate(cert.point.coords).is_zero();
            bool positive_dim =
                opts.user_ideal->generators.empty() ||
                !is_zero_dimensional(
                    buchberger(*opts.user_ideal, MonomialOrder::grevlex(), opts.groebner));
            if (invariant && through_point && positive_dim) {
                cert.verdict = Certificate::Verdict::HypothesisBFails;
                cert.witness_ideal = *opts.user_ideal;
                return cert;
            }
        } catch (const BudgetExhausted&) {
            cert.reasons.push_back("supplied ideal check ran out of budget");
        }
    }

    if (cert.resonance.status == ResonanceVerdict::Status::Unresolved)
        cert.reasons.push_back("resonance search left candidate relations unresolved");
    if (cert.darboux.status == SearchReport::Status::BudgetExhausted)
        cert.reasons.push_back("Darboux search ran out of budget");
    if (!cert.sing_finite_known)
        cert.reasons.push_back("singular-locus finiteness check ran out of budget");
    else if (!cert.sing_finite)
        cert.reasons.push_back("singular locus is not zero-dimensional");

    if (cert.reasons.empty()) {
        cert.verdict = Certificate::Verdict::EvidenceForMinimality;
    } else {
        cert.verdict = Certificate::Verdict::Inconclusive;
    }
    return cert;
}

StructureReport structure_report(const VectorField& v, const GroebnerOptions& opts) {
    if (!v.is_polynomial())
        throw std::invalid_argument("structure_report: field must be polynomial");
    StructureReport r;
    r.degree = affine_degree(v);
    try {
        r.sing_finite = sing_locus_finite(v, opts);
        if (r.sing_finite) {
            RationalPointSolve sol = solve_rational_points(singular_ideal(v), opts);
            if (sol.zero_dimensional) {
                r.rational_singular_points = sol.points;
                r.points_enumerated = true;
                r.irrational_branches = sol.irrational_branches;
            }
        }
    } catch (const BudgetExhausted&) {
        r.sing_finite_known = false;
    }

    std::size_t n = v.dimension();
    if (r.degree.zero_field) {
        r.notes.push_back("zero field: every subvariety is invariant");
    } else if (r.degree.value <= 1) {
        r.notes.push_back(
            "affine degree <= 1: an (in)homogeneous linear system, internal to the "
            "constants; the minimality criterion does not apply");
    }
    if (n == 1 && r.degree.value == 2)
        r.notes.push_back(
            "dimension 1, degree 2: an autonomous Riccati equation, internal to the "
            "constants and never geometrically trivial");
    if (n == 3 && r.degree.value == 2)
        r.notes.push_back(
            "dimension 3, degree 2: the class containing the Halphen systems; "
            "well-chosen parameter values are strongly minimal and geometrically trivial");
    return r;
}

std::string render_certificate_text(const Certificate& c) {
    std::ostringstream os;
    os << "certificate for field " << c.field_fingerprint << "\n";
    os << "  singular point: " << point_text(c.point.coords) << "\n";
    os << "  resonance: ";
    switch (c.resonance.status) {
        case ResonanceVerdict::Status::Resonant: {
            os << "RESONANT, witness k = (";
            for (std::size_t i = 0; i < c.resonance.witness.size(); ++i)
                os << (i ? ", " : "") << c.resonance.witness[i];
            os << ")\n";
            break;
        }
        case ResonanceVerdict::Status::NonResonantUpTo:
            os << "NONRESONANT_UP_TO: non-resonant up to integer-relation height K="
               << c.resonance.height_bound << "\n";
            break;
        case ResonanceVerdict::Status::Unresolved:
            os << "UNRESOLVED (" << c.resonance.unresolved.size()
               << " candidate relation(s) could not be settled)\n";
            break;
    }
    os << "  eigenvalue enclosures:\n";
    for (const auto& e : c.resonance.eigenvalues)
        os << "    re " << e.center_re.to_string() << ", im " << e.center_im.to_string()
           << ", radius " << e.radius.to_string() << "\n";
    os << "  Darboux search at degree bound D=" << c.degree_bound << ": "
       << (c.darboux.status == SearchReport::Status::Complete ? "COMPLETE"
                                                              : "BUDGET_EXHAUSTED")
       << ", " << c.darboux.found.size() << " polynomial(s) found\n";
    for (const auto& [g, vanishes] : c.point_membership)
        os << "    g = " << g.to_string() << "  [g(point) "
           << (vanishes ? "= 0]" : "!= 0]") << "\n";
    for (const auto& fam : c.darboux.positive_dimensional_families)
        os << "    family: " << fam << "\n";
    os << "  singular locus finite: "
       << (c.sing_finite_known ? (c.sing_finite ? "yes" : "no") : "not settled") << "\n";
    os << "  verdict: ";
    switch (c.verdict) {
        case Certificate::Verdict::EvidenceForMinimality:
            os << "EVIDENCE_FOR_MINIMALITY(D=" << c.degree_bound << ", K=" << c.height_bound
               << ")\n";
            break;
        case Certificate::Verdict::HypothesisAFails:
            os << "HYPOTHESIS_A_FAILS\n";
            break;
        case Certificate::Verdict::HypothesisBFails:
            os << "HYPOTHESIS_B_FAILS\n";
            if (c.witness_g)
                os << "    witness: invariant hypersurface g = " << c.witness_g->to_string()
                   << " through the point\n";
            if (c.witness_ideal) {
                os << "    witness: supplied invariant ideal {";
                for (std::size_t i = 0; i < c.witness_ideal->generators.size(); ++i)
                    os << (i ? "; " : "") << c.witness_ideal->generators[i].to_string();
                os << "} through the point\n";
            }
            break;
        case Certificate::Verdict::Inconclusive:
            os << "INCONCLUSIVE\n";
            for (const auto& r : c.reasons) os << "    reason: " << r << "\n";
            break;
    }
    os << "  fine print: this verdict is evidence bounded by (D=" << c.degree_bound
       << ", K=" << c.height_bound << "). The singularity is certified non-resonant only up "
       << "to integer relations of height K=" << c.height_bound
       << ". Hypothesis (b) is checked only against Q-coefficient Darboux hypersurfaces of "
       << "degree <= D=" << c.degree_bound << ": asserting no invariant hypersurface "
       << "through the point always means none with rational coefficients and degree <= D="
       << c.degree_bound << "; invariant curves and higher-codimension invariant sets are "
       << "not searched at D=" << c.degree_bound
       << " or any other bound, and an invariant hypersurface with non-rational algebraic "
       << "coefficients appears only as a Q-irreducible product of higher degree. If the "
       << "hypotheses hold unboundedly - the eigenvalues admit no integer relation of any "
       << "height, not only K=" << c.height_bound
       << ", and no positive-dimensional invariant subvariety of any degree, not only D="
       << c.degree_bound
       << ", passes through the point - then the minimality criterion concludes that the "
       << "generic type of the field is minimal; for a field whose proper invariant "
       << "subvarieties are finitely many points this is equivalent to strong minimality "
       << "of the solution set and implies geometric triviality.\n";
    return os.str();
}

std::string render_structure_text(const StructureReport& r) {
    std::ostringstream os;
    os << "structure report\n";
    os << "  affine degree: " << r.degree.value << (r.degree.zero_field ? " (zero field)" : "")
       << "\n";
    os << "  singular locus finite: "
       << (r.sing_finite_known ? (r.sing_finite ? "yes" : "no") : "not settled") << "\n";
    if (r.points_enumerated) {
        os << "  rational singular points: " << r.rational_singular_points.size() << "\n";
        for (const auto& p : r.rational_singular_points)
            os << "    " << point_text(p) << "\n";
        if (r.irrational_branches > 0)
            os << "  non-rational singular branches: " << r.irrational_branches << "\n";
    }
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    return os.str();
}

}  // namespace vfcert
