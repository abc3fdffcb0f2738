#include "vfcert/json_io.hpp"

#include "vfcert/parse.hpp"

namespace vfcert {

namespace {

std::vector<std::string> vars_from(const json& j, const char* key = "vars") {
    if (!j.contains(key) || !j[key].is_array())
        throw std::invalid_argument(std::string("json: missing variable list '") + key + "'");
    std::vector<std::string> vars;
    for (const auto& v : j[key]) vars.push_back(v.get<std::string>());
    return vars;
}

}  // namespace

json to_json(const VectorField& v) {
    json j;
    j["vars"] = v.vars();
    json comps = json::array();
    for (const auto& c : v.components()) comps.push_back(c.to_string());
    j["components"] = comps;
    return j;
}

VectorField vectorfield_from_json(const json& j) {
    std::vector<std::string> vars = vars_from(j);
    if (!j.contains("components") || !j["components"].is_array())
        throw std::invalid_argument("json: field needs a components array");
    std::vector<RatFunc> comps;
    for (const auto& c : j["components"])
        comps.push_back(parse_ratfunc(c.get<std::string>(), vars));
    return VectorField(vars, comps);
}

json to_json(const HomogeneousField& h) {
    json j;
    j["vars"] = h.vars;
    json comps = json::array();
    for (const auto& c : h.components) comps.push_back(c.to_string());
    j["components"] = comps;
    j["twist_degree"] = h.twist_degree;
    return j;
}

HomogeneousField homogeneous_from_json(const json& j) {
    std::vector<std::string> vars = vars_from(j);
    if (vars != projective_vars(vars.size() - 1))
        throw std::invalid_argument("json: homogeneous field variables must be X0..Xn");
    std::vector<Poly> comps;
    for (const auto& c : j.at("components"))
        comps.push_back(parse_poly(c.get<std::string>(), vars));
    return HomogeneousField::make(std::move(comps), j.at("twist_degree").get<int>());
}

json to_json(const Ideal& i) {
    json j;
    j["vars"] = i.vars;
    json gens = json::array();
    for (const auto& g : i.generators) gens.push_back(g.to_string());
    j["generators"] = gens;
    return j;
}

Ideal ideal_from_json(const json& j) {
    std::vector<std::string> vars = vars_from(j);
    std::vector<Poly> gens;
    for (const auto& g : j.at("generators")) gens.push_back(parse_poly(g.get<std::string>(), vars));
    return Ideal::make(vars, gens);
}

json oneform_to_json(const std::vector<std::string>& vars, const OneForm& w) {
    json j;
    j["vars"] = vars;
    json comps = json::array();
    for (const auto& c : w.components) comps.push_back(c.to_string());
    j["components"] = comps;
    return j;
}

OneForm oneform_from_json(const json& j, std::vector<std::string>* vars_out) {
    std::vector<std::string> vars = vars_from(j);
    OneForm w;
    for (const auto& c : j.at("components"))
        w.components.push_back(parse_poly(c.get<std::string>(), vars));
    if (vars_out) *vars_out = vars;
    return w;
}

json to_json(const ProlongedField& p) {
    json j = to_json(p.full);
    j["base_vars"] = p.base.vars();
    j["fiber_vars"] = p.fiber_vars;
    return j;
}

json to_json(const HorizontalIdeal& h) {
    json j;
    j["vars"] = h.base_vars;
    j["fiber_vars"] = h.fiber_vars;
    json gens = json::array();
    for (const auto& g : h.ideal.generators) gens.push_back(g.to_string());
    j["generators"] = gens;
    return j;
}

json to_json(const ResonanceVerdict& v) {
    json j;
    switch (v.status) {
        case ResonanceVerdict::Status::Resonant: j["status"] = "RESONANT"; break;
        case ResonanceVerdict::Status::NonResonantUpTo: j["status"] = "NONRESONANT_UP_TO"; break;
        case ResonanceVerdict::Status::Unresolved: j["status"] = "UNRESOLVED"; break;
    }
    j["witness"] = v.witness;
    j["K"] = v.height_bound;
    json eig = json::array();
    for (const auto& e : v.eigenvalues) {
        json je;
        je["re"] = e.center_re.to_string();
        je["im"] = e.center_im.to_string();
        je["radius"] = e.radius.to_string();
        eig.push_back(je);
    }
    j["eigenvalues"] = eig;
    if (!v.unresolved.empty()) j["unresolved"] = v.unresolved;
    return j;
}

json to_json(const SearchReport& r) {
    json j;
    j["D"] = r.degree_bound;
    j["status"] =
        r.status == SearchReport::Status::Complete ? "COMPLETE" : "BUDGET_EXHAUSTED";
    json found = json::array();
    for (const auto& p : r.found) {
        json jp;
        jp["g"] = p.g.to_string();
        jp["h"] = p.h.to_string();
        found.push_back(jp);
    }
    j["found"] = found;
    j["families"] = r.positive_dimensional_families;
    j["irrational_branches"] = r.irrational_branches;
    return j;
}

json to_json(const Certificate& c) {
    json j;
    j["field_fingerprint"] = c.field_fingerprint;
    json pt = json::array();
    for (const auto& x : c.point.coords) pt.push_back(x.to_string());
    j["point"] = pt;
    j["resonance"] = to_json(c.resonance);
    j["darboux"] = to_json(c.darboux);
    json mem = json::array();
    for (const auto& [g, vanishes] : c.point_membership) {
        json jm;
        jm["g"] = g.to_string();
        jm["vanishes_at_point"] = vanishes;
        mem.push_back(jm);
    }
    j["point_membership"] = mem;
    j["sing_finite"] = c.sing_finite;
    j["sing_finite_known"] = c.sing_finite_known;
    switch (c.verdict) {
        case Certificate::Verdict::EvidenceForMinimality:
            j["verdict"] = "EVIDENCE_FOR_MINIMALITY";
            break;
        case Certificate::Verdict::HypothesisAFails: j["verdict"] = "HYPOTHESIS_A_FAILS"; break;
        case Certificate::Verdict::HypothesisBFails: j["verdict"] = "HYPOTHESIS_B_FAILS"; break;
        case Certificate::Verdict::Inconclusive: j["verdict"] = "INCONCLUSIVE"; break;
    }
    j["D"] = c.degree_bound;
    j["K"] = c.height_bound;
    if (c.witness_g) j["witness_g"] = c.witness_g->to_string();
    if (c.witness_ideal) j["witness_ideal"] = to_json(*c.witness_ideal);
    if (!c.reasons.empty()) j["reasons"] = c.reasons;
    j["report"] = render_certificate_text(c);
    return j;
}

json to_json(const StructureReport& r) {
    json j;
    j["sing_finite"] = r.sing_finite;
    j["sing_finite_known"] = r.sing_finite_known;
    j["affine_degree"] = r.degree.value;
    j["zero_field"] = r.degree.zero_field;
    if (r.points_enumerated) {
        json pts = json::array();
        for (const auto& p : r.rational_singular_points) {
            json jp = json::array();
            for (const auto& x : p) jp.push_back(x.to_string());
            pts.push_back(jp);
        }
        j["rational_singular_points"] = pts;
        j["irrational_branches"] = r.irrational_branches;
    }
    j["notes"] = r.notes;
    return j;
}

}  // namespace vfcert
