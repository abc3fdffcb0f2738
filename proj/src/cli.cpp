#include "vfcert/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "vfcert/json_io.hpp"
#include "vfcert/parse.hpp"

namespace vfcert::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInconclusive = 2;
constexpr int kUsage = 64;
constexpr int kParse = 65;

struct Options {
    bool json = false;
    std::uint64_t seed = 0;
    std::uint64_t budget = 1'000'000;
    unsigned jobs = 1;
    std::string field_path, second_path, ideal_path, oneform_path;
    std::string point_text, observable, hyperplane;
    unsigned max_degree = 3, max_height = 50, order = 1;
    std::size_t chart = 0;
};

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

std::vector<Rational> parse_point(const std::string& text) {
    std::vector<Rational> pt;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) pt.push_back(Rational::from_string(item));
    if (pt.empty()) throw std::invalid_argument("empty point");
    return pt;
}

void emit(const json& j, const std::string& text, const Options& opt, std::ostream& out) {
    if (opt.json)
        out << j.dump(2) << "\n";
    else
        out << text;
}

std::string field_text(const VectorField& v) {
    std::ostringstream os;
    os << "field on (";
    for (std::size_t i = 0; i < v.vars().size(); ++i) os << (i ? ", " : "") << v.vars()[i];
    os << "):\n";
    for (std::size_t i = 0; i < v.dimension(); ++i)
        os << "  d" << v.vars()[i] << "/dt = " << v.component(i).to_string() << "\n";
    return os.str();
}

std::string ideal_text(const Ideal& i) {
    std::ostringstream os;
    os << "ideal in Q[";
    for (std::size_t k = 0; k < i.vars.size(); ++k) os << (k ? ", " : "") << i.vars[k];
    os << "]:\n";
    if (i.generators.empty()) os << "  0\n";
    for (const auto& g : i.generators) os << "  " << g.to_string() << "\n";
    return os.str();
}

GroebnerOptions groebner_opts(const Options& opt) {
    GroebnerOptions g;
    g.step_budget = opt.budget;
    return g;
}

int cmd_prolong(const Options& opt, std::ostream& out) {
    VectorField v = vectorfield_from_json(load_json_file(opt.field_path));
    ProlongedField p = first_prolongation(v);
    emit(to_json(p), field_text(p.full), opt, out);
    return kOk;
}

int cmd_bracket(const Options& opt, std::ostream& out) {
    VectorField a = vectorfield_from_json(load_json_file(opt.field_path));
    VectorField b = vectorfield_from_json(load_json_file(opt.second_path));
    VectorField r = lie_bracket(a, b);
    emit(to_json(r), field_text(r), opt, out);
    return kOk;
}

int cmd_singular(const Options& opt, std::ostream& out) {
    VectorField v = vectorfield_from_json(load_json_file(opt.field_path));
    Ideal i = singular_ideal(v);
    emit(to_json(i), ideal_text(i), opt, out);
    return kOk;
}

int cmd_linpart(const Options& opt, std::ostream& out) {
    VectorField v = vectorfield_from_json(load_json_file(opt.field_path));
    VerifySingular chk = verify_singular(v, parse_point(opt.point_text));
    if (!chk.singular) throw std::invalid_argument("the point is not singular");
    QMatrix a = linear_part(v, chk.point);
    json rows = json::array();
    std::ostringstream os;
    os << "linear part:\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        os << "  [";
        for (std::size_t j = 0; j < a.cols(); ++j) {
            row.push_back(a.at(i, j).to_string());
            os << (j ? ", " : "") << a.at(i, j).to_string();
        }
        os << "]\n";
        rows.push_back(row);
    }
    json j;
    j["matrix"] = rows;
    emit(j, os.str(), opt, out);
    return kOk;
}

int cmd_resonance(const Options& opt, std::ostream& out) {
    VectorField v = vectorfield_from_json(load_json_file(opt.field_path));
    VerifySingular chk = verify_singular(v, parse_point(opt.point_text));
    if (!chk.singular) throw std::invalid_argument("the point is not singular");
    ResonanceVerdict r = resonance_check(linear_part(v, chk.point), opt.max_height);
    std::ostringstream os;
    switch (r.status) {
        case ResonanceVerdict::Status::Resonant: {
            os << "RESONANT, witness k = (";
            for (std::size_t i = 0; i < r.witness.size(); ++i)
                os << (i ? ", " : "") << r.witness[i];
            os << ")\n";
            break;
        }
        case ResonanceVerdict::Status::NonResonantUpTo:
            os << "NONRESONANT_UP_TO(K=" << r.height_bound << ")\n";
            break;
        case ResonanceVerdict::Status::Unresolved:
            os << "UNRESOLVED\n";
            break;
    }
    emit(to_json(r), os.str(), opt, out);
    switch (r.status) {
        case ResonanceVerdict::Status::NonResonantUpTo: return kOk;
        case ResonanceVerdict::Status::Resonant: return kNegative;
        case ResonanceVerdict::Status::Unresolved: return kInconclusive;
    }
    return kInconclusive;
}

int cmd_darboux(const Options& opt, std::ostream& out) {
    VectorField v = vectorfield_from_json(load_json_file(opt.field_path));
    SearchReport r = darboux_search(v, opt.max_degree, groebner_opts(opt));
    std::ostringstream os;
    os << "Darboux search, degree bound " << r.degree_bound << ": "
       << (r.status == SearchReport::Status::Complete ? "COMPLETE" : "BUDGET_EXHAUSTED")
       << "\n";
    for (const auto& p : r.found)
        os << "  g = " << p.g.to_string() << ", cofactor h = " << p.h.to_string() << "\n";
    for (const auto& f : r.positive_dimensional_families) os << "  family: " << f << "\n";
    if (r.irrational_branches)
        os << "  non-rational coefficient branches: " << r.irrational_branches << "\n";
    emit(to_json(r), os.str(), opt, out);
    return r.status == SearchReport::Status::Complete ? kOk : kInconclusive;
}

int cmd_invariant(const Options& opt, std::ostream& out) {
    VectorField v = vectorfield_from_json(load_json_file(opt.field_path));
    Ideal i = ideal_from_json(load_json_file(opt.ideal_path));
    bool inv = invariant_ideal_check(v, i, groebner_opts(opt));
    json j;
    j["invariant"] = inv;
    emit(j, std::string(inv ? "invariant\n" : "not invariant\n"), opt, out);
    return inv ? kOk : kNegative;
}

int cmd_codim1(const Options& opt, std::ostream& out) {
    VectorField v = vectorfield_from_json(load_json_file(opt.field_path));
    OneForm w = oneform_from_json(load_json_file(opt.oneform_path));
    auto h = codim1_invariant(v, w);
    json j;
    std::ostringstream os;
    if (h) {
        j["invariant"] = true;
        j["cofactor"] = h->to_string();
        j["tangency_identity"] = tangency_identity_check(v, w);
        os << "invariant, cofactor h = " << h->to_string() << "\n";
    } else {
        j["invariant"] = false;
        os << "not invariant\n";
    }
    emit(j, os.str(), opt, out);
    return h ? kOk : kNegative;
}

int cmd_homogenize(const Options& opt, std::ostream& out) {
    VectorField v = vectorfield_from_json(load_json_file(opt.field_path));
    HomogeneousField h = homogenize_affine(v, opt.max_degree);
    std::ostringstream os;
    os << "homogeneous field, twist degree " << h.twist_degree << ":\n";
    for (std::size_t i = 0; i < h.components.size(); ++i)
        os << "  F" << i << " = " << h.components[i].to_string() << "\n";
    emit(to_json(h), os.str(), opt, out);
    return kOk;
}

int cmd_dehomogenize(const Options& opt, std::ostream& out) {
    HomogeneousField h = homogeneous_from_json(load_json_file(opt.field_path));
    VectorField v = dehomogenize(h);
    emit(to_json(v), field_text(v), opt, out);
    return kOk;
}

int cmd_chart(const Options& opt, std::ostream& out) {
    HomogeneousField h = homogeneous_from_json(load_json_file(opt.field_path));
    VectorField v = chart_derivation(h, opt.chart);
    emit(to_json(v), field_text(v), opt, out);
    return kOk;
}

int cmd_pole_order(const Options& opt, std::ostream& out) {
    VectorField v = vectorfield_from_json(load_json_file(opt.field_path));
    unsigned d = pole_order(v, opt.hyperplane);
    json j;
    j["pole_order"] = d;
    std::ostringstream os;
    os << "pole order along " << opt.hyperplane << " = 0: " << d << "\n";
    emit(j, os.str(), opt, out);
    return kOk;
}

int cmd_jet_ode(const Options& opt, std::ostream& out) {
    VectorField v = vectorfield_from_json(load_json_file(opt.field_path));
    RatFunc f = parse_ratfunc(opt.observable, v.vars());
    OdeExtraction ode = extract_ode(v, f, opt.order, groebner_opts(opt));
    json j = to_json(ode.ideal);
    j["principal"] = ode.principal;
    std::ostringstream os;
    os << (ode.principal ? "scalar equation:\n" : "elimination ideal (not principal):\n");
    for (const auto& g : ode.ideal.generators) os << "  " << g.to_string() << " = 0\n";
    emit(j, os.str(), opt, out);
    return kOk;
}

int cmd_certify(const Options& opt, std::ostream& out) {
    VectorField v = vectorfield_from_json(load_json_file(opt.field_path));
    CertifyOptions copts;
    copts.degree_bound = opt.max_degree;
    copts.height_bound = opt.max_height;
    copts.groebner = groebner_opts(opt);
    if (!opt.ideal_path.empty())
        copts.user_ideal = ideal_from_json(load_json_file(opt.ideal_path));
    Certificate c = certify(v, parse_point(opt.point_text), copts);
    emit(to_json(c), render_certificate_text(c), opt, out);
    switch (c.verdict) {
        case Certificate::Verdict::EvidenceForMinimality: return kOk;
        case Certificate::Verdict::HypothesisAFails: return kNegative;
        case Certificate::Verdict::HypothesisBFails: return kNegative;
        case Certificate::Verdict::Inconclusive: return kInconclusive;
    }
    return kInconclusive;
}

int cmd_structure(const Options& opt, std::ostream& out) {
    VectorField v = vectorfield_from_json(load_json_file(opt.field_path));
    StructureReport r = structure_report(v, groebner_opts(opt));
    emit(to_json(r), render_structure_text(r), opt, out);
    return r.sing_finite_known ? kOk : kInconclusive;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"exact toolkit and bounded-evidence certifier for polynomial vector fields"};
    app.require_subcommand(1);
    app.add_flag("--json", opt.json, "emit JSON instead of text");
    app.add_option("--seed", opt.seed, "seed for randomized probes");
    app.add_option("--budget", opt.budget, "Groebner reduction-step budget");
    app.add_option("--jobs", opt.jobs, "worker-count hint for parallel stages");

    auto add_field = [&](CLI::App* sub) {
        sub->add_option("field", opt.field_path, "vector field JSON file")->required();
    };

    int (*handler)(const Options&, std::ostream&) = nullptr;
    auto set = [&](int (*h)(const Options&, std::ostream&)) {
        return [&, h]() { handler = h; };
    };

    CLI::App* prolong = app.add_subcommand("prolong", "first prolongation to the cotangent space");
    add_field(prolong);
    prolong->callback(set(cmd_prolong));

    CLI::App* bracket = app.add_subcommand("bracket", "Lie bracket of two fields");
    add_field(bracket);
    bracket->add_option("second", opt.second_path, "second field JSON file")->required();
    bracket->callback(set(cmd_bracket));

    CLI::App* singular = app.add_subcommand("singular", "ideal of the singular locus");
    add_field(singular);
    singular->callback(set(cmd_singular));

    CLI::App* linpart = app.add_subcommand("linpart", "linear part at a singular point");
    add_field(linpart);
    linpart->add_option("--point", opt.point_text, "comma-separated rationals")->required();
    linpart->callback(set(cmd_linpart));

    CLI::App* resonance = app.add_subcommand("resonance", "bounded non-resonance certification");
    add_field(resonance);
    resonance->add_option("--point", opt.point_text, "comma-separated rationals")->required();
    resonance->add_option("--max-height", opt.max_height, "integer-relation height bound K");
    resonance->callback(set(cmd_resonance));

    CLI::App* darboux = app.add_subcommand("darboux", "Darboux polynomial search");
    add_field(darboux);
    darboux->add_option("--max-degree", opt.max_degree, "degree bound D");
    darboux->callback(set(cmd_darboux));

    CLI::App* invariant = app.add_subcommand("invariant", "invariant-ideal check");
    add_field(invariant);
    invariant->add_option("--ideal", opt.ideal_path, "ideal JSON file")->required();
    invariant->callback(set(cmd_invariant));

    CLI::App* codim1 = app.add_subcommand("codim1", "codimension-one distribution invariance");
    add_field(codim1);
    codim1->add_option("--oneform", opt.oneform_path, "one-form JSON file")->required();
    codim1->callback(set(cmd_codim1));

    CLI::App* homogenize = app.add_subcommand("homogenize", "affine field to the cone over P^n");
    add_field(homogenize);
    homogenize->add_option("--max-degree", opt.max_degree, "homogenization degree d");
    homogenize->callback(set(cmd_homogenize));

    CLI::App* dehomogenize =
        app.add_subcommand("dehomogenize", "distinguished chart of a homogeneous field");
    add_field(dehomogenize);
    dehomogenize->callback(set(cmd_dehomogenize));

    CLI::App* chart = app.add_subcommand("chart", "restriction to a coordinate chart");
    add_field(chart);
    chart->add_option("--chart", opt.chart, "chart index i (X_i != 0)");
    chart->callback(set(cmd_chart));

    CLI::App* pole = app.add_subcommand("pole-order", "pole order along a coordinate hyperplane");
    add_field(pole);
    pole->add_option("--hyperplane", opt.hyperplane, "variable name")->required();
    pole->callback(set(cmd_pole_order));

    CLI::App* jet = app.add_subcommand("jet-ode", "scalar equation of an observable");
    add_field(jet);
    jet->add_option("--observable", opt.observable, "observable expression")->required();
    jet->add_option("--order", opt.order, "jet order")->required();
    jet->callback(set(cmd_jet_ode));

    CLI::App* certify = app.add_subcommand("certify", "bounded-evidence certificate");
    add_field(certify);
    certify->add_option("--point", opt.point_text, "comma-separated rationals")->required();
    certify->add_option("--max-degree", opt.max_degree, "Darboux degree bound D");
    certify->add_option("--max-height", opt.max_height, "relation height bound K");
    certify->add_option("--ideal", opt.ideal_path, "extra invariant-ideal candidate");
    certify->callback(set(cmd_certify));

    CLI::App* structure = app.add_subcommand("structure", "structural survey of a field");
    add_field(structure);
    structure->callback(set(cmd_structure));

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        return handler(opt, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const json::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const BudgetExhausted& e) {
        err << e.what() << "\n";
        return kInconclusive;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace vfcert::cli
