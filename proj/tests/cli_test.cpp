#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "vfcert/cli.hpp"
#include "vfcert/json_io.hpp"

using namespace vfcert;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path = "cli_test_tmp_" + std::to_string(counter++) + ".json";
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

struct Result {
    int code;
    std::string out, err;
};

Result run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const char* kRotation = R"({"vars": ["x", "y"], "components": ["y", "-1*x"]})";
const char* kDiag = R"({"vars": ["x", "y"], "components": ["x", "2*y"]})";
const char* kCrafted = R"({"vars": ["x", "y"], "components": ["y + x^2", "x + y + y^2"]})";
const char* kGolden = R"({"vars": ["x", "y"], "components": ["y", "x + y"]})";

}  // namespace

TEST_CASE("bracket of commuting constant fields") {
    TempFile a(R"({"vars": ["x", "y"], "components": ["1", "0"]})");
    TempFile b(R"({"vars": ["x", "y"], "components": ["0", "1"]})");
    Result r = run_cli({"bracket", a.path, b.path, "--json"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["components"] == json::array({"0", "0"}));
}

TEST_CASE("certify exit codes over the three fixtures") {
    TempFile crafted(kCrafted), golden(kGolden), diag(kDiag);
    Result evidence = run_cli({"certify", crafted.path, "--point", "0,0", "--max-degree", "3",
                               "--max-height", "50"});
    CHECK(evidence.code == 0);
    CHECK(evidence.out.find("EVIDENCE_FOR_MINIMALITY") != std::string::npos);

    Result bfails =
        run_cli({"certify", golden.path, "--point", "0,0", "--max-degree", "2"});
    CHECK(bfails.code == 1);
    CHECK(bfails.out.find("HYPOTHESIS_B_FAILS") != std::string::npos);

    Result afails = run_cli({"certify", diag.path, "--point", "0,0"});
    CHECK(afails.code == 1);
    CHECK(afails.out.find("HYPOTHESIS_A_FAILS") != std::string::npos);
}

TEST_CASE("resonance exit code trichotomy") {
    TempFile diag(kDiag), crafted(kCrafted);
    CHECK(run_cli({"resonance", diag.path, "--point", "0,0", "--max-height", "50"}).code == 1);
    CHECK(run_cli({"resonance", crafted.path, "--point", "0,0", "--max-height", "50"}).code == 0);
}

TEST_CASE("usage and parse errors") {
    CHECK(run_cli({"no-such-verb"}).code == 64);
    CHECK(run_cli({"certify"}).code == 64);
    TempFile bad(R"({"vars": ["x", "y"], "components": ["y +", "x"]})");
    CHECK(run_cli({"singular", bad.path}).code == 65);
    TempFile notjson("this is not json");
    CHECK(run_cli({"singular", notjson.path}).code == 65);
    // a non-singular point is a usage error
    TempFile golden(kGolden);
    CHECK(run_cli({"resonance", golden.path, "--point", "1,0"}).code == 64);
}

TEST_CASE("field JSON output round trips") {
    TempFile rot(kRotation);
    Result r = run_cli({"prolong", rot.path, "--json"});
    REQUIRE(r.code == 0);
    VectorField full = vectorfield_from_json(json::parse(r.out));
    CHECK(full.dimension() == 4);

    Result h = run_cli({"homogenize", rot.path, "--max-degree", "1", "--json"});
    REQUIRE(h.code == 0);
    HomogeneousField hf = homogeneous_from_json(json::parse(h.out));
    Result back = run_cli({"dehomogenize", "-", "--json"});  // missing file: usage
    CHECK(back.code != 0);
    CHECK(hf.twist_degree == 0);
}

TEST_CASE("invariant and codim1 verbs") {
    TempFile parab(R"({"vars": ["x", "y"], "components": ["1", "2*x"]})");
    TempFile ideal(R"({"vars": ["x", "y"], "generators": ["y - x^2"]})");
    Result inv = run_cli({"invariant", parab.path, "--ideal", ideal.path});
    CHECK(inv.code == 0);

    TempFile bad_ideal(R"({"vars": ["x", "y"], "generators": ["y"]})");
    Result notinv = run_cli({"invariant", parab.path, "--ideal", bad_ideal.path});
    CHECK(notinv.code == 1);

    TempFile form(R"({"vars": ["x", "y"], "components": ["-2*x", "1"]})");
    Result cod = run_cli({"codim1", parab.path, "--oneform", form.path, "--json"});
    CHECK(cod.code == 0);
    json j = json::parse(cod.out);
    CHECK(j["cofactor"] == "0");
    CHECK(j["tangency_identity"] == true);
}

TEST_CASE("jet-ode verb") {
    TempFile rot(kRotation);
    Result r = run_cli({"jet-ode", rot.path, "--observable", "x", "--order", "2", "--json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["principal"] == true);
    CHECK(j["generators"] == json::array({"Y0 + Y2"}));
}

TEST_CASE("pole-order and chart verbs") {
    TempFile pole(R"js({"vars": ["x", "y"], "components": ["(1)/(x^2)", "(y)/(x)"]})js");
    Result r = run_cli({"pole-order", pole.path, "--hyperplane", "x", "--json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["pole_order"] == 2);

    TempFile h(R"({"vars": ["X0", "X1"], "components": ["0", "X1"], "twist_degree": 0})");
    Result c = run_cli({"chart", h.path, "--chart", "1", "--json"});
    REQUIRE(c.code == 0);
    CHECK(json::parse(c.out)["components"] == json::array({"-u0"}));
}

TEST_CASE("deterministic JSON certificates across runs") {
    TempFile crafted(kCrafted);
    std::vector<std::string> args{"certify", crafted.path, "--point", "0,0", "--json",
                                  "--seed", "7"};
    Result a = run_cli(args), b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("structure verb") {
    TempFile diag(kDiag);
    Result r = run_cli({"structure", diag.path, "--json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["sing_finite"] == true);
    CHECK(j["affine_degree"] == 1);
}
