#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gqt/cli.hpp"
#include "gqt/json_io.hpp"

using namespace gqt;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("kernel enumerate reports the catalog") {
    const auto r = run({"kernel", "enumerate", "--p", "2", "--k", "2", "--dim", "4", "--deterministic"});
    REQUIRE(r.code == 0);
    const auto j = r.json();
    CHECK(j["result"]["point_count"] == 45);
    CHECK(j["result"]["line_count"] == 27);
    CHECK(j["result"]["header"]["dim"] == 4);
    CHECK(j["header"]["field"]["modulus"] == Json::array({1, 1, 1}));
    CHECK(j["header"]["config"]["command"] == "kernel enumerate");
    CHECK_FALSE(j["header"].contains("timestamp"));
}

TEST_CASE("csv catalog") {
    const auto r = run({"kernel", "enumerate", "--p", "2", "--k", "2", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("# p=2 k=2 dim=4 modulus=1;1;1\n# points\n", 0) == 0);
    std::size_t rows = 0;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);) rows += (!line.empty() && line[0] != '#') ? 1 : 0;
    CHECK(rows == 2 + 45 + 27);  // two column headers
    CHECK(run({"sdc", "--message", "00", "--format", "csv"}).code == 2);
}

TEST_CASE("sdc decodes the sent message") {
    const auto r = run({"sdc", "--p", "3", "--k", "2", "--message", "01", "--deterministic"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["result"]["classical_message"] == "01");
}

TEST_CASE("theory descriptor") {
    const auto r = run({"theory", "--i", "1", "--m", "2", "--pp", "5", "--deterministic"});
    REQUIRE(r.code == 0);
    const auto j = r.json()["result"];
    CHECK(j["field_order"] == 25);
    CHECK(j["subfield_order"] == 5);
    CHECK(j["dimension"] == 2);
    CHECK(r.json()["header"]["config"]["theory"]["pp"] == 5);
}

TEST_CASE("field report") {
    const auto r = run({"field", "--p", "3", "--k", "2", "--deterministic"});
    REQUIRE(r.code == 0);
    const auto j = r.json()["result"];
    CHECK(j["order"] == 9);
    CHECK(j["elements"].size() == 9);
    CHECK(j["subfield_order"] == 3);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"kernel"}).code == 2);
    CHECK(run({"teleport", "--p", "3", "--k", "2"}).code == 2);  // no seed
    CHECK(run({"sdc", "--p", "3"}).code == 2);                   // no message
    CHECK(run({"--help"}).code == 0);

    const auto domain = run({"field", "--p", "4", "--k", "2"});
    CHECK(domain.code == 1);
    CHECK(domain.json()["error"]["code"] == "NotPrime");
    const auto guard = run({"kernel", "enumerate", "--p", "7", "--k", "2"});
    CHECK(guard.code == 1);
    CHECK(guard.json()["error"]["code"] == "TooLarge");
    const auto c2 = run({"teleport", "--p", "2", "--k", "2", "--seed", "1"});
    CHECK(c2.json()["error"]["code"] == "Char2NotSupported");
    const auto msg = run({"sdc", "--p", "2", "--k", "2", "--message", "11"});
    CHECK(msg.json()["error"]["code"] == "Char2MessageUnsupported");
}

TEST_CASE("timestamps only without --deterministic") {
    const auto r = run({"field", "--p", "2", "--k", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["header"].contains("timestamp"));
}

TEST_CASE("seeded commands are byte-identical under --deterministic") {
    const std::vector<std::vector<std::string>> commands{
        {"teleport", "--p", "3", "--k", "2", "--alpha", "t", "--beta", "1", "--seed", "9"},
        {"teleport", "--p", "2", "--k", "2", "--alpha", "t", "--beta", "1", "--char2", "--seed", "9"},
        {"geocode", "roundtrip", "--p", "2", "--k", "2", "--seed", "5", "--trials", "20"},
        {"verify", "--p", "2", "--k", "2", "--unitaries", "3", "--seed", "2"},
        {"geocode", "encode", "--p", "3", "--k", "2", "--seed", "5", "--state", "1;t;0;0"},
    };
    for (auto args : commands) {
        args.push_back("--deterministic");
        const auto a = run(args), b = run(args);
        CAPTURE(args[0]);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("parallel enumeration does not change the output") {
    const auto a = run({"kernel", "enumerate", "--p", "3", "--k", "2", "--deterministic"});
    const auto b = run({"kernel", "enumerate", "--p", "3", "--k", "2", "--deterministic", "--parallel"});
    REQUIRE(a.code == 0);
    auto ja = a.json(), jb = b.json();
    CHECK(ja["result"] == jb["result"]);
}

TEST_CASE("geocode encode then decode through hex") {
    const auto enc = run({"geocode", "encode", "--p", "3", "--k", "2", "--seed", "5", "--state", "[\"1\",\"t\",\"0\",\"0\"]",
                          "--deterministic"});
    REQUIRE(enc.code == 0);
    const std::string hex = enc.json()["result"]["ciphertext"]["hex"];
    const auto dec = run({"geocode", "decode", "--p", "3", "--k", "2", "--seed", "5", "--hex", hex, "--deterministic"});
    REQUIRE(dec.code == 0);
    const auto f = build_field(3, 2);
    const auto decoded = vector_from_json(f, dec.json()["result"]["decoded"]);
    CHECK(same_ray(decoded, FieldVector(f, {f.one(), f.element({0, 1}), f.zero(), f.zero()})));
}

TEST_CASE("verify reports") {
    const auto r = run({"verify", "--p", "3", "--k", "2", "--unitaries", "2", "--seed", "1", "--deterministic"});
    REQUIRE(r.code == 0);
    const auto j = r.json()["result"];
    CHECK(j["one_or_all"]["ok"] == true);
    CHECK(j["unitary_action"]["escapes"] == 0);
    CHECK(run({"verify", "--p", "2", "--k", "2", "--unitaries", "2"}).code == 2);
}

TEST_CASE("noclone and nodelete scans") {
    const auto r = run({"noclone", "scan", "--p", "2", "--k", "2", "--deterministic"});
    REQUIRE(r.code == 0);
    const auto j = r.json()["result"];
    CHECK(j["pairs"] == 256);
    CHECK(j["theorem_violations"] == 0);
    CHECK(j["verdict_counts"]["SameRayChar2"] == 45);
    CHECK(j["idempotence"][0]["all_idempotent"] == true);
    const auto d = run({"nodelete", "scan", "--p", "3", "--k", "2", "--deterministic"});
    REQUIRE(d.code == 0);
    CHECK(d.json()["result"]["theorem_violations"] == 0);
}

TEST_CASE("--out writes the report to a file") {
    const auto path = std::filesystem::temp_directory_path() / "gqt_cli_out_test.json";
    const auto r = run({"theory", "--i", "1", "--m", "2", "--pp", "3", "--deterministic", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const auto j = Json::parse(in);
    CHECK(j["result"]["field_order"] == 9);
    std::filesystem::remove(path);
}

TEST_CASE("environment guard override") {
    ::setenv("GQT_GUARD_OVERRIDE", "1", 1);
    const auto r = run({"kernel", "enumerate", "--p", "2", "--k", "2", "--dim", "5", "--deterministic"});
    ::unsetenv("GQT_GUARD_OVERRIDE");
    REQUIRE(r.code == 0);
    CHECK(r.json()["result"]["point_count"] == 165);
    CHECK(r.json()["header"]["config"]["guard_override"] == true);
    CHECK(run({"kernel", "enumerate", "--p", "2", "--k", "2", "--dim", "5"}).code == 1);
}

TEST_CASE("custom modulus is echoed") {
    const auto r = run({"field", "--p", "3", "--k", "2", "--modulus", "2,2,1", "--deterministic"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["header"]["field"]["modulus"] == Json::array({2, 2, 1}));
    CHECK(run({"field", "--p", "2", "--k", "2", "--modulus", "1,0,1"}).json()["error"]["code"] == "Reducible");
}

TEST_CASE("json element and form decoding") {
    const auto f = build_field(3, 2);
    const auto x = f.element({1, 2});
    CHECK(element_from_json(f, to_json(x)) == x);
    CHECK(element_from_json(f, Json::array({1, 2})) == x);
    CHECK(element_from_json(f, Json("2t+1")) == x);
    CHECK(element_from_json(f, Json(4)) == f.one());
    CHECK_THROWS_AS(element_from_json(f, Json(nullptr)), Error);
    CHECK(field_from_json(to_json(f)) == f);
    const auto form = standard_form(f, 3);
    CHECK(form_from_json(f, to_json(form)) == form);
    CHECK_THROWS_AS(form_from_json(f, Json{{"dim", 2}, {"gram", to_json(form.gram())}}), Error);
}
