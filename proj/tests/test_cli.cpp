#include "doctest.h"

#include <fstream>
#include <sstream>

#include "flagcx/cli.hpp"
#include "flagcx/report.hpp"

using namespace flagcx;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json payload(const Run& r) { return Json::parse(r.out)["payload"]; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("classify") {
    auto r = run({"classify", "D", "4", ""});
    REQUIRE(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["command"] == "classify");
    CHECK(j["flag"]["type"] == "D4");
    CHECK(j["payload"]["admits_gacs"] == true);
    CHECK(j["payload"]["classes"].size() == 3);
    for (const auto& c : j["payload"]["classes"]) CHECK(c["size"] == 4);

    auto all = run({"classify", "A", "3", "all"});
    REQUIRE(all.code == kExitOk);
    CHECK(payload(all)["classes"].empty());
    CHECK(Json::parse(all.out)["flag"]["maximal"] == false);

    auto c5 = run({"classify", "--type", "C", "--rank", "5", "--theta", "λ3-λ4,λ4-λ5,2λ5"});
    REQUIRE(c5.code == kExitOk);
    CHECK(payload(c5)["admits_gacs"] == true);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"classify", "E", "6"}).code == kExitUsage);
    CHECK(run({"classify", "G", "3"}).code == kExitUsage);
    auto bad = run({"classify", "C", "5", "λ1-λ2,λ9"});
    CHECK(bad.code == kExitUsage);
    CHECK(bad.err.find("column 8") != std::string::npos);
    CHECK(run({"certify", "G", "2", "--combination", "cnc,nc,nc"}).code == kExitUsage);
    CHECK(run({"certify", "B", "3"}).code == kExitUsage);
    CHECK(run({"certify", "A", "3", "1"}).code == kExitUsage);
    CHECK(run({"certify", "B", "2", "--random", "--all-combinations"}).code == kExitUsage);
    CHECK(run({"spinor", "C", "6"}).code == kExitUsage);
    CHECK(run({"classify", "B", "2", "--format", "yaml"}).code == kExitUsage);
    CHECK(run({"classify", "--help"}).code == kExitOk);
  }

  TEST_CASE("certify") {
    auto r = run({"certify", "B", "2", "--all-combinations", "--samples", "5", "--seed", "4"});
    REQUIRE(r.code == kExitOk);
    const Json p = payload(r);
    CHECK(p["mode"] == "theorem");
    CHECK(p["summary"]["total"] == 20);
    CHECK(p["summary"]["not_integrable"] == 20);
    for (const auto& v : p["verdicts"]) {
      CHECK(v["verdict"] == "NotIntegrable");
      CHECK(v["witness_reverified"] == true);
      CHECK(v["witness"]["elements"].size() == 3);
    }
    auto g2 = run({"certify", "G", "2", "--combination", "c,nc,nc", "--samples", "3"});
    REQUIRE(g2.code == kExitOk);
    CHECK(payload(g2)["verdicts"][0]["combination"] == Json::array({"complex", "noncomplex", "noncomplex"}));
    auto d4 = run({"certify", "D", "4", "--random", "--samples", "4"});
    REQUIRE(d4.code == kExitOk);
    CHECK(payload(d4)["mode"] == "exploratory");
  }

  TEST_CASE("reports are byte-identical for fixed seed") {
    const std::vector<std::string> args{"certify", "G", "2", "--random", "--samples", "6", "--seed", "12"};
    const auto a = run(args), b = run(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    auto c = args;
    c.back() = "13";
    CHECK(run(c).out != a.out);
    const std::vector<std::string> m{"moduli", "A", "3", "--seed", "2"};
    CHECK(run(m).out == run(m).out);
  }

  TEST_CASE("moduli") {
    auto r = run({"moduli", "B", "2", "--blocks", "sym:1;sym:2"});
    REQUIRE(r.code == kExitOk);
    const Json c = payload(r)["coordinates"];
    CHECK(c[0]["kind"] == "symplectic");
    CHECK(c[0]["x"] == "1");
    CHECK(c[1]["x"] == "2");
    auto nc = run({"moduli", "B", "2", "--blocks", "nc:3:2;c:1:5"});
    REQUIRE(nc.code == kExitOk);
    CHECK(payload(nc)["coordinates"][1]["kind"] == "complex");
    CHECK(payload(nc)["canonical"]["round_trip"] == true);

    auto viol = run({"moduli", "B", "2", "--blocks", "nc:1:2:5;c:1:1"});
    CHECK(viol.code == kExitInvariant);
    CHECK(viol.err.find("a^2 = xy - 1") != std::string::npos);
    auto c0 = run({"moduli", "B", "2", "--blocks", "sym:1;c:1:0"});
    CHECK(c0.code == kExitInvariant);
    CHECK(c0.err.find("c != 0") != std::string::npos);
    auto x0 = run({"moduli", "B", "2", "--blocks", "sym:0;c:1:1"});
    CHECK(x0.code == kExitInvariant);
    CHECK(x0.err.find("x != 0") != std::string::npos);
    auto col = run({"moduli", "B", "2", "--blocks", "sym:1;c:1:q"});
    CHECK(col.code == kExitUsage);
    CHECK(col.err.find("column 11") != std::string::npos);
  }

  TEST_CASE("spinor") {
    auto r = run({"spinor", "B", "2", "--blocks", "c:1:2;c:0:3"});
    REQUIRE(r.code == kExitOk);
    const Json p = payload(r);
    CHECK(p["terms"].size() == 4);
    CHECK(p["max_degree"] == 2);
    CHECK(p["annihilator_dimension"] == 4);
    CHECK(p["L_annihilates"] == true);
  }

  TEST_CASE("hermitian") {
    auto bad = run({"hermitian", "B", "2", "--blocks", "c:0:1;c:0:1", "--partner", "sym:-1;sym:1"});
    REQUIRE(bad.code == kExitOk);
    CHECK(payload(bad)["verdict"] == "Invalid");
    CHECK(payload(bad)["reason"].get<std::string>().find("cx > 0") != std::string::npos);
    auto good = run({"hermitian", "B", "2", "--blocks", "c:0:1;c:0:1", "--partner", "sym:1;sym:1"});
    REQUIRE(good.code == kExitOk);
    CHECK(payload(good)["verdict"] == "Valid");
    CHECK(payload(good)["metric_moduli"].size() == 2);
    CHECK(run({"hermitian", "B", "2", "--blocks", "c:0:1;c:0:1"}).code == kExitUsage);
  }

  TEST_CASE("output file") {
    const std::string path = "cli_test_report.json";
    auto r = run({"classify", "B", "2", "--out", path});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream f(path);
    CHECK(Json::parse(f)["command"] == "classify");
    std::remove(path.c_str());
  }
}
