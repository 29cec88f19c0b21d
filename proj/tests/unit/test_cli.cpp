#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "delpezzo/cli.hpp"
#include "delpezzo/json_io.hpp"
#include "delpezzo/point_engine.hpp"

using namespace delpezzo;
using nlohmann::json;

namespace {

const std::string kFixtures = DELPEZZO_FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check exit codes") {
    const Run good = run({"check", "--surface", fixture("dw123.json"), "--seed", "[-1:1:-1:1]"});
    CHECK(good.code == 0);
    CHECK(good.parsed()["hypotheses"]["overall"] == true);

    const Run bad = run({"check", "--surface", fixture("dw123.json"), "--seed", "[1:2:0:1]"});
    CHECK(bad.code == 1);
    const json h = bad.parsed()["hypotheses"];
    CHECK(h["separable"] == false);
    CHECK(h["slope_condition"] == false);
    CHECK(h["non_torsion"] == true);

    CHECK(run({"check", "--surface", fixture("dw123.json"), "--seed", "[1:1:1:1]"}).code == 2);
    CHECK(run({"check", "--surface", fixture("missing.json"), "--seed", "[-1:1:-1:1]"}).code == 2);
    CHECK(run({"check", "--surface", fixture("dw123.json")}).code == 2);
  }

  TEST_CASE("parse errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"check", "--surface", fixture("dw123.json"), "--seed", "[-1:1:-1:1]", "--bogus"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"generate", "--surface", fixture("dw123.json"), "--seed", "[-1:1:-1:1]", "--n", "0"}).code == 2);
    CHECK(run({"smooth", "--surface", fixture("dw123.json"), "--format", "xml"}).code == 2);
  }

  TEST_CASE("malformed surface files") {
    CHECK(run({"smooth", "--surface", temp_file("dp_bad1.json", "{not json").string()}).code == 2);
    CHECK(run({"smooth", "--surface", temp_file("dp_bad2.json", R"({"a":"0"})").string()}).code == 2);
    const auto f3zero = temp_file("dp_bad3.json", R"({"a":0,"b":0,"c":1,"d":2,"e":3,"f":[0,0,0,0]})");
    CHECK(run({"smooth", "--surface", f3zero.string()}).code == 2);
  }

  TEST_CASE("smooth and classify") {
    const Run smooth = run({"smooth", "--surface", fixture("dw123.json")});
    CHECK(smooth.code == 0);
    CHECK(smooth.parsed()["discriminant_z12_coefficient"] == "-432");
    const Run singular = run({"smooth", "--surface", fixture("singular_fixture.json"), "--primes", "7,11"});
    CHECK(singular.code == 1);
    CHECK(run({"smooth", "--surface", fixture("dw123.json"), "--primes", "9"}).code == 2);

    const Run cls = run({"classify", "--surface", fixture("dw123.json")});
    CHECK(cls.code == 0);
    CHECK(cls.out.find("2xA2") != std::string::npos);
  }

  TEST_CASE("generate round trip through JSON") {
    const auto path = std::filesystem::temp_directory_path() / "dp_generate.json";
    const Run r = run({"generate", "--surface", fixture("dw123.json"), "--seed", "[-1:1:-1:1]", "--out", path.string()});
    REQUIRE(r.code == 0);
    std::ifstream in(path);
    const json j = json::parse(in);
    const GenerationReport report = io::generation_from_json(j);
    CHECK(report.points.size() >= 11);
    CHECK(io::to_json(io::generation_from_json(io::to_json(report))) == io::to_json(report));
    CHECK(verify_report(Surface::build(io::load_surface(fixture("dw123.json"))), report));
    const GenerationReport again = io::generation_from_json(io::to_json(report));
    REQUIRE(again.points.size() == report.points.size());
    for (std::size_t i = 0; i < report.points.size(); ++i) {
      CHECK(again.points[i].point == report.points[i].point);
      CHECK(again.points[i].affine == report.points[i].affine);
      CHECK(again.points[i].provenance.to_string() == report.points[i].provenance.to_string());
      CHECK(again.points[i].parent == report.points[i].parent);
    }
  }

  TEST_CASE("generate failures") {
    CHECK(run({"generate", "--surface", fixture("dw123.json"), "--seed", "[1:2:0:1]"}).code == 1);
    const Run capped =
        run({"generate", "--surface", fixture("dw123.json"), "--seed", "[-1:1:-1:1]", "--bit-cap", "40"});
    CHECK(capped.code == 2);
    CHECK(capped.parsed()["bit_cap_exceeded"] == true);
    const Run csv = run({"generate", "--surface", fixture("dw123.json"), "--seed", "[-1:1:-1:1]", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.find("17/4,71/8") != std::string::npos);
  }

  TEST_CASE("sweep, identities and oracle") {
    const Run sweep = run({"sweep", "--surface", fixture("dw123.json"), "--seed", "[-1:1:-1:1]"});
    CHECK(sweep.code == 0);
    CHECK(sweep.parsed()["section"] == "3xw - 2y + 5w^3");

    const Run ident = run({"identities", "--surface", fixture("dw123.json"), "--seed", "[-1:1:-1:1]"});
    CHECK(ident.code == 0);
    CHECK(ident.parsed()["all_passed"] == true);

    const Run oracle = run({"oracle", "--surface", fixture("dw123.json")});
    CHECK(oracle.code == 0);
    CHECK(oracle.parsed()["fiber_count"] == 2);
    CHECK(oracle.parsed()["points"].size() == 4);
    CHECK(run({"oracle", "--surface", fixture("dw123.json"), "--t-num", "-1"}).code == 2);
  }

  TEST_CASE("search-params") {
    const std::vector<std::string> args{"search-params", "--samples", "4", "--height", "3", "--rng-seed", "7"};
    const Run a = run(args);
    const Run b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.parsed()["rows"].size() == 4);

    const Run worked = run({"search-params", "--samples", "0", "--include", "0,0,1,2,3,0,0,0,1"});
    REQUIRE(worked.code == 0);
    const json row = worked.parsed()["rows"][0];
    CHECK(row["smoothness"] == "smooth");
    CHECK(row["seed"] == "[-1:1:-1:1]");
    CHECK(row["certificate"] == "HP-certified");
    CHECK(row["picard_rank"] == "not computed");

    for (const std::string family : {"dw", "kloosterman"}) {
      const Run fam = run({"search-params", "--samples", "3", "--family", family});
      REQUIRE(fam.code == 0);
      for (const auto& r : fam.parsed()["rows"]) {
        CHECK(r["tuple"]["a"] == "0");
        CHECK(r["tuple"]["f"][3] == "1");
      }
    }

    CHECK(run({"search-params", "--samples", "0"}).code == 2);
    CHECK(run({"search-params", "--family", "nope"}).code == 2);
    CHECK(run({"search-params", "--include", "1,2,3"}).code == 2);
  }
}
