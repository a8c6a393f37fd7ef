#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "tatebc/cli.hpp"

using namespace tatebc;
using nlohmann::json;

namespace {

struct Run {
  int code;
  json report;
  std::string err, raw;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.raw = out.str();
  r.err = err.str();
  if (!r.raw.empty() && r.raw.front() == '{') r.report = json::parse(r.raw);
  return r;
}

std::string data(const std::string& name) { return std::string(TATEBC_DATA_DIR) + "/" + name; }

const json& result(const Run& r, const std::string& id) {
  for (const auto& c : r.report["results"])
    if (c["id"] == id) return c;
  FAIL("no result " << id);
  static json none;
  return none;
}

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = "/tmp/tatebc_test_" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("tate subcommand") {
  Run r = run({"tate", "--module", data("jordan3.json")});
  CHECK(r.code == 0);
  CHECK(result(r, "tate-dims")["values"]["t0"] == 0);
  CHECK(result(r, "tate-dims")["values"]["t1"] == 0);
  CHECK(r.report["schema"] == "tatebc.report/1");
  CHECK(r.report["seed"] == 7);

  Run c = run({"tate", "--input", data("complex.json")});
  CHECK(c.code == 0);
  CHECK(result(c, "periodicity")["pass"] == true);

  CHECK(run({"tate"}).code == 2);
  CHECK(run({"tate", "--module", data("jordan3.json"), "--input", data("complex.json")}).code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  Run u = run({"tate", "--module", data("jordan3.json"), "--bogus"});
  CHECK(u.code == 2);
  CHECK(u.err.find("bogus") != std::string::npos);
  CHECK(run({"hecke", "--group", data("c2_cubed_shift.json"), "--check", "nope"}).code == 2);
  CHECK(run({"tate", "--module", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("malformed JSON is reported with its byte offset") {
  std::string path = temp_file("bad.json", "{\"p\": 3, \"sigma\": {\"rows\": 1,, }}");
  Run r = run({"tate", "--module", path});
  CHECK(r.code == 2);
  CHECK(r.err.find("byte 29") != std::string::npos);
  CHECK(result(r, "input")["values"]["byte"] == 29);
  CHECK(r.report["pass"] == false);

  // well-formed but not a sigma-module
  std::string p2 = temp_file("bad2.json", R"({"p": 3, "sigma": {"rows": 1, "cols": 1, "entries": [2]}})");
  CHECK(run({"tate", "--module", p2}).code == 2);
  std::string p3 = temp_file("bad3.json", R"({"p": 3, "sigma": {"rows": "one", "cols": 1, "entries": [1]}})");
  CHECK(run({"tate", "--module", p3}).code == 2);
}

TEST_CASE("smith, hecke and bc-torus subcommands") {
  CHECK(run({"smith", "--input", data("triangle_rotation.json")}).code == 0);
  CHECK(run({"hecke", "--group", data("c2_cubed_shift.json"), "--check", "brauer"}).code == 0);
  CHECK(run({"hecke", "--group", data("c2_cubed_shift.json"), "--check", "diagram", "--rep", data("regular_f3.json")}).code == 0);
  // the diagonal of S_3^3 is not plain: a check failure, not an input error
  Run np = run({"hecke", "--group", data("s3_cubed_shift.json"), "--check", "plain", "--subgroup", "H"});
  CHECK(np.code == 1);
  CHECK(result(np, "plain")["pass"] == false);

  Run t = run({"bc-torus", "--input", data("torus_2_3_-1.json")});
  CHECK(t.code == 0);
  const json& bc = result(t, "bc-object")["values"]["bc"];
  REQUIRE(bc.size() == 1);
  CHECK(bc[0]["label"] == 4);
  CHECK(bc[0]["mult"] == 1);
  CHECK(run({"bc-torus", "--input", data("torus_2_3_-1.json"), "--field", "3,2"}).code == 0);
  CHECK(run({"bc-torus", "--input", data("torus_2_3_-1.json"), "--field", "5"}).code == 2);
}

TEST_CASE("excursion and linkage subcommands") {
  Run b = run({"excursion", "--gamma", data("gamma_s3.json"), "--target", data("target_s3.json"), "--check", "bijection",
               "--field", "5"});
  CHECK(b.code == 0);
  CHECK(result(b, "character-bijection")["values"]["points"] == 3);
  Run f = run({"excursion", "--gamma", data("gamma_c6.json"), "--target", data("target_base_change.json"), "--check",
               "functoriality", "--instances", "3"});
  CHECK(f.code == 0);
  CHECK(result(f, "functoriality.phi_BC")["pass"] == true);
  CHECK(run({"excursion", "--gamma", data("gamma_c6.json"), "--target", data("target_base_change.json"), "--check", "norm",
             "--instances", "3"})
            .code == 0);
  // norm needs sigma on the target
  CHECK(run({"excursion", "--gamma", data("gamma_s3.json"), "--target", data("target_s3.json"), "--check", "norm"}).code == 2);

  Run l = run({"linkage", "--group", data("c4.json"), "--rep", data("c4_character_f9.json"), "--p", "3"});
  CHECK(l.code == 0);
  CHECK(result(l, "linkage")["values"]["t0_iso_pi"] == false);
  CHECK(result(l, "linkage")["values"]["t0_iso_twist"] == true);
  CHECK(run({"linkage", "--group", data("c4.json"), "--rep", data("c4_character_f9.json"), "--p", "5"}).code == 2);
}

TEST_CASE("reports are deterministic and can be written to a file") {
  std::vector<std::string> args = {"excursion", "--gamma", data("gamma_s3.json"), "--target", data("target_s3.json"),
                                   "--check", "relations", "--field", "5", "--instances", "5", "--seed", "11"};
  Run a = run(args), b = run(args);
  CHECK(a.raw == b.raw);
  CHECK(a.report["seed"] == 11);
  CHECK_FALSE(a.report.contains("wall_time_ms"));
  // results sorted by id
  std::vector<std::string> ids;
  for (const auto& c : a.report["results"]) ids.push_back(c["id"]);
  CHECK(std::is_sorted(ids.begin(), ids.end()));

  std::string path = "/tmp/tatebc_test_report.json";
  Run w = run({"tate", "--module", data("jordan2.json"), "--report", path});
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == w.raw);
  CHECK(run({"tate", "--module", data("jordan2.json"), "--timing"}).report.contains("wall_time_ms"));
}
