#include <cstdio>
#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "slw/suites.hpp"

using namespace slw;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string golden(const std::string& name) {
  return std::string(SLW_GOLDEN_DIR) + "/" + name;
}

std::string tmp_file(const std::string& name) {
  return std::string("slw_test_") + name;
}

}  // namespace

TEST_CASE("W-module file round trip") {
  auto V = one_dim_w_module(Scalar(-1), 2);
  std::string path = tmp_file("onedim.json");
  save_w_module(V, path);
  auto back = load_w_module(path);
  CHECK(back.n == V.n);
  CHECK(back.dim == V.dim);
  CHECK(back.mats == V.mats);
  std::remove(path.c_str());
}

TEST_CASE("W-module schema and relation failures") {
  auto V = one_dim_w_module(Scalar(-1), 2);
  json j = w_module_to_json(V);

  json bad = j;
  bad["x_1_2"] = json::array({json::array({"1", "2"})});
  CHECK_THROWS_AS(w_module_from_json(bad), schema_error);

  json missing = j;
  missing.erase("omega_1");
  CHECK_THROWS_AS(w_module_from_json(missing), schema_error);

  // corrupt one entry so a degree-2 relation fails on load
  json corrupt = w_module_to_json(w_action_on_wedge(wedge_gln_module(2, 1)));
  corrupt["x_1_2"][0][0] = "7";
  std::string path = tmp_file("corrupt.json");
  {
    std::ofstream out(path);
    out << corrupt.dump(2) << "\n";
  }
  CHECK_THROWS_AS(load_w_module(path), verification_failure);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_w_module("does_not_exist.json"), schema_error);
}

TEST_CASE("quiver file round trip") {
  auto simples = enumerate_simples(3);
  std::string path = tmp_file("quiver.json");
  save_quiver(simples[1], path);
  auto back = load_quiver(path);
  CHECK(back.n == 3);
  CHECK(back.dims == simples[1].dims);
  CHECK(back.arrows.size() == simples[1].arrows.size());
  CHECK(check_relations(back).ok);
  std::remove(path.c_str());

  json bad = quiver_to_json(simples[1]);
  bad["dims"] = json::array({1});
  CHECK_THROWS_AS(quiver_from_json(bad), schema_error);
}

TEST_CASE("suite reports match the golden files") {
  SuiteConfig cfg;
  cfg.suite = "quiver";
  CHECK(report_to_json(run_suite(cfg)).dump(2) + "\n" ==
        slurp(golden("quiver_n2.json")));

  cfg.suite = "w-membership";
  CHECK(report_to_json(run_suite(cfg)).dump(2) + "\n" ==
        slurp(golden("w_membership_n2.json")));

  cfg.suite = "cuspidal-scan";
  cfg.window = 1;
  cfg.c = Scalar(Rat(1, 2));
  cfg.mu = std::vector<Scalar>{Scalar(0), Scalar(Rat(1, 5)), Scalar(Rat(1, 7))};
  CHECK(report_to_json(run_suite(cfg)).dump(2) + "\n" ==
        slurp(golden("cuspidal_scan_n2.json")));
}

TEST_CASE("suite behavior") {
  SuiteConfig cfg;
  cfg.suite = "w-membership";
  cfg.n = 3;
  auto rep = run_suite(cfg);
  CHECK(rep.all_pass());
  CHECK(rep.entries.size() == 2u * 3 * (3 * 2 + 3));

  cfg.suite = "pi-chain";
  cfg.n = 2;
  cfg.degree = 4;
  CHECK(run_suite(cfg).all_pass());

  cfg.suite = "cuspidal-scan";
  cfg.mu = std::vector<Scalar>{Scalar(0), Scalar(1), Scalar(0)};
  cfg.c = std::nullopt;
  auto skipped = run_suite(cfg);
  REQUIRE(skipped.entries.size() == 1);
  CHECK(skipped.entries[0].status == "skipped");
  CHECK(skipped.entries[0].witness.find("no-int1") != std::string::npos);
  CHECK(skipped.all_pass());

  cfg.suite = "nope";
  CHECK_THROWS_AS(run_suite(cfg), schema_error);

  // determinism of the full run at fixed config
  SuiteConfig all;
  all.suite = "all";
  CHECK(report_to_json(run_suite(all)).dump(2) ==
        report_to_json(run_suite(all)).dump(2));
}
