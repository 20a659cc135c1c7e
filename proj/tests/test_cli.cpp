#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "support.hpp"

using namespace dqg;

namespace {

std::string temp_path(const std::string& name) { return "dqg_test_" + name + ".json"; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("instances survive a JSON round trip") {
    for (const char* name : {"T", "C", "S3"}) {
      Instance inst = dqg::test::make_instance(name);
      nlohmann::json j = to_json(inst);
      CHECK(to_json(from_json(j)) == j);
    }
    CHECK(to_json(example_sweedler4()) == to_json(from_json(to_json(example_sweedler4()))));
  }

  TEST_CASE("emission is deterministic") {
    CHECK(to_json(dqg::test::make_instance("C")).dump() == to_json(dqg::test::make_instance("C")).dump());
  }

  TEST_CASE("a truncated file is a parse error with its position") {
    std::string text = to_json(dqg::test::make_instance("T")).dump(2);
    std::string path = temp_path("truncated");
    write_file(path, text.substr(0, text.size() / 2));
    try {
      load_instance(path);
      FAIL("truncated file was accepted");
    } catch (const ValidationError& e) {
      REQUIRE(e.problems().size() == 1);
      CHECK(e.problems()[0].find("parse error") != std::string::npos);
      CHECK(e.problems()[0].find("line") != std::string::npos);
    }
    std::remove(path.c_str());
  }

  TEST_CASE("a missing file is reported") { CHECK_THROWS_AS(load_instance("no_such_instance.json"), ValidationError); }

  TEST_CASE("a negative weight is rejected with every problem listed") {
    nlohmann::json j = to_json(dqg::test::make_instance("T"));
    j["base"]["weight"]["1"] = "-1";
    try {
      build(from_json(j));
      FAIL("negative weight was accepted");
    } catch (const ValidationError& e) {
      bool found = false;
      for (const std::string& p : e.problems()) found = found || p.find("not positive") != std::string::npos;
      CHECK(found);
    }
  }

  TEST_CASE("suite names") {
    CHECK(parse_suite("axioms") == Suite::Axioms);
    CHECK(parse_suite("all") == Suite::All);
    CHECK_FALSE(parse_suite("bogus").has_value());
    for (Suite s : {Suite::Axioms, Suite::Integrals, Suite::Dual, Suite::Gns, Suite::Fundamental, Suite::Modular, Suite::All})
      CHECK(parse_suite(suite_name(s)) == s);
  }

  TEST_CASE("JSON report carries every field") {
    Report r = run_suite(dqg::test::make_instance("Z2"), SuiteOptions{Suite::Axioms, 1e-9});
    nlohmann::json j = report_json(r);
    CHECK(j["failed"] == 0);
    CHECK(j["total"] == r.results().size());
    for (const auto& c : j["checks"]) {
      for (const char* key : {"check_id", "anchor", "status", "witness", "mode", "timing"}) CHECK(c.contains(key));
      CHECK(c["status"] == "pass");
    }
  }

  TEST_CASE("check outcomes do not depend on the run") {
    SuiteOptions opt{Suite::Integrals, 1e-9};
    Report a = run_suite(dqg::test::make_instance("C"), opt), b = run_suite(dqg::test::make_instance("C"), opt);
    REQUIRE(a.results().size() == b.results().size());
    for (std::size_t i = 0; i < a.results().size(); ++i) {
      CHECK(a.results()[i].id == b.results()[i].id);
      CHECK(a.results()[i].pass == b.results()[i].pass);
      CHECK(a.results()[i].witness == b.results()[i].witness);
    }
  }
}
