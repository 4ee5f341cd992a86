#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "segalkit/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int status = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = segalkit::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("segalkit_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

const char* kZ3 = R"({"kind":"group","name":"Z3","order":3,"identity":0,"table":[[0,1,2],[1,2,0],[2,0,1]]})";
const char* kBool = R"({"kind":"monoid","name":"bool","order":2,"identity":1,"table":[[0,0],[0,1]]})";
const char* kS3 = R"({"kind":"group","name":"S3","order":6,"identity":0,"table":[
  [0,1,2,3,4,5],[1,0,4,5,2,3],[2,5,0,4,3,1],[3,4,5,0,1,2],[4,3,1,2,5,0],[5,2,3,1,0,4]]})";

}  // namespace

TEST_CASE("condition subcommands") {
  const auto z3 = write_temp("z3.json", kZ3);
  const auto segal = run({"segal", "--input", z3, "--nmax", "4"});
  CHECK(segal.status == 0);
  CHECK(segal.out.find("segal: pass") != std::string::npos);

  const auto sweep = run({"bousfield", "--catalog", "monoids3", "--nmax", "3", "--json", "-"});
  CHECK(sweep.status == 0);
  const auto report = json::parse(sweep.out);
  CHECK(report["suite"] == "bousfield");
  CHECK(report["inputs"][0]["catalog"] == "monoids3@v1");
  CHECK(report["checks"].size() == 10);
  for (const auto& c : report["checks"]) {
    CHECK(c["verdict"] == "pass");
    CHECK((c["report"]["verdict"] == "pass") == c["is_group"].get<bool>());
    if (!c["is_group"].get<bool>()) CHECK_FALSE(c["report"]["witness"].is_null());
  }

  const auto boolean = write_temp("bool.json", kBool);
  const auto fail = run({"bousfield", "--input", boolean, "--nmax", "2", "--json", "-"});
  CHECK(fail.status == 1);
  const auto witness = json::parse(fail.out)["checks"][0]["report"]["witness"];
  CHECK(witness["kind"] == "collision");
  CHECK(witness["elements"] == json::array({"(0|0)", "(0|1)"}));

  const auto xi = run({"xi", "--catalog", "monoids3", "--json", "-"});
  CHECK(xi.status == 0);
  std::size_t skipped = 0;
  const auto xi_report = json::parse(xi.out);
  for (const auto& c : xi_report["checks"]) skipped += c.contains("skipped") ? 1 : 0;
  CHECK(skipped == 7);
  CHECK(run({"xi", "--input", boolean}).status == 2);
}

TEST_CASE("gamma subcommand") {
  const auto round = run({"gamma", "--roundtrip", "--catalog", "abelian3", "--json", "-"});
  CHECK(round.status == 0);
  const auto round_report = json::parse(round.out);
  for (const auto& c : round_report["checks"]) CHECK(c["roundtrip"] == true);

  const auto group = run({"gamma", "--bousfield", "--catalog", "abelian6", "--quiet"});
  CHECK(group.status == 0);
  CHECK(group.out.empty());

  const auto s3 = write_temp("s3.json", kS3);
  CHECK(run({"gamma", "--input", s3}).status == 2);
}

TEST_CASE("other subcommands") {
  const auto hom = run({"hom", "--category", "delta", "--m", "1", "--n", "2", "--json", "-"});
  CHECK(hom.status == 0);
  CHECK(json::parse(hom.out)["checks"][0]["count"] == 6);
  CHECK(run({"laws", "--category", "gamma"}).status == 0);
  CHECK(run({"nerve", "--input", write_temp("z3n.json", kZ3), "--trunc", "2"}).status == 0);
  CHECK(run({"filtration", "--variant", "invertible"}).status == 0);
  // The initial-segment attachment at k = 1 is not surjective.
  CHECK(run({"filtration", "--variant", "bousfield"}).status == 1);
}

TEST_CASE("invalid input") {
  CHECK(run({}).status == 2);
  CHECK(run({"segal", "--bogus"}).status == 2);
  CHECK(run({"segal", "--catalog", "nope"}).status == 2);
  CHECK(run({"segal", "--nmax", "9", "--catalog", "monoids3"}).status == 2);
  CHECK(run({"segal"}).status == 2);
  const auto bad = write_temp("bad.json", "{\"kind\": \"monoid\", ");
  const auto r = run({"segal", "--input", bad});
  CHECK(r.status == 2);
  CHECK(r.err.find("malformed") != std::string::npos);
  const auto table = write_temp("table.json", R"({"kind":"monoid","order":2,"identity":0,"table":[[0,1],[1,1],[0,0]]})");
  CHECK(run({"segal", "--input", table}).status == 2);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> args{"segal", "--catalog", "corpus", "--nmax", "3", "--json", "-"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["inputs"][0]["digest"].get<std::string>().size() == 16);
  CHECK(segalkit::cli::hex_digest(segalkit::cli::fnv1a("")) == "cbf29ce484222325");
  CHECK(segalkit::cli::hex_digest(segalkit::cli::fnv1a("a")) == "af63dc4c8601ec8c");
}
