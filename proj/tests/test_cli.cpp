#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hochkit/cli.hpp"

namespace {

const std::string dir = FIXTURE_DIR;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = hochkit::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("hh on the dual numbers") {
  const Outcome o = run({"hh", "dual", "--max-degree", "4", "--format", "machine"});
  CHECK(o.code == 0);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["results"]["homology"] == std::vector<int>{2, 1, 1, 1, 1});
  CHECK(j["results"]["cohomology"] == std::vector<int>{2, 1, 1, 1, 1});
  const Outcome t = run({"hh", "dual", "--max-degree", "2"});
  CHECK(t.code == 0);
  CHECK(contains(t.out, "homology: [2,1,1]"));
}

TEST_CASE("degree cap is a precondition error") {
  const Outcome o = run({"hh", "dual", "--max-degree", "9999"});
  CHECK(o.code == 2);
  CHECK(contains(o.err, "DegreeCapExceeded"));
}

TEST_CASE("verify hrr passes on S3") {
  const Outcome o = run({"verify", "hrr", "s3"});
  CHECK(o.code == 0);
  const Outcome m = run({"verify", "hrr", "s3", "--format", "machine"});
  const auto j = nlohmann::json::parse(m.out);
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["summary"]["passed"].get<int>() >= 9);
  for (const auto& r : j["checks"]) CHECK(r.contains("tag"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"hh"}).code == 2);
  CHECK(run({"hh", "nosuchalgebra"}).code == 2);
  CHECK(run({"chern", "s3", "simple:7"}).code == 2);
  CHECK(run({"tqft", "s3", "--word", "cap_in pants_merge"}).code == 2);
  CHECK(run({"tqft", "dual", "--genus", "1"}).code == 2);
  CHECK(run({"center", "zn:3", "--field-order", "4"}).code == 2);
  CHECK(run({"--format", "xml", "center", "s3"}).code == 2);
}

TEST_CASE("validate") {
  CHECK(run({"validate", dir + "/c2.alg"}).code == 0);
  CHECK(run({"validate", dir + "/c2.simple1.mod"}).code == 0);
  CHECK(run({"validate", dir + "/c2_sign_twist.bimod"}).code == 0);
  const Outcome na = run({"validate", dir + "/nonassoc.alg"});
  CHECK(na.code == 2);
  CHECK(contains(na.err, "ValidationError"));
  CHECK(contains(na.err, "NotAssociative"));
  const Outcome bad = run({"validate", dir + "/bad_scalar.mod"});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "line 4, column 21"));
}

TEST_CASE("computational commands") {
  const Outcome c = run({"chern", "zn:2", "trivial", "--format", "machine"});
  CHECK(c.code == 0);
  const Outcome p = run({"pairing", "zn:2", "ch(trivial)", "ch(trivial)"});
  CHECK(p.code == 0);
  CHECK(run({"center", "s3"}).code == 0);
  CHECK(run({"pushforward", "zn:2", "zn:3", "outer(simple:1, simple:2)", "ch(simple:1)"}).code == 0);
  const Outcome t = run({"tqft", "s3", "--genus", "1", "--format", "machine"});
  CHECK(t.code == 0);
  CHECK(nlohmann::json::parse(t.out)["results"]["dim"] == 3);
  CHECK(run({"verify", "traces", "--instances", "5"}).code == 0);
  CHECK(run({"verify", "morita", "zn:2"}).code == 0);
  CHECK(run({"verify", "adjoint", "zn:2", "zn:3", "outer(simple:1, simple:2)"}).code == 0);
}

TEST_CASE("verify all is deterministic for a fixed seed") {
  const Outcome a = run({"verify", "all", "--seed", "7", "--format", "machine"});
  const Outcome b = run({"verify", "all", "--seed", "7", "--format", "machine"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["seed"] == 7);
}
