#include <doctest.h>

#include <stdexcept>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "affcrystal/cli.hpp"

using namespace affcrystal;
using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("affcrystal_cli_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("kostka command") {
  const auto r = run({"kostka", "--n", "2", "--shapes", "1x1,1x1", "--lambda", "2,0"});
  REQUIRE(r.code == kExitOk);
  const auto j = r.doc();
  CHECK(j["schema"] == "affcrystal/1");
  CHECK(j["polynomial"] == json::parse("[[0,1]]"));
  CHECK(j["path_count"] == 1);

  const auto t = run({"kostka", "--n", "2", "--shapes", "1x1,1x1,1x1", "--lambda", "2,1"}).doc();
  CHECK(t["polynomial"] == json::parse("[[-2,1],[-1,1]]"));

  const auto lvl = run({"kostka", "--n", "2", "--shapes", "1x1,1x1", "--level", "1"}).doc();
  CHECK(lvl["polynomial"] == json::parse("[[-1,1]]"));
}

TEST_CASE("invalid input exits with code 2") {
  const auto r = run({"kostka", "--n", "3", "--shapes", "3x1", "--lambda", "1,1,1"});
  CHECK(r.code == kExitInvalid);
  CHECK(r.err.find("k < n") != std::string::npos);
  CHECK(run({"kostka", "--n", "2", "--shapes", "1x3", "--level", "2"}).code == kExitInvalid);
  CHECK(run({"verify", "--n", "2", "--shapes", "1x1", "--Lambda", "1,0"}).code == kExitInvalid);
  CHECK(run({"nonsense"}).code == kExitInvalid);
  CHECK(run({"kostka", "--n", "2", "--shapes", "1x1", "--format", "xml", "--lambda", "1,0"}).code == kExitInvalid);
  CHECK(run({"straighten", "n=2", "l=0", "alpha=0,0"}).code == kExitInvalid);
}

TEST_CASE("table output carries the same numbers") {
  const auto r = run({"kostka", "--n", "2", "--shapes", "1x1,1x1,1x1", "--lambda", "2,1", "--format", "table"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("path_count") != std::string::npos);
  CHECK(r.out.find("q^-2 + q^-1") != std::string::npos);
  CHECK(r.out.find("exponent") != std::string::npos);
}

TEST_CASE("verify command") {
  const auto r = run({"verify", "--n", "2", "--level", "1", "--shapes", "1x1,1x1", "--Lambda", "L0", "--LambdaPrime",
                      "L0", "--widen-check"});
  CHECK(r.code == kExitOk);
  const auto j = r.doc();
  CHECK(j["equal"] == true);
  CHECK(j["lhs_polynomial"] == j["rhs_polynomial"]);
  CHECK(j["vacuum_form_equal"] == true);
  CHECK(j["level1_identity"]["equal"] == true);
  CHECK(j["widen_check"]["unchanged"] == true);
  CHECK(j.contains("truncation_bound"));

  const auto g = run({"verify", "--n", "3", "--shapes", "1x1,2x1,1x1", "--Lambda", "L0+L1", "--LambdaPrime", "L1+L2"});
  CHECK(g.code == kExitOk);
  CHECK(g.doc().contains("e0_hypothesis"));
}

TEST_CASE("verify-zero command") {
  const auto r = run({"verify-zero", "--n", "2", "--shapes", "1x1,1x1,1x1"});
  CHECK(r.code == kExitOk);
  const auto j = r.doc();
  CHECK(j["identity"]["lhs_polynomial"] == json::array());
  CHECK(j.contains("pairing_certificate"));
  CHECK(j["pairing_certificate"]["valid"] == true);

  const auto e = run({"verify-zero", "--n", "2", "--shapes", ""});
  CHECK(e.code == kExitOk);
  CHECK(e.doc()["identity"]["lhs_polynomial"] == json::parse("[[0,1]]"));
}

TEST_CASE("straighten command") {
  const auto j = run({"straighten", "n=2", "l=1", "alpha=2,-2"}).doc();
  CHECK(j["result"]["sign"] == -1);
  CHECK(j["result"]["qpow"] == -2);
  CHECK(j["result"]["beta"] == json::parse("[0,0]"));
  CHECK(run({"straighten", "n=2", "l=1", "alpha=2,0"}).doc()["result"] == "zero");
  CHECK(run({"straighten", "--level", "1", "--alpha", "0,0"}).code == kExitOk);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"verify", "--n", "3", "--level", "2", "--shapes", "1x2,2x1,1x1"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
}

TEST_CASE("cache build, list, corrupt and clear") {
  const auto dir = fresh_dir("cache").string();
  const std::vector<std::string> build{"cache", "build", "--n", "2", "--shapes", "1x1,1x2", "--cache-dir", dir};
  const auto first = run(build);
  REQUIRE(first.code == kExitOk);
  CHECK(first.doc()["entries"].size() == 4);
  const auto file = std::filesystem::path(dir) / "R_n2_1x2_1x1.json";
  const auto bytes = slurp(file);
  CHECK(run(build).code == kExitOk);
  CHECK(slurp(file) == bytes);

  const auto list = run({"cache", "list", "--cache-dir", dir}).doc();
  CHECK(list["entries"].size() == 4);
  for (const auto& e : list["entries"]) CHECK(e["valid"] == true);

  auto broken = bytes;
  broken[broken.size() / 2] ^= 1;
  std::ofstream(file, std::ios::binary) << broken;
  const auto rebuilt = run(build);
  CHECK(rebuilt.code == kExitOk);
  CHECK(rebuilt.err.find("warning") != std::string::npos);
  CHECK(slurp(file) == bytes);

  // a corrupt cache seen during a computation is rebuilt with a warning
  std::ofstream(file, std::ios::binary) << broken;
  const auto k = run({"kostka", "--n", "2", "--shapes", "1x2,1x1", "--lambda", "2,1", "--cache-dir", dir});
  CHECK(k.code == kExitOk);
  CHECK(k.err.find("warning") != std::string::npos);

  CHECK(run({"cache", "clear", "--cache-dir", dir}).doc()["removed"] == 4);
  CHECK(run({"cache", "list", "--cache-dir", dir}).doc()["entries"].empty());
  std::filesystem::remove_all(dir);
}
