#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bmf/cli.hpp"
#include "bmf/json_io.hpp"

namespace bmf {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "bmf");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(BMF_TEST_DATA) + "/" + name; }

std::string tmp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("bmf_cli_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

std::string repeat(const std::string& s, int n) {
  std::string r;
  for (int i = 0; i < n; ++i) r += s + " ";
  return r;
}

TEST(CliTest, VersionAndUsage) {
  const CliRun v = run({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("1.0"), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(run({}).code, kExitInputError);
}

TEST(CliTest, BraidEq) {
  EXPECT_EQ(run({"braid", "eq", "--p", "3", "1 2 1", "2 1 2"}).code, kExitYes);
  EXPECT_EQ(run({"braid", "eq", "--p", "3", "1 2", "2 1"}).code, kExitNo);
  EXPECT_EQ(run({"braid", "eq", "--p", "3", "-1 1", ""}).code, kExitYes);
  EXPECT_EQ(run({"braid", "eq", "--p", "3", "1 5", "1"}).code, kExitInputError);
  EXPECT_EQ(run({"braid", "eq", "--p", "3", "1 x", "1"}).code, kExitInputError);
}

TEST(CliTest, BraidQueries) {
  const CliRun img = run({"--format", "json", "braid", "image", "--p", "2", "1"});
  ASSERT_EQ(img.code, 0);
  const json j = json::parse(img.out);
  EXPECT_EQ(j["images"].size(), 2u);

  const CliRun perm = run({"--format", "json", "braid", "permutation", "--p", "3", "1"});
  ASSERT_EQ(perm.code, 0);
  EXPECT_EQ(json::parse(perm.out)["permutation"], json::parse("[2,1,3]"));

  const CliRun ex = run({"braid", "exp", "--p", "3", "1 -2 1"});
  ASSERT_EQ(ex.code, 0);
  EXPECT_NE(ex.out.find('1'), std::string::npos);
}

TEST(CliTest, ResourceCapExitsFour) {
  // pseudo-Anosov word: image length grows exponentially
  EXPECT_EQ(run({"braid", "image", "--p", "3", repeat("1 -2", 30)}).code, kExitResource);
}

TEST(CliTest, FactValidateAndProfile) {
  EXPECT_EQ(run({"fact", "validate", data("node2.json")}).code, kExitYes);
  EXPECT_EQ(run({"fact", "validate", data("smooth_cubic.json")}).code, kExitYes);
  const std::string bad = tmp_file("bad.json", R"({"p": 2, "factors": [{"q": [], "rho": 1}]})");
  EXPECT_EQ(run({"fact", "validate", bad}).code, kExitNo);
  const std::string broken = tmp_file("broken.json", R"({"p": 2, "factors": [{"q": [3], "rho": 1}]})");
  EXPECT_EQ(run({"fact", "validate", broken}).code, kExitInputError);
  EXPECT_EQ(run({"fact", "validate", tmp_file("junk.json", "{not json")}).code, kExitInputError);

  const CliRun pr = run({"--format", "json", "fact", "profile", data("smooth_cubic.json")});
  ASSERT_EQ(pr.code, 0);
  EXPECT_EQ(json::parse(pr.out)["branch_points"], 6);
}

TEST(CliTest, ScrambleThenSearchThenReplay) {
  const std::string moves = (std::filesystem::temp_directory_path() / "bmf_cli_moves.json").string();
  const CliRun sc = run({"--format", "json", "--seed", "7", "hurwitz", "scramble", data("smooth_cubic.json"),
                      "--n", "5", "--moves-out", moves});
  ASSERT_EQ(sc.code, 0) << sc.err;
  const json scrambled = json::parse(sc.out);
  EXPECT_EQ(scrambled["seed"], 7);
  const std::string sfile = tmp_file("scrambled.json", sc.out);
  EXPECT_EQ(run({"fact", "validate", sfile}).code, kExitYes);

  // replaying the recorded moves reproduces the scrambled factorization
  const CliRun ap = run({"--format", "json", "hurwitz", "apply", data("smooth_cubic.json"), "--moves", moves});
  ASSERT_EQ(ap.code, 0) << ap.err;
  const Factorization a = factorization_from_json(json::parse(ap.out));
  const Factorization b = factorization_from_json(scrambled);
  EXPECT_TRUE(factorwise_equal(a, b));

  // the search witness maps the original onto the scrambled one
  const CliRun se = run({"--format", "json", "hurwitz", "search", data("smooth_cubic.json"), sfile});
  ASSERT_EQ(se.code, kExitYes) << se.out << se.err;
  const std::string wfile = tmp_file("witness.json", se.out);
  const CliRun rp = run({"--format", "json", "hurwitz", "apply", data("smooth_cubic.json"), "--moves", wfile});
  ASSERT_EQ(rp.code, 0) << rp.err;
  EXPECT_TRUE(factorwise_equal(factorization_from_json(json::parse(rp.out)), b));
}

TEST(CliTest, SearchVerdicts) {
  // different strand counts of rho: distinguished
  EXPECT_EQ(run({"hurwitz", "search", data("node2.json"), data("branch2.json")}).code, kExitNo);
  const std::string big = tmp_file("big.json", R"({"p": 3, "factors": [
    {"q": [], "rho": 1}, {"q": [2, 1], "rho": 1}, {"q": [], "rho": 1},
    {"q": [2, 1], "rho": 1}, {"q": [], "rho": 1}, {"q": [2, 1], "rho": 1}]})");
  const std::string far = tmp_file("far.json", R"({"p": 3, "factors": [
    {"q": [2, -1, 2, 2], "rho": 1}, {"q": [2, 1], "rho": 1}, {"q": [], "rho": 1},
    {"q": [2, 1], "rho": 1}, {"q": [1, 1, -2, 1], "rho": 1}, {"q": [2, 1], "rho": 1}]})");
  const CliRun r = run({"hurwitz", "search", big, far, "--budget", "10"});
  EXPECT_TRUE(r.code == kExitUnknown || r.code == kExitNo) << r.out;
}

TEST(CliTest, Central) {
  EXPECT_EQ(run({"central", "verify", "--p", "4", "--nu", "2"}).code, kExitYes);
  const CliRun gens = run({"--format", "json", "central", "gens", "--p", "4", "--nu", "2"});
  ASSERT_EQ(gens.code, 0);
  EXPECT_EQ(json::parse(gens.out)["generators"].size(), 4u);
  EXPECT_EQ(run({"central", "member", "--p", "3", "--nu", "2", "1 1 1"}).code, kExitYes);
  EXPECT_EQ(run({"central", "member", "--p", "3", "--nu", "2", "2"}).code, kExitNo);
  EXPECT_EQ(run({"central", "member", "--p", "4", "--nu", "1", "2 3 2 3 2 3 1 2 3 3 2 1 1", "--depth", "1"}).code,
            kExitUnknown);
  const CliRun en = run({"--format", "json", "central", "enumerate", "--p", "3", "--nu", "1", "--len", "2"});
  ASSERT_EQ(en.code, 0);
  EXPECT_GE(json::parse(en.out)["words"].size(), 3u);
}

TEST(CliTest, Codes) {
  const CliRun red = run({"code", "reduce", "--p", "3", "u0, o0, l1, h1, h1^-1, o1^-1, h1^-1, u0^-1"});
  ASSERT_EQ(red.code, 0);
  EXPECT_EQ(red.out.find("h1, h1^-1"), std::string::npos);
  EXPECT_EQ(run({"code", "reduce", "--p", "3", red.out.substr(0, red.out.size() - 1)}).out, red.out);
  EXPECT_EQ(run({"code", "equal", "--p", "3", "u0, o0, l1, l1^-1, o0^-1, u0^-1", "u0, u0^-1"}).code, kExitYes);
  EXPECT_EQ(run({"code", "equal", "--p", "3", "u0, o3, l0, o0^-1, h0^-1, u0^-1", "u0, o0, l1, o1^-1, h1^-1, u0^-1"}).code, kExitNo);
  EXPECT_EQ(run({"code", "reduce", "--p", "3", "z9"}).code, kExitInputError);
  const CliRun act = run({"--format", "json", "code", "act", "--p", "3", "--nu", "2", "--s", "0", "q0, h1, q2^-1"});
  ASSERT_EQ(act.code, 0) << act.err;
  EXPECT_TRUE(json::parse(act.out)["moved"].get<bool>());
  EXPECT_EQ(run({"code", "act", "--p", "3", "--nu", "3", "--s", "0", "q0, h1, q2^-1"}).code, kExitInputError);
}

TEST(CliTest, Mono) {
  const CliRun r = run({"--format", "json", "mono", "compute", data("cusp_family_nu2.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Factorization f = factorization_from_json(json::parse(r.out)["factorization"]);
  EXPECT_TRUE(validate(f));
  EXPECT_EQ(run({"mono", "compute", data("cusp_family_nu1.json")}).code, kExitInputError);
  EXPECT_EQ(run({"mono", "compute", "--loops-only", data("cusp_family_nu1.json")}).code, kExitYes);
  EXPECT_EQ(run({"mono", "compute", "--random-cubic"}).code, kExitYes);
}

}  // namespace
}  // namespace bmf
