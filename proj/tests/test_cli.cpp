#include "ends/presentation.hpp"
#include "ends/rips.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

namespace {

struct CliRun {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded and returns stdout and the exit status.
CliRun ends_cli(const std::string& args) {
  const std::string cmd = std::string(ENDS_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(ENDS_DATA_DIR) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "ends_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

nlohmann::json last_json(const std::string& out) { return nlohmann::json::parse(out.substr(out.find('{'))); }

}  // namespace

TEST(Cli, SurfaceCountGivesTwoEnds) {
  const CliRun r = ends_cli("count " + data("genus2.grp") + " --subgroup-from-file --node-budget 100000000 --json");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const auto j = last_json(r.out);
  EXPECT_EQ(j["verdict"], 2);
  EXPECT_EQ(j["class_history"], nlohmann::json({2, 2, 2, 2}));
  EXPECT_TRUE(j["stable"].get<bool>());
  EXPECT_EQ(j["subgroup"], nlohmann::json({"a"}));
  EXPECT_EQ(j["shadow"]["violations"], 0);
  EXPECT_EQ(j["ledger"]["mode"], "empirical");
}

TEST(Cli, FreeGroupAndLineAndWholeGroup) {
  CliRun r = ends_cli("count " + data("f2.grp") + " --json");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(last_json(r.out)["verdict"], "infinite (non-stabilizing)");
  r = ends_cli("count " + data("z.grp") + " --json");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(last_json(r.out)["verdict"], 2);
  r = ends_cli("count " + data("h_equals_g.grp") + " --subgroup-from-file --json");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(last_json(r.out)["verdict"], 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(ends_cli("parse " + data("missing.grp")).exit_code, 1);
  EXPECT_EQ(ends_cli("count").exit_code, 1);
  EXPECT_EQ(ends_cli("nonsense " + data("z.grp")).exit_code, 1);
  const auto bad = scratch("bad.grp");
  std::ofstream(bad) << "generators: a\nrelators:\n  a q\n";
  EXPECT_EQ(ends_cli("parse " + bad.string()).exit_code, 1);
  // The radius-7 ball fits, its slack-1 check does not.
  EXPECT_EQ(ends_cli("count " + data("genus2_trivial.grp") + " --node-budget 20000000").exit_code, 2);
  EXPECT_EQ(ends_cli("count " + data("genus2.grp") + " --subgroup-from-file --mode certified --delta 1").exit_code, 2);
  EXPECT_EQ(ends_cli("count " + data("genus2.grp") + " --subgroup-from-file --node-budget 1000").exit_code, 3);
  EXPECT_EQ(ends_cli("schreier " + data("genus2.grp") + " --radius 6 --node-budget 1000").exit_code, 3);
}

TEST(Cli, CertifiedModeReportsTheLedger) {
  const CliRun r = ends_cli("count " + data("genus2.grp") + " --subgroup-from-file --mode certified --delta 1 --json");
  ASSERT_EQ(r.exit_code, 2);
  const auto j = last_json(r.out);
  EXPECT_EQ(j["verdict"], "uncertified");
  EXPECT_EQ(j["ledger"]["mode"], "certified");
  EXPECT_EQ(j["ledger"]["M"], "22751");
  EXPECT_EQ(j["ledger"]["R0"], "23280");
}

TEST(Cli, CountJsonIsReproducible) {
  const std::string args = "count " + data("f2_a.grp") + " --subgroup-from-file --seed 4 --json";
  auto a = last_json(ends_cli(args).out);
  auto b = last_json(ends_cli(args).out);
  ASSERT_TRUE(a.contains("runtime_ms"));
  a.erase("runtime_ms");
  b.erase("runtime_ms");
  EXPECT_EQ(a.dump(), b.dump());
  const auto path = scratch("count.json");
  ASSERT_EQ(ends_cli(args + " " + path.string()).exit_code, 0);
  std::ifstream in(path);
  auto c = nlohmann::json::parse(in);
  c.erase("runtime_ms");
  EXPECT_EQ(c.dump(), a.dump());
}

TEST(Cli, RipsOutputParses) {
  const auto path = scratch("rips.grp");
  ASSERT_EQ(ends_cli("rips " + data("q_b2.grp") + " --block-length 8 --seed 3 -o " + path.string()).exit_code, 0);
  const ends::Instance inst = ends::load_instance(path.string());
  EXPECT_EQ(inst.group.generator_count(), 4);
  EXPECT_EQ(inst.group.relators().size(), 10u);
  EXPECT_EQ(inst.subgroup.generators.size(), 2u);
  EXPECT_TRUE(ends::check_small_cancellation(inst.group, ends::Rational(1, 6)).passes);
  const CliRun count = ends_cli("count " + path.string() + " --subgroup-from-file --json");
  ASSERT_EQ(count.exit_code, 0);
  EXPECT_EQ(last_json(count.out)["verdict"], 0);
}

TEST(Cli, OtherSubcommands) {
  CliRun r = ends_cli("parse " + data("genus2.grp"));
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("abABcdCD"), std::string::npos);
  EXPECT_EQ(last_json(r.out)["hash"].get<std::string>().size(), 16u);

  r = ends_cli("word-reduce " + data("genus2.grp") + " abABc");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("reduced: dcD"), std::string::npos);
  r = ends_cli("word-reduce " + data("genus2.grp") + " abABcdCD");
  EXPECT_NE(r.out.find("trivial: yes"), std::string::npos);

  r = ends_cli("ball " + data("f2.grp") + " --radius 2 --delta");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("17 vertices"), std::string::npos);
  EXPECT_NE(r.out.find("delta estimate: 0"), std::string::npos);
  r = ends_cli("ball " + data("genus2_trivial.grp") + " --radius 3 --delta --sample 5000 --seed 2");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("delta estimate:"), std::string::npos);

  const auto dot = scratch("schreier.dot");
  r = ends_cli("schreier " + data("f2_a.grp") + " --radius 2 --dot " + dot.string() + " --json");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("9 cosets"), std::string::npos);
  EXPECT_TRUE(std::filesystem::file_size(dot) > 0);

  r = ends_cli("check-ddag " + data("genus2_trivial.grp") + " --radius 6 --M 4 --K 1 --delta 0 --node-budget 100000000");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("holds with L = 38"), std::string::npos);
  r = ends_cli("check-dag " + data("genus2.grp") + " --radius 6 --M 3 --node-budget 100000000 --json");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(last_json(r.out)["holds_within_ball"].get<bool>());

  r = ends_cli("empirical " + data("z.grp") + " --radius 10 --json");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(last_json(r.out)["verdict"], 2);

  r = ends_cli("oracle-fold " + data("f2_a.grp"));
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("core graph: 1 vertices"), std::string::npos);
  r = ends_cli("oracle-compare " + data("f2_a.grp") + " --radius 4");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("isomorphic"), std::string::npos);
}
