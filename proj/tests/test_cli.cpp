#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hh/oracle.hpp"
#include "hh/workload.hpp"

namespace hh::cli {
namespace {

using json = nlohmann::ordered_json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Outcome call(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string lines(const std::vector<std::uint64_t>& ids) {
  std::string s;
  for (auto x : ids) s += std::to_string(x) + "\n";
  return s;
}

TEST(Cli, BordaSingleVoteExact) {
  const auto r = call({"borda", "--n", "3", "--exact"}, "2,0,1\n");
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = r.report();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["algorithm"], "borda");
  std::map<std::uint64_t, double> scores;
  for (const auto& it : j["items"]) scores[it["id"].get<std::uint64_t>()] = it["estimate"].get<double>();
  EXPECT_EQ(scores, (std::map<std::uint64_t, double>{{2, 2}, {0, 1}, {1, 0}}));
  EXPECT_EQ(j["winner"]["id"], 2);
}

TEST(Cli, BordaSingleVoteSketchedAtFullRate) {
  const auto r = call({"borda", "--n", "3", "--m", "1"}, "2,0,1\n");
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = r.report();
  EXPECT_EQ(j["items"][2]["estimate"], 2.0);
  EXPECT_EQ(j["items"][0]["estimate"], 1.0);
  EXPECT_EQ(j["samples_seen"], 1);
}

TEST(Cli, ReportFields) {
  const auto r = call({"list-hh", "--epsilon", "0.1", "--phi", "0.5", "--n", "10", "--m", "4"}, "1\n1\n1\n2\n");
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = r.report();
  for (const char* key : {"schema", "algorithm", "params", "items", "samples_seen", "bits_used", "wall_time_ns"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["params"]["adaptive"], false);
  ASSERT_EQ(j["items"].size(), 1u);
  EXPECT_EQ(j["items"][0]["id"], 1);
}

TEST(Cli, EmptyMaximumExitsThree) {
  EXPECT_EQ(call({"maximum", "--n", "10", "--m", "100"}, "").code, kNoSample);
  EXPECT_EQ(call({"maximum", "--n", "10", "--m", "100", "--exact"}, "").code, kNoSample);
  EXPECT_EQ(call({"borda", "--n", "3", "--m", "10"}, "").code, kNoSample);
}

TEST(Cli, ParseErrorReportsLine) {
  const auto r = call({"list-hh", "--phi", "0.5", "--n", "10", "--m", "3"}, "1\n2\nabc\n");
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  const auto range = call({"minimum", "--n", "10", "--m", "3"}, "1\n10\n");
  EXPECT_EQ(range.code, kUsage);
  EXPECT_NE(range.err.find("line 2"), std::string::npos) << range.err;
}

TEST(Cli, ConstraintViolationsExitTwo) {
  EXPECT_EQ(call({"list-hh", "--epsilon", "0.5", "--phi", "0.5", "--n", "10", "--m", "3"}, "1\n").code, kUsage);
  EXPECT_EQ(call({"list-hh", "--n", "10", "--m", "3"}, "1\n").code, kUsage);
  const auto vote = call({"borda", "--n", "3", "--m", "2"}, "0,1,2\n0,0,1\n");
  EXPECT_EQ(vote.code, kUsage);
  EXPECT_NE(vote.err.find("line 2"), std::string::npos) << vote.err;
  EXPECT_EQ(call({"maximin", "--n", "3", "--m", "1"}, "0,1\n").code, kUsage);
  EXPECT_EQ(call({"list-hh-opt", "--phi", "0.5", "--n", "10"}, "1\n").code, kUsage);
  EXPECT_EQ(call({"minimum", "--n", "10", "--scale", "2"}, "1\n").code, kUsage);
  EXPECT_EQ(call({"minimum", "--n", "10", "--epsilon", "1"}, "1\n").code, kUsage);
  EXPECT_EQ(call({"minimum", "--epsilon", "0.1"}, "1\n").code, kUsage);
  EXPECT_EQ(call({"nope"}).code, kUsage);
  EXPECT_EQ(call({"verify", "--n", "10", "--algorithm", "nope"}).code, kUsage);
}

TEST(Cli, IdenticalSpecsGiveIdenticalOutput) {
  const auto input = lines(zipf_stream(50, 1.1, 5000, 1));
  auto strip = [](json j) {
    j.erase("wall_time_ns");
    return j.dump(2);
  };
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"list-hh", "--phi", "0.2", "--n", "50", "--m", "5000", "--seed", "9"},
        std::vector<std::string>{"list-hh", "--phi", "0.2", "--n", "50", "--seed", "9"},
        std::vector<std::string>{"minimum", "--n", "50", "--m", "5000", "--seed", "9"},
        std::vector<std::string>{"list-hh-opt", "--phi", "0.2", "--n", "50", "--m", "5000", "--seed", "9",
                                 "--scale", "0.001"}}) {
    const auto a = call(args, input);
    const auto b = call(args, input);
    ASSERT_EQ(a.code, kOk) << a.err;
    EXPECT_EQ(strip(a.report()), strip(b.report()));
  }
}

TEST(Cli, SeedFallsBackToEnvironment) {
  const auto input = lines(zipf_stream(50, 1.1, 20000, 2));
  const std::vector<std::string> base{"maximum", "--n", "50", "--m", "20000"};
  auto with_seed = base;
  with_seed.insert(with_seed.end(), {"--seed", "42"});
  ::setenv("HH_SEED", "42", 1);
  const auto from_env = call(base, input);
  ::unsetenv("HH_SEED");
  const auto from_flag = call(with_seed, input);
  ASSERT_EQ(from_env.code, kOk);
  EXPECT_EQ(from_env.report()["params"]["seed"], 42);
  EXPECT_EQ(from_env.report()["items"], from_flag.report()["items"]);
  ::setenv("HH_SEED", "x", 1);
  EXPECT_EQ(call(base, input).code, kUsage);
  ::unsetenv("HH_SEED");
}

TEST(Cli, ReadsInputFile) {
  const auto path = std::filesystem::temp_directory_path() / "hh_cli_test_input.txt";
  {
    std::ofstream f(path);
    f << "3\n3\n\n5\n";
  }
  const auto r = call({"maximum", "--n", "10", "--exact", "--input", path.string()});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.report()["items"][0]["id"], 3);
  EXPECT_EQ(r.report()["samples_seen"], 3);
  EXPECT_EQ(call({"maximum", "--n", "10", "--input", "/nonexistent/file"}).code, kUsage);
}

TEST(Cli, UnknownLengthUsesAdaptiveWrapper) {
  const auto input = lines(zipf_stream(20, 1.5, 3000, 3));
  for (const char* cmd : {"list-hh", "maximum", "minimum"}) {
    const auto r = call({cmd, "--phi", "0.5", "--n", "20", "--seed", "1"}, input);
    ASSERT_EQ(r.code, kOk) << cmd << ": " << r.err;
    const auto j = r.report();
    EXPECT_EQ(j["params"]["adaptive"], true);
    EXPECT_GE(j["generation"].get<int>(), 1);
  }
  const auto votes = call({"maximin", "--n", "3", "--seed", "1"}, "0,1,2\n1,0,2\n");
  ASSERT_EQ(votes.code, kOk) << votes.err;
  EXPECT_EQ(votes.report()["items"].size(), 3u);
}

TEST(Cli, MinimumReportsRule) {
  const auto r = call({"minimum", "--n", "2", "--m", "4", "--epsilon", "0.01"}, "0\n0\n0\n1\n");
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.report()["items"][0]["id"], 1);
  EXPECT_TRUE(r.report()["rule"].is_string());
}

TEST(Cli, ListMatchesExactContract) {
  const std::uint64_t n = 10000, m = 1000000;
  const auto stream = zipf_stream(n, 1.1, m, 7);
  const auto input = lines(stream);
  const auto sketch = call({"list-hh", "--epsilon", "0.05", "--phi", "0.2", "--n", "10000", "--m", "1000000",
                            "--seed", "7"},
                           input);
  const auto exact = call({"list-hh", "--epsilon", "0.05", "--phi", "0.2", "--n", "10000", "--m", "1000000",
                           "--exact"},
                          input);
  ASSERT_EQ(sketch.code, kOk) << sketch.err;
  ASSERT_EQ(exact.code, kOk) << exact.err;
  ExactTally tally(n);
  tally.add(stream.begin(), stream.end());
  FrequencyReport got;
  for (const auto& it : sketch.report()["items"]) {
    got.items.push_back(ItemEstimate{it["id"].get<std::uint64_t>(), it["estimate"].get<double>()});
  }
  EXPECT_TRUE(check_list_report(got, tally, 0.05, 0.2).ok());
  for (const auto& it : exact.report()["items"]) {
    bool found = false;
    for (const auto& g : got.items) found |= g.id == it["id"].get<std::uint64_t>();
    EXPECT_TRUE(found) << "missing id " << it["id"];
  }
}

TEST(Cli, VerifyReportsPassRate) {
  const auto r = call({"verify", "--algorithm", "list-hh", "--phi", "0.3", "--n", "100", "--m", "20000",
                       "--trials", "5", "--seed", "3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = r.report();
  EXPECT_EQ(j["trials"], 5);
  EXPECT_GE(j["pass_rate"].get<double>(), 0.8);
  EXPECT_EQ(j["passed"].get<int>(), static_cast<int>(j["pass_rate"].get<double>() * 5 + 0.5));
  const auto votes = call({"verify", "--algorithm", "maximin", "--n", "4", "--m", "5000", "--trials", "3"});
  ASSERT_EQ(votes.code, kOk) << votes.err;
}

TEST(Cli, BenchEmitsGrid) {
  const auto r = call({"bench", "--n", "100", "--m", "20000", "--seed", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto report = r.report();
  const auto& results = report["results"];
  ASSERT_EQ(results.size(), 6u);
  for (const auto& row : results) {
    EXPECT_GT(row["list_hh_updates_per_sec"].get<double>(), 0);
    EXPECT_GT(row["list_hh_opt_updates_per_sec"].get<double>(), 0);
    EXPECT_GT(row["ohh_space_bits"].get<std::uint64_t>(), 0u);
  }
}

}  // namespace
}  // namespace hh::cli
