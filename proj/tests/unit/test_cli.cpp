#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "symrank/cli/csv.hpp"
#include "symrank/cli/run.hpp"
#include "symrank/error.hpp"
#include "symrank/fast/estimate.hpp"

using namespace symrank;
using namespace symrank::cli;

namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("symrank_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string read(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  int call(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

const char* kConcordant = "u,v\n1,1.5\n2,2.5\n3,3.1\n4,4.8\n5,5.2\n6,6.6\n7,7.1\n";

}  // namespace

TEST_F(CliTest, IngestCountsNamesAndIndices) {
  const std::string p = write("a.csv", "p,q,r\n1,2,3\n4,5,6\n7,8,9\n");
  const IngestResult by_count = ingest_csv(p, "x:2 y:1");
  EXPECT_EQ(by_count.data.r(), 2u);
  EXPECT_EQ(by_count.data.s(), 1u);
  EXPECT_EQ(by_count.y_names, std::vector<std::string>{"r"});
  const IngestResult named = ingest_csv(p, "x:r;y:p,#2");
  EXPECT_EQ(named.data.r(), 1u);
  EXPECT_EQ(named.data(1, 0), 6.0);
  EXPECT_EQ(named.data(2, 2), 8.0);
  EXPECT_THROW(ingest_csv(p, "x:p;y:zz"), InputError);
  EXPECT_THROW(ingest_csv(p, "x:p;y:p"), InputError);
  EXPECT_THROW(ingest_csv(p, "x:p"), InputError);
}

TEST_F(CliTest, IngestErrorsCarryLocation) {
  std::string text = "a,b\n";
  for (int row = 1; row <= 9; ++row) text += row == 7 ? "7,\n" : std::to_string(row) + "," + std::to_string(row) + "\n";
  try {
    ingest_csv(write("m.csv", text), "x:a;y:b");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("row 7"), std::string::npos) << e.what();
  }
  try {
    ingest_csv(write("h.csv", "a,b\n"), "x:a;y:b");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("no observations"), std::string::npos);
  }
  EXPECT_THROW(ingest_csv(write("e.csv", ""), "x:a;y:b"), InputError);
  EXPECT_THROW(ingest_csv(write("n.csv", "a,b\n1,abc\n"), "x:a;y:b"), InputError);
  EXPECT_EQ(split_csv_line("\"x,1\",  2 ,\"a\"\"b\""), (std::vector<std::string>{"x,1", "2", "a\"b"}));
}

TEST_F(CliTest, ComputeRecordsBackendAndExitCodes) {
  const std::string p = write("c.csv", kConcordant);
  ASSERT_EQ(call({"compute", "-i", p, "--roles", "x:u;y:v", "--stat", "D"}), 0) << err_.str();
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_TRUE(std::isfinite(j["result"]["approx"].get<double>()));
  EXPECT_EQ(j["result"]["backend"], "tensor");
  EXPECT_EQ(j["version"], "0.1.0");
  EXPECT_EQ(j["config"]["seed"], 1);

  EXPECT_EQ(call({"compute", "-i", p, "--roles", "x:u;y:nope"}), kInputError);
  EXPECT_EQ(call({"compute", "-i", p, "--roles", "x:u;y:v", "--stat", "bogus"}), kInputError);
  EXPECT_EQ(call({"frobnicate"}), kInputError);
  EXPECT_EQ(call({"compute", "-i", p, "--roles", "x:u;y:v", "--stat", "tau2", "--algorithm", "fast"}), kInputError);
  EXPECT_EQ(call({"compute", "-i", p, "--roles", "x:u;y:v", "--stat", "D", "--backend", "tensor"}), 0);
  ::setenv("SYMRANK_MEMORY_BUDGET", "1K", 1);
  EXPECT_EQ(call({"compute", "-i", write("big.csv", [] {
                    std::string t = "u,v\n";
                    for (int i = 0; i < 40; ++i) t += std::to_string(i) + "," + std::to_string((i * 7) % 40) + "\n";
                    return t;
                  }()),
                  "--roles", "x:u;y:v", "--stat", "D", "--backend", "tensor"}),
            kCapacityError);
  ::unsetenv("SYMRANK_MEMORY_BUDGET");
}

TEST_F(CliTest, NullSampleIsDeterministic) {
  const std::string a = (dir_ / "a.csv").string(), b = (dir_ / "b.csv").string();
  const std::vector<std::string> base = {"null-sample", "--law", "D", "--K", "100", "--count", "1000", "--seed", "7"};
  auto with = [&](const std::string& out) {
    auto v = base;
    v.insert(v.end(), {"-o", out});
    return v;
  };
  ASSERT_EQ(call(with(a)), 0);
  ASSERT_EQ(call(with(b)), 0);
  const std::string ta = read(a);
  EXPECT_EQ(ta, read(b));
  EXPECT_NE(ta.find("\"seed\":7"), std::string::npos);
  EXPECT_NE(ta.find("philox4x64-10"), std::string::npos);
}

TEST_F(CliTest, BenchHasNaiveAndFastColumns) {
  ASSERT_EQ(call({"bench", "--stat", "tauP", "--n-grid", "16,32,64", "--pair-method", "pairset"}), 0) << err_.str();
  const std::string t = out_.str();
  EXPECT_NE(t.find("naive_seconds,fast_seconds"), std::string::npos);
  EXPECT_NE(t.find("tauP,64,1,1,"), std::string::npos);
  EXPECT_EQ(t.find(",false,"), std::string::npos);
  EXPECT_NE(t.find("pair-set"), std::string::npos);
}

TEST_F(CliTest, RankRoundTripPreservesStatistics) {
  std::string text = "id,a,b,c\n";
  const double vals[][3] = {{0.3, -1, 2},  {1.7, 4, 2},    {0.3, 2.5, -3}, {9, -1, 0.1},
                            {-2, 0.5, 7},  {4.4, 4, 4},    {2.2, 3.3, 1.1}, {5, -6, 2}};
  int id = 0;
  for (const auto& v : vals)
    text += "r" + std::to_string(id++) + "," + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
            std::to_string(v[2]) + "\n";
  const std::string raw = write("raw.csv", text), ranked = (dir_ / "ranked.csv").string();
  ASSERT_EQ(call({"rank", "-i", raw, "--roles", "x:a,c;y:b", "-o", ranked}), 0) << err_.str();
  for (const std::string stat : {"D", "R", "tauP", "tauJ"}) {
    ASSERT_EQ(call({"compute", "-i", raw, "--roles", "x:a,c;y:b", "--stat", stat}), 0);
    const auto before = nlohmann::json::parse(out_.str())["result"]["value"];
    ASSERT_EQ(call({"compute", "-i", ranked, "--roles", "x:a,c;y:b", "--stat", stat}), 0) << err_.str();
    EXPECT_EQ(nlohmann::json::parse(out_.str())["result"]["value"], before) << stat;
  }
}

TEST_F(CliTest, TestAndPowerCommands) {
  const std::string p = write("c.csv", kConcordant);
  ASSERT_EQ(call({"test", "-i", p, "--roles", "x:u;y:v", "--stat", "tau", "--B", "99", "--seed", "3"}), 0);
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_EQ(j["result"]["reference"].size(), 99u);
  EXPECT_GT(j["result"]["p_value"].get<double>(), 0.0);
  ASSERT_EQ(call({"test", "--scheme", "marginal-reference", "--generator", "xor3", "--stat", "tauJ", "--n", "30",
                  "--B", "50"}),
            0)
      << err_.str();
  ASSERT_EQ(call({"power", "--generator", "xor2", "--stats", "tauJ,D", "--n", "24", "--trials", "20", "--B", "50"}), 0)
      << err_.str();
  EXPECT_NE(out_.str().find("xor2,1,0,tauJ,marginal-reference,24,20,0,"), std::string::npos) << out_.str();
  EXPECT_EQ(call({"power", "--generator", "nope"}), kInputError);
}
