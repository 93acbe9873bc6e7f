// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ldcat/category_io.hpp"
#include "ldcat/report.hpp"

namespace ldcat {
namespace {

namespace fs = std::filesystem;

const fs::path kData = LDCAT_DATA_DIR;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ldcat-cli-" + std::to_string(::getpid()) + "-" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::string& args) {
    const std::string cmd = std::string(LDCAT_CLI) + " " + args + " >" + (dir_ / "out.txt").string() + " 2>" +
                            (dir_ / "err.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string out() const { return read_text_file(dir_ / "out.txt"); }

  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name, std::ios::binary) << text;
    return dir_ / name;
  }

  static std::string model(const std::string& id) { return (kData / "models" / (id + ".cat")).string(); }
  static std::string theory(const std::string& t, const std::string& m) {
    return (kData / "theories" / (t + "-" + m + ".thy")).string();
  }

  fs::path dir_;
};

TEST_F(Cli, CheckPowersetTwoPassesAllSeven) {
  const fs::path report = dir_ / "report.txt";
  EXPECT_EQ(run("check --model " + model("powerset2") + " --theory " + theory("constants", "powerset2") +
                " --report " + report.string()),
            0);
  const std::string text = read_text_file(report);
  for (int i = 1; i <= 7; ++i) {
    EXPECT_NE(text.find("condition." + std::to_string(i) + ".verdict=PASS\n"), std::string::npos) << i;
  }
  EXPECT_NE(text.find("universe.saturated=true\n"), std::string::npos);
  EXPECT_NE(text.find("reach.depth=3\n"), std::string::npos);
}

TEST_F(Cli, DanglingArrowNameIsInputError) {
  const fs::path bad = write("bad.cat", "object a\nid a = auto\narrow f : a -> b\n");
  EXPECT_EQ(run("validate --model " + bad.string()), 2);
}

TEST_F(Cli, RedundancyOnChainThree) {
  const fs::path report = dir_ / "report.txt";
  EXPECT_EQ(run("--report " + report.string() + " redundancy --model " + model("chain3") + " --theory " +
                theory("constants", "chain3")),
            0);
  const std::string text = read_text_file(report);
  EXPECT_NE(text.find("delta.count=27\n"), std::string::npos);
  EXPECT_NE(text.find("delta.passed=27\n"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("validate"), 2);
  EXPECT_EQ(run("validate --model /nonexistent/file.cat"), 2);
  EXPECT_EQ(run("gen --kind torus --n 2"), 2);
  EXPECT_EQ(run("gen --kind powerset --n 9"), 2);
  EXPECT_EQ(run("interpret --model " + model("powerset2") + " --theory " + theory("constants", "powerset2") +
                " --formula 'P(c) &'"),
            2);
  EXPECT_EQ(run("interpret --model " + model("powerset2") + " --theory " + theory("constants", "powerset2") +
                " --formula 'P(x)'"),
            2);
}

TEST_F(Cli, InterpretPrintsObject) {
  EXPECT_EQ(run("interpret --model " + model("powerset2") + " --theory " + theory("constants", "powerset2") +
                " --formula 'exists x:s. P(x)'"),
            0);
  EXPECT_EQ(out(), "exists x:s. P(x) = {1,2}\n");
}

TEST_F(Cli, GenWritesValidModel) {
  const fs::path cat = dir_ / "diamond.cat";
  EXPECT_EQ(run("gen --kind diamond --out " + cat.string()), 0);
  EXPECT_EQ(run("validate --model " + cat.string()), 0);
  EXPECT_NE(out().find("PASS"), std::string::npos);
}

// Every single-line deletion or composite redirection of a model file is
// either rejected as input or fails a verdict; never exit 0.
TEST_F(Cli, MutatedModelNeverPasses) {
  const std::string text = read_text_file(model("chain3"));
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  std::size_t mutations = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].rfind("compose", 0) != 0 && lines[i].rfind("id ", 0) != 0) continue;
    std::string dropped, redirected;
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (j != i) dropped += lines[j] + "\n";
      std::string l = lines[j];
      if (j == i && l.rfind("compose", 0) == 0) l = l.substr(0, l.rfind('=') + 1) + " 0<=2";
      redirected += l + "\n";
    }
    for (const std::string& variant : {dropped, redirected}) {
      if (variant == text) continue;
      const fs::path p = write("mutant.cat", variant);
      const int code = run("check --model " + p.string() + " --theory " + theory("constants", "chain3"));
      EXPECT_TRUE(code == 1 || code == 2) << "line " << i + 1 << " exit " << code;
      ++mutations;
    }
  }
  EXPECT_GT(mutations, 20u);
}

TEST_F(Cli, MissingAtomAssignmentFailsConditionSix) {
  std::string text = read_text_file(theory("constants", "powerset2"));
  const auto pos = text.find("interp Q(d)");
  text.erase(pos, text.find('\n', pos) - pos + 1);
  const fs::path p = write("t.thy", text);
  EXPECT_EQ(run("check --model " + model("powerset2") + " --theory " + p.string()), 1);
  EXPECT_NE(out().find("condition 6 (interpretation clauses): FAIL"), std::string::npos) << out();
}

TEST_F(Cli, ReportsAreDeterministic) {
  const std::string args = " --model " + model("powerset3") + " --theory " + theory("unary", "powerset3");
  for (const char* cmd : {"check", "redundancy"}) {
    ASSERT_EQ(run(std::string("--report ") + (dir_ / "a.txt").string() + " " + cmd + args), 0);
    ASSERT_EQ(run(std::string("--report ") + (dir_ / "b.txt").string() + " " + cmd + args), 0);
    const std::string a = read_text_file(dir_ / "a.txt"), b = read_text_file(dir_ / "b.txt");
    EXPECT_EQ(comparable_section(a), comparable_section(b)) << cmd;
    EXPECT_NE(a.find("# timing\n"), std::string::npos);
  }
}

}  // namespace
}  // namespace ldcat
