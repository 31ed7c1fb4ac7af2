// Stored invocations and their exact output.
//
// cases/<name>.args holds one argument per line; "@DIR@" stands for the
// inputs/ directory. cases/<name>.out holds the exit status, standard output
// and standard error. Set GRADUS_REGENERATE_GOLDEN=1 to rewrite the .out files.

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

namespace fs = std::filesystem;

const fs::path kGoldenDir = GRADUS_GOLDEN_DIR;

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void replace_all(std::string& text, const std::string& from, const std::string& to) {
  for (std::size_t pos = text.find(from); pos != std::string::npos; pos = text.find(from, pos + to.size())) {
    text.replace(pos, from.size(), to);
  }
}

std::vector<std::string> case_names() {
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(kGoldenDir / "cases")) {
    if (entry.path().extension() == ".args") names.push_back(entry.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

std::string run_case(const std::string& name) {
  const std::string inputs = (kGoldenDir / "inputs").string();
  std::vector<std::string> args;
  std::istringstream lines(slurp(kGoldenDir / "cases" / (name + ".args")));
  for (std::string line; std::getline(lines, line);) {
    if (line.empty()) continue;
    replace_all(line, "@DIR@", inputs);
    args.push_back(line);
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = gradus::cli::run(args, out, err);
  std::string transcript = "exit " + std::to_string(code) + "\n--- stdout\n" + out.str() + "--- stderr\n" + err.str();
  replace_all(transcript, inputs, "@DIR@");
  return transcript;
}

class Golden : public ::testing::TestWithParam<std::string> {};

TEST_P(Golden, MatchesStoredOutput) {
  const std::string name = GetParam();
  const fs::path expected_path = kGoldenDir / "cases" / (name + ".out");
  const std::string actual = run_case(name);
  const char* regenerate = std::getenv("GRADUS_REGENERATE_GOLDEN");
  if (regenerate != nullptr && std::string(regenerate) == "1") {
    std::ofstream(expected_path, std::ios::binary) << actual;
    GTEST_SKIP() << "regenerated " << expected_path;
  }
  ASSERT_TRUE(fs::exists(expected_path)) << "no stored output; run with GRADUS_REGENERATE_GOLDEN=1";
  EXPECT_EQ(actual, slurp(expected_path));
}

INSTANTIATE_TEST_SUITE_P(Cases, Golden, ::testing::ValuesIn(case_names()),
                         [](const auto& info) {
                           std::string id = info.param;
                           std::replace(id.begin(), id.end(), '-', '_');
                           return id;
                         });

TEST(GoldenCoverage, EverySubcommandHasACase) {
  std::string all;
  for (const auto& name : case_names()) all += slurp(kGoldenDir / "cases" / (name + ".args")) + "\n";
  for (const char* cmd : {"points", "ideal", "hilbert", "betti", "socle", "artinian", "hom", "experiment",
                          "parse-check", "socle-groups", "reproduce", "monomial"}) {
    EXPECT_NE(all.find(std::string(cmd) + "\n"), std::string::npos) << cmd;
  }
}

}  // namespace
