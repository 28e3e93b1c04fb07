#include <gtest/gtest.h>

#include <json.hpp>

#include "support/run.hpp"

namespace {

std::string cli(const std::string& args) { return std::string(BIFIB_CLI) + " " + args; }

std::string out(const std::string& args) {
  const auto r = support::run(cli(args));
  EXPECT_EQ(r.code, 0) << args;
  return r.out;
}

int code(const std::string& args) { return support::run(cli(args)).code; }

}  // namespace

TEST(Cli, Gen) {
  EXPECT_EQ(out("gen U 5"), "x^4 + 3x^2y + y^2\n");
  EXPECT_EQ(out("gen V 0"), "2\n");
  EXPECT_EQ(out("gen U 0"), "0\n");
  const auto doc = nlohmann::json::parse(out("gen V 2 json"));
  EXPECT_EQ(doc.size(), 2u);
  EXPECT_EQ(out("gen V 2 --format json"), out("gen V 2 json"));
}

TEST(Cli, GoldenTables) {
  for (const char* f : {"a", "b", "c", "d", "e"}) {
    const std::string golden = support::slurp(std::string(BIFIB_GOLDEN_DIR) + "/table_" + f + ".txt");
    ASSERT_FALSE(golden.empty()) << f;
    std::size_t rows = 0;
    for (char ch : golden) rows += ch == '\n';
    const std::size_t first = (f[0] == 'a' || f[0] == 'b') ? 0 : 1;
    const std::string n = std::to_string(first + rows - 1);
    for (const char* m : {"closed", "recurrence", "all"}) {
      EXPECT_EQ(out(std::string("table ") + f + " " + n + " --method " + m), golden) << f << " " << m;
    }
  }
}

TEST(Cli, TableFormats) {
  EXPECT_EQ(out("table b 2 csv"), "-1\n1,-1\n-1,2,-1\n");
  const auto doc = nlohmann::json::parse(out("table c 3 --format json"));
  EXPECT_EQ(doc["first_row"], 1);
  EXPECT_EQ(doc["rows"].size(), 3u);
  EXPECT_NE(out("table a 3 latex").find("tabular"), std::string::npos);
  EXPECT_EQ(out("table a 3 --method oracle"), "1\n1\t1\n1\t0\t1\n1\t-1\t1\t1\n");
}

TEST(Cli, Decompose) {
  EXPECT_EQ(out("decompose V 7 BUstar"), "V_7 = -2x^4 U_4 + 8x^3 U_5 - 12x^2 U_6 + 7x U_7\n");
  EXPECT_EQ(out("decompose U 2 BUstar"), "U_2 = x U_1\n");
  EXPECT_EQ(out("decompose V 2 BU"), "V_2 = -x U_2 + 2U_3\n");
  EXPECT_EQ(out("decompose U 7 BV --scale 2"), "2U_7 = x^3 V_3 - x^2 V_4 + x V_5 + V_6\n");
  const auto doc = nlohmann::json::parse(out("decompose U 8 BUstar json"));
  EXPECT_EQ(doc["coords"], nlohmann::json({"-1", "4", "-6", "4"}));
}

TEST(Cli, DetAndChebyshev) {
  EXPECT_EQ(out("det BV 5 --method both"), "2\n");
  EXPECT_EQ(out("det BUstar 7"), "1\n");
  EXPECT_EQ(out("det BVstar 4 --method telescoping"), "2\n");
  EXPECT_EQ(out("chebyshev T 3"), "4x^3 - 3x\n");
  EXPECT_EQ(out("chebyshev U 2"), "4x^2 - 1\n");
}

TEST(Cli, Verify) {
  const auto r = support::run(cli("verify 6 --format json"));
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["passed"], true);
  EXPECT_EQ(r.out, support::run(cli("verify 6 --format json")).out);
  EXPECT_EQ(code("verify 5 lemma1"), 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(code(""), 2);
  EXPECT_EQ(code("gen W 3"), 2);
  EXPECT_EQ(code("gen U"), 2);
  EXPECT_EQ(code("gen U 600"), 2);
  EXPECT_EQ(code("--max-n 10 gen U 11"), 2);
  EXPECT_EQ(code("--max-n 700 gen U 600"), 0);
  EXPECT_EQ(code("table f 3"), 2);
  EXPECT_EQ(code("table c 0"), 2);
  EXPECT_EQ(code("table a 3 --method guess"), 2);
  EXPECT_EQ(code("decompose U 0 BU"), 2);
  EXPECT_EQ(code("decompose U 8 BV"), 2);
  EXPECT_EQ(code("decompose V 7 BU"), 2);
  EXPECT_EQ(code("decompose U 7 BV --scale 0"), 2);
  EXPECT_EQ(code("det Canonical 3"), 2);
  EXPECT_EQ(code("det BUstar 0"), 2);
  EXPECT_EQ(code("verify 0"), 2);
  EXPECT_EQ(code("verify 5 nonsense"), 2);
  EXPECT_EQ(code("chebyshev V 3"), 2);
}
