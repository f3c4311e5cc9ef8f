#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hpd/cli.hpp"
#include "hpd/report_io.hpp"

using hpd::io::json;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = hpd::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  EXPECT_TRUE(in.good()) << path;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) {
  return read_file(std::string(HPD_GOLDEN_DIR) + "/" + name);
}

TEST(CliGoldenTest, CatalogAndReportsMatchByteForByte) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
      {{"example", "--name", "quadric_even", "--n", "1", "--format", "json"},
       "example_quadric_even_n1.json"},
      {{"example", "--name", "quadric_even", "--n", "2", "--format", "json"},
       "example_quadric_even_n2.json"},
      {{"example", "--name", "quadric_even", "--n", "3", "--format", "json"},
       "example_quadric_even_n3.json"},
      {{"example", "--name", "cubic_fourfold", "--format", "json"},
       "example_cubic_fourfold.json"},
      {{"example", "--name", "grassmannian_lefschetz", "--n", "3", "--format",
        "json"},
       "example_grassmannian_n3.json"},
      {{"example", "--name", "two_cubics_pencil", "--format", "json"},
       "example_two_cubics_pencil.json"},
      {{"walk", "--i", "3", "--ell", "4", "--format", "json"},
       "walk_i3_ell4.json"},
      {{"hpd1", "--m", "5", "--d", "3", "--ell", "2", "--format", "json"},
       "hpd1_m5_d3_ell2.json"},
  };
  for (const auto& [args, file] : cases) {
    CliResult r = invoke(args);
    EXPECT_EQ(r.code, 0) << file << " err: " << r.err;
    EXPECT_EQ(r.out, golden(file)) << file;
  }
}

TEST(CliGoldenTest, RepeatedRunsAreByteIdentical) {
  for (const char* format : {"json", "ascii", "tsv"}) {
    std::vector<std::string> args{"hpd2", "--m",     "5",   "--d",
                                  "3",    "--ell",   "2",   "--format",
                                  format};
    CliResult a = invoke(args);
    CliResult b = invoke(args);
    EXPECT_EQ(a.out, b.out) << format;
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(CliExitCodeTest, ZeroOnPassingCertificates) {
  EXPECT_EQ(invoke({"example", "--name", "two_cubics_pencil"}).code, 0);
  EXPECT_EQ(invoke({"gram", "--n", "2", "--twists", "0;1;2"}).code, 0);
  EXPECT_EQ(invoke({"cohom", "--n", "3", "--p", "1", "--k", "2"}).code, 0);
}

TEST(CliExitCodeTest, OneOnFailingCertificate) {
  CliResult r = invoke({"gram", "--n", "1", "--twists", "1;0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("[FAIL]"), std::string::npos);
  EXPECT_NE(r.out.find("exceptional: no"), std::string::npos);
}

TEST(CliExitCodeTest, TwoOnUsageAndPreconditionErrors) {
  // system dimension beyond the space dimension
  CliResult bad_range = invoke({"hpd1", "--m", "2", "--d", "1", "--ell", "5"});
  EXPECT_EQ(bad_range.code, 2);
  EXPECT_TRUE(bad_range.out.empty());
  EXPECT_FALSE(bad_range.err.empty());

  EXPECT_EQ(invoke({"hpd2", "--m", "4", "--d", "3", "--ell", "1"}).code, 2);
  EXPECT_EQ(invoke({"nonsense"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"cohom", "--n", "3", "--k", "1", "--format", "yaml"}).code,
            2);
  EXPECT_EQ(invoke({"cohom", "--n", "3"}).code, 2);  // missing --k
  EXPECT_EQ(invoke({"chi", "--n", "2x"}).code, 2);
  EXPECT_EQ(invoke({"ext", "--m", "3", "--d", "2", "--ell", "5", "--from",
                    "0,0", "--to", "1,0"})
                .code,
            2);  // ell exceeds m+1
  EXPECT_EQ(invoke({"walk", "--i", "3", "--ell", "2"}).code, 2);
}

TEST(CliFormatTest, JsonRoundTripsThroughReaders) {
  CliResult r =
      invoke({"hpd2", "--m", "5", "--d", "3", "--ell", "1", "--format",
              "json"});
  ASSERT_EQ(r.code, 0);
  json payload = json::parse(r.out);
  EXPECT_EQ(payload.at("command"), "hpd2");
  EXPECT_EQ(payload.at("inputs").at("m"), 5);
  EXPECT_EQ(payload.at("case"), "HPD2_LT");

  for (const auto& jb : payload.at("blocks")) {
    hpd::engine::SODBlock block = hpd::io::block_from_json(jb);
    EXPECT_EQ(hpd::io::to_json(block), jb);
  }
  for (const auto& jc : payload.at("certificates")) {
    hpd::engine::Certificate cert = hpd::io::certificate_from_json(jc);
    EXPECT_EQ(hpd::io::to_json(cert), jc);
    EXPECT_TRUE(cert.pass);
  }
  EXPECT_EQ(hpd::io::int_from_json(payload.at("scalars").at("hpd_rank")), 24);
}

TEST(CliFormatTest, TsvFlattensBlocks) {
  CliResult r = invoke(
      {"hpd2", "--m", "5", "--d", "3", "--ell", "1", "--format", "tsv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "label\talpha\tbeta\trank\n"
            "HPD_CATEGORY\t\t\t24\n"
            "LEFSCHETZ_BLOCK\t1\t0\t3\n");
}

TEST(CliFormatTest, CohomJsonTablePairs) {
  CliResult r = invoke({"cohom", "--n", "3", "--p", "1", "--k", "2",
                        "--format", "json"});
  ASSERT_EQ(r.code, 0);
  json payload = json::parse(r.out);
  EXPECT_EQ(payload.at("table"), json::parse("[[0, 6]]"));
  EXPECT_EQ(payload.at("euler"), 6);
}

TEST(CliFormatTest, MutateJsonObjects) {
  CliResult r = invoke({"mutate", "--n", "1", "--twists", "0;1", "--t", "1",
                        "--side", "left", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  json payload = json::parse(r.out);
  json expected = json::parse(
      R"([[{"coeff":-2,"twist":[0]},{"coeff":1,"twist":[1]}],
          [{"coeff":1,"twist":[0]}]])");
  EXPECT_EQ(payload.at("objects"), expected);
}

TEST(CliSweepTest, JsonMergeKeepsParameterOrder) {
  CliResult r = invoke({"hpd2", "--m", "3", "--d", "2", "--format", "json",
                        "--sweep", "ell=1..3"});
  ASSERT_EQ(r.code, 0) << r.err;
  json payload = json::parse(r.out);
  EXPECT_EQ(payload.at("command"), "sweep");
  EXPECT_EQ(payload.at("parameter"), "ell");
  EXPECT_EQ(payload.at("values"), json::parse("[1, 2, 3]"));
  ASSERT_EQ(payload.at("runs").size(), 3u);
  for (int j = 0; j < 3; ++j) {
    EXPECT_EQ(payload.at("runs")[j].at("inputs").at("ell"), j + 1);
    EXPECT_EQ(payload.at("runs")[j].at("all_pass"), true);
  }
}

TEST(CliSweepTest, AsciiMergeAndErrorPropagation) {
  CliResult ok = invoke({"cohom", "--n", "2", "--p", "1", "--sweep",
                         "k=-1..1"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("# k=-1"), std::string::npos);
  EXPECT_NE(ok.out.find("# k=1"), std::string::npos);

  // ell = 4 exceeds m = 3, so one run in the fan violates a precondition
  CliResult mixed = invoke({"hpd1", "--m", "3", "--d", "1", "--format", "json",
                            "--sweep", "ell=2..4"});
  EXPECT_EQ(mixed.code, 2);
  EXPECT_NE(mixed.err.find("ell=4"), std::string::npos);

  EXPECT_EQ(invoke({"cohom", "--n", "2", "--k", "0", "--sweep", "k=3..1"})
                .code,
            2);
  EXPECT_EQ(invoke({"cohom", "--n", "2", "--k", "0", "--sweep", "bogus"}).code,
            2);
}

TEST(CliDriverTest, OutFlagWritesFileInsteadOfStdout) {
  std::string path = std::string(::testing::TempDir()) + "cli_out_probe.json";
  CliResult direct = invoke({"chi", "--n", "5", "--d", "3", "--format",
                             "json"});
  CliResult filed = invoke({"chi", "--n", "5", "--d", "3", "--format", "json",
                            "--out", path});
  EXPECT_EQ(filed.code, 0);
  EXPECT_TRUE(filed.out.empty());
  EXPECT_EQ(read_file(path), direct.out);
  std::remove(path.c_str());
}

TEST(CliDriverTest, HelpReturnsZero) {
  CliResult r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("hpdcalc"), std::string::npos);
  EXPECT_NE(r.out.find("cohom"), std::string::npos);
}

}  // namespace
