#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "diracsym/certificate.hpp"
#include "diracsym/cli.hpp"

namespace diracsym {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("diracsym_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }
  fs::path dir_;
};

TEST_F(CliTest, ClassifyMatchesPublishedRows) {
  const Result r = run({"classify", "--dims", "2,4", "--variants", "single"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("2       single    yes   no    no    yes"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("4       single    yes   no    yes   no    yes"), std::string::npos) << r.out;
}

TEST_F(CliTest, SolveTauMasslessGammaZero) {
  const Result r = run({"solve-tau", "--dim", "4", "--variant", "single", "--mass", "0", "--symmetry", "Tp"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("projectively equal to gamma0  ok"), std::string::npos) << r.out;
}

TEST_F(CliTest, ForcedMismatchExitsTwo) {
  const Result r = run({"classify", "--dims", "4", "--variants", "single", "--expect", "Tw:no"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Tw: expected noninvariant, engine found invariant"), std::string::npos) << r.err;
}

TEST_F(CliTest, DoubledMatrixClaims) {
  for (const char* d : {"2", "4"}) {
    for (const char* s : {"Tp", "Tw", "C"}) {
      const Result r = run({"solve-tau", "--dim", d, "--variant", "doubled", "--symmetry", s});
      EXPECT_EQ(r.code, 0) << r.err;
      EXPECT_NE(r.out.find("satisfies every constraint and is invertible  ok"), std::string::npos) << r.out;
    }
  }
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"classify", "--bogus"}).code, 1);
  EXPECT_EQ(run({"classify", "--dims", "3"}).code, 1);
  EXPECT_EQ(run({"classify", "--variants", "sideways"}).code, 1);
  EXPECT_EQ(run({"solve-tau", "--dim", "4"}).code, 1);
  EXPECT_EQ(run({"solve-tau", "--dim", "4", "--symmetry", "Q"}).code, 1);
  EXPECT_EQ(run({"spectrum", "--dim", "4", "--p", "1,2"}).code, 1);
  EXPECT_EQ(run({"labels", "--dim", "2"}).code, 1);
  EXPECT_EQ(run({"report", path("missing.json")}).code, 1);
  EXPECT_EQ(run({"gamma", "--out", path("no/such/dir/x.json")}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, SpectrumAndLabels) {
  const Result s = run({"spectrum", "--dim", "4", "--mass", "3", "--p", "0,0,0,4"});
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("omega^2 = kappa^2 + |p|^2 = 25"), std::string::npos) << s.out;
  const Result rnd = run({"spectrum", "--dim", "6", "--random", "20", "--seed", "4"});
  EXPECT_EQ(rnd.code, 0);
  EXPECT_NE(rnd.out.find("20/20 momenta"), std::string::npos) << rnd.out;
  EXPECT_EQ(rnd.out, run({"spectrum", "--dim", "6", "--random", "20", "--seed", "4"}).out);
  const Result l = run({"labels", "--dim", "4", "--variant", "doubled"});
  EXPECT_EQ(l.code, 0) << l.err;
  EXPECT_NE(l.out.find("dimension count 8 / rep_dim 8"), std::string::npos);
}

TEST_F(CliTest, GammaRelations) {
  const Result r = run({"gamma", "--dims", "2,4,6,8,10", "--basis", "recursive"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("d=10  rep_dim= 32  relations 66/66 hold"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("[gamma-i-normalization]"), std::string::npos);
}

TEST_F(CliTest, JsonAndOutAreByteIdentical) {
  const Result a = run({"classify", "--dims", "2,4", "--variants", "single,doubled", "--json", "--jobs", "3",
                     "--out", path("a.json")});
  const Result b = run({"--jobs", "1", "classify", "--dims", "2,4", "--variants", "single,doubled", "--json"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(slurp(path("a.json")), a.out);
  const Certificate c = parse_certificate(a.out);
  EXPECT_EQ(c.command, "classify");
  EXPECT_EQ(c.results["records"].size(), 4u);
}

TEST_F(CliTest, ReportOrdersRowsAndShowsFlags) {
  for (int d : {8, 2, 6, 4}) {
    const std::string ds = std::to_string(d);
    ASSERT_EQ(run({"classify", "--dims", ds, "--out", path("c" + ds + ".json")}).code, 0);
  }
  const Result one = run({"report", path("c4.json")});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(std::count(one.out.begin(), one.out.end(), '\n') >= 2, true);
  const Result all = run({"report", path("c8.json"), path("c2.json"), path("c6.json"), path("c4.json")});
  EXPECT_EQ(all.code, 0) << all.err;
  const auto p2 = all.out.find("\n2 "), p4 = all.out.find("\n4 "), p6 = all.out.find("\n6 "), p8 = all.out.find("\n8 ");
  ASSERT_NE(p8, std::string::npos) << all.out;
  EXPECT_LT(p2, p4);
  EXPECT_LT(p4, p6);
  EXPECT_LT(p6, p8);
  EXPECT_NE(all.out.find("flags:"), std::string::npos);
  EXPECT_NE(all.out.find("[d8-tw-contradiction]"), std::string::npos);
}

TEST_F(CliTest, ReportRejectsSchemaMismatchAndTampering) {
  ASSERT_EQ(run({"classify", "--dims", "2", "--out", path("c.json")}).code, 0);
  Json j = Json::parse(slurp(path("c.json")));
  j["schema_version"] = "diracsym-certificate/99";
  std::ofstream(path("old.json")) << j.dump();
  const Result r = run({"report", path("old.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("schema version"), std::string::npos) << r.err;

  j = Json::parse(slurp(path("c.json")));
  j["inputs"]["mass"] = Json::array({"2", "1"});
  std::ofstream(path("tampered.json")) << j.dump();
  EXPECT_EQ(run({"report", path("tampered.json")}).code, 1);
}

}  // namespace
}  // namespace diracsym
