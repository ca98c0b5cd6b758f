#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "nvapor/cli.hpp"

using namespace nvapor;

namespace {

int run_bin(const std::string& args) {
  const std::string cmd = std::string(NVAPOR_BIN) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Grid, Parse) {
  const auto g = cli::Grid::parse("-5:5:11");
  EXPECT_EQ(g.start, -5.0);
  EXPECT_EQ(g.stop, 5.0);
  EXPECT_EQ(g.count, 11);
  for (const char* bad : {"0:1:0", "1:0:5", "0:1", "0;1;3", "a:b:c", "0:1:3:4"})
    EXPECT_THROW(cli::Grid::parse(bad), Error) << bad;
}

TEST(Config, StrictKeys) {
  cli::RunConfig c;
  EXPECT_THROW(c.apply("alpha_sq", "3"), Error);
  EXPECT_THROW(c.apply("h", "ten"), Error);
  EXPECT_THROW(c.apply("format", "xml"), Error);
  c.apply("alpha0", "10");
  EXPECT_NEAR(c.resolved_alpha_sq(), 10.0, 1e-12);
  c.apply("alpha-sq", "4");
  EXPECT_EQ(c.resolved_alpha_sq(), 4.0);
}

TEST(Config, FileParsing) {
  const auto kv = cli::parse_config_text("# comment\n h = 3 \n\ngrid=0:1:2 # trailing\n");
  ASSERT_EQ(kv.size(), 2u);
  EXPECT_EQ(kv[0].first, "h");
  EXPECT_EQ(kv[0].second, "3");
  EXPECT_EQ(kv[1].second, "0:1:2");
  EXPECT_THROW(cli::parse_config_text("no equals sign\n"), Error);
  EXPECT_THROW(cli::read_config_file("/nonexistent/cfg"), Error);
}

TEST(Presets, FigureParameters) {
  const auto f6 = cli::preset("fig6");
  EXPECT_EQ(f6.h, 0.0);
  EXPECT_EQ(f6.eps0, 0.1);
  EXPECT_EQ(f6.x0, 100.0);
  EXPECT_NEAR(f6.resolved_alpha_sq(), 10.0, 1e-12);
  EXPECT_EQ(f6.grid.start, -30.0);
  EXPECT_EQ(f6.grid.stop, 30.0);
  EXPECT_EQ(cli::preset("fig7").h, 10.0);
  EXPECT_EQ(cli::preset("fig8").command, cli::Command::GroupVelocity);
  EXPECT_EQ(cli::preset("fig9").sweep, "drive");
  EXPECT_EQ(cli::preset("fig9").h, 10.0);
  EXPECT_EQ(cli::preset("fig3").backend, optics::Backend::RestAtom);
  EXPECT_THROW(cli::preset("fig2"), Error);
}

TEST(Output, NumbersKeepSeventeenDigits) {
  EXPECT_EQ(cli::format_number(0.1), "0.10000000000000001");
  cli::Table t{{"a", "b"}, {{1.0, std::string("ok")}}};
  EXPECT_EQ(cli::to_csv(t), "a,b\n1,ok\n");
}

TEST(Output, SpectrumIsDeterministic) {
  auto c = cli::preset("fig7");
  c.grid = cli::Grid::parse("0:20:21");
  EXPECT_EQ(cli::to_csv(cli::run_spectrum(c)), cli::to_csv(cli::run_spectrum(c)));
  const auto j = nlohmann::json::parse(cli::to_json(cli::run_spectrum(c), c));
  EXPECT_EQ(j["rows"].size(), 21u);
  EXPECT_EQ(j["config"]["h"], 10.0);
}

TEST(Output, SpectrumNeedsTwoPoints) {
  auto c = cli::preset("fig6");
  c.grid = cli::Grid::parse("0:0:1");
  EXPECT_THROW(cli::run_spectrum(c), Error);
}

TEST(Binary, EmptyGridIsUsageError) {
  EXPECT_EQ(run_bin("spectrum --preset fig6 --grid 0:1:0"), 2);
  EXPECT_EQ(run_bin("spectrum --bogus 1"), 2);
  EXPECT_EQ(run_bin("spectrum --backend nope"), 2);
}

TEST(Binary, FlagsOverrideConfigOverridePreset) {
  {
    std::ofstream cfg("precedence.cfg");
    cfg << "h = 4\nx0 = 50\n";
  }
  ASSERT_EQ(run_bin("spectrum --preset fig7 --config precedence.cfg --x0 80 --grid 0:1:2 --format json --out precedence.json"), 0);
  const auto j = nlohmann::json::parse(slurp("precedence.json"));
  EXPECT_EQ(j["config"]["h"], 4.0);
  EXPECT_EQ(j["config"]["x0"], 80.0);
  EXPECT_EQ(j["config"]["eps0"], 0.1);
}

TEST(Binary, SinglePointGroupVelocity) {
  ASSERT_EQ(run_bin("groupvelocity --preset fig8 --grid 10:10:1 --out gv1.csv"), 0);
  const auto text = slurp("gv1.csv");
  EXPECT_EQ(text.rfind("h,v_gr_over_c,flag\n", 0), 0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
}

TEST(Binary, ByteIdenticalReruns) {
  ASSERT_EQ(run_bin("figure 7 --grid 5:15:11 --out det_a.csv"), 0);
  ASSERT_EQ(run_bin("figure 7 --grid 5:15:11 --out det_b.csv"), 0);
  EXPECT_EQ(slurp("det_a.csv"), slurp("det_b.csv"));
}

TEST(Binary, MutatedResidueFailsValidation) {
  EXPECT_EQ(run_bin("validate doppler --perturb-a3 1.01 --report mut.json --ledger mut.md"), 1);
}

TEST(Binary, UnwritableOutputFails) {
  EXPECT_NE(run_bin("spectrum --preset fig6 --grid 0:1:2 --out /nonexistent/dir/x.csv"), 0);
}
