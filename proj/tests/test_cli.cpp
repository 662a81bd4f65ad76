#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "asymtop/errors.hpp"
#include "cli_commands.hpp"

using namespace asymtop;
using namespace asymtop::cli;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string l;
  while (std::getline(ss, l)) out.push_back(l);
  return out;
}

std::vector<std::string> fields(const std::string& l) {
  std::vector<std::string> out;
  std::stringstream ss(l);
  std::string f;
  while (std::getline(ss, f, ',')) out.push_back(f);
  if (!l.empty() && l.back() == ',') out.push_back("");
  return out;
}

RunConfig cfg_with(std::initializer_list<std::pair<std::string, std::string>> kv) {
  RunConfig c;
  for (const auto& [k, v] : kv) apply_setting(c, k, v);
  return c;
}

}  // namespace

TEST(CliLevels, HeaderAndSpinOne) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_levels(cfg_with({{"jmax", "1"}}), out, err), kOk);
  const auto ls = lines(out.str());
  ASSERT_EQ(ls.size(), 5u);
  EXPECT_EQ(ls[0], "j,s,class,E_wigner,E_lambda,E_lame,max_disagreement");
  const double want[] = {0, 3, 4, 5};
  for (int k = 1; k <= 4; ++k) {
    const auto f = fields(ls[k]);
    ASSERT_EQ(f.size(), 7u);
    for (int c = 3; c <= 5; ++c) EXPECT_NEAR(std::stod(f[c]), want[k - 1], 1e-12);
  }
}

TEST(CliLevels, DegenerateTopSkipsLame) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_levels(cfg_with({{"A", "2"}, {"B", "2"}, {"C", "1"}, {"jmax", "1"}}), out, err), kOk);
  EXPECT_NE(err.str().find("warning"), std::string::npos);
  for (const auto& l : lines(out.str())) {
    if (l[0] == 'j') continue;
    const auto f = fields(l);
    EXPECT_EQ(f[5], "");
    EXPECT_EQ(f[2], "");
  }
}

TEST(CliLevels, JsonMirrorsCsv) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_levels(cfg_with({{"jmax", "2"}, {"format", "json"}}), out, err), kOk);
  const auto js = nlohmann::json::parse(out.str());
  ASSERT_EQ(js.size(), 9u);
  for (const char* k : {"j", "s", "class", "E_wigner", "E_lambda", "E_lame", "max_disagreement"})
    EXPECT_TRUE(js[0].contains(k));
  EXPECT_NEAR(js[8]["E_wigner"].get<double>(), 12 + 2 * std::sqrt(3.0), 1e-12);
}

TEST(CliLevels, DisagreementExit) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_levels(cfg_with({{"jmax", "3"}, {"tol-route_agreement", "1e-30"}}), out, err), kDisagreement);
}

TEST(CliLevels, Deterministic) {
  std::ostringstream a, b, e;
  cmd_levels(cfg_with({{"jmax", "4"}}), a, e);
  cmd_levels(cfg_with({{"jmax", "4"}}), b, e);
  EXPECT_EQ(a.str(), b.str());
}

TEST(CliWave, GridAndValues) {
  std::ostringstream out, err;
  WaveArgs w{1, 1, 0.4, 0.2, 3};
  EXPECT_EQ(cmd_wave(cfg_with({}), w, out, err), kOk);
  const auto ls = lines(out.str());
  ASSERT_EQ(ls.size(), 28u);
  EXPECT_EQ(ls[0], "phi,theta,psi,re,im");
  for (std::size_t k = 1; k < ls.size(); ++k) {
    const auto f = fields(ls[k]);
    const double phi = std::stod(f[0]), th = std::stod(f[1]);
    const std::complex<double> want =
        std::sqrt(3.0) * (std::cos(th) + std::complex<double>(0, 1) * std::cos(std::complex<double>(0.4, 0.2) + phi) * std::sin(th));
    EXPECT_NEAR(std::stod(f[3]), want.real(), 1e-12);
    EXPECT_NEAR(std::stod(f[4]), want.imag(), 1e-12);
    EXPECT_GT(th, 0.0);
    EXPECT_LT(th, 3.1415926535897931);
  }
  std::ostringstream o0;
  cmd_wave(cfg_with({}), WaveArgs{0, 0, 0.1, 0.0, 2}, o0, err);
  for (const auto& l : lines(o0.str()))
    if (l[0] != 'p') {
      const auto f = fields(l);
      EXPECT_EQ(f[3], "1");
      EXPECT_EQ(f[4], "0");
    }
}

TEST(CliWave, InvalidArguments) {
  std::ostringstream out, err;
  EXPECT_THROW(cmd_wave(cfg_with({}), WaveArgs{1, 2, 0, 0, 3}, out, err), ParamsError);
  EXPECT_THROW(cmd_wave(cfg_with({}), WaveArgs{1, 0, 0, 0, 1}, out, err), ParamsError);
}

TEST(CliVerify, DefaultPassesAndTinyToleranceFails) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(cfg_with({}), out, err), kOk);
  EXPECT_EQ(out.str().find("FAIL"), std::string::npos);
  std::ostringstream out2;
  EXPECT_EQ(cmd_verify(cfg_with({{"tol-all", "1e-30"}}), out2, err), kVerifyFailed);
  EXPECT_NE(out2.str().find("FAIL"), std::string::npos);
  std::ostringstream out3;
  EXPECT_EQ(cmd_verify(cfg_with({{"jmax", "0"}}), out3, err), kOk);
}

TEST(CliKernel, IdentityAndConj) {
  std::ostringstream out, err;
  KernelArgs k;
  k.j = 2;
  k.q_re = 0.3;
  k.q_im = 0.2;
  k.qp_re = 1.0;
  k.qp_im = -0.1;
  k.g = {0.4, 0.9, 1.3};
  k.check_identity = k.check_conj = true;
  EXPECT_EQ(cmd_kernel(cfg_with({}), k, out, err), kOk);
  double id_defect = 1, conj_defect = 1;
  for (const auto& l : lines(out.str())) {
    const auto f = fields(l);
    if (f[0] == "identity_defect") id_defect = std::stod(f[1]);
    if (f[0] == "conj_defect") conj_defect = std::stod(f[1]);
  }
  EXPECT_LT(id_defect, 1e-12);
  EXPECT_LT(conj_defect, 1e-10);
}

TEST(CliConfig, FileAndValidation) {
  const std::string path = "cli_test_config.txt";
  {
    std::ofstream f(path);
    f << "# comment\nA = 5\nB=3\nC=1\njmax=2\nroutes=wigner,lame\n";
  }
  const auto kv = read_config_file(path);
  RunConfig c;
  for (const auto& [k, v] : kv) apply_setting(c, k, v);
  EXPECT_EQ(c.base.params.A, 5.0);
  EXPECT_EQ(c.base.jmax, 2);
  EXPECT_EQ(c.base.routes.size(), 2u);
  EXPECT_THROW(apply_setting(c, "bogus", "1"), ParamsError);
  EXPECT_THROW(apply_setting(c, "tol-casimir", "-1"), ParamsError);
  EXPECT_THROW(apply_setting(c, "routes", "nope"), ParamsError);
  EXPECT_THROW(apply_setting(c, "A", "x"), ParamsError);
  EXPECT_THROW(read_config_file("/nonexistent/file"), ParamsError);
  RunConfig bad = cfg_with({{"A", "1"}, {"B", "2"}});
  std::ostringstream out, err;
  EXPECT_THROW(cmd_levels(bad, out, err), ParamsError);
}
