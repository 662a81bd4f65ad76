#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "asymtop/verify.hpp"

namespace asymtop::cli {

enum class Format { Csv, Json };

struct RunConfig {
  VerifyConfig base;
  Format format = Format::Csv;
};

struct WaveArgs {
  int j = 0;
  int s = 0;
  double q_re = 0.0;
  double q_im = 0.0;
  int grid_n = 8;
};

struct KernelArgs {
  int j = 1;
  double q_re = 0.0, q_im = 0.0;
  double qp_re = 0.0, qp_im = 0.0;
  EulerAngles g;
  bool check_identity = false;
  bool check_conj = false;
};

enum Exit : int { kOk = 0, kVerifyFailed = 1, kDisagreement = 2, kBadConfig = 3 };

/// Flat key=value file; '#' starts a comment. Keys are the flag names
/// without dashes.
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Applies one key=value to the config. Throws ParamsError on bad input.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

int cmd_levels(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_wave(const RunConfig& cfg, const WaveArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_kernel(const RunConfig& cfg, const KernelArgs& args, std::ostream& out, std::ostream& err);

}  // namespace asymtop::cli
