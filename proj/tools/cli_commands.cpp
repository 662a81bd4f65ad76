#include "cli_commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "asymtop/errors.hpp"
#include "asymtop/wavefunctions.hpp"

namespace asymtop::cli {

namespace {

using nlohmann::ordered_json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << (x == 0.0 ? 0.0 : x);  // no -0
  return os.str();
}

double unsigned_zero(double x) { return x == 0.0 ? 0.0 : x; }

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ParamsError("bad number for " + key + ": '" + v + "'");
  }
}

long long parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long long x = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ParamsError("bad integer for " + key + ": '" + v + "'");
  }
}

std::optional<double> level_E(const std::vector<EnergyLevel>& v, std::size_t k) {
  if (k < v.size()) return v[k].E;
  return std::nullopt;
}

}  // namespace

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParamsError("cannot open config " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParamsError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  auto& b = cfg.base;
  if (key == "A") {
    b.params.A = parse_double(key, value);
  } else if (key == "B") {
    b.params.B = parse_double(key, value);
  } else if (key == "C") {
    b.params.C = parse_double(key, value);
  } else if (key == "jmax") {
    const long long j = parse_int(key, value);
    if (j < 0 || j > 200) throw ParamsError("jmax must be in [0, 200]");
    b.jmax = static_cast<int>(j);
  } else if (key == "seed") {
    const long long s = parse_int(key, value);
    if (s < 0) throw ParamsError("seed must be non-negative");
    b.seed = static_cast<std::uint64_t>(s);
  } else if (key == "format") {
    if (value == "csv") cfg.format = Format::Csv;
    else if (value == "json") cfg.format = Format::Json;
    else throw ParamsError("format must be csv or json");
  } else if (key == "routes") {
    std::vector<Route> rs;
    std::stringstream ss(value);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok = trim(tok);
      const auto r = parse_route(tok);
      if (!r) throw ParamsError("unknown route '" + tok + "'");
      if (std::find(rs.begin(), rs.end(), *r) == rs.end()) rs.push_back(*r);
    }
    if (rs.empty()) throw ParamsError("routes must be nonempty");
    b.routes = rs;
  } else if (key == "tol-all") {
    const double t = parse_double(key, value);
    if (!(t > 0.0)) throw ParamsError("tolerances must be positive");
    for (auto& [k, v] : b.tolerances) v = t;
  } else if (key.rfind("tol-", 0) == 0) {
    const std::string name = key.substr(4);
    auto it = b.tolerances.find(name);
    if (it == b.tolerances.end()) throw ParamsError("unknown tolerance '" + name + "'");
    const double t = parse_double(key, value);
    if (!(t > 0.0)) throw ParamsError("tolerances must be positive");
    it->second = t;
  } else {
    throw ParamsError("unknown setting '" + key + "'");
  }
}

int cmd_levels(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& b = cfg.base;
  const TopParams& p = b.params;
  p.validate();
  const auto has = [&](Route r) { return std::find(b.routes.begin(), b.routes.end(), r) != b.routes.end(); };
  bool lame = has(Route::Lame);
  if (lame && !p.strictly_asymmetric()) {
    err << "warning: degenerate top (A=B or B=C); lame route skipped\n";
    lame = false;
  }
  const double tol = b.tolerances.at("route_agreement");
  bool disagree = false;

  ordered_json rows = ordered_json::array();
  if (cfg.format == Format::Csv) out << "j,s,class,E_wigner,E_lambda,E_lame,max_disagreement\n";
  for (int j = 0; j <= b.jmax; ++j) {
    std::vector<EnergyLevel> ew, el, ea;
    if (has(Route::Wigner)) ew = spectrum(j, p, Route::Wigner);
    if (has(Route::Lambda)) el = spectrum(j, p, Route::Lambda);
    if (lame) ea = spectrum(j, p, Route::Lame);
    for (int k = 0; k < 2 * j + 1; ++k) {
      const std::array<std::optional<double>, 3> E{level_E(ew, k), level_E(el, k), level_E(ea, k)};
      double dis = 0.0;
      for (int a = 0; a < 3; ++a) {
        for (int c = a + 1; c < 3; ++c) {
          if (!E[a] || !E[c]) continue;
          dis = std::max(dis, std::abs(*E[a] - *E[c]) /
                                  std::max({std::abs(*E[a]), std::abs(*E[c]), p.A}));
        }
      }
      if (dis > tol) disagree = true;
      std::optional<int> klass;
      if (lame) klass = ea[k].lame_class;
      const int s = k - j;
      if (cfg.format == Format::Csv) {
        out << j << ',' << s << ',' << (klass ? std::to_string(*klass) : "");
        for (const auto& e : E) out << ',' << (e ? num(*e) : "");
        out << ',' << num(dis) << '\n';
      } else {
        ordered_json r;
        r["j"] = j;
        r["s"] = s;
        r["class"] = klass ? ordered_json(*klass) : ordered_json(nullptr);
        const char* names[3] = {"E_wigner", "E_lambda", "E_lame"};
        for (int a = 0; a < 3; ++a) r[names[a]] = E[a] ? ordered_json(unsigned_zero(*E[a])) : ordered_json(nullptr);
        r["max_disagreement"] = unsigned_zero(dis);
        rows.push_back(r);
      }
    }
  }
  if (cfg.format == Format::Json) out << rows.dump(2) << '\n';
  if (disagree) {
    err << "error: route disagreement above " << num(tol) << '\n';
    return kDisagreement;
  }
  return kOk;
}

int cmd_wave(const RunConfig& cfg, const WaveArgs& a, std::ostream& out, std::ostream&) {
  const TopParams& p = cfg.base.params;
  p.validate();
  if (a.j < 0 || std::abs(a.s) > a.j) throw ParamsError("need |s| <= j");
  if (a.grid_n < 2) throw ParamsError("grid-n must be >= 2");
  if (!std::isfinite(a.q_re) || !std::isfinite(a.q_im) || std::abs(a.q_im) > kMaxAbsBeta) {
    throw ParamsError("q out of range");
  }
  const PhiState ph = phi_state(a.j, a.s, p);
  const ComplexQ q{a.q_re, a.q_im};
  const int n = a.grid_n;
  constexpr double pi = std::numbers::pi;

  ordered_json rows = ordered_json::array();
  if (cfg.format == Format::Csv) out << "phi,theta,psi,re,im\n";
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) {
        const EulerAngles g{2 * pi * i / n, pi * (k + 0.5) / n, 2 * pi * l / n};
        const cplx v = psi_eval(ph.state, q, g);
        if (cfg.format == Format::Csv) {
          out << num(g.phi) << ',' << num(g.theta) << ',' << num(g.psi) << ',' << num(v.real())
              << ',' << num(v.imag()) << '\n';
        } else {
          rows.push_back({{"phi", g.phi}, {"theta", g.theta}, {"psi", g.psi}, {"re", unsigned_zero(v.real())}, {"im", unsigned_zero(v.imag())}});
        }
      }
    }
  }
  if (cfg.format == Format::Json) out << rows.dump(2) << '\n';
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto results = run_checks(cfg.base);
  bool ok = true;
  ordered_json arr = ordered_json::array();
  for (const auto& r : results) {
    ok = ok && r.pass;
    if (cfg.format == Format::Csv) {
      out << (r.pass ? "PASS " : "FAIL ") << r.name << " defect=" << num(r.defect)
          << " tol=" << num(r.tolerance) << '\n';
    } else {
      arr.push_back({{"name", r.name}, {"pass", r.pass}, {"defect", r.defect}, {"tolerance", r.tolerance}});
    }
  }
  if (cfg.format == Format::Json) out << arr.dump(2) << '\n';
  if (!ok) err << "verify: some checks failed\n";
  return ok ? kOk : kVerifyFailed;
}

int cmd_kernel(const RunConfig& cfg, const KernelArgs& a, std::ostream& out, std::ostream&) {
  if (a.j < 0) throw ParamsError("j must be >= 0");
  for (double x : {a.q_re, a.q_im, a.qp_re, a.qp_im, a.g.phi, a.g.theta, a.g.psi}) {
    if (!std::isfinite(x)) throw ParamsError("non-finite input");
  }
  if (std::abs(a.q_im) > kMaxAbsBeta || std::abs(a.qp_im) > kMaxAbsBeta) throw ParamsError("|Im q| too large");
  const ComplexQ q{a.q_re, a.q_im}, qp{a.qp_re, a.qp_im};

  std::vector<std::pair<std::string, cplx>> rows;
  rows.push_back({"kernel", kernel_eval(q, qp, a.j, a.g)});
  if (a.check_identity) {
    const cplx k0 = kernel_eval(q, qp, a.j, EulerAngles::identity());
    const cplx d = delta_j(q, qp, a.j);
    rows.push_back({"kernel_identity", k0});
    rows.push_back({"delta_j", d});
    rows.push_back({"identity_defect", std::abs(k0 - d)});
  }
  if (a.check_conj) {
    const cplx lhs = std::conj(rows.front().second);
    const cplx rhs = kernel_eval(qp, q, a.j, inverse(a.g));
    rows.push_back({"conj_kernel", lhs});
    rows.push_back({"kernel_swapped_inverse", rhs});
    rows.push_back({"conj_defect", std::abs(lhs - rhs)});
  }
  if (cfg.format == Format::Csv) {
    out << "quantity,re,im\n";
    for (const auto& [name, v] : rows) out << name << ',' << num(v.real()) << ',' << num(v.imag()) << '\n';
  } else {
    ordered_json arr = ordered_json::array();
    for (const auto& [name, v] : rows) arr.push_back({{"quantity", name}, {"re", unsigned_zero(v.real())}, {"im", unsigned_zero(v.imag())}});
    out << arr.dump(2) << '\n';
  }
  return kOk;
}

}  // namespace asymtop::cli
