// SPDX-License-Identifier: Apache-2.0
// twomat: command-line front end over the C API.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twomat/twomat.h"

namespace {

using json = nlohmann::json;
using cx = std::complex<double>;

constexpr const char* kConvention = "reduced-dz";

// Error carrying the process exit code.
struct Failure {
  int exit_code;
  std::string name;
  std::string message;
};

int exit_code_of(twomat_status s) {
  switch (s) {
    case TWOMAT_E_PARSE:
    case TWOMAT_E_IO: return 2;
    case TWOMAT_E_NON_SIMPLE_BRANCH_POINT:
    case TWOMAT_E_SHEET_COUNT_MISMATCH: return 3;
    case TWOMAT_E_NOT_HYPERELLIPTIC: return 5;
    default: return 4;
  }
}

void check(twomat_status s) {
  if (s != TWOMAT_OK) throw Failure{exit_code_of(s), twomat_status_name(s), twomat_last_error()};
}

json take_json(char* text) {
  json j = json::parse(text);
  twomat_string_free(text);
  return j;
}

class Curve {
 public:
  explicit Curve(const std::string& path) { check(twomat_curve_from_file(path.c_str(), &c_)); }
  ~Curve() { twomat_curve_free(c_); }
  Curve(const Curve&) = delete;
  Curve& operator=(const Curve&) = delete;
  twomat_curve* get() const { return c_; }
  json report() const {
    char* text = nullptr;
    check(twomat_curve_report(c_, &text));
    return take_json(text);
  }

 private:
  twomat_curve* c_ = nullptr;
};

cx parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Failure{2, "ParseError", "cannot parse complex number '" + s + "'"};
  }
}

// Points separated by ';' or whitespace.
std::vector<cx> parse_points(std::string s) {
  std::replace(s.begin(), s.end(), ';', ' ');
  std::vector<cx> out;
  std::stringstream ss(s);
  std::string item;
  while (ss >> item) out.push_back(parse_complex(item));
  return out;
}

json complex_json(cx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

// Seeded points in |z| < 2.5 away from the branch points, the basepoint, 0 and each other.
std::vector<cx> random_points(const json& report, cx o, int n, unsigned seed) {
  std::vector<cx> branch;
  for (const auto& b : report["branch_points"]) branch.emplace_back(b["re"].get<double>(), b["im"].get<double>());
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  std::vector<cx> pts;
  auto far = [](cx z, const std::vector<cx>& from) {
    for (cx p : from)
      if (std::abs(z - p) < 0.3) return false;
    return true;
  };
  while (static_cast<int>(pts.size()) < n) {
    const cx z{u(rng), u(rng)};
    if (std::abs(z) > 2.5 || std::abs(z) < 0.3 || std::abs(z - o) < 0.3 || !far(z, branch) || !far(z, pts)) continue;
    pts.push_back(z);
  }
  return pts;
}

struct Settings {
  int order = 0;
  std::string basepoint;
  double tol = 1e-8;
  unsigned seed = 1;
  int max_retries = 3;

  twomat_config config() const {
    twomat_config c;
    twomat_config_default(&c);
    c.order = order;
    if (!basepoint.empty()) {
      const cx o = parse_complex(basepoint);
      c.basepoint = {o.real(), o.imag()};
    }
    c.tol = tol;
    c.max_retries = max_retries;
    return c;
  }
  json to_json() const {
    const twomat_config c = config();
    return {{"order", order},
            {"basepoint", complex_json({c.basepoint.re, c.basepoint.im})},
            {"tol", tol},
            {"seed", seed},
            {"max_retries", max_retries}};
  }
};

void add_settings(CLI::App* cmd, Settings& s) {
  cmd->add_option("--order", s.order, "series truncation order (0 selects the default)");
  cmd->add_option("--basepoint", s.basepoint, "dS basepoint as re,im");
  cmd->add_option("--tol", s.tol, "tolerance for comparisons");
  cmd->add_option("--seed", s.seed, "seed for generated points");
  cmd->add_option("--max-retries", s.max_retries, "order doublings before giving up");
}

json cmd_validate(const std::string& path) {
  Curve c(path);
  json rep = c.report();
  return {{"curve", rep["label"]}, {"command", "validate"}, {"convention", kConvention}, {"validation", rep}};
}

twomat_method method_of(const std::string& m) {
  if (m == "cubic") return TWOMAT_METHOD_CUBIC;
  if (m == "effective") return TWOMAT_METHOD_EFFECTIVE;
  if (m == "diagrams") return TWOMAT_METHOD_DIAGRAMS;
  return TWOMAT_METHOD_ONEMATRIX;
}

json cmd_eval(const std::string& path, int k, int h, const std::string& points_text, const std::string& method,
              const std::string& compare, const Settings& s) {
  Curve c(path);
  const json rep = c.report();
  const twomat_config cfg = s.config();
  std::vector<cx> pts = points_text.empty() ? random_points(rep, {cfg.basepoint.re, cfg.basepoint.im}, k, s.seed)
                                            : parse_points(points_text);
  if (static_cast<int>(pts.size()) != k)
    throw Failure{2, "ParseError", "expected " + std::to_string(k) + " points, got " + std::to_string(pts.size())};
  std::vector<twomat_complex> cpts;
  for (cx p : pts) cpts.push_back({p.real(), p.imag()});

  std::vector<std::string> methods{method};
  if (compare == "all") {
    methods = {"cubic", "effective", "diagrams"};
    if (rep["hyperelliptic"].get<bool>()) methods.push_back("onematrix");
  }
  json values = json::array(), diagnostics = json::object();
  std::vector<std::pair<std::string, cx>> got;
  for (const auto& m : methods) {
    twomat_result r{};
    const auto t0 = std::chrono::steady_clock::now();
    check(twomat_eval(c.get(), method_of(m), k, h, cpts.data(), &cfg, &r));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const cx v{r.value.re, r.value.im};
    got.emplace_back(m, v);
    values.push_back({{"method", m}, {"re", v.real()}, {"im", v.imag()}, {"convention", kConvention}});
    diagnostics[m] = {{"order_used", r.order_used},
                      {"retries", r.retries},
                      {"eps_residual", r.eps_residual},
                      {"dropped", r.dropped},
                      {"seconds", secs}};
  }
  json diffs = json::array();
  double worst = 0.0;
  for (size_t a = 0; a < got.size(); ++a)
    for (size_t b = a + 1; b < got.size(); ++b) {
      const double scale = std::max(std::abs(got[a].second), std::abs(got[b].second));
      const double d = scale > 0 ? std::abs(got[a].second - got[b].second) / scale : 0.0;
      worst = std::max(worst, d);
      diffs.push_back({{"a", got[a].first}, {"b", got[b].first}, {"relative", d}});
    }
  json pj = json::array();
  for (cx p : pts) pj.push_back(complex_json(p));
  json out{{"curve", rep["label"]}, {"command", "eval"},   {"k", k},
           {"h", h},                {"method", compare == "all" ? "all" : method},
           {"points", pj},          {"config", s.to_json()}, {"convention", kConvention},
           {"values", values},      {"diffs", diffs},        {"diagnostics", diagnostics}};
  if (got.size() > 1) {
    out["max_diff"] = worst;
    out["agree"] = worst < s.tol;
  }
  return out;
}

json cmd_diagrams(int k, int h, const std::string& theory, int d2) {
  size_t count = 0;
  char* text = nullptr;
  check(twomat_diagrams(k, h, theory == "effective" ? TWOMAT_THEORY_EFFECTIVE : TWOMAT_THEORY_CUBIC, d2, &count,
                        &text));
  return {{"command", "diagrams"}, {"k", k},         {"h", h},
          {"theory", theory},      {"d2", d2},       {"count", count},
          {"diagrams", take_json(text)}};
}

json cmd_gaussian(const std::string& path, int nmax, int hmax, const Settings& s) {
  Curve c(path);
  const twomat_config cfg = s.config();
  char* text = nullptr;
  check(twomat_gaussian_limit(c.get(), nmax, hmax, &cfg, s.seed, &text));
  return {{"curve", twomat_curve_label(c.get())}, {"command", "gaussian"}, {"convention", kConvention},
          {"config", s.to_json()},                {"report", take_json(text)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlators of the formal two-matrix model on genus-zero spectral curves"};
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);

  std::string path, points, method = "cubic", compare, theory = "cubic";
  int k = 2, h = 0, d2 = 2, nmax = 3, hmax = 2;
  Settings s;

  auto* validate = app.add_subcommand("validate", "check a curve spec and report its branch structure");
  validate->add_option("curve", path, "curve-spec JSON file")->required();

  auto* eval = app.add_subcommand("eval", "evaluate W_k^(h) at k points");
  eval->add_option("curve", path, "curve-spec JSON file")->required();
  eval->add_option("--k", k, "number of points")->required();
  eval->add_option("--h", h, "genus order")->required();
  eval->add_option("--points", points, "points as re,im separated by ';' or spaces");
  eval->add_option("--method", method, "evaluation path")
      ->check(CLI::IsMember({"cubic", "effective", "diagrams", "onematrix"}));
  eval->add_option("--compare", compare, "evaluate every applicable method")->check(CLI::IsMember({"all"}));
  add_settings(eval, s);

  auto* diagrams = app.add_subcommand("diagrams", "enumerate the diagrams of W_{k+1}^(h) with k leaves");
  diagrams->add_option("--k", k, "number of leaves")->required();
  diagrams->add_option("--h", h, "number of loops")->required();
  diagrams->add_option("--theory", theory, "cubic or effective")->check(CLI::IsMember({"cubic", "effective"}));
  diagrams->add_option("--d2", d2, "number of non-physical sheets (effective theory)");

  auto* gaussian = app.add_subcommand("gaussian", "compare with the one-matrix recursion on a hyperelliptic curve");
  gaussian->add_option("curve", path, "curve-spec JSON file")->required();
  gaussian->add_option("--nmax", nmax, "largest number of points");
  gaussian->add_option("--hmax", hmax, "largest genus order");
  add_settings(gaussian, s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    json out;
    if (*validate) out = cmd_validate(path);
    if (*eval) out = cmd_eval(path, k, h, points, method, compare, s);
    if (*diagrams) out = cmd_diagrams(k, h, theory, d2);
    if (*gaussian) out = cmd_gaussian(path, nmax, hmax, s);
    std::cout << out.dump(2) << '\n';
    return 0;
  } catch (const Failure& f) {
    std::cerr << json{{"error", f.name}, {"message", f.message}}.dump() << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InternalError"}, {"message", e.what()}}.dump() << '\n';
    return 4;
  }
}
