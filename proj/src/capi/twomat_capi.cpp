// SPDX-License-Identifier: Apache-2.0
#include "twomat/twomat.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "common/error.hpp"
#include "correlators/engine.hpp"
#include "correlators/interp.hpp"
#include "curve/curve.hpp"
#include "diagrams/diagram.hpp"
#include "effective/effective.hpp"
#include "onematrix/gaussian.hpp"
#include "onematrix/onematrix.hpp"

struct twomat_curve {
  twomat::curve::SpectralCurve curve;
};

namespace {

using twomat::Error;
using twomat::ErrorCode;
using twomat::algebra::cx;
using json = nlohmann::json;

thread_local std::string last_error;

static_assert(static_cast<int>(ErrorCode::InvalidArgument) + 1 == TWOMAT_E_INVALID_ARGUMENT,
              "status codes mirror the error codes");

twomat_status status_of(ErrorCode c) { return static_cast<twomat_status>(static_cast<int>(c) + 1); }

template <class F>
twomat_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return TWOMAT_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return TWOMAT_E_INTERNAL;
  }
}

twomat_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return TWOMAT_E_NULL_POINTER;
}

twomat::correlators::EvalConfig to_config(const twomat_config* cfg) {
  twomat::correlators::EvalConfig out;
  if (!cfg) return out;
  out.order = cfg->order;
  out.basepoint_o = cx(cfg->basepoint.re, cfg->basepoint.im);
  out.tol = cfg->tol;
  out.max_retries = cfg->max_retries;
  return out;
}

std::vector<cx> to_points(const twomat_complex* p, int n) {
  std::vector<cx> out;
  for (int a = 0; a < n; ++a) out.emplace_back(p[a].re, p[a].im);
  return out;
}

void put(const twomat::correlators::CorrelatorValue& v, twomat_result* out) {
  out->value = {v.value.real(), v.value.imag()};
  out->order_used = v.order_used;
  out->retries = v.retries;
  out->eps_residual = v.eps_residual;
  out->dropped = v.dropped;
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json complex_json(cx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

extern "C" {

const char* twomat_status_name(twomat_status s) {
  switch (s) {
    case TWOMAT_OK: return "Ok";
    case TWOMAT_E_IO: return "IoError";
    case TWOMAT_E_NULL_POINTER: return "NullPointer";
    case TWOMAT_E_INTERNAL: return "InternalError";
    default: break;
  }
  if (s > TWOMAT_OK && s <= TWOMAT_E_INVALID_ARGUMENT) return twomat::error_name(static_cast<ErrorCode>(s - 1));
  return "Unknown";
}

const char* twomat_last_error(void) { return last_error.c_str(); }

void twomat_string_free(char* s) { delete[] s; }

void twomat_config_default(twomat_config* cfg) {
  if (!cfg) return;
  const twomat::correlators::EvalConfig d;
  cfg->order = d.order;
  cfg->basepoint = {d.basepoint_o.real(), d.basepoint_o.imag()};
  cfg->tol = d.tol;
  cfg->max_retries = d.max_retries;
}

twomat_status twomat_curve_from_json(const char* text, twomat_curve** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = new twomat_curve{twomat::curve::load_curve_json(text)}; });
}

twomat_status twomat_curve_from_file(const char* path, twomat_curve** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  *out = nullptr;
  std::ifstream in(path);
  if (!in) {
    last_error = std::string("cannot read ") + path;
    return TWOMAT_E_IO;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return twomat_curve_from_json(ss.str().c_str(), out);
}

void twomat_curve_free(twomat_curve* c) { delete c; }

int twomat_curve_d1(const twomat_curve* c) { return c ? c->curve.d1() : 0; }
int twomat_curve_d2(const twomat_curve* c) { return c ? c->curve.d2() : 0; }
const char* twomat_curve_label(const twomat_curve* c) { return c ? c->curve.label().c_str() : ""; }

twomat_status twomat_curve_report(twomat_curve* c, char** json_out) {
  if (!c) return null_arg("curve");
  if (!json_out) return null_arg("json_out");
  return guarded([&] {
    const auto norm = twomat::curve::validate_resolvent_normalization(c->curve);
    json branch = json::array();
    for (const auto& b : c->curve.branch()) branch.push_back(complex_json(b.a));
    auto residues = [](const std::vector<twomat::curve::ResidueAtPole>& rs) {
      json out = json::array();
      for (const auto& r : rs) {
        json j{{"at_infinity", r.at_infinity}, {"residue", complex_json(r.residue)}};
        if (!r.at_infinity) j["pole"] = complex_json(r.pole);
        out.push_back(std::move(j));
      }
      return out;
    };
    const bool hyper = c->curve.d2() == 1 && twomat::onematrix::is_hyperelliptic(c->curve);
    const json report{{"label", c->curve.label()},
                      {"d1", c->curve.d1()},
                      {"d2", c->curve.d2()},
                      {"sheet_count", c->curve.sheet_count()},
                      {"branch_points", branch},
                      {"simple_branch_points", true},
                      {"hyperelliptic", hyper},
                      {"normalization",
                       {{"res_y_dx", residues(norm.y_dx)},
                        {"res_x_dy", residues(norm.x_dy)},
                        {"y_dx_ok", norm.y_dx_ok},
                        {"x_dy_ok", norm.x_dy_ok},
                        {"normalized", norm.normalized}}},
                      {"pass", true}};
    *json_out = dup(report.dump(2));
  });
}

twomat_status twomat_eval(const twomat_curve* c, twomat_method method, int n, int h, const twomat_complex* points,
                          const twomat_config* cfg, twomat_result* out) {
  if (!c) return null_arg("curve");
  if (!out) return null_arg("out");
  if (n > 0 && !points) return null_arg("points");
  return guarded([&] {
    const auto pts = to_points(points, n);
    const auto conf = to_config(cfg);
    switch (method) {
      case TWOMAT_METHOD_CUBIC: put(twomat::correlators::CubicEngine(c->curve, conf).W(h, pts), out); break;
      case TWOMAT_METHOD_EFFECTIVE: put(twomat::effective::EffectiveEngine(c->curve, conf).W(h, pts), out); break;
      case TWOMAT_METHOD_DIAGRAMS:
        if (n < 1) twomat::fail(ErrorCode::InvalidArgument, "correlator needs at least one point");
        put(twomat::diagrams::diagram_sum(c->curve, n - 1, h, twomat::diagrams::Theory::Cubic, pts, conf), out);
        break;
      case TWOMAT_METHOD_ONEMATRIX: {
        twomat::onematrix::Options opt;
        opt.order = conf.order;
        opt.max_retries = conf.max_retries;
        twomat::onematrix::OneMatrixEngine e(c->curve, opt);
        const auto v = e.W(h, pts);
        *out = twomat_result{{v.value.real(), v.value.imag()}, v.order_used, v.retries, 0.0, 0.0};
        break;
      }
      default: twomat::fail(ErrorCode::InvalidArgument, "unknown method");
    }
  });
}

twomat_status twomat_eval_R(const twomat_curve* c, int i, int h, twomat_complex z, int k,
                            const twomat_complex* points, const twomat_config* cfg, twomat_result* out) {
  if (!c) return null_arg("curve");
  if (!out) return null_arg("out");
  if (k > 0 && !points) return null_arg("points");
  return guarded([&] {
    twomat::correlators::CubicEngine e(c->curve, to_config(cfg));
    put(e.R(i, h, cx(z.re, z.im), to_points(points, k)), out);
  });
}

twomat_status twomat_identity_residual(const twomat_curve* c, int h, twomat_complex z, int k,
                                       const twomat_complex* points, const twomat_config* cfg, double* residual) {
  if (!c) return null_arg("curve");
  if (!residual) return null_arg("residual");
  if (k > 0 && !points) return null_arg("points");
  return guarded([&] {
    twomat::effective::EffectiveEngine e(c->curve, to_config(cfg));
    *residual = twomat::correlators::identity_check(e, h, cx(z.re, z.im), to_points(points, k));
  });
}

twomat_status twomat_diagrams(int k, int h, twomat_theory theory, int d2, size_t* count, char** json_out) {
  if (!json_out) return null_arg("json_out");
  return guarded([&] {
    const auto t = theory == TWOMAT_THEORY_CUBIC ? twomat::diagrams::Theory::Cubic : twomat::diagrams::Theory::Effective;
    const auto ds = twomat::diagrams::enumerate(k, h, t, d2);
    if (count) *count = ds.size();
    *json_out = dup(twomat::diagrams::to_json(ds).dump());
  });
}

twomat_status twomat_gaussian_limit(const twomat_curve* c, int nmax, int hmax, const twomat_config* cfg,
                                    uint32_t seed, char** json_out) {
  if (!c) return null_arg("curve");
  if (!json_out) return null_arg("json_out");
  return guarded([&] {
    const auto rep = twomat::onematrix::gaussian_limit_compare(c->curve, nmax, hmax, to_config(cfg), seed);
    json entries = json::array();
    for (const auto& e : rep.entries) {
      json pts = json::array();
      for (cx p : e.points) pts.push_back(complex_json(p));
      entries.push_back({{"n", e.n},
                         {"h", e.h},
                         {"points", pts},
                         {"two_matrix", complex_json(e.two_matrix)},
                         {"one_matrix", complex_json(e.one_matrix)},
                         {"relative", e.relative}});
    }
    json relation = json::array();
    for (const auto& r : rep.relation)
      relation.push_back({{"k", r.k},
                          {"h", r.h},
                          {"z", complex_json(r.z)},
                          {"R", complex_json(r.R)},
                          {"conjugate_residual", r.conjugate_residual},
                          {"symmetric_residual", r.symmetric_residual},
                          {"symmetric_applies", r.symmetric_applies}});
    const json out{{"entries", entries},
                   {"relation", relation},
                   {"max_relative", rep.max_relative},
                   {"max_conjugate_residual", rep.max_conjugate_residual},
                   {"max_symmetric_residual", rep.max_symmetric_residual},
                   {"colored_diagrams", rep.colored_diagrams},
                   {"colored_max", rep.colored_max}};
    *json_out = dup(out.dump());
  });
}

}  // extern "C"
