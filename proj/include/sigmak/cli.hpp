#pragma once

// Report builders and command bodies for the sigmak executable. Commands take
// parsed arguments and streams and return a process exit code, so tests can
// drive them without spawning processes.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sigmak/analysis.hpp"
#include "sigmak/presets.hpp"

namespace sigmak::cli {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitContract = 3;

inline const char* kNumericLabel = "numeric (non-certificate)";

inline int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::DimensionMismatch:
      return kExitUsage;
    default:
      return kExitContract;
  }
}

inline std::uint64_t seed_from_env() {
  const char* s = std::getenv("SIGMAK_SEED");
  if (!s || !*s) return 0;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "SIGMAK_SEED must be a non-negative integer");
  }
}

// ---- input ----

inline std::string read_source(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

inline Rational rational_from_json(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number()) return parse_rational(v.dump());
  throw Error(ErrorCode::ParseError, "coefficient must be a string or number");
}

// {"n": int, "c": [c_0 .. c_{n-1}]}; other keys are ignored.
inline SigmaKPolynomial equation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("c"))
    throw Error(ErrorCode::ParseError, "equation needs keys \"n\" and \"c\"");
  if (!j["n"].is_number_integer()) throw Error(ErrorCode::ParseError, "\"n\" must be an integer");
  if (!j["c"].is_array()) throw Error(ErrorCode::ParseError, "\"c\" must be an array");
  const int n = j["n"].get<int>();
  if (n < 1) throw Error(ErrorCode::ParseError, "\"n\" must be positive");
  std::vector<Rational> c;
  for (const Json& v : j["c"]) c.push_back(rational_from_json(v));
  if (static_cast<int>(c.size()) != n) throw Error(ErrorCode::ParseError, "\"c\" must have n entries");
  return SigmaKPolynomial(n, std::move(c));
}

inline SigmaKPolynomial load_equation(const std::string& path) { return equation_from_json(parse_json(read_source(path))); }

// Rounds every coefficient to the nearest double, for float mode.
inline SigmaKPolynomial to_float_mode(const SigmaKPolynomial& f) {
  std::vector<Rational> c;
  for (const Rational& v : f.c) c.push_back(from_double(v.get_d()));
  return SigmaKPolynomial(f.n, std::move(c));
}

inline std::vector<Rational> parse_point(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '[') {
    Json j = parse_json(s);
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "point must be an array");
    std::vector<Rational> out;
    for (const Json& v : j) out.push_back(rational_from_json(v));
    return out;
  }
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_rational(tok));
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty point");
  return out;
}

// "a:b" with exact endpoints, a < b.
inline std::pair<Rational, Rational> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "range must look like a:b");
  Rational a = parse_rational(text.substr(0, colon)), b = parse_rational(text.substr(colon + 1));
  if (!(a < b)) throw Error(ErrorCode::ParseError, "range needs a < b");
  return {a, b};
}

// Phase as a multiple of pi ("3/4pi", "2pi/3", "pi", "0.75*pi"); without "pi"
// the value is taken in radians.
inline DhymSpec parse_phase(int n, const std::string& text, int precision) {
  DhymSpec s;
  s.n = n;
  s.precision = precision;
  std::string t;
  for (char ch : text)
    if (ch != ' ' && ch != '*') t.push_back(ch);
  const auto at = t.find("pi");
  if (at == std::string::npos) {
    s.offset = parse_rational(t);
    return s;
  }
  std::string num = t.substr(0, at), rest = t.substr(at + 2);
  if (num.empty() || num == "+") num = "1";
  if (num == "-") num = "-1";
  Rational q = parse_rational(num);
  if (!rest.empty()) {
    if (rest.front() != '/') throw Error(ErrorCode::ParseError, "bad phase " + text);
    q /= parse_rational(rest.substr(1));
  }
  s.theta_over_pi = q;
  return s;
}

// ---- output ----

inline std::string rational_string(const Rational& q) { return q.get_str(); }

inline Json equation_json(const SigmaKPolynomial& f) {
  Json c = Json::array();
  for (const Rational& v : f.c) c.push_back(rational_string(v));
  return Json{{"n", f.n}, {"c", c}};
}

inline const char* verdict_name(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::StrictlyStable: return "strictly-stable-convex";
    case StabilityVerdict::StableNotStrict: return "stable";
    case StabilityVerdict::NotStable: return "not-stable";
  }
  return "?";
}

inline Json chain_json(const NoetherianCertificate& cert, int digits) {
  Json out = Json::array();
  const Rational eps = pow10_q(-digits);
  for (int k = 0; k < cert.degree(); ++k) {
    const auto& x = cert.chain[size_t(k)];
    if (!x) continue;
    const AlgebraicNumber r = refine(*x, eps);
    out.push_back(Json{{"level", k},
                       {"approx", approx(*x, digits)},
                       {"interval", Json::array({rational_string(r.lo()), rational_string(r.hi())})}});
  }
  return out;
}

class Timer {
 public:
  void mark(const std::string& phase) {
    auto now = std::chrono::steady_clock::now();
    t_[phase] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }
  const Json& json() const { return t_; }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  Json t_ = Json::object();
};

inline Json make_report(const Json& input, const std::string& verdict, const Json& chain, const Json& extras) {
  return Json{{"schema_version", "1"}, {"input", input}, {"verdict", verdict}, {"chain", chain}, {"extras", extras}};
}

// Canonical body first; timings are appended only on request.
inline void emit(std::ostream& out, Json report, const Timer& timer, bool timings) {
  if (timings) report["timings"] = timer.json();
  out << report.dump(2) << "\n";
}

struct CommonOptions {
  int digits = 3;
  bool float_mode = false;
  bool timings = false;
};

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "sigmak: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const Json::exception& e) {
    err << "sigmak: ParseError: " << e.what() << "\n";
    return kExitUsage;
  }
}

inline Json mode_extras(const CommonOptions& o) {
  return Json{{"mode", o.float_mode ? kNumericLabel : "exact"}};
}

// ---- commands ----

inline Json certify_report(const SigmaKPolynomial& input, const CommonOptions& o, Timer& timer) {
  const SigmaKPolynomial f = o.float_mode ? to_float_mode(input) : input;
  const StabilityReport rep = certify_upsilon_stable(f);
  timer.mark("certify");
  Json extras = mode_extras(o);
  extras["noetherian"] = to_string(rep.certificate.verdict);
  extras["diagonal_restriction"] = diagonal_restriction(f).to_string("x");
  if (rep.stable()) {
    extras["top_multiplicity"] = rep.certificate.top_multiplicity.value_or(1);
  } else {
    extras["failure_level"] = rep.certificate.failure_level;
    extras["missing_root"] = rep.certificate.missing_root;
  }
  Json chain = rep.stable() ? chain_json(rep.certificate, o.digits) : Json::array();
  timer.mark("format");
  return make_report(equation_json(input), verdict_name(rep.verdict), chain, extras);
}

inline int cmd_certify(const std::string& path, const CommonOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Timer timer;
    const SigmaKPolynomial f = load_equation(path);
    timer.mark("parse");
    emit(out, certify_report(f, o, timer), timer, o.timings);
    return kExitOk;
  });
}

inline int cmd_dominance(const std::string& g_path, const std::string& f_path, const CommonOptions& o,
                         std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Timer timer;
    const SigmaKPolynomial g = load_equation(g_path), f = load_equation(f_path);
    timer.mark("parse");
    const DominanceResult d = dominates(g, f);
    timer.mark("compare");
    Json levels = Json::array();
    for (Ordering x : d.levels) levels.push_back(to_string(x));
    Json extras = mode_extras(o);
    extras["dominates"] = d.dominates;
    extras["levels"] = levels;
    extras["inclusion"] = d.dominates ? "Gamma^n_g subset of Gamma^n_f" : "Gamma^n_g not contained in Gamma^n_f";
    extras["f_chain"] = chain_json(d.f_report.certificate, o.digits);
    Json input{{"g", equation_json(g)}, {"f", equation_json(f)}};
    emit(out, make_report(input, d.dominates ? "dominates" : "does-not-dominate", chain_json(d.g_report.certificate, o.digits), extras),
         timer, o.timings);
    return kExitOk;
  });
}

template <class T>
Json membership_extras(const UpsilonReport<T>& r, int digits) {
  Json extras = Json::object();
  extras["member_of"] = r.member_of ? Json(*r.member_of) : Json(nullptr);
  extras["failing_level"] = r.failing_level ? Json(*r.failing_level) : Json(nullptr);
  extras["failing_subset"] = r.failing_subset;
  Json vals = Json::array();
  for (const auto& v : r.per_level_values) {
    if (!v) {
      vals.push_back(nullptr);
    } else if constexpr (std::is_same_v<T, Rational>) {
      vals.push_back(approx(*v, digits));
    } else {
      vals.push_back(*v);
    }
  }
  extras["per_level_values"] = vals;
  extras["c-subsolution"] = r.c_subsolution();
  extras["in_region"] = r.in_region();
  return extras;
}

inline int cmd_membership(const std::string& path, const std::string& point, const CommonOptions& o,
                          std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Timer timer;
    const SigmaKPolynomial input = load_equation(path);
    const SigmaKPolynomial f = o.float_mode ? to_float_mode(input) : input;
    const std::vector<Rational> mu = parse_point(point);
    if (static_cast<int>(mu.size()) != f.n) throw Error(ErrorCode::DimensionMismatch, "point dimension != n");
    timer.mark("parse");
    const UpsilonChecker chk(f);
    Json extras = mode_extras(o);
    if (o.float_mode) {
      std::vector<double> md;
      for (const Rational& v : mu) md.push_back(v.get_d());
      extras.update(membership_extras(chk.membership(md), o.digits));
    } else {
      extras.update(membership_extras(chk.membership(mu), o.digits));
    }
    Json pt = Json::array();
    for (const Rational& v : mu) pt.push_back(rational_string(v));
    extras["point"] = pt;
    timer.mark("membership");
    emit(out, make_report(equation_json(input), verdict_name(chk.stability().verdict),
                          chain_json(chk.stability().certificate, o.digits), extras),
         timer, o.timings);
    return kExitOk;
  });
}

// Optional {"poly": [a_0, ..., a_n]} input selects a raw polynomial instead of
// the diagonal restriction of an equation.
inline Poly load_polynomial(const Json& j, Json& echo) {
  if (j.is_object() && j.contains("poly")) {
    if (!j["poly"].is_array()) throw Error(ErrorCode::ParseError, "\"poly\" must be an array");
    std::vector<Rational> a;
    Json e = Json::array();
    for (const Json& v : j["poly"]) {
      a.push_back(rational_from_json(v));
      e.push_back(rational_string(a.back()));
    }
    echo = Json{{"poly", e}};
    Poly p(std::move(a));
    if (p.degree() < 1) throw Error(ErrorCode::DegreeTooLow, "polynomial must have degree >= 1");
    return p;
  }
  const SigmaKPolynomial f = equation_from_json(j);
  echo = equation_json(f);
  return diagonal_restriction(f);
}

inline std::string csv_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct AlphaArgs {
  std::string range;
  int samples = 200;
  std::string csv;  // empty: no file
};

inline int cmd_alpha(const std::string& path, const AlphaArgs& a, const CommonOptions& o, std::ostream& out,
                     std::ostream& err) {
  return guarded(err, [&] {
    Timer timer;
    if (a.samples <= 0) throw Error(ErrorCode::ParseError, "--samples must be positive");
    Json echo;
    const Poly p = load_polynomial(parse_json(read_source(path)), echo);
    const NoetherianCertificate cert = certify_right(p);
    if (!cert.ok()) throw Error(ErrorCode::NotCertified, "alpha needs a right-Noetherian polynomial");
    timer.mark("certify");
    const Poly& q = cert.normalized;
    const int n = q.degree();
    Rational lo, hi;
    if (a.range.empty()) {
      lo = refine(n >= 2 ? *cert.chain[1] : *cert.chain[0], pow10_q(-6)).hi();
      hi = lo + 1000;
    } else {
      std::tie(lo, hi) = parse_range(a.range);
    }
    std::vector<std::pair<double, AlphaSample>> rows;
    const int S = a.samples;
    for (int i = 0; i < S; ++i) {
      const Rational x = S == 1 ? lo : lo + (hi - lo) * Rational(i, S - 1);
      rows.emplace_back(x.get_d(), alpha(q, x));
    }
    bool nondecreasing = true;
    double sup = -std::numeric_limits<double>::infinity(), max_drop = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
      sup = std::max(sup, rows[i].second.alpha);
      if (i) {
        const double drop = rows[i - 1].second.alpha - rows[i].second.alpha;
        max_drop = std::max(max_drop, drop);
        if (drop > 1e-9) nondecreasing = false;
      }
    }
    const Rational limit = 1 - Rational(1, n);
    const MonotonicityReport scan = monotonicity_scan(q, 512);
    const AlphaLimit lim = alpha_limit(q);
    timer.mark("sample");
    if (!a.csv.empty()) {
      std::ofstream csv(a.csv);
      if (!csv) throw Error(ErrorCode::ParseError, "cannot write " + a.csv);
      csv << "x,alpha\n";
      for (const auto& [x, s] : rows) csv << csv_number(x) << "," << csv_number(s.alpha) << "\n";
    }
    Json extras = mode_extras(o);
    extras["range"] = Json::array({rational_string(lo), rational_string(hi)});
    extras["samples"] = S;
    extras["monotone_increasing"] = nondecreasing;
    extras["max_drop"] = max_drop;
    extras["max_alpha"] = sup;
    extras["below_limit"] = sup <= limit.get_d() + 1e-9;
    extras["limit"] = rational_string(limit);
    extras["scan_passed"] = scan.passed();
    extras["limit_witness_gaps"] = lim.gaps;
    extras["limit_gaps_decreasing"] = lim.gaps_decreasing;
    if (!a.csv.empty()) extras["csv"] = a.csv;
    emit(out, make_report(echo, cert.strict() ? "strict-right-noetherian" : "right-noetherian", chain_json(cert, o.digits), extras),
         timer, o.timings);
    return kExitOk;
  });
}

struct DeformArgs {
  int y_count = 12;
  std::string x_max;  // empty: default
  int samples = 200;
  std::string csv;
};

inline int cmd_deform(const std::string& path, const DeformArgs& a, const CommonOptions& o, std::ostream& out,
                      std::ostream& err) {
  return guarded(err, [&] {
    Timer timer;
    if (a.samples <= 0 || a.y_count < 2) throw Error(ErrorCode::ParseError, "need --samples >= 1 and --y-count >= 2");
    Json echo;
    const Poly p = load_polynomial(parse_json(read_source(path)), echo);
    const detail::DeformationSetup s = detail::deformation_setup(p);
    // Grid strictly inside (x_m, x_0], evenly spaced, on rational approximants.
    const Rational xm = refine(s.xm, pow10_q(-12)).hi(), x0 = refine(s.x0, pow10_q(-12)).lo();
    std::vector<Rational> ys;
    for (int i = 1; i <= a.y_count; ++i) ys.push_back(xm + (x0 - xm) * Rational(i, a.y_count));
    DescentOptions opt;
    opt.x_samples = a.samples;
    if (!a.x_max.empty()) opt.x_max = parse_rational(a.x_max);
    const DescentReport rep = deformation_alpha_descent(p, ys, opt);
    timer.mark("descent");
    if (!a.csv.empty()) {
      std::ofstream csv(a.csv);
      if (!csv) throw Error(ErrorCode::ParseError, "cannot write " + a.csv);
      csv << "x,y,alpha\n";
      for (const auto& c : rep.curves) csv << csv_number(c.x) << "," << csv_number(c.y) << "," << csv_number(c.alpha) << "\n";
    }
    Json extras = mode_extras(o);
    Json yj = Json::array();
    for (const Rational& y : ys) yj.push_back(rational_string(y));
    extras["m"] = s.m;
    extras["y_grid"] = yj;
    extras["comparisons"] = rep.comparisons;
    extras["min_margin"] = rep.min_margin;
    extras["descending_in_y"] = rep.passed;
    if (!a.csv.empty()) extras["csv"] = a.csv;
    emit(out, make_report(echo, rep.passed ? "descending" : "not-descending", chain_json(s.cert, o.digits), extras), timer,
         o.timings);
    return kExitOk;
  });
}

struct PresetArgs {
  std::string name;
  std::vector<std::string> params;
  std::string top = "0";
  int precision = 15;
};

inline Json preset_json(const PresetArgs& a) {
  auto need = [&](size_t k) {
    if (a.params.size() != k) throw Error(ErrorCode::ParseError, "preset " + a.name + " takes " + std::to_string(k) + " parameters");
  };
  auto as_int = [](const std::string& s) {
    const Rational q = parse_rational(s);
    if (q.get_den() != 1 || !q.get_num().fits_sint_p()) throw Error(ErrorCode::ParseError, "expected an integer, got " + s);
    return static_cast<int>(q.get_num().get_si());
  };
  if (a.params.empty()) throw Error(ErrorCode::ParseError, "preset needs n");
  const int n = as_int(a.params[0]);
  if (n < 1 || n > 64) throw Error(ErrorCode::ParseError, "n must be in [1, 64]");
  Json out;
  if (a.name == "monge-ampere") {
    need(2);
    out = equation_json(monge_ampere(n, parse_rational(a.params[1])));
  } else if (a.name == "j-equation") {
    need(2);
    out = equation_json(j_equation(n, parse_rational(a.params[1])));
  } else if (a.name == "hessian") {
    need(3);
    out = equation_json(hessian_quotient(n, as_int(a.params[1]), parse_rational(a.params[2])));
  } else if (a.name == "nonneg" || a.name == "guan-zhang") {
    need(static_cast<size_t>(n));
    std::vector<Rational> lower;
    for (size_t i = 1; i < a.params.size(); ++i) lower.push_back(parse_rational(a.params[i]));
    out = equation_json(nonneg_coeff(n, lower, parse_rational(a.top)).f);
  } else if (a.name == "dhym") {
    need(2);
    const DhymPreset d = dhym(parse_phase(n, a.params[1], a.precision));
    out = equation_json(d.f);
    Json chain = Json::array();
    for (long double v : d.expected_chain) chain.push_back(static_cast<double>(v));
    out["expected_chain"] = chain;
    out["chain_side"] = d.mirror ? "left" : "right";
    out["precision"] = a.precision;
    out["mode"] = kNumericLabel;
  } else {
    throw Error(ErrorCode::ParseError, "unknown preset " + a.name);
  }
  out["preset"] = a.name;
  return out;
}

inline int cmd_preset(const PresetArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << preset_json(a).dump() << "\n";
    return kExitOk;
  });
}

inline int cmd_sample(const std::string& path, int count, const CommonOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Timer timer;
    if (count < 0) throw Error(ErrorCode::ParseError, "--count must be >= 0");
    const SigmaKPolynomial f = load_equation(path);
    const std::uint64_t seed = seed_from_env();
    const auto pts = sample_region(f, count, seed);
    timer.mark("sample");
    Json list = Json::array();
    for (const auto& p : pts) {
      Json row = Json::array();
      for (const Rational& v : p) row.push_back(rational_string(v));
      list.push_back(row);
    }
    Json extras = mode_extras(o);
    extras["seed"] = seed;
    extras["points"] = list;
    const StabilityReport rep = certify_upsilon_stable(f);
    emit(out, make_report(equation_json(f), verdict_name(rep.verdict), chain_json(rep.certificate, o.digits), extras), timer,
         o.timings);
    return kExitOk;
  });
}

inline int cmd_convexity(const std::string& path, int pairs, const CommonOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Timer timer;
    if (pairs < 0) throw Error(ErrorCode::ParseError, "--pairs must be >= 0");
    const SigmaKPolynomial f = load_equation(path);
    const std::uint64_t seed = seed_from_env();
    const ConvexityReport rep = midpoint_convexity_test(f, pairs, seed);
    timer.mark("convexity");
    const StabilityReport st = certify_upsilon_stable(f);
    Json extras = mode_extras(o);
    extras["seed"] = seed;
    extras["pairs"] = rep.pairs;
    extras["failures"] = rep.failures;
    emit(out, make_report(equation_json(f), verdict_name(st.verdict), chain_json(st.certificate, o.digits), extras), timer,
         o.timings);
    return kExitOk;
  });
}

}  // namespace sigmak::cli
