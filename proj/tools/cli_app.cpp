#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "config.hpp"
#include "interfero/context.hpp"
#include "interfero/errors.hpp"
#include "interfero/interference.hpp"
#include "interfero/invariants.hpp"
#include "interfero/padic.hpp"
#include "interfero/padic_probability.hpp"
#include "interfero/profiles.hpp"
#include "interfero/rational.hpp"

namespace interfero::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class NumericMode { exact, floating };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// JSON number rounded to 12 significant digits; NaN becomes null.
Json num12(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::strtod(fmt12(v).c_str(), nullptr);
}

Json exact_or_float(const Rational& q, NumericMode mode) {
  if (mode == NumericMode::exact) return to_string(q);
  return num12(to_double(q));
}

// A probability argument in both views.
struct ProbabilityArg {
  Rational exact;
  double value = 0.0;
};

ProbabilityArg parse_probability(const std::string& text, const std::string& field) {
  ProbabilityArg out;
  try {
    out.exact = parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("field '" + field + "': " + e.what());
  }
  if (out.exact < 0 || out.exact > 1) {
    throw UsageError("field '" + field + "': " + text + " is not a probability in [0, 1]");
  }
  // Decimal literals go through strtod so that "0.36" is the nearest double.
  if (text.find('/') == std::string::npos) {
    out.value = std::strtod(text.c_str(), nullptr);
  } else {
    out.value = to_double(out.exact);
  }
  return out;
}

int parse_sign(const std::string& text, const std::string& field) {
  if (text == "+" || text == "+1" || text == "1") return 1;
  if (text == "-" || text == "-1") return -1;
  throw UsageError("field '" + field + "': sign must be '+' or '-', got '" + text + "'");
}

double parse_angle_field(const std::string& text, const std::string& field) {
  try {
    return parse_angle(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("field '" + field + "': " + e.what());
  }
}

Prime parse_prime(std::uint64_t p) {
  if (!is_prime(p)) throw UsageError("field 'p': " + std::to_string(p) + " is not prime");
  return Prime(p);
}

NumericMode parse_mode(const std::string& text) {
  if (text == "exact") return NumericMode::exact;
  if (text == "float") return NumericMode::floating;
  throw UsageError("--mode must be 'exact' or 'float'");
}

// Output sink: standard output or the --out file.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw UsageError("cannot open output file '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

void emit_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

// ---------------------------------------------------------------- fit

struct FitArgs {
  std::string p1;
  std::string p2;
  std::string p;
};

void cmd_fit(const FitArgs& a, NumericMode mode, std::ostream& os) {
  ProbabilityArg p1 = parse_probability(a.p1, "p1");
  ProbabilityArg p2 = parse_probability(a.p2, "p2");
  ProbabilityArg p = parse_probability(a.p, "p");

  InterferenceRecord r = fit_record(p1.value, p2.value, p.value);
  Json j;
  j["command"] = "fit";
  j["mode"] = mode == NumericMode::exact ? "exact" : "float";
  j["p1"] = exact_or_float(p1.exact, mode);
  j["p2"] = exact_or_float(p2.exact, mode);
  j["p"] = exact_or_float(p.exact, mode);
  std::optional<Rational> exact_lambda;
  if (mode == NumericMode::exact) exact_lambda = lambda_of_exact(p1.exact, p2.exact, p.exact);
  if (exact_lambda) {
    j["lambda"] = to_string(*exact_lambda);
  } else {
    j["lambda"] = num12(r.lambda);
  }
  j["regime"] = std::string(to_string(r.regime));
  j["phase"] = num12(r.phase);
  j["sign"] = r.sign;
  j["residual"] = num12(reconstruct(r) - r.p);
  emit_json(os, j);
}

// ---------------------------------------------------------------- profile

struct ProfileArgs {
  std::string p1 = "0.25";
  std::string p2 = "0.25";
  double lo = 0.0;
  std::optional<double> hi;
  std::size_t n = 100;
  std::string sign = "+";
  bool auto_window = false;
  std::vector<std::string> intervals;
  std::uint64_t p = 3;
  unsigned long l = 0;
  std::uint64_t eps_max = 8;
  std::string format = "csv";
};

SignedInterval parse_interval(const std::string& text) {
  // lo:hi:sign
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw UsageError("interval '" + text + "' must look like lo:hi:+ or lo:hi:-");
  SignedInterval iv;
  iv.lo = parse_angle_field(parts[0], "interval");
  iv.hi = parse_angle_field(parts[1], "interval");
  iv.sign = parse_sign(parts[2], "interval");
  return iv;
}

void write_profile_csv(std::ostream& os, const BrightnessProfile& prof, const std::vector<std::string>& header_meta) {
  os << "# kind=" << to_string(prof.kind) << '\n';
  for (const auto& m : header_meta) os << "# " << m << '\n';
  for (const auto& w : prof.warnings) os << "# warning=" << w << '\n';
  os << "# tool=" << kToolVersion << '\n';
  os << "r,P_float,P_exact,kind\n";
  for (std::size_t i = 0; i < prof.grid.size(); ++i) {
    os << fmt12(prof.grid[i]) << ',' << fmt12(prof.values[i]) << ',';
    if (prof.exact_values) os << to_string((*prof.exact_values)[i]);
    os << ',' << to_string(prof.sample_kinds[i]) << '\n';
  }
}

void write_padic_csv(std::ostream& os, std::uint64_t p, unsigned long l, std::uint64_t eps_max,
                     const std::vector<SlitPoint>& points) {
  os << "# kind=Padic\n";
  os << "# p=" << p << '\n';
  os << "# l=" << l << '\n';
  os << "# eps_max=" << eps_max << '\n';
  os << "# A=" << to_string(rational_pow(p, -2 * static_cast<long>(l))) << '\n';
  os << "# tool=" << kToolVersion << '\n';
  os << "epsilon,v_p_of_1_plus_epsilon,P_exact,P_float,r\n";
  for (const auto& pt : points) {
    os << pt.epsilon << ',' << pt.order << ',' << to_string(pt.p_exact) << ',' << fmt12(pt.p_float) << ','
       << (pt.epsilon + 1) << '\n';
  }
}

Json profile_json(const BrightnessProfile& prof, NumericMode mode) {
  Json j;
  j["kind"] = std::string(to_string(prof.kind));
  j["tool"] = kToolVersion;
  if (prof.prime) {
    j["p"] = *prof.prime;
    j["l"] = *prof.l;
  } else {
    j["p1"] = num12(prof.p1);
    j["p2"] = num12(prof.p2);
  }
  if (prof.theta_max) j["theta_max"] = num12(*prof.theta_max);
  if (prof.theta_min) j["theta_min"] = num12(*prof.theta_min);
  if (!prof.partition.empty()) {
    Json parts = Json::array();
    for (const auto& iv : prof.partition) {
      parts.push_back({{"lo", num12(iv.lo)}, {"hi", num12(iv.hi)}, {"sign", iv.sign == 1 ? "+" : "-"}});
    }
    j["partition"] = parts;
  }
  Json samples = Json::array();
  for (std::size_t i = 0; i < prof.grid.size(); ++i) {
    Json s;
    s["r"] = num12(prof.grid[i]);
    if (prof.exact_values && mode == NumericMode::exact) {
      s["P"] = to_string((*prof.exact_values)[i]);
    } else {
      s["P"] = num12(prof.values[i]);
    }
    if (prof.exact_values) s["P_exact"] = to_string((*prof.exact_values)[i]);
    s["kind"] = std::string(to_string(prof.sample_kinds[i]));
    samples.push_back(s);
  }
  j["samples"] = samples;
  j["warnings"] = prof.warnings;
  return j;
}

void cmd_profile(const std::string& kind, const ProfileArgs& a, NumericMode mode, std::ostream& os) {
  if (a.format != "csv" && a.format != "json") throw UsageError("--format must be 'csv' or 'json'");
  const bool csv = a.format == "csv";

  if (kind == "padic") {
    Prime p = parse_prime(a.p);
    if (csv) {
      write_padic_csv(os, p, a.l, a.eps_max, padic_slit_profile(p, a.l, a.eps_max));
    } else {
      emit_json(os, profile_json(profile_padic(p, a.l, a.eps_max), mode));
    }
    return;
  }

  ProbabilityArg p1 = parse_probability(a.p1, "p1");
  ProbabilityArg p2 = parse_probability(a.p2, "p2");
  if (a.n == 0) throw UsageError("field 'n': need at least one sample");
  std::vector<std::string> meta = {"p1=" + fmt12(p1.value), "p2=" + fmt12(p2.value)};
  BrightnessProfile prof;

  if (kind == "trig") {
    if (!a.hi) throw UsageError("profile trig needs --max");
    prof = profile_trig(p1.value, p2.value, uniform_grid(a.lo, *a.hi, a.n));
  } else if (kind == "hyp") {
    int sign = parse_sign(a.sign, "sign");
    double hi = 0.0;
    double lo = a.lo;
    if (a.auto_window) {
      ThetaBounds b = theta_bounds(p1.value, p2.value);
      if (sign == 1 && !b.theta_max) {
        throw InvalidProfile("empty valid window: P+(0) exceeds 1");
      }
      lo = 0.0;
      hi = sign == 1 ? *b.theta_max : b.theta_min;
    } else if (a.hi) {
      hi = *a.hi;
    } else {
      throw UsageError("profile hyp needs --max or --auto-window");
    }
    meta.push_back(std::string("sign=") + (sign == 1 ? "+" : "-"));
    prof = profile_hyp(p1.value, p2.value, sign, uniform_grid(lo, hi, a.n));
  } else if (kind == "piecewise") {
    if (a.intervals.empty()) throw UsageError("profile piecewise needs at least one --interval");
    std::vector<SignedInterval> parts;
    for (const auto& text : a.intervals) parts.push_back(parse_interval(text));
    double lo = parts.front().lo;
    double hi = parts.front().hi;
    for (const auto& iv : parts) {
      lo = std::min(lo, iv.lo);
      hi = std::max(hi, iv.hi);
    }
    for (const auto& text : a.intervals) meta.push_back("interval=" + text);
    prof = profile_piecewise(p1.value, p2.value, parts, uniform_grid(lo, hi, a.n));
  } else {
    throw UsageError("unknown profile kind '" + kind + "'");
  }
  if (prof.theta_max) meta.push_back("theta_max=" + fmt12(*prof.theta_max));
  if (prof.theta_min) meta.push_back("theta_min=" + fmt12(*prof.theta_min));

  if (csv) {
    write_profile_csv(os, prof, meta);
  } else {
    emit_json(os, profile_json(prof, mode));
  }
}

// ---------------------------------------------------------------- totalprob

struct TotalProbArgs {
  std::string config;
  std::map<std::string, std::string> overrides;
};

struct ContextInput {
  ContextTransform real;
  ExactContextTransform exact;
};

ContextInput build_context(const KeyValues& kv, const std::string& source) {
  auto field = [&](const std::string& key, const std::string& fallback) -> std::pair<std::string, std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return {fallback, "field '" + key + "'"};
    std::string where = it->second.line > 0 ? source + ":" + std::to_string(it->second.line) + ": field '" + key + "'"
                                            : "flag --" + key;
    return {it->second.text, where};
  };
  auto require = [&](const std::string& key) {
    if (!kv.count(key)) throw ConfigError(source + ": missing required field '" + key + "'");
  };
  ContextInput in;
  auto prob = [&](const std::string& key, Rational& exact, double& real) {
    require(key);
    auto [text, where] = field(key, "");
    try {
      ProbabilityArg v = parse_probability(text, key);
      exact = v.exact;
      real = v.value;
    } catch (const UsageError& e) {
      throw ConfigError(where + ": " + e.what());
    }
  };
  prob("pb1", in.exact.pb[0], in.real.pb[0]);
  prob("pb2", in.exact.pb[1], in.real.pb[1]);
  prob("p11", in.exact.cond[0][0], in.real.cond[0][0]);
  prob("p12", in.exact.cond[0][1], in.real.cond[0][1]);
  prob("p21", in.exact.cond[1][0], in.real.cond[1][0]);
  prob("p22", in.exact.cond[1][1], in.real.cond[1][1]);
  for (int j = 0; j < 2; ++j) {
    std::string tk = "theta" + std::to_string(j + 1);
    std::string sk = "sign" + std::to_string(j + 1);
    auto [ttext, twhere] = field(tk, "0");
    auto [stext, swhere] = field(sk, "+");
    try {
      in.real.phases[j] = parse_angle_field(ttext, tk);
      in.real.signs[j] = parse_sign(stext, sk);
    } catch (const UsageError& e) {
      throw ConfigError((kv.count(tk) && !kv.count(sk) ? twhere : swhere) + ": " + e.what());
    }
  }
  auto [mtext, mwhere] = field("mode", "trigonometric");
  if (mtext == "trigonometric" || mtext == "trig") {
    in.real.mode = ContextMode::trigonometric;
  } else if (mtext == "hyperbolic" || mtext == "hyp") {
    in.real.mode = ContextMode::hyperbolic;
  } else {
    throw ConfigError(mwhere + ": mode must be 'trigonometric' or 'hyperbolic'");
  }
  in.exact.mode = in.real.mode;
  in.exact.phases = in.real.phases;
  in.exact.signs = in.real.signs;
  return in;
}

Json pair_json(const Pair<double>& v) { return Json::array({num12(v[0]), num12(v[1])}); }

void cmd_totalprob(const TotalProbArgs& a, std::optional<NumericMode> mode_flag, std::ostream& os) {
  KeyValues kv;
  std::string source = a.config.empty() ? "<flags>" : a.config;
  if (!a.config.empty()) {
    std::ifstream in(a.config);
    if (!in) throw UsageError("cannot read config file '" + a.config + "'");
    kv = parse_key_values(in, a.config);
  }
  for (const auto& [key, value] : a.overrides) kv[key] = ConfigValue{value, 0};

  NumericMode mode = NumericMode::floating;
  if (mode_flag) {
    mode = *mode_flag;
  } else if (auto it = kv.find("numeric"); it != kv.end()) {
    try {
      mode = parse_mode(it->second.text);
    } catch (const UsageError& e) {
      throw ConfigError(source + ":" + std::to_string(it->second.line) + ": field 'numeric': " + e.what());
    }
  }
  ContextInput in = build_context(kv, source);
  if (mode == NumericMode::exact) {
    validate(in.exact);
  }
  validate(in.real);

  Json j;
  j["command"] = "totalprob";
  j["mode"] = mode == NumericMode::exact ? "exact" : "float";
  Json ctx;
  ctx["mode"] = std::string(to_string(in.real.mode));
  ctx["pb1"] = exact_or_float(in.exact.pb[0], mode);
  ctx["pb2"] = exact_or_float(in.exact.pb[1], mode);
  ctx["p11"] = exact_or_float(in.exact.cond[0][0], mode);
  ctx["p12"] = exact_or_float(in.exact.cond[0][1], mode);
  ctx["p21"] = exact_or_float(in.exact.cond[1][0], mode);
  ctx["p22"] = exact_or_float(in.exact.cond[1][1], mode);
  ctx["theta1"] = num12(in.real.phases[0]);
  ctx["theta2"] = num12(in.real.phases[1]);
  ctx["sign1"] = in.real.signs[0] == 1 ? "+" : "-";
  ctx["sign2"] = in.real.signs[1] == 1 ? "+" : "-";
  j["context"] = ctx;

  if (mode == NumericMode::exact) {
    Pair<Rational> c = total_prob_classical(in.exact);
    j["classical"] = Json::array({to_string(c[0]), to_string(c[1])});
  } else {
    j["classical"] = pair_json(total_prob_classical(in.real));
  }

  std::optional<std::string> primary_failure;
  ContextTransform trig = in.real;
  trig.mode = ContextMode::trigonometric;
  try {
    j["quantum"] = pair_json(total_prob_quantum(trig));
  } catch (const NotAProbability& e) {
    j["quantum"] = {{"error", e.what()}};
    if (in.real.mode == ContextMode::trigonometric) primary_failure = e.what();
  }
  ContextTransform hyp = in.real;
  hyp.mode = ContextMode::hyperbolic;
  try {
    j["hyperbolic"] = pair_json(total_prob_hyperbolic(hyp));
  } catch (const DomainError& e) {
    j["hyperbolic"] = {{"error", e.what()}};
    if (in.real.mode == ContextMode::hyperbolic) primary_failure = e.what();
  }
  NormalizationReport n = normalization_report(in.real);
  j["normalization"] = {{"mode", std::string(to_string(in.real.mode))},
                        {"sum", num12(n.sum)},
                        {"cross_term", num12(n.cross_term)},
                        {"doubly_stochastic", n.doubly_stochastic},
                        {"normalized", n.normalized}};
  emit_json(os, j);
  if (primary_failure) throw DomainError(*primary_failure);
}

// ---------------------------------------------------------------- padic

struct PadicArgs {
  std::uint64_t p = 3;
  std::string alpha1 = "1";
  std::string alpha2 = "1";
  std::string epsilon = "1";
};

Rational parse_field_rational(const std::string& text, const std::string& field) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("field '" + field + "': " + e.what());
  }
}

void cmd_padic(const PadicArgs& a, NumericMode mode, std::ostream& os) {
  Prime p = parse_prime(a.p);
  PadicAmplitudePair pair(PadicRational(p, parse_field_rational(a.alpha1, "alpha1")),
                          PadicRational(p, parse_field_rational(a.alpha2, "alpha2")),
                          PadicRational(p, parse_field_rational(a.epsilon, "epsilon")));
  PadicInterference r = padic_interfere(pair);
  LambdaRangeCheck range = lambda_range_check(pair);

  Json j;
  j["command"] = "padic";
  j["mode"] = mode == NumericMode::exact ? "exact" : "float";
  j["p"] = p.value();
  j["alpha1"] = to_string(pair.alpha1().value());
  j["alpha2"] = to_string(pair.alpha2().value());
  j["epsilon"] = to_string(pair.epsilon().value());
  j["case"] = std::string(to_string(r.which));
  // Every quantity here is rational, so exact strings are always printed.
  j["P1"] = to_string(r.p1);
  j["P2"] = to_string(r.p2);
  j["P"] = to_string(r.p);
  j["c"] = r.c ? Json(to_string(*r.c)) : Json(nullptr);
  j["lambda"] = to_string(r.lambda);
  if (mode == NumericMode::floating) {
    Json f;
    f["P1"] = num12(to_double(r.p1));
    f["P2"] = num12(to_double(r.p2));
    f["P"] = num12(to_double(r.p));
    f["c"] = r.c ? num12(to_double(*r.c)) : Json(nullptr);
    f["lambda"] = num12(to_double(r.lambda));
    j["float"] = f;
  }
  j["theta"] = num12(range.theta);
  j["within_claimed_range"] = range.within_claimed_range;
  emit_json(os, j);
}

// ---------------------------------------------------------------- check

int cmd_check(std::uint64_t seed, std::size_t cases, std::ostream& os) {
  std::size_t passed = 0;
  std::size_t failed = 0;
  for (const InvariantResult& r : run_invariant_suite(seed, cases)) {
    if (r.failures == 0) {
      ++passed;
      os << "PASS " << r.name << " (" << r.cases << " cases)\n";
    } else {
      ++failed;
      os << "FAIL " << r.name << " (" << r.failures << "/" << r.cases << " failed; first: " << r.first_failure
         << ")\n";
    }
  }
  os << "invariants: " << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? kSuccess : kInvariantFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interference of probabilistic alternatives over complex, hyperbolic and p-adic numbers"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();

  std::string mode_text;
  std::string out_path;
  app.add_option("--mode", mode_text, "Numeric output mode: exact or float");
  app.add_option("--out", out_path, "Output path (default: standard output)");

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit lambda, regime and phase to a probability triple");
  fit_cmd->add_option("p1", fit.p1)->required();
  fit_cmd->add_option("p2", fit.p2)->required();
  fit_cmd->add_option("p", fit.p)->required();

  ProfileArgs prof;
  auto* prof_cmd = app.add_subcommand("profile", "Sample a brightness profile as CSV or JSON");
  prof_cmd->require_subcommand(1);
  prof_cmd->fallthrough();
  prof_cmd->add_option("--format", prof.format, "csv or json");
  auto add_probs = [&](CLI::App* c) {
    c->add_option("--p1", prof.p1);
    c->add_option("--p2", prof.p2);
  };
  auto add_grid = [&](CLI::App* c) {
    c->add_option("--min", prof.lo);
    c->add_option("--max", prof.hi);
    c->add_option("--n", prof.n);
  };
  auto* trig_cmd = prof_cmd->add_subcommand("trig", "Trigonometric profile (T)");
  add_probs(trig_cmd);
  add_grid(trig_cmd);
  auto* hyp_cmd = prof_cmd->add_subcommand("hyp", "Hyperbolic profile (Ha for +, Hb for -)");
  add_probs(hyp_cmd);
  add_grid(hyp_cmd);
  hyp_cmd->add_option("--sign", prof.sign);
  hyp_cmd->add_flag("--auto-window", prof.auto_window, "Sample [0, theta_max] or [0, theta_min]");
  auto* pw_cmd = prof_cmd->add_subcommand("piecewise", "Ha/Hb profile over signed intervals");
  add_probs(pw_cmd);
  pw_cmd->add_option("--interval", prof.intervals, "lo:hi:sign, repeatable");
  pw_cmd->add_option("--n", prof.n);
  auto* padic_prof_cmd = prof_cmd->add_subcommand("padic", "p-adic two-slit profile");
  padic_prof_cmd->add_option("--p", prof.p);
  padic_prof_cmd->add_option("--l", prof.l);
  padic_prof_cmd->add_option("--eps-max", prof.eps_max);
  for (auto* c : {trig_cmd, hyp_cmd, pw_cmd, padic_prof_cmd}) c->fallthrough();

  TotalProbArgs tp;
  auto* tp_cmd = app.add_subcommand("totalprob", "Classical, quantum and hyperbolic total probability");
  tp_cmd->add_option("config", tp.config, "Flat key = value config file");
  std::map<std::string, std::string> tp_flags;
  for (const char* key : {"pb1", "pb2", "p11", "p12", "p21", "p22", "theta1", "theta2", "sign1", "sign2"}) {
    tp_cmd->add_option(std::string("--") + key, tp_flags[key]);
  }
  tp_cmd->add_option("--context-mode", tp_flags["mode"], "trigonometric or hyperbolic");

  PadicArgs pa;
  auto* padic_cmd = app.add_subcommand("padic", "p-adic interference of two amplitudes");
  padic_cmd->add_option("--p", pa.p);
  padic_cmd->add_option("--alpha1", pa.alpha1);
  padic_cmd->add_option("--alpha2", pa.alpha2);
  padic_cmd->add_option("--epsilon", pa.epsilon);

  std::uint64_t seed = 20260101;
  std::size_t cases = 2000;
  auto* check_cmd = app.add_subcommand("check", "Run the randomized invariant suite");
  check_cmd->add_option("--seed", seed);
  check_cmd->add_option("--cases", cases);

  for (auto* c : {fit_cmd, tp_cmd, padic_cmd, check_cmd}) c->fallthrough();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    std::optional<NumericMode> mode_flag;
    if (!mode_text.empty()) mode_flag = parse_mode(mode_text);
    const NumericMode mode = mode_flag.value_or(NumericMode::floating);

    std::ostringstream buffer;
    int code = kSuccess;
    if (*fit_cmd) {
      cmd_fit(fit, mode, buffer);
    } else if (*prof_cmd) {
      std::string kind = prof_cmd->get_subcommands().front()->get_name();
      cmd_profile(kind, prof, mode, buffer);
    } else if (*tp_cmd) {
      for (const auto& [key, value] : tp_flags) {
        if (!value.empty()) tp.overrides[key] = value;
      }
      try {
        cmd_totalprob(tp, mode_flag, buffer);
      } catch (const DomainError&) {
        Sink sink(out_path, out);
        sink.get() << buffer.str();
        throw;
      }
    } else if (*padic_cmd) {
      cmd_padic(pa, mode, buffer);
    } else if (*check_cmd) {
      code = cmd_check(seed, cases, buffer);
    }
    Sink sink(out_path, out);
    sink.get() << buffer.str();
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
}

}  // namespace interfero::cli
