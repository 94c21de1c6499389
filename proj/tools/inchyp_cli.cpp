// inchyp: point evaluation, tables and identity verification from the shell.
//
// Exit codes: 0 ok, 1 verification failed, 2 domain error / bad usage,
// 3 non-convergence.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "inchyp/inchyp.hpp"

namespace {

using Json = nlohmann::ordered_json;
using ParamMap = std::map<std::string, double>;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kDomain = 2;
constexpr int kNoConvergence = 3;

const std::vector<std::string> kParamNames{"a",      "b",  "c",     "d",    "e",     "x",     "y",
                                           "z",      "n",  "lambda", "mu",  "alpha", "beta", "gamma",
                                           "delta", "rho", "t",     "tau"};

struct Choices {
  std::string variant = "lower";
  std::string method = "auto";
  std::string kind;
};

struct Globals {
  std::optional<double> tol;
  std::size_t max_terms = inchyp::EvalOptions{}.max_terms;
  std::size_t quad_nodes = inchyp::EvalOptions{}.quad_nodes;
  std::string format = "json";
  std::uint64_t seed = inchyp::verify::kDefaultSeed;
  bool timing = false;

  inchyp::EvalOptions eval_options() const {
    inchyp::EvalOptions o;
    if (tol) o.rel_tol = *tol;
    o.max_terms = max_terms;
    o.quad_nodes = quad_nodes;
    o.validate();
    return o;
  }
};

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

double get(const ParamMap& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw usage_error("missing parameter --" + name);
  return it->second;
}

std::uint64_t get_count(const ParamMap& p, const std::string& name) {
  const double v = get(p, name);
  if (!(v >= 0.0) || v != std::floor(v) || v > 1e9)
    throw usage_error("--" + name + " must be a non-negative integer");
  return static_cast<std::uint64_t>(v);
}

inchyp::EvalResult exact(double v) {
  return {v, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(v), 0, true};
}

using Evaluator = std::function<inchyp::EvalResult(const ParamMap&, const Choices&, const inchyp::EvalOptions&)>;

struct FunctionEntry {
  std::string id;
  std::string params;
  Evaluator eval;
};

const std::vector<FunctionEntry>& functions() {
  using namespace inchyp;
  static const std::vector<FunctionEntry> list{
      {"log-gamma", "x", [](const ParamMap& p, const Choices&, const EvalOptions&) {
         return exact(log_gamma(get(p, "x")));
       }},
      {"beta", "x z", [](const ParamMap& p, const Choices&, const EvalOptions&) {
         return exact(beta(get(p, "x"), get(p, "z")));
       }},
      {"incomplete-beta", "y x z", [](const ParamMap& p, const Choices&, const EvalOptions& o) {
         return exact(incomplete_beta(get(p, "y"), get(p, "x"), get(p, "z"), o));
       }},
      {"regularized-beta", "y x z", [](const ParamMap& p, const Choices&, const EvalOptions& o) {
         return exact(regularized_incomplete_beta(get(p, "y"), get(p, "x"), get(p, "z"), o));
       }},
      {"pochhammer", "lambda n", [](const ParamMap& p, const Choices&, const EvalOptions&) {
         return exact(pochhammer(get(p, "lambda"), get_count(p, "n")));
       }},
      {"complete-2f1", "a b c x", [](const ParamMap& p, const Choices&, const EvalOptions& o) {
         return complete_2f1(get(p, "a"), get(p, "b"), get(p, "c"), get(p, "x"), o);
       }},
      {"complete-1f1", "a b x", [](const ParamMap& p, const Choices&, const EvalOptions& o) {
         return complete_1f1(get(p, "a"), get(p, "b"), get(p, "x"), o);
       }},
      {"ratio", "b c n y variant", [](const ParamMap& p, const Choices& c, const EvalOptions& o) {
         return ratio({get(p, "b"), get(p, "c"), get_count(p, "n"), get(p, "y"), parse_variant(c.variant)}, o);
       }},
      {"ratio-2f1", "b c n y variant", [](const ParamMap& p, const Choices& c, const EvalOptions& o) {
         return ratio_via_2f1({get(p, "b"), get(p, "c"), get_count(p, "n"), get(p, "y"), parse_variant(c.variant)},
                              o);
       }},
      {"2f1", "a b c y x variant method", [](const ParamMap& p, const Choices& c, const EvalOptions& o) {
         return ihyp_2f1({get(p, "a"), get(p, "b"), get(p, "c"), get(p, "y"), get(p, "x"), parse_variant(c.variant)},
                         parse_method(c.method), o);
       }},
      {"1f1", "a b y x variant method", [](const ParamMap& p, const Choices& c, const EvalOptions& o) {
         return ihyp_1f1({get(p, "a"), get(p, "b"), get(p, "y"), get(p, "x"), parse_variant(c.variant)},
                         parse_method(c.method), o);
       }},
      {"2f1-at-one", "a b c y variant", [](const ParamMap& p, const Choices& c, const EvalOptions& o) {
         return ihyp_2f1_at_one(parse_variant(c.variant), get(p, "a"), get(p, "b"), get(p, "c"), get(p, "y"), o);
       }},
      {"transform", "kind alpha beta [gamma] y z", [](const ParamMap& p, const Choices& c, const EvalOptions& o) {
         const auto kind = parse_transform_kind(c.kind);
         TransformParams t;
         t.alpha = get(p, "alpha");
         t.beta = get(p, "beta");
         if (kind == TransformKind::pf_lower || kind == TransformKind::pf_upper) t.gamma = get(p, "gamma");
         t.y = get(p, "y");
         t.z = get(p, "z");
         return transform(kind, t, o);
       }},
      {"appell-f1", "a b c d x z y variant method", [](const ParamMap& p, const Choices& c, const EvalOptions& o) {
         return appell_f1({get(p, "a"), get(p, "b"), get(p, "c"), get(p, "d"), get(p, "x"), get(p, "z"), get(p, "y"),
                           parse_variant(c.variant)},
                          parse_method(c.method), o);
       }},
      {"appell-f2", "a b c d e x z y variant method", [](const ParamMap& p, const Choices& c, const EvalOptions& o) {
         return appell_f2({get(p, "a"), get(p, "b"), get(p, "c"), get(p, "d"), get(p, "e"), get(p, "x"), get(p, "z"),
                           get(p, "y"), parse_variant(c.variant)},
                          parse_method(c.method), o);
       }},
      {"fracderiv-power", "lambda mu y z variant", [](const ParamMap& p, const Choices& c, const EvalOptions& o) {
         const auto v = parse_variant(c.variant);
         return ifrac_power(v, get(p, "lambda"), {get(p, "mu"), get(p, "y"), get(p, "z"), v}, o);
       }},
  };
  return list;
}

const FunctionEntry& find_function(const std::string& id) {
  for (const auto& f : functions())
    if (f.id == id) return f;
  throw usage_error("unknown function '" + id + "' (see `inchyp eval --list`)");
}

// ---------------------------------------------------------------------------
// Output helpers

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

Json result_json(const inchyp::EvalResult& r) {
  Json j;
  j["value"] = r.value;
  j["abs_err_est"] = r.abs_err_est;
  j["effort"] = r.effort;
  j["converged"] = r.converged;
  return j;
}

Json named_json(const inchyp::verify::NamedValues& v) {
  Json j = Json::object();
  for (const auto& [k, x] : v) j[k] = x;
  return j;
}

Json report_json(const inchyp::verify::Report& r, bool timing) {
  Json j;
  j["suite"] = r.suite;
  j["cases"] = r.cases;
  j["max_residual"] = r.max_residual;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["report_only"] = r.report_only;
  j["seed"] = r.seed;
  j["worst_case"] = named_json(r.worst_case);
  j["extras"] = named_json(r.extras);
  if (timing) j["wall_time_s"] = r.wall_time_s;
  return j;
}

// Maps library exceptions to exit codes; prints the diagnostic.
int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const inchyp::convergence_error& e) {
    std::cerr << "inchyp: no convergence: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const std::domain_error& e) {
    std::cerr << "inchyp: domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "inchyp: " << e.what() << "\n";
    return kDomain;
  } catch (const std::out_of_range& e) {
    std::cerr << "inchyp: " << e.what() << "\n";
    return kDomain;
  }
}

void add_param_options(CLI::App* cmd, ParamMap& params, Choices& choices) {
  for (const auto& name : kParamNames) {
    cmd->add_option_function<double>(
           "--" + name, [&params, name](const double& v) { params[name] = v; }, "parameter " + name)
        ->allow_extra_args(false);
  }
  cmd->add_option("--variant", choices.variant, "lower | upper")->check(CLI::IsMember({"lower", "upper"}));
  cmd->add_option("--method", choices.method, "series | integral | auto")
      ->check(CLI::IsMember({"series", "integral", "auto"}));
  cmd->add_option("--kind", choices.kind, "sub-kind for transform");
}

// ---------------------------------------------------------------------------
// eval

int cmd_eval(const std::string& id, const ParamMap& params, const Choices& choices, const Globals& g) {
  const auto& fn = find_function(id);
  const auto r = fn.eval(params, choices, g.eval_options());
  if (g.format == "csv") {
    std::cout << "function,value,abs_err_est,effort,converged\n"
              << id << ',' << fmt17(r.value) << ',' << fmt17(r.abs_err_est) << ',' << r.effort << ','
              << (r.converged ? "true" : "false") << "\n";
  } else {
    Json j;
    j["function"] = id;
    j.update(result_json(r));
    std::cout << j.dump() << "\n";
  }
  if (!r.converged) {
    std::cerr << "inchyp: no convergence within the term/depth budget\n";
    return kNoConvergence;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// table

struct Axis {
  std::string name;
  double start, stop;
  std::size_t steps;

  double at(std::size_t i) const {
    if (steps == 1) return start;
    if (i + 1 == steps) return stop;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
};

Axis parse_axis(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 4) throw usage_error("--sweep expects name:start:stop:steps, got '" + spec + "'");
  if (std::find(kParamNames.begin(), kParamNames.end(), parts[0]) == kParamNames.end())
    throw usage_error("--sweep: unknown parameter '" + parts[0] + "'");
  Axis a{parts[0], 0.0, 0.0, 0};
  try {
    std::size_t used = 0;
    a.start = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("start");
    a.stop = std::stod(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("stop");
    const long steps = std::stol(parts[3], &used);
    if (used != parts[3].size() || steps < 1) throw std::invalid_argument("steps");
    a.steps = static_cast<std::size_t>(steps);
  } catch (const std::logic_error&) {
    throw usage_error("--sweep: malformed axis '" + spec + "' (steps must be >= 1)");
  }
  return a;
}

struct Row {
  std::vector<double> point;
  inchyp::EvalResult result;
  std::string error;
  int code = kOk;
};

int cmd_table(const std::string& id, const ParamMap& params, const Choices& choices,
              const std::vector<std::string>& sweeps, const Globals& g) {
  const auto& fn = find_function(id);
  if (sweeps.empty()) throw usage_error("table needs at least one --sweep");
  std::vector<Axis> axes;
  for (const auto& s : sweeps) {
    axes.push_back(parse_axis(s));
    for (std::size_t i = 0; i + 1 < axes.size(); ++i)
      if (axes[i].name == axes.back().name) throw usage_error("--sweep: axis '" + axes.back().name + "' repeated");
  }
  const auto opts = g.eval_options();

  // Lexicographic order: the first axis varies slowest.
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.steps;
  std::vector<std::vector<double>> points(total);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t rem = i;
    points[i].resize(axes.size());
    for (std::size_t k = axes.size(); k-- > 0;) {
      points[i][k] = axes[k].at(rem % axes[k].steps);
      rem /= axes[k].steps;
    }
  }

  auto rows = inchyp::parallel_map<Row>(
      total,
      [&](std::size_t i) {
        Row row;
        row.point = points[i];
        ParamMap p = params;
        for (std::size_t k = 0; k < axes.size(); ++k) p[axes[k].name] = row.point[k];
        try {
          row.result = fn.eval(p, choices, opts);
        } catch (const inchyp::convergence_error& e) {
          row.code = kNoConvergence;
          row.error = std::string("no convergence: ") + e.what();
        } catch (const std::logic_error& e) {
          row.code = kDomain;
          row.error = e.what();
        }
        return row;
      },
      inchyp::thread_count_from_env());

  std::size_t failed = 0;
  bool any_convergence = false;
  if (g.format == "csv") {
    for (const auto& a : axes) std::cout << a.name << ',';
    std::cout << "value,abs_err_est,effort,converged,error\n";
  }
  for (const auto& row : rows) {
    const bool ok = row.code == kOk;
    if (!ok) {
      ++failed;
      any_convergence = any_convergence || row.code == kNoConvergence;
    }
    if (g.format == "csv") {
      for (double v : row.point) std::cout << fmt17(v) << ',';
      if (ok)
        std::cout << fmt17(row.result.value) << ',' << fmt17(row.result.abs_err_est) << ',' << row.result.effort
                  << ',' << (row.result.converged ? "true" : "false") << ",\n";
      else
        std::cout << ",,,," << csv_escape(row.error) << "\n";
    } else {
      Json j;
      for (std::size_t k = 0; k < axes.size(); ++k) j[axes[k].name] = row.point[k];
      if (ok) {
        j.update(result_json(row.result));
        j["error"] = nullptr;
      } else {
        j["value"] = nullptr;
        j["abs_err_est"] = nullptr;
        j["effort"] = nullptr;
        j["converged"] = nullptr;
        j["error"] = row.error;
      }
      std::cout << j.dump() << "\n";
    }
  }
  if (failed == total) return any_convergence ? kNoConvergence : kDomain;
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& target, bool strict, bool list, const Globals& g) {
  namespace v = inchyp::verify;
  if (list) {
    for (const auto& s : v::suites())
      std::cout << s.name << (s.report_only ? " [report only]" : "") << ": " << s.description << "\n";
    return kOk;
  }
  std::vector<const v::SuiteInfo*> chosen;
  if (target == "all") {
    for (const auto& s : v::suites())
      if (!(strict && s.report_only)) chosen.push_back(&s);
  } else {
    const auto* s = v::find_suite(target);
    if (s == nullptr) {
      std::cerr << "inchyp: unknown suite '" << target << "' (see `inchyp verify --list`)\n";
      return kDomain;
    }
    chosen.push_back(s);
  }

  v::Config cfg;
  cfg.seed = g.seed;
  if (g.tol) cfg.tolerance = *g.tol;
  cfg.threads = inchyp::thread_count_from_env();

  bool all_pass = true;
  if (g.format == "csv") {
    std::cout << "suite,cases,max_residual,tolerance,pass,report_only,seed" << (g.timing ? ",wall_time_s" : "")
              << "\n";
  }
  for (const auto* s : chosen) {
    v::Report r;
    try {
      r = s->run(cfg);
    } catch (const std::exception& e) {
      std::cerr << "inchyp: suite " << s->name << " aborted: " << e.what() << "\n";
      r.suite = s->name;
      r.seed = cfg.seed;
      r.report_only = s->report_only;
      r.max_residual = std::numeric_limits<double>::infinity();
      r.pass = false;
    }
    if (!r.pass && !r.report_only) all_pass = false;
    if (g.format == "csv") {
      std::cout << r.suite << ',' << r.cases << ',' << fmt17(r.max_residual) << ',' << fmt17(r.tolerance) << ','
                << (r.pass ? "true" : "false") << ',' << (r.report_only ? "true" : "false") << ',' << r.seed;
      if (g.timing) std::cout << ',' << fmt17(r.wall_time_s);
      std::cout << "\n";
    } else {
      std::cout << report_json(r, g.timing).dump() << "\n";
    }
  }
  return all_pass ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------
// fracderiv

struct FracRequest {
  std::string function = "power";
  std::vector<double> coeffs;
  std::string closed_form;
  bool classical = false;
};

int cmd_fracderiv(const FracRequest& req, const ParamMap& params, const Choices& choices, const Globals& g) {
  using namespace inchyp;
  const auto opts = g.eval_options();
  const Variant variant = parse_variant(choices.variant);
  Json j;
  if (!req.closed_form.empty()) {
    const auto kind = parse_closed_form_kind(req.closed_form);
    ClosedFormParams p;
    auto take = [&](const char* name, double& slot) {
      if (auto it = params.find(name); it != params.end()) slot = it->second;
    };
    take("lambda", p.lambda), take("mu", p.mu), take("alpha", p.alpha), take("beta", p.beta);
    take("gamma", p.gamma), take("a", p.a), take("b", p.b), take("tau", p.tau), take("y", p.y), take("z", p.z);
    const auto c = closed_form_residual(kind, variant, p, opts);
    j["closed_form"] = std::string(to_string(kind));
    j["variant"] = std::string(to_string(variant));
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["residual"] = c.residual;
    if (kind == ClosedFormKind::appell_f2 && variant == Variant::upper)
      j["lower_inner_residual"] = c.mixed_inner_residual;
    std::cout << j.dump() << "\n";
    return kOk;
  }

  const FracOpSpec spec{get(params, "mu"), variant == Variant::lower || params.count("y") ? get(params, "y") : 0.0,
                        get(params, "z"), variant};
  std::function<double(double)> f;
  if (req.function == "power") {
    const double lambda = get(params, "lambda");
    f = [lambda](double t) { return std::pow(t, lambda); };
  } else if (req.function == "exp") {
    f = [](double t) { return std::exp(t); };
  } else if (req.function == "poly") {
    if (req.coeffs.empty()) throw usage_error("--function poly needs --coeffs");
    const auto c = req.coeffs;
    f = [c](double t) {
      double acc = 0.0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
      return acc;
    };
  } else {
    throw usage_error("unknown --function '" + req.function + "' (power | exp | poly)");
  }
  const auto r = ifrac(f, spec, opts);
  j["function"] = req.function;
  j["variant"] = std::string(to_string(variant));
  j.update(result_json(r));
  if (req.function == "power") j["closed_form"] = ifrac_power(variant, get(params, "lambda"), spec, opts).value;
  if (req.classical) j["classical"] = classical_rl(f, spec.mu, spec.z, opts).value;
  std::cout << j.dump() << "\n";
  return r.converged ? kOk : kNoConvergence;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incomplete hypergeometric functions: evaluation, tables and identity checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--tol", g.tol, "relative tolerance (verify: overrides the suite tolerance)");
  app.add_option("--max-terms", g.max_terms, "series term budget")->check(CLI::PositiveNumber);
  app.add_option("--quad-nodes", g.quad_nodes, "base quadrature node count")->check(CLI::Range(2, 100000));
  app.add_option("--format", g.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", g.seed, "grid seed for verify");
  app.add_flag("--timing", g.timing, "include wall time in verify reports");

  ParamMap params;
  Choices choices;

  std::string eval_id;
  bool eval_list = false;
  auto* eval = app.add_subcommand("eval", "evaluate one function at one point");
  eval->add_option("function", eval_id, "function id");
  eval->add_flag("--list", eval_list, "list function ids");
  add_param_options(eval, params, choices);

  std::string table_id;
  std::vector<std::string> sweeps;
  auto* table = app.add_subcommand("table", "evaluate a function over a parameter grid");
  table->add_option("function", table_id, "function id")->required();
  table->add_option("--sweep", sweeps, "name:start:stop:steps (repeatable; first axis slowest)")
      ->allow_extra_args(false);
  add_param_options(table, params, choices);

  std::string suite;
  bool strict = false, suite_list = false;
  auto* verify = app.add_subcommand("verify", "run identity-verification suites");
  verify->add_option("suite", suite, "suite name or 'all'");
  verify->add_flag("--strict", strict, "with 'all': skip report-only suites");
  verify->add_flag("--list", suite_list, "list suites");

  FracRequest frac;
  auto* fracderiv = app.add_subcommand("fracderiv", "apply an incomplete fractional operator");
  fracderiv->add_option("--function", frac.function, "power | exp | poly");
  fracderiv->add_option("--coeffs", frac.coeffs, "polynomial coefficients, constant first")->delimiter(',');
  fracderiv->add_option("--closed-form", frac.closed_form, "two_f1 | appell_f1 | appell_f2: check a closed form");
  fracderiv->add_flag("--classical", frac.classical, "also print the classical operator value");
  add_param_options(fracderiv, params, choices);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kDomain;
  }

  return run_guarded([&] {
    if (*eval) {
      if (eval_list) {
        for (const auto& f : functions()) std::cout << f.id << ": " << f.params << "\n";
        return kOk;
      }
      if (eval_id.empty()) throw usage_error("eval needs a function id (see `inchyp eval --list`)");
      return cmd_eval(eval_id, params, choices, g);
    }
    if (*table) return cmd_table(table_id, params, choices, sweeps, g);
    if (*verify) {
      if (suite.empty() && !suite_list) throw usage_error("verify needs a suite name or 'all'");
      return cmd_verify(suite, strict, suite_list, g);
    }
    return cmd_fracderiv(frac, params, choices, g);
  });
}
