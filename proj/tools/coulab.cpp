// Command-line front-end over the coulab C interface.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coulab/coulab.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumeric = 3 };

// Raised to unwind with a specific exit code after the message is printed.
struct Failure {
  int code;
  std::string message;
};

int exit_of(clab_status st) {
  switch (st) {
    case CLAB_OK: return kOk;
    case CLAB_VERIFY_FAILED: return kVerifyFailed;
    case CLAB_INVALID_INPUT: return kUsage;
    case CLAB_NUMERIC_FAILURE: return kNumeric;
    default: return kNumeric;
  }
}

void check(clab_status st) {
  if (st != CLAB_OK) throw Failure{exit_of(st), clab_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  clab_free_string(s);
  return out;
}

class ProfileHandle {
 public:
  explicit ProfileHandle(const std::string& source) { check(clab_profile_load(source.c_str(), &p_)); }
  ~ProfileHandle() { clab_profile_free(p_); }
  ProfileHandle(const ProfileHandle&) = delete;
  ProfileHandle& operator=(const ProfileHandle&) = delete;
  const clab_profile* get() const { return p_; }

 private:
  clab_profile* p_ = nullptr;
};

class SweepHandle {
 public:
  ~SweepHandle() { clab_sweep_free(s_); }
  clab_sweep** out() { return &s_; }
  const clab_sweep* get() const { return s_; }

 private:
  clab_sweep* s_ = nullptr;
};

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Failure{kUsage, "cannot parse number '" + item + "' in list '" + text + "'"};
    }
  }
  return out;
}

// Resolves each parameter as flag > config file > default and records the
// resolved value for the run manifest.
class Settings {
 public:
  void load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure{kUsage, "cannot open config file '" + path + "'"};
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw Failure{kUsage, "malformed config file '" + path + "': " + e.what()};
    }
    if (!j.is_object()) throw Failure{kUsage, "config file must hold a JSON object"};
    if (j.contains("parameters") && j["parameters"].is_object()) j = j["parameters"];
    config_ = std::move(j);
  }

  template <class T>
  T get(const std::string& key, const CLI::Option* flag, const T& flag_value, const T& fallback) {
    T value = fallback;
    if (flag && flag->count() > 0) {
      value = flag_value;
    } else if (config_.contains(key) && !config_[key].is_null()) {
      try {
        value = config_[key].get<T>();
      } catch (const Json::exception&) {
        throw Failure{kUsage, "config entry '" + key + "' has the wrong type"};
      }
    }
    resolved_[key] = value;
    return value;
  }

  std::optional<std::string> get_optional(const std::string& key, const CLI::Option* flag,
                                          const std::string& flag_value) {
    if (flag && flag->count() > 0) {
      resolved_[key] = flag_value;
      return flag_value;
    }
    if (config_.contains(key) && config_[key].is_string()) {
      resolved_[key] = config_[key];
      return config_[key].get<std::string>();
    }
    return std::nullopt;
  }

  const Json& resolved() const { return resolved_; }

 private:
  Json config_ = Json::object();
  Json resolved_ = Json::object();
};

struct Globals {
  double rel_tol = 0.0;
  double abs_tol = 0.0;
  std::string out;
  std::string config;
  std::uint64_t seed = 0;
  int threads = 1;
  CLI::Option* rel_opt = nullptr;
  CLI::Option* abs_opt = nullptr;
  CLI::Option* out_opt = nullptr;
  CLI::Option* config_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* threads_opt = nullptr;
};

struct Run {
  std::string subcommand;
  Settings settings;
  clab_quad quad{};
  std::string out;
  std::vector<std::string> outputs;
  std::string profile_source;
  std::optional<std::uint64_t> seed;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

void resolve_common(Run& run, Globals& g) {
  if (g.config_opt->count() > 0) run.settings.load_config(g.config);
  clab_quad_default(&run.quad);
  run.quad.rel_tol = run.settings.get("quad_rel_tol", g.rel_opt, g.rel_tol, run.quad.rel_tol);
  run.quad.abs_tol = run.settings.get("quad_abs_tol", g.abs_opt, g.abs_tol, run.quad.abs_tol);
  run.out = run.settings.get<std::string>("out", g.out_opt, g.out, "");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Failure{kUsage, "cannot write '" + path + "'"};
  f << content;
  if (!f) throw Failure{kNumeric, "write to '" + path + "' failed"};
}

void write_manifest(const Run& run) {
  if (run.outputs.empty()) return;
  Json m;
  m["subcommand"] = run.subcommand;
  m["parameters"] = run.settings.resolved();
  m["profile_source"] = run.profile_source.empty() ? Json(nullptr) : Json(run.profile_source);
  m["outputs"] = run.outputs;
  m["quad"] = {{"rel_tol", run.quad.rel_tol}, {"abs_tol", run.quad.abs_tol}, {"max_subdiv", run.quad.max_subdiv}};
  m["seed"] = run.seed ? Json(*run.seed) : Json(nullptr);
  m["tool_version"] = clab_version();
  m["wall_clock_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - run.start).count();
  for (const auto& path : run.outputs) write_file(path + ".manifest.json", m.dump(2) + "\n");
}

// Writes to --out when given, stdout otherwise.
void emit(Run& run, const std::string& content) {
  if (run.out.empty()) {
    std::cout << content;
    return;
  }
  write_file(run.out, content);
  run.outputs.push_back(run.out);
}

int cmd_norms(Run& run, const std::string& profile_flag, CLI::Option* profile_opt, const std::string& id_flag,
              CLI::Option* id_opt, double s_flag, CLI::Option* s_opt, const std::string& p_flag, CLI::Option* p_opt) {
  const auto source = run.settings.get_optional("profile", profile_opt, profile_flag);
  if (!source) throw Failure{kUsage, "norms needs --profile"};
  run.profile_source = *source;
  const double s = run.settings.get("s", s_opt, s_flag, 1.0);
  const std::vector<double> ps = parse_list(run.settings.get<std::string>("p", p_opt, p_flag, "2"));
  const std::string id = run.settings.get("id", id_opt, id_flag, *source);

  ProfileHandle profile(*source);
  char* json = nullptr;
  check(clab_norms_report(profile.get(), id.c_str(), s, ps.data(), ps.size(), &run.quad, &json));
  const std::string text = take(json);
  const Json report = Json::parse(text);
  for (const auto& [key, value] : report.items()) {
    if (key.size() > 4 && key.compare(key.size() - 4, 4, "_err") == 0 && value.is_boolean() && value.get<bool>()) {
      std::cerr << "warning: " << key.substr(0, key.size() - 4) << " did not reach the requested tolerance\n";
    }
  }
  emit(run, text + "\n");
  return kOk;
}

std::string summary_path(const std::string& csv) {
  const auto dot = csv.rfind('.');
  const auto slash = csv.rfind('/');
  const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
  return (has_ext ? csv.substr(0, dot) : csv) + ".summary.json";
}

int cmd_sweep(Run& run, Globals& g, double s_flag, CLI::Option* s_opt, double p_flag, CLI::Option* p_opt,
              const std::string& eps_flag, CLI::Option* eps_opt) {
  const double s = run.settings.get("s", s_opt, s_flag, 1.0);
  const double p = run.settings.get("p", p_opt, p_flag, 2.4);
  const std::vector<double> eps =
      parse_list(run.settings.get<std::string>("eps", eps_opt, eps_flag, "0.2,0.1,0.05,0.02,0.01"));
  const int threads = run.settings.get("threads", g.threads_opt, g.threads, 1);

  SweepHandle sweep;
  check(clab_sweep_run(s, p, eps.data(), eps.size(), &run.quad, threads, sweep.out()));
  emit(run, take([&] {
         char* csv = nullptr;
         check(clab_sweep_csv(sweep.get(), &csv));
         return csv;
       }()));

  Json summary;
  summary["s"] = s;
  summary["p"] = p;
  summary["exploratory"] = s > 1.0;
  summary["records"] = clab_sweep_size(sweep.get());
  bool all_converged = true;
  for (std::size_t i = 0; i < clab_sweep_size(sweep.get()); ++i) {
    clab_sweep_record r{};
    check(clab_sweep_record_at(sweep.get(), i, &r));
    all_converged = all_converged && r.converged;
  }
  summary["all_converged"] = all_converged;
  double measured = 0.0;
  double predicted = 0.0;
  const clab_status fit = clab_sweep_fit(sweep.get(), &measured, &predicted);
  if (fit != CLAB_OK) {
    const std::string message = clab_last_error();
    write_manifest(run);
    throw Failure{exit_of(fit), message};
  }
  summary["slope_measured"] = measured;
  summary["slope_predicted"] = predicted;
  summary["slope_deviation"] = measured - predicted;
  if (!all_converged) std::cerr << "warning: some sweep records did not converge\n";
  if (s > 1.0) std::cerr << "warning: s > 1 is outside the proven range; results are exploratory\n";

  const std::string text = summary.dump(2) + "\n";
  if (run.out.empty()) {
    std::cerr << text;
  } else {
    const std::string path = summary_path(run.out);
    write_file(path, text);
    run.outputs.push_back(path);
    std::cout << text;
  }
  return kOk;
}

int parse_family(const std::string& family) {
  const std::string prefix = "gaussians:";
  if (family.compare(0, prefix.size(), prefix) != 0) {
    throw Failure{kUsage, "unknown family '" + family + "' (expected gaussians:N)"};
  }
  try {
    std::size_t used = 0;
    const int n = std::stoi(family.substr(prefix.size()), &used);
    if (used != family.size() - prefix.size()) throw std::invalid_argument(family);
    return n;
  } catch (const std::exception&) {
    throw Failure{kUsage, "cannot parse family size in '" + family + "'"};
  }
}

int main_dispatch(int argc, char** argv) {
  CLI::App app{"Numerical toolkit for radial Sobolev-Coulomb embeddings"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", clab_version());

  Globals g;
  g.rel_opt = app.add_option("--quad-rel-tol", g.rel_tol, "Relative quadrature tolerance");
  g.abs_opt = app.add_option("--quad-abs-tol", g.abs_tol, "Absolute quadrature tolerance");
  g.out_opt = app.add_option("--out", g.out, "Output file (stdout when absent)");
  g.config_opt = app.add_option("--config", g.config, "JSON config file or run manifest");
  g.seed_opt = app.add_option("--seed", g.seed, "Random seed");
  g.threads_opt = app.add_option("--threads", g.threads, "Worker threads");

  std::string profile, id, p_list, eps_list, family, suite, ex_s, ex_p, ex_q, ex_a, ex_d, ex_gamma, fig1;
  double s = 1.0, p = 2.4, two_p = 4.0, tol = 1e-3, simplex_tol = 1e-5;
  int restarts = 8, max_iters = 2000;

  auto* norms = app.add_subcommand("norms", "Evaluate the functionals of a profile");
  auto* norms_profile = norms->add_option("--profile", profile, "builtin:NAME, inline JSON or a JSON file");
  auto* norms_id = norms->add_option("--id", id, "Identifier written to the report");
  auto* norms_s = norms->add_option("--s", s, "Sobolev order");
  auto* norms_p = norms->add_option("--p", p_list, "Comma-separated Lebesgue exponents");

  auto* sweep = app.add_subcommand("sweep", "Run the tent counterexample sweep");
  auto* sweep_s = sweep->add_option("--s", s, "Sobolev order");
  auto* sweep_p = sweep->add_option("--p", p, "Lebesgue exponent");
  auto* sweep_eps = sweep->add_option("--eps", eps_list, "Comma-separated decreasing amplitudes");

  auto* best = app.add_subcommand("best-constant", "Search the best constant over a profile family");
  auto* best_s = best->add_option("--s", s, "Sobolev order");
  auto* best_p = best->add_option("--two-p", two_p, "Exponent 2p");
  auto* best_family = best->add_option("--family", family, "Profile family, gaussians:N");
  auto* best_restarts = best->add_option("--restarts", restarts, "Number of restarts");
  auto* best_iters = best->add_option("--max-iters", max_iters, "Iteration cap per restart");
  auto* best_tol = best->add_option("--simplex-tol", simplex_tol, "Simplex convergence tolerance");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  auto* verify_suite = verify->add_option("--suite", suite, "identities, pitt, scaling, lemma-bounds or all");
  auto* verify_tol = verify->add_option("--tol", tol, "Dual-method agreement tolerance");

  auto* exps = app.add_subcommand("exponents", "Print the critical exponents for s");
  auto* exps_s = exps->add_option("--s", ex_s, "Sobolev order (rational like 3/4 or decimal)");
  auto* exps_p = exps->add_option("--p", ex_p, "Lebesgue exponent");
  auto* exps_q = exps->add_option("--q", ex_q, "Weighted exponent q");
  auto* exps_a = exps->add_option("--a", ex_a, "Weight exponent a");
  auto* exps_d = exps->add_option("--d", ex_d, "Weight exponent d");
  auto* exps_gamma = exps->add_option("--gamma", ex_gamma, "Hardy weight exponent");
  auto* exps_fig1 = exps->add_option("--figure1-csv", fig1, "Write the exponent curves over an s grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Run run;
  run.subcommand = app.get_subcommands().front()->get_name();
  resolve_common(run, g);

  int code = kOk;
  if (*norms) {
    code = cmd_norms(run, profile, norms_profile, id, norms_id, s, norms_s, p_list, norms_p);
  } else if (*sweep) {
    code = cmd_sweep(run, g, s, sweep_s, p, sweep_p, eps_list, sweep_eps);
  } else if (*best) {
    clab_optimizer_config config;
    clab_optimizer_default(&config);
    const double bs = run.settings.get("s", best_s, s, 1.0);
    const double tp = run.settings.get("two_p", best_p, two_p, 4.0);
    config.family_size =
        parse_family(run.settings.get<std::string>("family", best_family, family, "gaussians:" + std::to_string(config.family_size)));
    config.restarts = run.settings.get("restarts", best_restarts, restarts, config.restarts);
    config.max_iters = run.settings.get("max_iters", best_iters, max_iters, config.max_iters);
    config.simplex_tol = run.settings.get("simplex_tol", best_tol, simplex_tol, config.simplex_tol);
    config.seed = run.settings.get("seed", g.seed_opt, g.seed, config.seed);
    config.threads = run.settings.get("threads", g.threads_opt, g.threads, config.threads);
    run.seed = config.seed;
    char* json = nullptr;
    check(clab_best_constant(bs, tp, &config, &run.quad, &json));
    emit(run, take(json) + "\n");
  } else if (*verify) {
    const std::string name = run.settings.get<std::string>("suite", verify_suite, suite, "all");
    const double t = run.settings.get("tol", verify_tol, tol, 1e-3);
    char* table = nullptr;
    char* json = nullptr;
    const clab_status st = clab_verify(name.c_str(), t, &run.quad, &table, &json);
    if (st != CLAB_OK && st != CLAB_VERIFY_FAILED) check(st);
    std::cout << take(table);
    const std::string checks = take(json);
    if (!run.out.empty()) {
      write_file(run.out, checks + "\n");
      run.outputs.push_back(run.out);
    }
    code = exit_of(st);
  } else if (*exps) {
    const auto es = run.settings.get_optional("s", exps_s, ex_s);
    const auto fig = run.settings.get_optional("figure1_csv", exps_fig1, fig1);
    if (!es && !fig) throw Failure{kUsage, "exponents needs --s or --figure1-csv"};
    if (es) {
      const auto ep = run.settings.get_optional("p", exps_p, ex_p);
      const auto eq = run.settings.get_optional("q", exps_q, ex_q);
      const auto ea = run.settings.get_optional("a", exps_a, ex_a);
      const auto ed = run.settings.get_optional("d", exps_d, ex_d);
      const auto eg = run.settings.get_optional("gamma", exps_gamma, ex_gamma);
      const auto c = [](const std::optional<std::string>& x) { return x ? x->c_str() : nullptr; };
      char* json = nullptr;
      char* table = nullptr;
      check(clab_exponents(es->c_str(), c(ep), c(eq), c(ea), c(ed), c(eg), &json, &table));
      std::cout << take(table);
      const std::string text = take(json);
      if (!run.out.empty()) {
        write_file(run.out, text + "\n");
        run.outputs.push_back(run.out);
      }
    }
    if (fig) {
      char* csv = nullptr;
      check(clab_figure1_csv(&csv));
      write_file(*fig, take(csv));
      run.outputs.push_back(*fig);
    }
  }
  write_manifest(run);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return main_dispatch(argc, argv);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumeric;
  }
}
