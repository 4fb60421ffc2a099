#include "coulab/coulab.h"

#include <cstring>
#include <string>

#include "coulab/counterexample.hpp"
#include "coulab/error.hpp"
#include "coulab/exponent_set.hpp"
#include "coulab/functionals.hpp"
#include "coulab/json_io.hpp"
#include "coulab/optimize.hpp"
#include "coulab/verify.hpp"

struct clab_profile {
  coulab::RadialProfile profile;
};

struct clab_sweep {
  coulab::SweepResult result;
};

namespace {

thread_local std::string last_error;

template <class F>
clab_status guard(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const coulab::InputError& e) {
    last_error = e.what();
    return CLAB_INVALID_INPUT;
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return CLAB_INVALID_INPUT;
  } catch (const coulab::NumericError& e) {
    last_error = e.what();
    return CLAB_NUMERIC_FAILURE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CLAB_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return CLAB_INTERNAL;
  }
}

void need(const void* ptr, const char* what) { coulab::require(ptr != nullptr, std::string(what) + " is NULL"); }

coulab::QuadratureSpec spec_of(const clab_quad* quad) {
  coulab::QuadratureSpec spec;
  if (quad) {
    spec.rel_tol = quad->rel_tol;
    spec.abs_tol = quad->abs_tol;
    spec.max_subdiv = quad->max_subdiv;
  }
  spec.validate();
  return spec;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(const coulab::QuadResult& r, clab_value* out) {
  out->value = r.value;
  out->error = r.error;
  out->converged = r.converged ? 1 : 0;
}

template <class F>
clab_status functional(const clab_profile* p, clab_value* out, F&& f) {
  return guard([&] {
    need(p, "profile");
    need(out, "output");
    put(f(p->profile), out);
    return CLAB_OK;
  });
}

clab_status give_profile(coulab::RadialProfile profile, clab_profile** out) {
  *out = new clab_profile{std::move(profile)};
  return CLAB_OK;
}

}  // namespace

extern "C" {

const char* clab_version(void) { return "0.1.0"; }

const char* clab_last_error(void) { return last_error.c_str(); }

void clab_free_string(char* s) { delete[] s; }

void clab_quad_default(clab_quad* quad) {
  if (!quad) return;
  const coulab::QuadratureSpec d;
  quad->rel_tol = d.rel_tol;
  quad->abs_tol = d.abs_tol;
  quad->max_subdiv = d.max_subdiv;
}

void clab_optimizer_default(clab_optimizer_config* config) {
  if (!config) return;
  const coulab::OptimizerConfig d;
  config->family_size = d.family_size;
  config->restarts = d.restarts;
  config->max_iters = d.max_iters;
  config->seed = d.seed;
  config->simplex_tol = d.simplex_tol;
  config->threads = d.threads;
}

clab_status clab_profile_load(const char* source, clab_profile** out) {
  return guard([&] {
    need(source, "source");
    need(out, "output");
    return give_profile(coulab::load_profile(source), out);
  });
}

clab_status clab_profile_tent(double epsilon, double R, double S, clab_profile** out) {
  return guard([&] {
    need(out, "output");
    return give_profile(coulab::RadialProfile::tent(epsilon, R, S), out);
  });
}

clab_status clab_profile_gaussian_mixture(const double* coeffs, const double* widths, size_t n, clab_profile** out) {
  return guard([&] {
    need(out, "output");
    coulab::require(n == 0 || (coeffs && widths), "coefficient arrays are NULL");
    return give_profile(coulab::RadialProfile::gaussian_mixture({coeffs, coeffs + n}, {widths, widths + n}), out);
  });
}

clab_status clab_profile_piecewise_linear(const double* knots, const double* values, size_t n, clab_profile** out) {
  return guard([&] {
    need(out, "output");
    coulab::require(n == 0 || (knots && values), "knot arrays are NULL");
    return give_profile(coulab::RadialProfile::piecewise_linear({knots, knots + n}, {values, values + n}), out);
  });
}

clab_status clab_profile_scaled(const clab_profile* p, double t, clab_profile** out) {
  return guard([&] {
    need(p, "profile");
    need(out, "output");
    return give_profile(p->profile.scaled(t), out);
  });
}

clab_status clab_profile_dilated(const clab_profile* p, double lambda, clab_profile** out) {
  return guard([&] {
    need(p, "profile");
    need(out, "output");
    return give_profile(p->profile.dilated(lambda), out);
  });
}

void clab_profile_free(clab_profile* p) { delete p; }

clab_status clab_profile_evaluate(const clab_profile* p, double r, double* out) {
  return guard([&] {
    need(p, "profile");
    need(out, "output");
    *out = coulab::evaluate(p->profile, r);
    return CLAB_OK;
  });
}

clab_status clab_profile_json(const clab_profile* p, char** out) {
  return guard([&] {
    need(p, "profile");
    need(out, "output");
    *out = dup_string(coulab::profile_to_json(p->profile).dump());
    return CLAB_OK;
  });
}

clab_status clab_lp_norm(const clab_profile* p, double exponent, const clab_quad* quad, clab_value* out) {
  return functional(p, out, [&](const auto& f) { return coulab::lp_norm(f, exponent, spec_of(quad)); });
}

clab_status clab_weighted_lq_norm(const clab_profile* p, double q, double a, const clab_quad* quad, clab_value* out) {
  return functional(p, out, [&](const auto& f) { return coulab::weighted_lq_norm(f, q, a, spec_of(quad)); });
}

clab_status clab_sobolev_spectral(const clab_profile* p, double s, const clab_quad* quad, clab_value* out) {
  return functional(p, out, [&](const auto& f) { return coulab::sobolev_spectral(f, s, spec_of(quad)); });
}

clab_status clab_sobolev_gagliardo(const clab_profile* p, double s, const clab_quad* quad, clab_value* out) {
  return functional(p, out, [&](const auto& f) { return coulab::sobolev_gagliardo(f, s, spec_of(quad)); });
}

clab_status clab_dirichlet_energy(const clab_profile* p, const clab_quad* quad, clab_value* out) {
  return functional(p, out, [&](const auto& f) { return coulab::dirichlet_energy(f, spec_of(quad)); });
}

clab_status clab_coulomb_newton(const clab_profile* p, const clab_quad* quad, clab_value* out) {
  return functional(p, out, [&](const auto& f) { return coulab::coulomb_newton(f, spec_of(quad)); });
}

clab_status clab_coulomb_spectral(const clab_profile* p, const clab_quad* quad, clab_value* out) {
  return functional(p, out, [&](const auto& f) { return coulab::coulomb_spectral(f, spec_of(quad)); });
}

clab_status clab_energy_norm(const clab_profile* p, double s, const clab_quad* quad, clab_value* out) {
  return functional(p, out, [&](const auto& f) { return coulab::energy_norm(f, s, spec_of(quad)); });
}

clab_status clab_ruiz_functional(const clab_profile* p, double alpha, const clab_quad* quad, clab_value* out) {
  return functional(p, out, [&](const auto& f) { return coulab::ruiz_functional(f, alpha, spec_of(quad)); });
}

clab_status clab_hardy_weight_integral(const clab_profile* p, double gamma, const clab_quad* quad, clab_value* out) {
  return functional(p, out, [&](const auto& f) { return coulab::hardy_weight_integral(f, gamma, spec_of(quad)); });
}

clab_status clab_pointwise_decay_ratio(const clab_profile* p, double s, double q, double a, const clab_quad* quad,
                                       clab_value* out) {
  return functional(p, out,
                    [&](const auto& f) { return coulab::pointwise_decay_ratio(f, s, q, a, spec_of(quad)); });
}

clab_status clab_quotient_j(const clab_profile* p, double two_p, double s, const clab_quad* quad, clab_value* out) {
  return functional(p, out, [&](const auto& f) { return coulab::quotient_J(f, two_p, s, spec_of(quad)); });
}

clab_status clab_norms_report(const clab_profile* p, const char* profile_id, double s, const double* ps, size_t n_ps,
                              const clab_quad* quad, char** json_out) {
  return guard([&] {
    need(p, "profile");
    need(json_out, "output");
    coulab::require(n_ps == 0 || ps, "exponent list is NULL");
    const auto rep = coulab::functional_report(p->profile, profile_id ? profile_id : "", s, {ps, ps + n_ps},
                                               spec_of(quad));
    *json_out = dup_string(rep.to_json().dump(2));
    return CLAB_OK;
  });
}

clab_status clab_sweep_run(double s, double p, const double* epsilons, size_t n, const clab_quad* quad, int threads,
                           clab_sweep** out) {
  return guard([&] {
    need(out, "output");
    coulab::require(n == 0 || epsilons, "epsilon list is NULL");
    *out = new clab_sweep{coulab::run_sweep(s, p, {epsilons, epsilons + n}, spec_of(quad), threads)};
    return CLAB_OK;
  });
}

void clab_sweep_free(clab_sweep* sweep) { delete sweep; }

size_t clab_sweep_size(const clab_sweep* sweep) { return sweep ? sweep->result.records.size() : 0; }

clab_status clab_sweep_record_at(const clab_sweep* sweep, size_t i, clab_sweep_record* out) {
  return guard([&] {
    need(sweep, "sweep");
    need(out, "output");
    coulab::require(i < sweep->result.records.size(), "sweep record index out of range");
    const auto& r = sweep->result.records[i];
    *out = clab_sweep_record{r.epsilon,     r.R,     r.S,           r.hs_norm_sq,       r.coulomb, r.lp_norm_p,
                             r.energy_norm, r.ratio, r.lemma_ratio, r.converged ? 1 : 0};
    return CLAB_OK;
  });
}

clab_status clab_sweep_csv(const clab_sweep* sweep, char** csv_out) {
  return guard([&] {
    need(sweep, "sweep");
    need(csv_out, "output");
    *csv_out = dup_string(coulab::sweep_csv(sweep->result.records));
    return CLAB_OK;
  });
}

clab_status clab_sweep_fit(const clab_sweep* sweep, double* measured, double* predicted) {
  return guard([&] {
    need(sweep, "sweep");
    need(measured, "output");
    need(predicted, "output");
    const auto fit = coulab::fit_slope(sweep->result.records, sweep->result.p, sweep->result.s);
    *measured = fit.measured;
    *predicted = fit.predicted;
    return CLAB_OK;
  });
}

clab_status clab_lambda_minimize(double A, double B, double a, double b, double* lambda_star, double* min_value) {
  return guard([&] {
    need(lambda_star, "output");
    need(min_value, "output");
    const auto m = coulab::lambda_minimize(A, B, a, b);
    *lambda_star = m.lambda_star;
    *min_value = m.min_value;
    return CLAB_OK;
  });
}

clab_status clab_best_constant(double s, double two_p, const clab_optimizer_config* config, const clab_quad* quad,
                               char** json_out) {
  return guard([&] {
    need(json_out, "output");
    coulab::OptimizerConfig c;
    if (config) {
      c.family_size = config->family_size;
      c.restarts = config->restarts;
      c.max_iters = config->max_iters;
      c.seed = config->seed;
      c.simplex_tol = config->simplex_tol;
      c.threads = config->threads;
    }
    *json_out = dup_string(coulab::best_constant_search(s, two_p, c, spec_of(quad)).to_json().dump(2));
    return CLAB_OK;
  });
}

clab_status clab_verify(const char* suite, double tol, const clab_quad* quad, char** table_out, char** json_out) {
  return guard([&] {
    need(suite, "suite");
    const auto checks = coulab::run_verify_suite(suite, tol, spec_of(quad));
    bool ok = true;
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      ok = ok && c.pass;
      j.push_back({{"name", c.name}, {"measured", c.measured}, {"relation", c.relation}, {"bound", c.bound},
                   {"pass", c.pass}});
    }
    if (table_out) *table_out = dup_string(coulab::format_checks(checks));
    if (json_out) *json_out = dup_string(j.dump(2));
    if (!ok) last_error = "verification failed";
    return ok ? CLAB_OK : CLAB_VERIFY_FAILED;
  });
}

clab_status clab_exponents(const char* s, const char* p, const char* q, const char* a, const char* d,
                           const char* gamma, char** json_out, char** table_out) {
  return guard([&] {
    need(s, "s");
    coulab::ExponentInputs in;
    in.s = s;
    const auto opt = [](const char* x) { return x ? std::optional<std::string>(x) : std::nullopt; };
    in.p = opt(p);
    in.q = opt(q);
    in.a = opt(a);
    in.d = opt(d);
    in.gamma = opt(gamma);
    const auto set = coulab::compute_exponents(in);
    if (json_out) *json_out = dup_string(set.to_json().dump(2));
    if (table_out) *table_out = dup_string(set.table());
    return CLAB_OK;
  });
}

clab_status clab_figure1_csv(char** csv_out) {
  return guard([&] {
    need(csv_out, "output");
    *csv_out = dup_string(coulab::figure1_csv());
    return CLAB_OK;
  });
}

}  // extern "C"
