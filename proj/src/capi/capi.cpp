// Copyright 2026 The tracewit developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tracewit/tracewit.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <string>

#include "tracewit/errors.hpp"
#include "tracewit/ghz.hpp"
#include "tracewit/inequalities.hpp"
#include "tracewit/shadows.hpp"
#include "tracewit/spec_format.hpp"
#include "tracewit/werner.hpp"
#include "tracewit/witness.hpp"

struct tracewit_spec {
  tracewit::witness::WitnessSpec spec;
};

struct tracewit_state {
  tracewit::io::DescribedState state;
};

namespace {

thread_local std::string g_last_error = "ok";

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
tracewit_status guarded(F&& body) {
  try {
    body();
    g_last_error = "ok";
    return TRACEWIT_OK;
  } catch (const tracewit::ParseError& e) {
    g_last_error = e.what();
    return TRACEWIT_USAGE_ERROR;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return TRACEWIT_USAGE_ERROR;
  } catch (const tracewit::DimensionCapError& e) {
    g_last_error = e.what();
    return TRACEWIT_CAP_ERROR;
  } catch (const tracewit::SupportCapError& e) {
    g_last_error = e.what();
    return TRACEWIT_CAP_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TRACEWIT_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return TRACEWIT_INTERNAL_ERROR;
  }
}

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

// A file: state loaded without dims carries a single collapsed factor; for
// evaluation it must be reshaped to the spec's per-party layout.
tracewit::hilbert::DenseOperator state_for_spec(
    const tracewit::witness::WitnessSpec& spec,
    const tracewit::io::DescribedState& state) {
  tracewit::hilbert::DenseOperator rho = state.rho;
  if (rho.factors != spec.local_dims) {
    long long want = 1;
    for (int d : spec.local_dims) want *= d;
    if (rho.mat.rows() != want)
      throw std::invalid_argument(
          "state dimension " + std::to_string(rho.mat.rows()) +
          " does not match the spec's parties (total " + std::to_string(want) +
          ")");
    if (rho.factors.size() != 1)
      throw std::invalid_argument(
          "state factor layout does not match the spec's local dimensions");
    rho.factors = spec.local_dims;
  }
  return rho;
}

}  // namespace

extern "C" {

const char* tracewit_last_error(void) { return g_last_error.c_str(); }

void tracewit_string_free(char* s) { std::free(s); }

tracewit_status tracewit_spec_parse(const char* text, tracewit_spec** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    auto* handle = new tracewit_spec{tracewit::io::parse_witness_spec(text)};
    *out = handle;
  });
}

tracewit_status tracewit_spec_load(const char* path, tracewit_spec** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    auto* handle = new tracewit_spec{tracewit::io::load_witness_spec(path)};
    *out = handle;
  });
}

tracewit_status tracewit_spec_print(const tracewit_spec* spec, char** out) {
  return guarded([&] {
    require(spec != nullptr && out != nullptr, "null argument");
    *out = copy_string(tracewit::io::print_witness_spec(spec->spec));
    require(*out != nullptr, "allocation failed");
  });
}

void tracewit_spec_free(tracewit_spec* spec) { delete spec; }

tracewit_status tracewit_state_from_descriptor(const char* descriptor,
                                               tracewit_state** out) {
  return guarded([&] {
    require(descriptor != nullptr && out != nullptr, "null argument");
    auto* handle =
        new tracewit_state{tracewit::io::state_from_descriptor(descriptor)};
    *out = handle;
  });
}

void tracewit_state_free(tracewit_state* state) { delete state; }

tracewit_status tracewit_witness_eval(const tracewit_spec* spec,
                                      const tracewit_state* state,
                                      long long mem_cap,
                                      tracewit_eval_result* out) {
  return guarded([&] {
    require(spec != nullptr && state != nullptr && out != nullptr,
            "null argument");

    bool all_symbolic = true;
    for (const auto& f : spec->spec.factors)
      if (!f.symbolic) all_symbolic = false;

    double value = 0.0;
    double bound = 0.0;
    const char* backend = nullptr;
    if (state->state.group_ring && all_symbolic) {
      const auto& gs = *state->state.group_ring;
      require(static_cast<int>(spec->spec.local_dims.size()) == gs.parties,
              "spec party count does not match the werner state");
      for (int d : spec->spec.local_dims)
        require(d == gs.local_dim,
                "spec local dimensions do not match the werner state");
      std::size_t support_cap = mem_cap > 0
                                    ? static_cast<std::size_t>(mem_cap)
                                    : static_cast<std::size_t>(100000);
      value = tracewit::witness::evaluate_group_ring(spec->spec, gs.r,
                                                     gs.local_dim, nullptr,
                                                     support_cap);
      bound = 1e-8;
      backend = "group-ring";
    } else {
      long long dim_cap =
          mem_cap > 0 ? mem_cap : tracewit::hilbert::kDefaultDimCap;
      value = tracewit::witness::evaluate_dense(
          spec->spec, state_for_spec(spec->spec, state->state), dim_cap);
      bound = 1e-9;
      backend = "dense";
    }

    out->value = value;
    out->error_bound = bound;
    out->entangled_certified = value < -bound ? 1 : 0;
    std::snprintf(out->backend, sizeof out->backend, "%s", backend);
  });
}

tracewit_status tracewit_catalog_text(int n, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(n >= 2 && n <= 6, "catalog supports 2 <= n <= 6");
    *out = copy_string(tracewit::witness::catalog_text(n));
    require(*out != nullptr, "allocation failed");
  });
}

tracewit_status tracewit_ghz_curve(int n, int d_min, int d_max,
                                   const int* copies, int n_copies,
                                   int p_steps, char** csv_out) {
  return guarded([&] {
    require(csv_out != nullptr, "null argument");
    require(copies != nullptr && n_copies > 0, "need at least one copy count");
    tracewit::ghz::GhzScanConfig config;
    config.n = n;
    config.d_min = d_min;
    config.d_max = d_max;
    config.copies.assign(copies, copies + n_copies);
    config.p_steps = p_steps;
    *csv_out = copy_string(tracewit::ghz::curves_csv(config));
    require(*csv_out != nullptr, "allocation failed");
  });
}

tracewit_status tracewit_werner_scatter(int n, int d, int k, int samples,
                                        uint64_t seed, char** csv_out) {
  return guarded([&] {
    require(csv_out != nullptr, "null argument");
    require(n == 3 && d == 3 && k == 3,
            "werner scatter supports only n = d = k = 3");
    *csv_out = copy_string(tracewit::werner::scatter_csv(samples, seed));
    require(*csv_out != nullptr, "allocation failed");
  });
}

tracewit_status tracewit_shadow_estimate(const tracewit_spec* spec,
                                         const tracewit_state* state,
                                         int rounds, uint64_t seed,
                                         long long tuple_budget,
                                         char** csv_out) {
  return guarded([&] {
    require(spec != nullptr && state != nullptr && csv_out != nullptr,
            "null argument");
    tracewit::Rng master(seed);
    tracewit::Rng simulate_rng = master.derive(1);
    tracewit::Rng estimate_rng = master.derive(2);
    std::vector<tracewit::shadows::ShadowRecord> records =
        tracewit::shadows::simulate_rounds(
            state_for_spec(spec->spec, state->state), rounds, simulate_rng);
    long long budget = tuple_budget > 0
                           ? tuple_budget
                           : tracewit::shadows::kDefaultTupleBudget;
    tracewit::shadows::EstimationReport report = tracewit::shadows::estimate(
        spec->spec, records, estimate_rng, budget);
    char line[128];
    std::snprintf(line, sizeof line, "%.17g,%.17g,%d,%lld\n", report.estimate,
                  report.standard_error, report.rounds, report.tuples_used);
    *csv_out = copy_string(std::string("estimate,stderr,m,tuples_used\n") +
                           line);
    require(*csv_out != nullptr, "allocation failed");
  });
}

tracewit_status tracewit_verify_inequalities(int trials, int n, uint64_t seed,
                                             char** report_out) {
  return guarded([&] {
    require(report_out != nullptr, "null argument");
    tracewit::Rng rng(seed);
    tracewit::witness::InequalityReport report =
        tracewit::witness::verify_matrix_inequalities(trials, n, rng);
    *report_out =
        copy_string(tracewit::witness::inequality_report_text(report));
    require(*report_out != nullptr, "allocation failed");
  });
}

}  // extern "C"
