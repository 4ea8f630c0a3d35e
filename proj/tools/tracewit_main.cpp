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

// Command-line surface for the tracewit library. Exit codes: 0 success,
// 2 usage error, 3 numerical-cap error, 4 internal error. All outputs are
// deterministic given the subcommand, its parameters, and --seed.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tracewit/tracewit.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 4;

int exit_code_for(tracewit_status status) {
  switch (status) {
    case TRACEWIT_OK:
      return 0;
    case TRACEWIT_USAGE_ERROR:
      return kExitUsage;
    case TRACEWIT_CAP_ERROR:
      return kExitCap;
    default:
      return kExitInternal;
  }
}

int fail(tracewit_status status) {
  std::fprintf(stderr, "error: %s\n", tracewit_last_error());
  return exit_code_for(status);
}

int write_output(const std::string& out_path, const char* text) {
  if (out_path.empty()) {
    std::fputs(text, stdout);
    return 0;
  }
  std::ofstream stream(out_path, std::ios::binary);
  if (!stream) {
    std::fprintf(stderr, "error: cannot open output path %s\n",
                 out_path.c_str());
    return kExitInternal;
  }
  stream << text;
  if (!stream.flush()) {
    std::fprintf(stderr, "error: write failed for %s\n", out_path.c_str());
    return kExitInternal;
  }
  return 0;
}

struct SpecHandle {
  tracewit_spec* ptr = nullptr;
  ~SpecHandle() { tracewit_spec_free(ptr); }
};

struct StateHandle {
  tracewit_state* ptr = nullptr;
  ~StateHandle() { tracewit_state_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  ~StringHandle() { tracewit_string_free(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "tracewit: nonlinear entanglement witnesses from trace-polynomial and "
      "immanant inequalities"};
  app.require_subcommand(1);

  // catalog
  auto* catalog = app.add_subcommand(
      "catalog", "List the immanant-inequality witness families");
  int catalog_n = 3;
  std::string catalog_out;
  catalog->add_option("--n", catalog_n, "Number of letters (2..6)");
  catalog->add_option("--out", catalog_out, "Output path (default stdout)");

  // witness-eval
  auto* witness_eval = app.add_subcommand(
      "witness-eval", "Evaluate a witness spec on copies of a named state");
  std::string eval_spec_path;
  std::string eval_state;
  std::string eval_out;
  long long eval_mem_cap = 0;
  witness_eval->add_option("--spec", eval_spec_path, "Witness spec file")
      ->required();
  witness_eval
      ->add_option("--state", eval_state,
                   "State descriptor (ghz:n=3,d=2,p=1.0, bell:phi_plus, "
                   "mixed:n=2,d=2, werner:n=3,d=3,seed=7, file:rho.csv)")
      ->required();
  witness_eval->add_option("--mem-cap", eval_mem_cap,
                           "Backend cap override (dense: dimension, "
                           "group-ring: support size)");
  witness_eval->add_option("--out", eval_out, "Output path (default stdout)");

  // ghz-curve
  auto* ghz_curve = app.add_subcommand(
      "ghz-curve", "Noisy-GHZ detection curves vs the PPT threshold");
  int ghz_n = 4;
  int ghz_d_min = 4;
  int ghz_d_max = 30;
  std::vector<int> ghz_copies{2, 3, 4};
  int ghz_p_steps = 201;
  std::string ghz_out;
  ghz_curve->add_option("--n", ghz_n, "Number of parties");
  ghz_curve->add_option("--d-min", ghz_d_min, "Smallest local dimension");
  ghz_curve->add_option("--d-max", ghz_d_max, "Largest local dimension");
  ghz_curve->add_option("--copies", ghz_copies, "Copy counts k (k > d skipped)")
      ->delimiter(',');
  ghz_curve->add_option("--p-steps", ghz_p_steps, "Grid points on 0 <= p <= 1");
  ghz_curve->add_option("--out", ghz_out, "Output path (default stdout)");

  // werner-sample
  auto* werner_sample = app.add_subcommand(
      "werner-sample", "Random Werner scatter (n = d = k = 3)");
  int werner_n = 3;
  int werner_d = 3;
  int werner_k = 3;
  int werner_samples = 5000;
  std::uint64_t werner_seed = 42;
  std::string werner_out;
  werner_sample->add_option("--n", werner_n, "Parties (must be 3)");
  werner_sample->add_option("--d", werner_d, "Local dimension (must be 3)");
  werner_sample->add_option("--k", werner_k, "Copies (must be 3)");
  werner_sample->add_option("--samples", werner_samples, "Number of samples");
  werner_sample->add_option("--seed", werner_seed, "Master seed");
  werner_sample->add_option("--out", werner_out, "Output path (default stdout)");

  // shadow-estimate
  auto* shadow_estimate = app.add_subcommand(
      "shadow-estimate",
      "Simulate randomized measurements and estimate a witness spec");
  std::string shadow_spec_path;
  std::string shadow_state;
  int shadow_rounds = 5000;
  std::uint64_t shadow_seed = 7;
  long long shadow_budget = 0;
  std::string shadow_out;
  shadow_estimate->add_option("--spec", shadow_spec_path, "Witness spec file")
      ->required();
  shadow_estimate->add_option("--state", shadow_state, "State descriptor")
      ->required();
  shadow_estimate->add_option("--rounds", shadow_rounds,
                              "Number of measured copies m");
  shadow_estimate->add_option("--seed", shadow_seed, "Master seed");
  shadow_estimate->add_option("--tuple-budget", shadow_budget,
                              "Max evaluated k-tuples (default 1000000)");
  shadow_estimate->add_option("--out", shadow_out,
                              "Output path (default stdout)");

  // verify-inequalities
  auto* verify = app.add_subcommand(
      "verify-inequalities",
      "Monte Carlo check of the immanant inequalities on PSD Gram matrices");
  int verify_trials = 500;
  int verify_n = 3;
  std::uint64_t verify_seed = 1;
  std::string verify_out;
  verify->add_option("--trials", verify_trials, "Random instances per row");
  verify->add_option("--n", verify_n, "Matrix size (2..6)");
  verify->add_option("--seed", verify_seed, "Master seed");
  verify->add_option("--out", verify_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (catalog->parsed()) {
    StringHandle text;
    tracewit_status status = tracewit_catalog_text(catalog_n, &text.ptr);
    if (status != TRACEWIT_OK) return fail(status);
    return write_output(catalog_out, text.ptr);
  }

  if (witness_eval->parsed()) {
    SpecHandle spec;
    tracewit_status status = tracewit_spec_load(eval_spec_path.c_str(), &spec.ptr);
    if (status != TRACEWIT_OK) return fail(status);
    StateHandle state;
    status = tracewit_state_from_descriptor(eval_state.c_str(), &state.ptr);
    if (status != TRACEWIT_OK) return fail(status);
    tracewit_eval_result result;
    status = tracewit_witness_eval(spec.ptr, state.ptr, eval_mem_cap, &result);
    if (status != TRACEWIT_OK) return fail(status);
    char buffer[192];
    std::snprintf(buffer, sizeof buffer,
                  "value,backend,verdict,error_bound\n%.17g,%s,%s,%.17g\n",
                  result.value, result.backend,
                  result.entangled_certified ? "entangled-certified"
                                             : "inconclusive",
                  result.error_bound);
    return write_output(eval_out, buffer);
  }

  if (ghz_curve->parsed()) {
    if (ghz_n % 2 == 1)
      std::fprintf(stderr, "warning: odd n: witness never detects\n");
    StringHandle csv;
    tracewit_status status = tracewit_ghz_curve(
        ghz_n, ghz_d_min, ghz_d_max, ghz_copies.data(),
        static_cast<int>(ghz_copies.size()), ghz_p_steps, &csv.ptr);
    if (status != TRACEWIT_OK) return fail(status);
    return write_output(ghz_out, csv.ptr);
  }

  if (werner_sample->parsed()) {
    StringHandle csv;
    tracewit_status status = tracewit_werner_scatter(
        werner_n, werner_d, werner_k, werner_samples, werner_seed, &csv.ptr);
    if (status != TRACEWIT_OK) return fail(status);
    return write_output(werner_out, csv.ptr);
  }

  if (shadow_estimate->parsed()) {
    SpecHandle spec;
    tracewit_status status =
        tracewit_spec_load(shadow_spec_path.c_str(), &spec.ptr);
    if (status != TRACEWIT_OK) return fail(status);
    StateHandle state;
    status = tracewit_state_from_descriptor(shadow_state.c_str(), &state.ptr);
    if (status != TRACEWIT_OK) return fail(status);
    StringHandle csv;
    status = tracewit_shadow_estimate(spec.ptr, state.ptr, shadow_rounds,
                                      shadow_seed, shadow_budget, &csv.ptr);
    if (status != TRACEWIT_OK) return fail(status);
    return write_output(shadow_out, csv.ptr);
  }

  if (verify->parsed()) {
    StringHandle report;
    tracewit_status status = tracewit_verify_inequalities(
        verify_trials, verify_n, verify_seed, &report.ptr);
    if (status != TRACEWIT_OK) return fail(status);
    return write_output(verify_out, report.ptr);
  }

  std::fprintf(stderr, "error: no subcommand\n");
  return kExitUsage;
}
