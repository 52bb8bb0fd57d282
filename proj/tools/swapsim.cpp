// Copyright 2026 The swapsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: exact-algebra verification, quantum and classical
// simulation runs, CHSH reports and table rendering.
//
// Exit codes: 0 success, 1 check or runtime failure, 2 usage error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swapsim/classical.hpp"
#include "swapsim/contexts.hpp"
#include "swapsim/io.hpp"
#include "swapsim/protocol.hpp"
#include "swapsim/qcore.hpp"
#include "swapsim/stats.hpp"

namespace {

using namespace swapsim;

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------------------
// verify-algebra

class CheckReporter {
 public:
  void report(const std::string& name, double residual, double tol) {
    const bool ok = residual <= tol;
    all_ok_ = all_ok_ && ok;
    std::printf("[%s] %-42s residual %.3e  (tol %.0e)\n", ok ? "PASS" : "FAIL",
                name.c_str(), residual, tol);
  }

  bool all_ok() const { return all_ok_; }

 private:
  bool all_ok_ = true;
};

PairBasis bell_basis() {
  return {bell_state(BellKind::PsiMinus), bell_state(BellKind::PsiPlus),
          bell_state(BellKind::PhiMinus), bell_state(BellKind::PhiPlus)};
}

PairBasis product_basis() {
  return {product_state(0, 0), product_state(0, 1), product_state(1, 0),
          product_state(1, 1)};
}

double basis_orthonormality_residual(const PairBasis& basis) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const Amplitude g = basis[i].inner(basis[j]);
      worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

void print_coefficients(const char* title, const CoefficientMatrix& c,
                        const std::array<const char*, 4>& row_labels,
                        const std::array<const char*, 4>& col_labels) {
  std::printf("%s\n        ", title);
  for (const char* label : col_labels) std::printf("%8s", label);
  std::printf("\n");
  for (std::size_t m = 0; m < 4; ++m) {
    std::printf("  %-6s", row_labels[m]);
    for (std::size_t n = 0; n < 4; ++n) {
      std::printf("%8.3f", c[m][n].real());
    }
    std::printf("\n");
  }
}

double coefficient_residual(const CoefficientMatrix& c,
                            const double (&expected)[4][4]) {
  double worst = 0.0;
  for (std::size_t m = 0; m < 4; ++m)
    for (std::size_t n = 0; n < 4; ++n)
      worst = std::max(worst, std::abs(c[m][n] - expected[m][n]));
  return worst;
}

double identity_over_two_residual(const DensityMatrix& rho) {
  double worst = 0.0;
  for (int r = 0; r < 2; ++r) {
    for (int col = 0; col < 2; ++col) {
      const Amplitude expected = (r == col) ? Amplitude{0.5} : Amplitude{0.0};
      worst = std::max(worst, std::abs(rho.entry(r, col) - expected));
    }
  }
  return worst;
}

int cmd_verify_algebra() {
  CheckReporter checks;
  const StateVector& state = two_singlet_state();

  checks.report("two-singlet state norm",
                std::abs(squared_norm(state.amplitudes()) - 1.0), kExactTol);
  checks.report("bell basis orthonormality",
                basis_orthonormality_residual(bell_basis()), kExactTol);
  checks.report("product basis orthonormality",
                basis_orthonormality_residual(product_basis()), kExactTol);

  // expansion over the outer pair (1,4) and the inner pair (2,3)
  const CoefficientMatrix bell_coeffs =
      expand_in_pair_bases(state, bell_basis(), bell_basis());
  const std::array<const char*, 4> bell_labels = {"psi-", "psi+", "phi-",
                                                  "phi+"};
  std::printf("\n");
  print_coefficients(
      "bell (x) bell coefficients (rows: pair(1,4), cols: pair(2,3)):",
      bell_coeffs, bell_labels, bell_labels);
  const double bell_expected[4][4] = {{-0.5, 0, 0, 0},
                                      {0, 0.5, 0, 0},
                                      {0, 0, 0.5, 0},
                                      {0, 0, 0, -0.5}};
  checks.report("bell (x) bell expansion",
                coefficient_residual(bell_coeffs, bell_expected), kExactTol);

  const CoefficientMatrix product_coeffs =
      expand_in_pair_bases(state, product_basis(), product_basis());
  const std::array<const char*, 4> product_labels = {"00", "01", "10", "11"};
  std::printf("\n");
  print_coefficients(
      "product (x) product coefficients (rows: pair(1,4), cols: pair(2,3)):",
      product_coeffs, product_labels, product_labels);
  const double product_expected[4][4] = {{0, 0, 0, -0.5},
                                         {0, 0, 0.5, 0},
                                         {0, 0.5, 0, 0},
                                         {-0.5, 0, 0, 0}};
  checks.report("product (x) product expansion",
                coefficient_residual(product_coeffs, product_expected),
                kExactTol);

  double parseval = 0.0;
  for (const auto& row : bell_coeffs)
    for (const Amplitude& c : row) parseval += std::norm(c);
  checks.report("parseval sum", std::abs(parseval - 1.0), kExactTol);

  // reconstruct the state from the coefficients
  {
    double worst = 0.0;
    const PairBasis b14 = bell_basis();
    const PairBasis b23 = bell_basis();
    for (std::size_t idx = 0; idx < 16; ++idx) {
      const int b1 = static_cast<int>(idx >> 3) & 1;
      const int b2 = static_cast<int>(idx >> 2) & 1;
      const int b3 = static_cast<int>(idx >> 1) & 1;
      const int b4 = static_cast<int>(idx) & 1;
      Amplitude acc{0.0, 0.0};
      for (std::size_t m = 0; m < 4; ++m) {
        for (std::size_t n = 0; n < 4; ++n) {
          acc += bell_coeffs[m][n] * b14[m].amplitude(b1, b4) *
                 b23[n].amplitude(b2, b3);
        }
      }
      worst = std::max(worst, std::abs(acc - state[idx]));
    }
    checks.report("expansion round-trip", worst, kExactTol);
  }

  // every single-particle reduction is I/2
  {
    double worst = 0.0;
    for (int k = 1; k <= 4; ++k) {
      worst = std::max(worst,
                       identity_over_two_residual(partial_trace(state, {k})));
    }
    const DensityMatrix rho1 = partial_trace(state, {1});
    std::printf("\nreduced density matrix of particle 1:\n");
    for (int r = 0; r < 2; ++r) {
      std::printf("  %6.3f%+.3fi  %6.3f%+.3fi\n", rho1.entry(r, 0).real(),
                  rho1.entry(r, 0).imag(), rho1.entry(r, 1).real(),
                  rho1.entry(r, 1).imag());
    }
    checks.report("single-particle reductions = I/2", worst, kExactTol);
  }

  // tracing either member of any maximally entangled pair gives I/2
  {
    double worst = 0.0;
    for (BellKind kind : {BellKind::PsiMinus, BellKind::PsiPlus,
                          BellKind::PhiMinus, BellKind::PhiPlus}) {
      for (PairSlot slot : {PairSlot::First, PairSlot::Second}) {
        worst = std::max(worst, identity_over_two_residual(
                                    partial_trace(bell_state(kind), slot)));
      }
    }
    checks.report("pair-state reductions = I/2", worst, kExactTol);
  }

  // projector completeness and idempotence on seeded random states
  {
    RngStream rng(2026);
    double completeness = 0.0;
    double idempotence = 0.0;
    for (int rep = 0; rep < 64; ++rep) {
      std::array<Amplitude, 16> raw{};
      double norm2 = 0.0;
      for (auto& a : raw) {
        a = Amplitude{rng.uniform01() - 0.5, rng.uniform01() - 0.5};
        norm2 += std::norm(a);
      }
      for (auto& a : raw) a /= std::sqrt(norm2);
      const StateVector random_state(raw);
      for (ContextKind kind : {ContextKind::Bell, ContextKind::Product}) {
        const Context& ctx = context_outcomes(kind);
        RawVector sum{};
        for (int k = 0; k < 4; ++k) {
          const RawVector once = apply_pair_projector(ctx, k, random_state);
          const RawVector twice = apply_pair_projector(ctx, k, once);
          for (std::size_t i = 0; i < 16; ++i) {
            sum[i] += once[i];
            idempotence = std::max(idempotence, std::abs(twice[i] - once[i]));
          }
        }
        for (std::size_t i = 0; i < 16; ++i) {
          completeness =
              std::max(completeness, std::abs(sum[i] - random_state[i]));
        }
      }
    }
    checks.report("projector completeness", completeness, kExactTol);
    checks.report("projector idempotence", idempotence, kExactTol);
  }

  // each context outcome occurs with probability 1/4
  {
    double worst = 0.0;
    for (ContextKind kind : {ContextKind::Bell, ContextKind::Product}) {
      const Context& ctx = context_outcomes(kind);
      for (int k = 0; k < 4; ++k) {
        const double p = squared_norm(apply_pair_projector(ctx, k, state));
        worst = std::max(worst, std::abs(p - 0.25));
      }
    }
    checks.report("outcome probabilities = 1/4", worst, kExactTol);
  }

  std::printf("\n%s\n", checks.all_ok() ? "all algebra checks passed"
                                        : "ALGEBRA CHECKS FAILED");
  return checks.all_ok() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// simulate-quantum

struct QuantumOptions {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  std::string ordering = "eve_last";
  std::string eve_policy = "fixed:bell";
  std::vector<double> alice_angles = {0.0};
  std::vector<double> bob_angles = {0.0};
  std::string output;
  std::string format;
};

io::Format resolve_format(const std::string& format_flag,
                          const std::string& path) {
  if (!format_flag.empty()) return *io::parse_format(format_flag);
  return io::format_for_path(path);
}

int cmd_simulate_quantum(const QuantumOptions& opts) {
  RunPlan plan;
  plan.trials = opts.trials;
  plan.master_seed = opts.seed;
  plan.ordering = *parse_ordering(opts.ordering);
  plan.policy = *EvePolicy::parse(opts.eve_policy);
  plan.settings.clear();
  for (double a : opts.alice_angles) {
    for (double b : opts.bob_angles) {
      plan.settings.emplace_back(a, b);
    }
  }

  const std::vector<TrialRecord> records = run_trials(plan);
  const io::Format format = resolve_format(opts.format, opts.output);
  io::write_file(opts.output, io::trials_to_string(records, format));

  std::printf("wrote %llu trial record(s) to %s (%s)\n",
              static_cast<unsigned long long>(records.size()),
              opts.output.c_str(), io::to_string(format));
  for (ContextKind kind : {ContextKind::Bell, ContextKind::Product}) {
    std::array<std::uint64_t, 4> counts{};
    std::uint64_t total = 0;
    for (const TrialRecord& r : records) {
      if (r.eve_context == kind) {
        ++counts[static_cast<std::size_t>(r.eve_outcome_index)];
        ++total;
      }
    }
    if (total == 0) continue;
    const Context& ctx = context_outcomes(kind);
    std::printf("eve outcomes [%s] n=%llu:", to_string(kind),
                static_cast<unsigned long long>(total));
    for (int k = 0; k < 4; ++k) {
      std::printf("  %s: %llu", ctx.labels[static_cast<std::size_t>(k)],
                  static_cast<unsigned long long>(
                      counts[static_cast<std::size_t>(k)]));
    }
    std::printf("\n");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// simulate-classical

struct ClassicalOptions {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  std::string interpretation = "bernoulli:0.5";
  bool reference = false;
  std::string output;
  std::string format;
};

int cmd_simulate_classical(const ClassicalOptions& opts) {
  io::ClassicalDataset dataset;
  if (opts.reference) {
    const classical::ReferenceTable table = classical::replay_reference_table();
    dataset.rows = table.rows;
    dataset.views.assign(table.views.begin(), table.views.end());
  } else {
    RngStream rng = RngStream::for_stream(opts.seed, 0);
    dataset.rows = classical::generate_rows(opts.trials, rng);
    const auto policy = *classical::InterpretationPolicy::parse(
        opts.interpretation);
    classical::LabeledView view;
    view.choices =
        classical::assign_interpretations(opts.trials, policy, rng);
    view.labels.reserve(dataset.rows.size());
    for (std::size_t i = 0; i < dataset.rows.size(); ++i) {
      view.labels.push_back(
          classical::label_row(dataset.rows[i], view.choices[i]));
    }
    dataset.views.push_back(std::move(view));
  }

  const io::Format format = resolve_format(opts.format, opts.output);
  io::write_file(opts.output, io::classical_to_string(dataset, format));
  std::printf("wrote %llu classical row(s) with %llu view(s) to %s (%s)\n",
              static_cast<unsigned long long>(dataset.rows.size()),
              static_cast<unsigned long long>(dataset.views.size()),
              opts.output.c_str(), io::to_string(format));

  if (!dataset.views.empty()) {
    std::map<std::string, std::uint64_t> counts;
    for (const classical::PartitionLabel label : dataset.views[0].labels) {
      ++counts[classical::to_string(label)];
    }
    std::printf("view 1 labels:");
    for (const auto& [label, count] : counts) {
      std::printf("  %s: %llu", label.c_str(),
                  static_cast<unsigned long long>(count));
    }
    std::printf("\n");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// chsh

struct ChshOptions {
  std::string input;
  std::string format;
  std::string key;
  double a = 0.0;
  double a_prime = kPi / 2.0;
  double b = kPi / 4.0;
  double b_prime = -kPi / 4.0;
};

int cmd_chsh(const ChshOptions& opts) {
  const io::Format format = resolve_format(opts.format, opts.input);
  const std::vector<TrialRecord> records =
      io::trials_from_string(io::read_file(opts.input), format);

  std::optional<PartitionKey> key;
  if (!opts.key.empty()) key = PartitionKey::parse(opts.key);

  const stats::ChshSettings settings{opts.a, opts.a_prime, opts.b,
                                     opts.b_prime};
  const stats::ChshResult result = stats::chsh(records, key, settings);

  std::printf("conditioning: %s\n",
              key ? key->key_string().c_str() : "unconditioned");
  const char* names[4] = {"E(a ,b )", "E(a ,b')", "E(a',b )", "E(a',b')"};
  for (std::size_t i = 0; i < 4; ++i) {
    const stats::CorrelationEstimate& e = result.correlators[i];
    std::printf("%s = %+.4f   n = %-8llu std error = %.4f\n", names[i],
                e.value, static_cast<unsigned long long>(e.n), e.std_error);
  }
  std::printf("S = E(a,b) + E(a,b') + E(a',b) - E(a',b') = %+.4f\n",
              result.s_value);
  std::printf("|S| = %.4f   combined std error = %.4f\n",
              std::abs(result.s_value), result.std_error);
  if (result.violated()) {
    std::printf("classical bound |S| <= 2: violated (+%.1f sigma)\n",
                result.violation_sigma());
  } else {
    std::printf("classical bound |S| <= 2: not violated (%.1f sigma)\n",
                result.violation_sigma());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// render-table

struct RenderOptions {
  std::string input;
  std::string format;
  std::string output;
};

int cmd_render_table(const RenderOptions& opts) {
  const io::Format format = resolve_format(opts.format, opts.input);
  const io::ClassicalDataset dataset =
      io::classical_from_string(io::read_file(opts.input), format);
  const std::string table = io::render_table(dataset);
  if (opts.output.empty()) {
    std::fputs(table.c_str(), stdout);
  } else {
    io::write_file(opts.output, table);
    std::printf("wrote table to %s\n", opts.output.c_str());
  }
  return 0;
}

std::string check_finite_angle(const std::string& text) {
  try {
    if (std::isfinite(std::stod(text))) return {};
  } catch (const std::exception&) {
  }
  return "angle '" + text + "' is not a finite number";
}

std::string check_eve_policy(const std::string& text) {
  return EvePolicy::parse(text)
             ? std::string{}
             : "invalid eve policy '" + text +
                   "' (want fixed:bell, fixed:product, alternate or "
                   "bernoulli:<q>)";
}

std::string check_interpretation(const std::string& text) {
  return classical::InterpretationPolicy::parse(text)
             ? std::string{}
             : "invalid interpretation policy '" + text +
                   "' (want fixed:c, fixed:p or bernoulli:<q>)";
}

std::string check_key(const std::string& text) {
  return PartitionKey::parse(text)
             ? std::string{}
             : "invalid partition key '" + text +
                   "' (want e.g. bell:psi- or product:01)";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"delayed-choice entanglement swapping simulator"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "key-value config file; options live in a [subcommand] "
                 "section and are overridden by flags");

  std::function<int()> command;

  CLI::App* verify =
      app.add_subcommand("verify-algebra",
                         "run the exact-algebra checks and print residuals");
  verify->callback([&command] { command = cmd_verify_algebra; });

  QuantumOptions quantum;
  CLI::App* simulate_quantum = app.add_subcommand(
      "simulate-quantum", "sample delayed-choice trials into a log file");
  simulate_quantum->fallthrough();
  simulate_quantum->add_option("-n,--trials", quantum.trials,
                               "number of trials");
  simulate_quantum->add_option("-s,--seed", quantum.seed, "master seed");
  simulate_quantum->add_option("--ordering", quantum.ordering,
                               "event order: eve_first or eve_last")
      ->check(CLI::IsMember({"eve_first", "eve_last"}));
  simulate_quantum
      ->add_option("--eve-policy", quantum.eve_policy,
                   "fixed:bell, fixed:product, alternate or bernoulli:<q> "
                   "(q = probability of the bell context)")
      ->check(CLI::Validator(check_eve_policy, "EVEPOLICY"));
  simulate_quantum
      ->add_option("--alice-angles", quantum.alice_angles,
                   "alice angles in radians (comma separated)")
      ->delimiter(',')
      ->check(CLI::Validator(check_finite_angle, "ANGLE"));
  simulate_quantum
      ->add_option("--bob-angles", quantum.bob_angles,
                   "bob angles in radians; trials cycle round-robin over "
                   "the alice x bob angle grid")
      ->delimiter(',')
      ->check(CLI::Validator(check_finite_angle, "ANGLE"));
  simulate_quantum->add_option("-o,--output", quantum.output, "output path")
      ->required();
  simulate_quantum->add_option("--format", quantum.format,
                               "csv or json (default: by file extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  simulate_quantum->callback(
      [&command, &quantum] { command = [&quantum] { return cmd_simulate_quantum(quantum); }; });

  ClassicalOptions classical_opts;
  CLI::App* simulate_classical = app.add_subcommand(
      "simulate-classical",
      "draw classical singlet pairs and label them under a view");
  simulate_classical->fallthrough();
  simulate_classical->add_option("-n,--trials", classical_opts.trials,
                                 "number of rows");
  simulate_classical->add_option("-s,--seed", classical_opts.seed,
                                 "master seed");
  simulate_classical
      ->add_option("--interpretation", classical_opts.interpretation,
                   "per-row c/p policy: fixed:c, fixed:p or bernoulli:<q> "
                   "(q = probability of p)")
      ->check(CLI::Validator(check_interpretation, "INTERPRETATION"));
  simulate_classical->add_flag(
      "--reference", classical_opts.reference,
      "emit the bundled 30-row dataset with its three views "
      "(ignores --trials, --seed and --interpretation)");
  simulate_classical
      ->add_option("-o,--output", classical_opts.output, "output path")
      ->required();
  simulate_classical->add_option("--format", classical_opts.format,
                                 "csv or json (default: by file extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  simulate_classical->callback([&command, &classical_opts] {
    command = [&classical_opts] { return cmd_simulate_classical(classical_opts); };
  });

  ChshOptions chsh_opts;
  CLI::App* chsh_cmd = app.add_subcommand(
      "chsh", "estimate the CHSH functional from a trial log");
  chsh_cmd->fallthrough();
  chsh_cmd->add_option("-i,--input", chsh_opts.input, "trial log path")
      ->required();
  chsh_cmd->add_option("--format", chsh_opts.format,
                       "csv or json (default: by file extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  chsh_cmd
      ->add_option("-k,--key", chsh_opts.key,
                   "partition key, e.g. bell:psi- (default: unconditioned)")
      ->check(CLI::Validator(check_key, "KEY"));
  chsh_cmd->add_option("--a", chsh_opts.a, "alice setting a (radians)")
      ->check(CLI::Validator(check_finite_angle, "ANGLE"));
  chsh_cmd->add_option("--a-prime", chsh_opts.a_prime, "alice setting a'")
      ->check(CLI::Validator(check_finite_angle, "ANGLE"));
  chsh_cmd->add_option("--b", chsh_opts.b, "bob setting b")
      ->check(CLI::Validator(check_finite_angle, "ANGLE"));
  chsh_cmd->add_option("--b-prime", chsh_opts.b_prime, "bob setting b'")
      ->check(CLI::Validator(check_finite_angle, "ANGLE"));
  chsh_cmd->callback([&command, &chsh_opts] {
    command = [&chsh_opts] { return cmd_chsh(chsh_opts); };
  });

  RenderOptions render_opts;
  CLI::App* render = app.add_subcommand(
      "render-table", "print a classical row file as a fixed-width table");
  render->fallthrough();
  render->add_option("-i,--input", render_opts.input, "classical row file")
      ->required();
  render->add_option("--format", render_opts.format,
                     "csv or json (default: by file extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  render->add_option("-o,--output", render_opts.output,
                     "output path (default: stdout)");
  render->callback([&command, &render_opts] {
    command = [&render_opts] { return cmd_render_table(render_opts); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return command();
  } catch (const stats::EmptySampleError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
