// Copyright 2026 The Authors.
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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "fairdiv/ef1.hpp"
#include "fairdiv/enumerate.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/io.hpp"
#include "fairdiv/matroid.hpp"
#include "fairdiv/matroid_algorithms.hpp"
#include "fairdiv/mms.hpp"

namespace fairdiv {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open \"" + path + "\" for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot open \"" + path + "\" for writing");
  out << bytes;
  out.flush();
  if (!out) throw InputError("failed while writing \"" + path + "\"");
}

int parse_nonneg_int(const std::string& text, const char* what) {
  if (text.empty()) throw InputError(std::string(what) + " is empty");
  long long parsed = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw InputError(std::string(what) + " \"" + text +
                       "\" must be a nonnegative integer");
    }
    parsed = parsed * 10 + (c - '0');
    if (parsed > std::numeric_limits<int>::max()) {
      throw InputError(std::string(what) + " \"" + text + "\" is out of range");
    }
  }
  return static_cast<int>(parsed);
}

AgentOrdering parse_order(const std::string& text) {
  std::vector<int> order;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) {
    order.push_back(parse_nonneg_int(token, "--order entry"));
  }
  if (text.empty() || text.back() == ',') {
    throw InputError("--order \"" + text + "\" is not a comma-separated list");
  }
  return AgentOrdering(order);
}

std::unique_ptr<MatroidOracle> make_oracle(const std::string& spec,
                                           const ParsedInstance& parsed) {
  const int n_goods = parsed.instance.good_count();
  if (spec.rfind("uniform:", 0) == 0) {
    const int rank = parse_nonneg_int(spec.substr(8), "uniform rank");
    return std::make_unique<UniformMatroid>(n_goods, rank);
  }
  if (spec == "partition") {
    return std::make_unique<PartitionMatroid>(
        PartitionMatroid::from_categories(parsed.constraints));
  }
  if (spec.rfind("graphic:", 0) == 0) {
    const std::string text = read_file(spec.substr(8));
    std::vector<std::pair<int, int>> edges;
    int vertex_count = 0;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      std::istringstream fields(line);
      int u = 0;
      int v = 0;
      if (!(fields >> u)) continue;  // blank line
      std::string extra;
      if (!(fields >> v) || (fields >> extra)) {
        throw InputError("edge file line \"" + line +
                         "\" is not a \"u v\" pair");
      }
      if (u < 0 || v < 0) {
        throw InputError("edge file vertices must be nonnegative");
      }
      vertex_count = std::max(vertex_count, std::max(u, v) + 1);
      edges.emplace_back(u, v);
    }
    if (static_cast<int>(edges.size()) != n_goods) {
      throw InputError("edge file has " + std::to_string(edges.size()) +
                       " edges for " + std::to_string(n_goods) + " goods");
    }
    return std::make_unique<GraphicMatroid>(vertex_count, std::move(edges));
  }
  throw InputError("unknown matroid \"" + spec +
                   "\": expected uniform:R, partition, or graphic:EDGEFILE");
}

std::vector<Rational> own_values(const Instance& instance,
                                 const Allocation& allocation) {
  std::vector<Rational> values;
  for (int i = 0; i < instance.agent_count(); ++i) {
    values.push_back(
        instance.bundle_value(i, allocation.bundles[static_cast<size_t>(i)]));
  }
  return values;
}

bool all_bundles_independent(const MatroidOracle& oracle,
                             const Allocation& allocation) {
  for (const Bundle& bundle : allocation.bundles) {
    if (!oracle.is_independent(bundle)) return false;
  }
  return true;
}

std::uint64_t checked_budget(long long budget) {
  if (budget <= 0) throw InputError("--budget must be positive");
  return static_cast<std::uint64_t>(budget);
}

int run_solve_ef1(const std::string& instance_path,
                  const std::string& order_text, const std::string& out_path) {
  const ParsedInstance parsed = parse_instance(read_file(instance_path));
  std::optional<AgentOrdering> initial;
  if (!order_text.empty()) initial = parse_order(order_text);
  const Allocation allocation =
      ef1_allocate(parsed.instance, parsed.constraints, initial);

  ResultParts parts;
  parts.allocation = allocation;
  parts.agent_values = own_values(parsed.instance, allocation);
  parts.feasible = is_feasible(allocation, parsed.constraints);
  parts.reports = {check_ef1(parsed.instance, allocation),
                   check_efx(parsed.instance, allocation),
                   check_efl(parsed.instance, allocation)};
  write_file(out_path, emit_result(parts, parsed.good_names));
  return 0;
}

int run_solve_mms(const std::string& instance_path, bool exact_cmms,
                  bool lb_cmms, const std::string& out_path) {
  const ParsedInstance parsed = parse_instance(read_file(instance_path));
  std::optional<ShareMode> forced;
  if (exact_cmms) forced = ShareMode::kExact;
  if (lb_cmms) forced = ShareMode::kLowerBound;
  const MmsOutcome outcome =
      approx_mms_allocate(parsed.instance, parsed.constraints, forced);

  ResultParts parts;
  parts.allocation = outcome.allocation;
  parts.agent_values = own_values(parsed.instance, outcome.allocation);
  parts.feasible = is_feasible(outcome.allocation, parsed.constraints);
  parts.mms = MmsSection{outcome.mode, outcome.shares, outcome.ratios};
  write_file(out_path, emit_result(parts, parsed.good_names));
  return 0;
}

int run_solve_matroid_ef1(const std::string& instance_path,
                          const std::string& matroid_spec,
                          const std::string& out_path) {
  const ParsedInstance parsed = parse_instance(read_file(instance_path));
  const std::unique_ptr<MatroidOracle> oracle =
      make_oracle(matroid_spec, parsed);
  const Allocation allocation = swap_ef1_identical(parsed.instance, *oracle);

  ResultParts parts;
  parts.allocation = allocation;
  parts.agent_values = own_values(parsed.instance, allocation);
  parts.independent = all_bundles_independent(*oracle, allocation);
  parts.reports = {check_ef1(parsed.instance, allocation)};
  write_file(out_path, emit_result(parts, parsed.good_names));
  return 0;
}

int run_check(const std::string& instance_path,
              const std::string& allocation_path,
              const std::string& matroid_spec) {
  const ParsedInstance parsed = parse_instance(read_file(instance_path));
  const Allocation allocation =
      parse_allocation(read_file(allocation_path), parsed.good_names,
                       parsed.instance.agent_count());

  ResultParts parts;
  parts.agent_values = own_values(parsed.instance, allocation);
  parts.feasible = is_feasible(allocation, parsed.constraints);
  parts.cap_violation = find_cap_violation(allocation, parsed.constraints);
  if (!matroid_spec.empty()) {
    parts.independent =
        all_bundles_independent(*make_oracle(matroid_spec, parsed), allocation);
  }
  parts.reports = {
      evaluate_property(parsed.instance, allocation, FairnessProperty::kEf1),
      evaluate_property(parsed.instance, allocation, FairnessProperty::kEfx),
      evaluate_property(parsed.instance, allocation, FairnessProperty::kEfl)};
  std::cout << emit_result(parts, parsed.good_names);
  return 0;
}

int run_cmms(const std::string& instance_path, int agent, long long budget) {
  const ParsedInstance parsed = parse_instance(read_file(instance_path));
  const Rational share = cmms_exact(parsed.instance, parsed.constraints, agent,
                                    checked_budget(budget));
  std::cout << rational_to_string(share) << "\n";
  return 0;
}

int run_enumerate(const std::string& instance_path, long long budget) {
  const ParsedInstance parsed = parse_instance(read_file(instance_path));
  enumerate_feasible(parsed.instance, parsed.constraints,
                     checked_budget(budget), [&](const Allocation& allocation) {
                       std::cout << allocation_to_json_line(allocation,
                                                            parsed.good_names)
                                 << "\n";
                       return true;
                     });
  return 0;
}

int dispatch(int argc, char** argv) {
  CLI::App app{
      "Fair division of indivisible goods under cardinality and matroid "
      "constraints"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string allocation_path;
  std::string out_path;
  std::string order_text;
  std::string matroid_spec;
  bool exact_cmms = false;
  bool lb_cmms = false;
  int agent = 0;
  long long budget = static_cast<long long>(kDefaultEnumerationBudget);

  CLI::App* solve_ef1 = app.add_subcommand(
      "solve-ef1", "Compute a cap-feasible EF1 allocation");
  solve_ef1->add_option("--instance", instance_path, "Instance JSON file")
      ->required();
  solve_ef1->add_option("--order", order_text,
                        "Initial agent order, e.g. 0,2,1");
  solve_ef1->add_option("--out", out_path, "Result JSON file")->required();

  CLI::App* solve_mms = app.add_subcommand(
      "solve-mms", "Compute a cap-feasible allocation with maximin share "
                   "ratios");
  solve_mms->add_option("--instance", instance_path, "Instance JSON file")
      ->required();
  CLI::Option* exact_flag = solve_mms->add_flag(
      "--exact-cmms", exact_cmms, "Require exact shares (may exhaust budget)");
  CLI::Option* lb_flag = solve_mms->add_flag(
      "--lb-cmms", lb_cmms, "Use the cloned-valuation lower bound");
  exact_flag->excludes(lb_flag);
  lb_flag->excludes(exact_flag);
  solve_mms->add_option("--out", out_path, "Result JSON file")->required();

  CLI::App* solve_matroid = app.add_subcommand(
      "solve-matroid-ef1",
      "Compute an EF1 allocation under a matroid constraint (identical "
      "valuations)");
  solve_matroid->add_option("--instance", instance_path, "Instance JSON file")
      ->required();
  solve_matroid
      ->add_option("--matroid", matroid_spec,
                   "uniform:R, partition, or graphic:EDGEFILE")
      ->required();
  solve_matroid->add_option("--out", out_path, "Result JSON file")->required();

  CLI::App* check = app.add_subcommand(
      "check", "Evaluate feasibility and fairness of a given allocation");
  check->add_option("--instance", instance_path, "Instance JSON file")
      ->required();
  check->add_option("--allocation", allocation_path, "Allocation JSON file")
      ->required();
  check->add_option("--matroid", matroid_spec,
                    "Also check bundle independence against this matroid");

  CLI::App* cmms = app.add_subcommand(
      "cmms", "Print one agent's exact constrained maximin share");
  cmms->add_option("--instance", instance_path, "Instance JSON file")
      ->required();
  cmms->add_option("--agent", agent, "Agent id, zero-based")->required();
  cmms->add_option("--budget", budget, "Search leaf budget");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "Stream every cap-feasible allocation as JSON lines");
  enumerate->add_option("--instance", instance_path, "Instance JSON file")
      ->required();
  enumerate->add_option("--budget", budget, "Enumeration budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (solve_ef1->parsed()) {
    return run_solve_ef1(instance_path, order_text, out_path);
  }
  if (solve_mms->parsed()) {
    return run_solve_mms(instance_path, exact_cmms, lb_cmms, out_path);
  }
  if (solve_matroid->parsed()) {
    return run_solve_matroid_ef1(instance_path, matroid_spec, out_path);
  }
  if (check->parsed()) {
    return run_check(instance_path, allocation_path, matroid_spec);
  }
  if (cmms->parsed()) return run_cmms(instance_path, agent, budget);
  if (enumerate->parsed()) return run_enumerate(instance_path, budget);
  return 2;
}

}  // namespace
}  // namespace fairdiv

int main(int argc, char** argv) {
  try {
    return fairdiv::dispatch(argc, argv);
  } catch (const fairdiv::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fairdiv::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const fairdiv::InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const fairdiv::InternalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 5;
  }
}
