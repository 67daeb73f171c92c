// Copyright 2026 The bpps Authors
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

// Command-line front end. Exit codes: 0 ok, 1 usage, 2 I/O or parse error,
// 3 infeasible or invalid input, 4 search limit reached.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "bpps/bpps.hpp"

namespace {

namespace fs = std::filesystem;

enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kInvalid = 3,
  kLimit = 4,
};

// Worker count from BPPS_WORKERS, else the hardware concurrency.
int DefaultWorkers() {
  if (const char* env = std::getenv("BPPS_WORKERS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::logic_error&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

// Runs job(i) for i in [0, count) on up to `workers` threads.
template <typename Job>
void ParallelFor(std::size_t count, int workers, const Job& job) {
  const std::size_t threads =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, workers)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) job(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::string Decimal2(const bpps::Rational& r) { return r.decimal(2); }

void PrintSolution(std::ostream& os, const bpps::Instance& inst,
                   const bpps::Solution& sol) {
  bpps::io::write_solution(os, inst.name, sol);
}

void MaybeSaveSolution(const std::string& path, const bpps::Instance& inst,
                       const bpps::Solution& sol) {
  if (!path.empty()) bpps::io::save_solution(path, inst.name, sol);
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string out_dir = ".";
  bool benchmark = false;
  std::uint64_t base_seed = 0;
  bpps::gen::GeneratorConfig cfg;
  std::string cost = "costs";
  std::string item = "small";
  std::string setup = "small";
};

int RunGen(const GenArgs& a) {
  std::vector<bpps::gen::GeneratorConfig> configs;
  if (a.benchmark) {
    configs = bpps::gen::benchmark_configs(a.base_seed);
  } else {
    bpps::gen::GeneratorConfig cfg = a.cfg;
    cfg.cost_mode = *bpps::gen::ParseCostMode(a.cost);
    cfg.item_size = *bpps::gen::ParseSizeClass(a.item);
    cfg.setup_size = *bpps::gen::ParseSizeClass(a.setup);
    configs.push_back(cfg);
  }
  std::error_code ec;
  fs::create_directories(a.out_dir, ec);
  if (ec) throw bpps::io::IoError("cannot create '" + a.out_dir + "'");
  for (const auto& cfg : configs) {
    const bpps::Instance inst = bpps::gen::generate(cfg);
    const std::string path =
        (fs::path(a.out_dir) / bpps::gen::canonical_file_name(cfg)).string();
    bpps::io::save_instance(path, inst);
  }
  std::cout << "wrote " << configs.size() << " instance"
            << (configs.size() == 1 ? "" : "s") << " to " << a.out_dir << "\n";
  return kOk;
}

int RunBounds(const std::string& path, const std::string& bpp_mode) {
  const bpps::Instance inst = bpps::io::load_instance(path);
  bpps::require_valid(inst);
  const bpps::BoundsReport b = bpps::compute_bounds(inst);
  std::cout << "instance " << inst.name << "\n";
  std::cout << "gamma";
  for (auto g : b.gamma) std::cout << ' ' << g;
  std::cout << "\n";
  std::cout << "k_lower " << b.k_lower << "\n";
  std::cout << "k_upper " << bpps::k_upper(inst, bpp_mode == "exact"
                                                     ? bpps::BppMode::kExact
                                                     : bpps::BppMode::kHeuristic)
            << " (" << bpp_mode << ")\n";
  std::cout << "zeta_n " << b.zeta_n.str() << " (" << Decimal2(b.zeta_n) << ")\n";
  std::cout << "zeta_dag " << b.zeta_dag.str() << " (" << Decimal2(b.zeta_dag)
            << ")\n";
  std::cout << "zeta_ddag " << b.zeta_ddag.str() << " ("
            << Decimal2(b.zeta_ddag) << ")\n";
  return kOk;
}

int RunCha(const std::string& path, const std::string& bpp_mode,
           std::uint64_t seed, const std::string& out) {
  const bpps::Instance inst = bpps::io::load_instance(path);
  bpps::ChaOptions options;
  options.mode = bpp_mode == "exact" ? bpps::BppMode::kExact
                                     : bpps::BppMode::kHeuristic;
  options.seed = seed;
  const bpps::ChaResult result = bpps::cha(inst, options);
  const auto& t = result.trace;
  std::cout << "# termination " << bpps::ToString(t.termination) << "\n";
  std::cout << "# beta";
  for (int b : t.beta) std::cout << ' ' << b;
  std::cout << "\n";
  std::cout << "# single_bin_classes";
  for (int c : t.single_bin_classes) std::cout << ' ' << c + 1;
  std::cout << "\n";
  if (t.delta) std::cout << "# delta " << *t.delta << "\n";
  if (t.merge_class) std::cout << "# merge_class " << *t.merge_class + 1 << "\n";
  std::cout << "# value " << t.value << "\n";
  PrintSolution(std::cout, inst, result.solution);
  MaybeSaveSolution(out, inst, result.solution);
  return kOk;
}

struct SolveArgs {
  std::string instance;
  std::string method = "auto";
  std::int64_t node_limit = bpps::kDefaultNodeLimit;
  double time_limit = bpps::kDefaultTimeLimitSeconds;
  std::string out;
};

int RunSolve(const SolveArgs& a) {
  const bpps::Instance inst = bpps::io::load_instance(a.instance);
  const bool brute =
      a.method == "brute" ||
      (a.method == "auto" && inst.item_count() <= bpps::kDefaultBruteForceItems);
  bpps::ExactResult result;
  if (brute) {
    result = bpps::brute_force(inst);
  } else {
    result = bpps::branch_and_bound(inst, {a.node_limit, a.time_limit});
  }
  std::cout << "# method " << (brute ? "brute-force" : "branch-and-bound") << "\n";
  std::cout << "# status " << bpps::ToString(result.status) << "\n";
  std::cout << "# psi " << result.value << "\n";
  std::cout << "# lower_bound " << result.lower_bound << "\n";
  std::cout << "# nodes " << result.nodes << "\n";
  PrintSolution(std::cout, inst, result.solution);
  MaybeSaveSolution(a.out, inst, result.solution);
  if (result.status == bpps::SolveStatus::kLimitReached) {
    std::cerr << "error: search limit reached; best value " << result.value
              << ", lower bound " << result.lower_bound << "\n";
    return kLimit;
  }
  return kOk;
}

int RunEmitModel(const std::string& path, const std::string& variant_text,
                 const std::string& out, bool exact_k) {
  const bpps::Instance inst = bpps::io::load_instance(path);
  const auto variant = bpps::ParseVariant(variant_text);
  bpps::ChaOptions star;
  star.mode = exact_k ? bpps::BppMode::kExact : bpps::BppMode::kHeuristic;
  const bpps::milp::MilpModel model = bpps::milp::build_model(inst, *variant, star);
  if (out.empty() || out == "-") {
    bpps::milp::write_lp(std::cout, model);
  } else {
    bpps::milp::emit_lp_file(model, out);
    std::cout << "variables " << model.variable_count() << "\n";
    std::cout << "constraints " << model.constraint_count() << "\n";
    std::cout << "k " << model.k << "\n";
  }
  return kOk;
}

int RunVerify(const std::string& instance_path, const std::string& solution_path,
              const std::string& assignment_path, const std::string& variant_text) {
  const bpps::Instance inst = bpps::io::load_instance(instance_path);
  bpps::require_valid(inst, /*allow_trivial=*/true);
  bpps::Solution sol;
  if (!assignment_path.empty()) {
    const auto variant = bpps::ParseVariant(variant_text);
    const auto model = bpps::milp::build_model(inst, *variant);
    std::ifstream in(assignment_path);
    if (!in) throw bpps::io::IoError("cannot open '" + assignment_path + "'");
    sol = bpps::milp::import_solution(inst, model, in);
  } else {
    const bpps::io::SolutionFile file = bpps::io::load_solution(solution_path);
    sol = file.solution;
  }
  const bpps::ValidationReport report = bpps::check_feasible(inst, sol);
  if (!report.ok()) {
    std::cerr << "error: infeasible solution: " << report.summary() << "\n";
    return kInvalid;
  }
  const bpps::CostBreakdown cost = bpps::solution_cost(inst, sol);
  const bpps::report::FeatureReport f = bpps::report::feature_report(inst, sol);
  std::cout << "feasible\n";
  std::cout << "cost " << cost.total << " (bins " << cost.bin_cost_total
            << ", setups " << cost.setup_cost_total << ")\n";
  std::cout << "bins " << f.bins_used << "\n";
  std::cout << "items_per_bin " << Decimal2(f.items_per_bin) << "\n";
  std::cout << "classes_per_bin " << Decimal2(f.classes_per_bin) << "\n";
  std::cout << "fill_pct " << Decimal2(f.fill_percent) << "\n";
  return kOk;
}

struct ReportArgs {
  std::string dir;
  std::string out;
  bool solve = false;
  std::int64_t node_limit = bpps::kDefaultNodeLimit;
  double time_limit = bpps::kDefaultTimeLimitSeconds;
  int workers = 0;
};

bpps::report::ReportRow ReportOne(const std::string& path, const ReportArgs& a) {
  const bpps::Instance inst = bpps::io::load_instance(path);
  bpps::require_valid(inst);
  bpps::report::ReportRow row;
  row.instance = inst.name;
  row.n = inst.item_count();
  row.m = inst.class_count();
  row.d = inst.capacity;
  row.r = inst.bin_cost;
  const bpps::BoundsReport b = bpps::compute_bounds(inst);
  row.k_lower = b.k_lower;
  row.k_upper = bpps::k_upper(inst, bpps::BppMode::kHeuristic);
  row.zeta_n = b.zeta_n;
  row.zeta_dag = b.zeta_dag;
  row.zeta_ddag = b.zeta_ddag;

  bpps::ChaOptions cha_options;
  cha_options.mode = bpps::BppMode::kHeuristic;
  const bpps::ChaResult heuristic = bpps::cha(inst, cha_options);
  row.cha_value = heuristic.trace.value;
  row.cha_termination = bpps::ToString(heuristic.trace.termination);

  bpps::Solution best = heuristic.solution;
  row.upper = heuristic.trace.value;
  row.source = "cha";
  row.status = "heuristic";
  row.lower = bpps::root_lower_bound(inst);

  const fs::path sol_path = fs::path(path).replace_extension(".sol");
  if (fs::exists(sol_path)) {
    const bpps::io::SolutionFile file = bpps::io::load_solution(sol_path.string());
    const bpps::CostBreakdown cost = bpps::solution_cost(inst, file.solution);
    if (cost.total <= row.upper) {
      row.upper = cost.total;
      best = file.solution;
      row.source = "file";
    }
  }
  if (a.solve) {
    const bpps::ExactResult r =
        bpps::branch_and_bound(inst, {a.node_limit, a.time_limit});
    row.lower = std::max(*row.lower, r.lower_bound);
    if (r.value <= row.upper) {
      row.upper = r.value;
      best = r.solution;
      row.source = "solve";
    }
    row.status = bpps::ToString(r.status);
  }
  if (row.lower && *row.lower >= row.upper) row.status = "optimal";
  row.features = bpps::report::feature_report(inst, best);
  return row;
}

int RunReport(const ReportArgs& a) {
  std::vector<std::string> paths;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(a.dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      paths.push_back(entry.path().string());
    }
  }
  if (ec) throw bpps::io::IoError("cannot read directory '" + a.dir + "'");
  std::sort(paths.begin(), paths.end());
  std::vector<bpps::report::ReportRow> rows(paths.size());
  std::vector<std::string> errors(paths.size());
  ParallelFor(paths.size(), a.workers > 0 ? a.workers : DefaultWorkers(),
              [&](std::size_t i) {
                try {
                  rows[i] = ReportOne(paths[i], a);
                } catch (const std::exception& e) {
                  errors[i] = paths[i] + ": " + e.what();
                }
              });
  for (const auto& e : errors) {
    if (!e.empty()) {
      std::cerr << "error: " << e << "\n";
      return kInvalid;
    }
  }
  const bpps::report::Summary s = bpps::report::summarize(rows);
  if (a.out.empty() || a.out == "-") {
    bpps::report::write_csv(std::cout, rows);
    return kOk;
  }
  std::ostringstream csv;
  bpps::report::write_csv(csv, rows);
  bpps::io::detail::WriteFile(a.out, csv.str());
  auto opt = [](const std::optional<bpps::Rational>& v) {
    return v ? Decimal2(*v) : std::string("-");
  };
  std::cout << "instances " << s.instances << "\n";
  std::cout << "optimal " << s.optimal << "\n";
  std::cout << "mean_open_gap_pct " << opt(s.mean_open_gap) << "\n";
  std::cout << "mean_items_per_bin " << opt(s.mean_items_per_bin) << "\n";
  std::cout << "mean_classes_per_bin " << opt(s.mean_classes_per_bin) << "\n";
  std::cout << "mean_fill_pct " << opt(s.mean_fill_percent) << "\n";
  return kOk;
}

struct WorstArgs {
  std::string family = "unit";
  int n_min = 2;
  int n_max = 50;
  int n = 10;
  std::int64_t theta_min = 1;
  std::int64_t theta_max = 200;
  std::int64_t r = 1;
  std::int64_t f1 = 0;
  std::string out_dir;
};

int RunWorstCase(const WorstArgs& a) {
  const auto family = *bpps::gen::ParseWorstCaseFamily(a.family);
  std::cout << "family,n,theta,psi,zeta_n,zeta_dag,zeta_ddag,ratio_n,ratio_dag,"
               "ratio_ddag\n";
  auto emit = [&](int n, std::int64_t theta) {
    bpps::Instance inst = bpps::gen::worst_case(family, n, theta, a.r, a.f1);
    // Every bin holds exactly one item in both families.
    const bpps::Rational psi(bpps::CheckedMul(n, bpps::CheckedAdd(a.r, a.f1)));
    const bpps::BoundsReport b = bpps::compute_bounds(inst);
    auto cell = [](const bpps::Rational& v) { return bpps::report::Cell(v); };
    std::cout << a.family << ',' << n << ','
              << (family == bpps::gen::WorstCaseFamily::kHalfItems
                      ? std::to_string(theta)
                      : std::string())
              << ',' << psi.str() << ',' << cell(b.zeta_n) << ','
              << cell(b.zeta_dag) << ',' << cell(b.zeta_ddag) << ','
              << cell(b.zeta_n / psi) << ',' << cell(b.zeta_dag / psi) << ','
              << cell(b.zeta_ddag / psi) << '\n';
    if (!a.out_dir.empty()) {
      std::error_code ec;
      fs::create_directories(a.out_dir, ec);
      bpps::io::save_instance(
          (fs::path(a.out_dir) / (inst.name + ".txt")).string(), inst);
    }
  };
  if (family == bpps::gen::WorstCaseFamily::kUnitItems) {
    for (int n = a.n_min; n <= a.n_max; ++n) emit(n, 0);
  } else {
    for (std::int64_t t = a.theta_min; t <= a.theta_max; ++t) emit(a.n, t);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bin packing with setups: bounds, heuristics, exact solvers"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate benchmark instances");
  gen->add_option("--out-dir", gen_args.out_dir, "output directory");
  gen->add_flag("--benchmark", gen_args.benchmark, "write the full 480-instance grid");
  gen->add_option("--base-seed", gen_args.base_seed, "benchmark base seed");
  gen->add_option("--n", gen_args.cfg.n, "number of items");
  gen->add_option("--m", gen_args.cfg.m, "number of classes");
  gen->add_option("--d", gen_args.cfg.d, "bin capacity");
  gen->add_option("--cost", gen_args.cost, "costs | nocosts")
      ->check(CLI::IsMember({"costs", "nocosts"}));
  gen->add_option("--item", gen_args.item, "item sizes: small | large")
      ->check(CLI::IsMember({"small", "large"}));
  gen->add_option("--setup", gen_args.setup, "setup sizes: small | large")
      ->check(CLI::IsMember({"small", "large"}));
  gen->add_option("--seed", gen_args.cfg.seed, "instance seed");
  gen->add_flag("--free-form", gen_args.cfg.free_form,
                "allow n, m, d outside the benchmark grid");

  std::string instance;
  std::string bpp_mode = "heuristic";
  auto* bounds = app.add_subcommand("bounds", "print closed-form LP bounds");
  bounds->add_option("--instance", instance, "instance file")->required();
  bounds->add_option("--bpp-mode", bpp_mode, "k_upper packing: exact | heuristic")
      ->check(CLI::IsMember({"exact", "heuristic"}));

  std::string cha_mode = "exact";
  std::uint64_t cha_seed = 0;
  std::string cha_out;
  auto* cha = app.add_subcommand("cha", "run the three-step constructive heuristic");
  cha->add_option("--instance", instance, "instance file")->required();
  cha->add_option("--bpp-mode", cha_mode, "exact | heuristic")
      ->check(CLI::IsMember({"exact", "heuristic"}));
  cha->add_option("--seed", cha_seed, "heuristic permutation seed");
  cha->add_option("--out", cha_out, "write the solution file here");

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "solve to optimality");
  solve->add_option("--instance", solve_args.instance, "instance file")->required();
  solve->add_option("--method", solve_args.method, "auto | brute | bb")
      ->check(CLI::IsMember({"auto", "brute", "bb"}));
  solve->add_option("--node-limit", solve_args.node_limit, "branch-and-bound nodes");
  solve->add_option("--time-limit", solve_args.time_limit, "seconds");
  solve->add_option("--out", solve_args.out, "write the solution file here");

  std::string variant = "n";
  std::string model_out;
  bool exact_k = false;
  auto* emit = app.add_subcommand("emit-model", "write the LP-format model");
  emit->add_option("--instance", instance, "instance file")->required();
  emit->add_option("--variant", variant, "n | dag | ddag | star")
      ->check(CLI::IsMember({"n", "dag", "ddag", "star"}));
  emit->add_option("--out", model_out, "LP file (default stdout)");
  emit->add_flag("--exact-k", exact_k, "star: exact per-class packings for k");

  std::string solution_path;
  std::string assignment_path;
  auto* verify = app.add_subcommand("verify", "check a solution against an instance");
  verify->add_option("--instance", instance, "instance file")->required();
  auto* sol_opt = verify->add_option("--solution", solution_path, "solution file");
  auto* asg_opt = verify->add_option("--assignment", assignment_path,
                                     "solver variable assignment");
  sol_opt->excludes(asg_opt);
  verify->add_option("--variant", variant, "model variant of the assignment")
      ->check(CLI::IsMember({"n", "dag", "ddag", "star"}));

  ReportArgs report_args;
  auto* report = app.add_subcommand("report", "aggregate a directory into CSV");
  report->add_option("--dir", report_args.dir, "directory of instances")->required();
  report->add_option("--out", report_args.out, "CSV file (default stdout)");
  report->add_flag("--solve", report_args.solve, "run branch-and-bound per instance");
  report->add_option("--node-limit", report_args.node_limit, "nodes per instance");
  report->add_option("--time-limit", report_args.time_limit, "seconds per instance");
  report->add_option("--workers", report_args.workers,
                     "parallel workers (default BPPS_WORKERS or all cores)");

  WorstArgs worst_args;
  auto* worst = app.add_subcommand("worstcase", "sweep an adversarial family");
  worst->add_option("--family", worst_args.family, "unit | half")
      ->check(CLI::IsMember({"unit", "half"}));
  worst->add_option("--n-min", worst_args.n_min, "unit family: first n");
  worst->add_option("--n-max", worst_args.n_max, "unit family: last n");
  worst->add_option("--n", worst_args.n, "half family: items");
  worst->add_option("--theta-min", worst_args.theta_min, "half family: first theta");
  worst->add_option("--theta-max", worst_args.theta_max, "half family: last theta");
  worst->add_option("--r", worst_args.r, "bin cost");
  worst->add_option("--f1", worst_args.f1, "setup cost");
  worst->add_option("--out-dir", worst_args.out_dir, "also write the instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return RunGen(gen_args);
    if (*bounds) return RunBounds(instance, bpp_mode);
    if (*cha) return RunCha(instance, cha_mode, cha_seed, cha_out);
    if (*solve) return RunSolve(solve_args);
    if (*emit) return RunEmitModel(instance, variant, model_out, exact_k);
    if (*verify) {
      if (solution_path.empty() && assignment_path.empty()) {
        std::cerr << "error: verify needs --solution or --assignment\n";
        return kUsage;
      }
      return RunVerify(instance, solution_path, assignment_path, variant);
    }
    if (*report) return RunReport(report_args);
    if (*worst) return RunWorstCase(worst_args);
  } catch (const bpps::io::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const bpps::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const bpps::bpp::UnresolvedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kLimit;
  } catch (const bpps::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}
