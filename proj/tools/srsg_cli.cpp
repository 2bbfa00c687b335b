// srsg: solver and simulation tool for Schelling resource selection games.
//
// Subcommands: generate, solve, dynamics, check, reduce, report, bench.
// Exit codes: 0 success, 1 domain error (bad file, invalid instance, budget),
// 2 usage error.

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "srsg/srsg.hpp"

using namespace srsg;

namespace {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write file: " + path);
  out << content;
}

Instance load_instance(const std::string& path) {
  Instance g = parse_instance_text(read_file(path));
  require_valid(g);
  return g;
}

Rational tau_flag(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw DomainError(e.what());
  }
}

MoveMode parse_mode(const std::string& text) {
  if (text == "aware") return MoveMode::ImpactAware;
  if (text == "blind") return MoveMode::ImpactBlind;
  throw DomainError("mode must be 'aware' or 'blind', got '" + text + "'");
}

std::uint64_t parse_seed(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    std::uint64_t seed = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return seed;
  } catch (const std::exception&) {
    throw DomainError(what + " needs an unsigned integer seed, got '" + text + "'");
  }
}

Scheduler parse_scheduler(const std::string& text) {
  if (text == "rr") return Scheduler::round_robin();
  if (text == "best") return Scheduler::best_gain();
  if (text.rfind("rand:", 0) == 0)
    return Scheduler::random_seeded(parse_seed(text.substr(5), "rand:SEED"));
  throw DomainError("scheduler must be rr, best, or rand:SEED, got '" + text + "'");
}

std::string welfare_line(const Rational& w) {
  std::ostringstream out;
  out << "welfare " << w.to_string() << " (" << w.to_double() << ")";
  return out.str();
}

// ---- generate ---------------------------------------------------------------

struct GenerateOptions {
  std::string family;
  std::string tau = "3/5";
  std::int64_t alpha = 100;
  std::int64_t x = 6;
  std::int64_t y = 12;
  std::int32_t resources = 4;
  std::int32_t red = 4;
  std::int32_t blue = 4;
  double edge_prob = 0.5;
  std::uint64_t seed = 0;
  std::string out;
  std::string profiles_prefix;
};

void run_generate(const GenerateOptions& opt) {
  Instance instance;
  std::vector<std::pair<std::string, StrategyProfile>> profiles;

  if (opt.family == "figure1") {
    Figure1 fig = figure1(tau_flag(opt.tau));
    instance = std::move(fig.instance);
    profiles = {{"opt", fig.opt}, {"iae", fig.iae}, {"ibe", fig.ibe}};
  } else if (opt.family == "poa") {
    PoaFamily family = poa_family(tau_flag(opt.tau), opt.alpha);
    instance = std::move(family.instance);
    profiles = {{"worst", family.worst_iae}, {"opt", family.opt}};
  } else if (opt.family == "posgap") {
    PosGapFamily family = pos_gap_family(opt.x, opt.y);
    instance = std::move(family.instance);
    profiles = {{"opt", family.opt}, {"ibe", family.ibe}};
  } else if (opt.family == "greedy-ce") {
    instance = greedy_iae_counterexample();
  } else if (opt.family == "random") {
    RandomParams params;
    params.n_resources = opt.resources;
    params.n_red = opt.red;
    params.n_blue = opt.blue;
    params.edge_prob = opt.edge_prob;
    params.tau = tau_flag(opt.tau);
    params.seed = opt.seed;
    instance = random_instance(params);
    std::cerr << "seed " << opt.seed << "\n";
  } else {
    throw DomainError("unknown family '" + opt.family +
                      "' (expected figure1|poa|posgap|greedy-ce|random)");
  }

  require_valid(instance);
  write_output(opt.out, serialize_instance(instance));
  if (!opt.profiles_prefix.empty())
    for (const auto& [name, profile] : profiles)
      write_output(opt.profiles_prefix + "-" + name + ".profile",
                   serialize_profile(profile));
}

// ---- solve ------------------------------------------------------------------

struct SolveOptions {
  std::string algo;
  std::string in;
  std::string out;
  std::string removal_log;
  std::int64_t max_profiles = 10'000'000;
};

bool resource_degrees_at_most_two(const Instance& g) {
  for (const auto& accessors : g.accessor_lists())
    if (accessors.size() > 2) return false;
  return true;
}

void run_solve(const SolveOptions& opt) {
  Instance g = load_instance(opt.in);
  EnumerationBudget budget{opt.max_profiles};

  StrategyProfile profile;
  if (opt.algo == "greedy") {
    GreedyResult result = compute_ibe_greedy(g);
    profile = std::move(result.profile);
    if (!opt.removal_log.empty())
      write_output(opt.removal_log, removal_log_to_csv(result.removal_log));
  } else if (opt.algo == "brute") {
    profile = brute_force_optimum(g, budget);
  } else if (opt.algo == "deg2sat") {
    auto result = decide_all_satisfied_agent_deg2(g);
    if (!result) {
      std::cout << "unsatisfiable: no profile gives every agent utility 1\n";
      return;
    }
    profile = std::move(*result);
  } else if (opt.algo == "deg2match") {
    profile = optimum_resource_deg2(g);
  } else if (opt.algo == "approx2") {
    profile = approx_iae_2(g);
  } else if (opt.algo == "optimum") {
    profile = resource_degrees_at_most_two(g) ? optimum_resource_deg2(g)
                                              : brute_force_optimum(g, budget);
  } else {
    throw DomainError("unknown algorithm '" + opt.algo +
                      "' (expected greedy|optimum|deg2sat|deg2match|approx2|brute)");
  }

  write_output(opt.out, serialize_profile(profile));
  std::cout << welfare_line(social_welfare(g, profile)) << "\n";
}

// ---- dynamics ----------------------------------------------------------------

struct DynamicsOptions {
  std::string in;
  std::string mode = "blind";
  std::string sched = "rr";
  std::string init = "greedy";
  std::int64_t max_steps = 0;  // 0: n^5
  std::string trace;
};

void run_dynamics_command(const DynamicsOptions& opt) {
  Instance g = load_instance(opt.in);

  StrategyProfile init;
  if (opt.init == "greedy") {
    init = compute_ibe_greedy(g).profile;
  } else if (opt.init.rfind("random:", 0) == 0) {
    init = random_profile(g, parse_seed(opt.init.substr(7), "random:SEED"));
  } else if (opt.init.rfind("file:", 0) == 0) {
    init = parse_profile_text(read_file(opt.init.substr(5)), g);
  } else {
    throw DomainError("init must be greedy, random:SEED, or file:PATH");
  }

  std::int64_t max_steps =
      opt.max_steps > 0 ? opt.max_steps : step_bound_pow5(g.agent_count());

  DynamicsTrace trace = run_dynamics(g, init, parse_mode(opt.mode),
                                     parse_scheduler(opt.sched), max_steps);
  write_output(opt.trace, trace_to_csv(trace));
  std::cout << "steps " << trace.steps.size() << "\n"
            << "terminated "
            << (trace.terminated == Termination::Converged ? "converged"
                                                           : "step-limit")
            << "\n"
            << welfare_line(social_welfare(g, trace.final)) << "\n";
}

// ---- check --------------------------------------------------------------------

struct CheckOptions {
  std::string in;
  std::string profile;
  std::string mode = "blind";
  std::string beta;
};

void run_check(const CheckOptions& opt) {
  Instance g = load_instance(opt.in);
  StrategyProfile s = parse_profile_text(read_file(opt.profile), g);

  auto witness = find_improving_move(g, s, parse_mode(opt.mode),
                                     Scheduler::round_robin());
  std::cout << "equilibrium: " << (witness ? "no" : "yes") << "\n";
  if (witness)
    std::cout << "witness: agent " << witness->agent << " from " << witness->from
              << " to " << witness->to << "\n";
  if (!opt.beta.empty()) {
    bool approx = is_beta_approx_iae(g, s, tau_flag(opt.beta));
    std::cout << "beta-approximate impact-aware: " << (approx ? "yes" : "no")
              << "\n";
  }
  std::cout << welfare_line(social_welfare(g, s)) << "\n";
}

// ---- reduce --------------------------------------------------------------------

struct ReduceOptions {
  std::string cnf;
  std::string tau = "1";
  std::string out;
  bool allow_any = false;
};

void run_reduce(const ReduceOptions& opt) {
  std::string text = read_file(opt.cnf);
  std::istringstream in(text);
  CnfFormula phi = parse_dimacs(in);
  Instance g = sat_to_srsg(phi, tau_flag(opt.tau), !opt.allow_any);
  write_output(opt.out, serialize_instance(g));
}

// ---- report --------------------------------------------------------------------

struct ReportOptions {
  std::vector<std::string> inputs;
  std::string mode = "blind";
  std::string out;
  std::int64_t max_profiles = 10'000'000;
  std::int32_t jobs = 1;
};

void run_report(const ReportOptions& opt) {
  MoveMode mode = parse_mode(opt.mode);
  EnumerationBudget budget{opt.max_profiles};

  std::vector<Instance> instances;
  instances.reserve(opt.inputs.size());
  for (const std::string& path : opt.inputs) instances.push_back(load_instance(path));

  std::vector<QualityReport> reports(instances.size());
  std::vector<std::string> errors(instances.size());
  std::int32_t jobs = std::max(1, opt.jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next.fetch_add(1); i < instances.size();
         i = next.fetch_add(1)) {
      try {
        reports[i] = quality_report(instances[i], mode, budget);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (std::int32_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }

  std::string csv = quality_report_csv_header();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (!errors[i].empty()) throw DomainError(opt.inputs[i] + ": " + errors[i]);
    csv += quality_report_csv_row(opt.inputs[i], instances[i].tau, reports[i]);
    std::cerr << opt.inputs[i] << ": opt " << reports[i].opt_welfare.to_double()
              << ", equilibria " << reports[i].n_equilibria;
    if (reports[i].empirical_poa)
      std::cerr << ", poa " << reports[i].empirical_poa->to_double();
    std::cerr << "\n";
  }
  write_output(opt.out, csv);
}

// ---- bench ---------------------------------------------------------------------

struct BenchOptions {
  std::int32_t resources = 8;
  std::int32_t red = 20;
  std::int32_t blue = 20;
  double edge_prob = 0.5;
  std::string tau = "3/5";
  std::uint64_t seed_start = 0;
  std::int64_t seeds = 10;
  std::string mode = "blind";
  std::int32_t jobs = 1;
};

void run_bench(const BenchOptions& opt) {
  MoveMode mode = parse_mode(opt.mode);
  Rational tau = tau_flag(opt.tau);

  struct Row {
    std::uint64_t seed;
    std::int64_t n, k, m;
    double greedy_us;
    std::int64_t dyn_steps;
    double dyn_us;
  };
  std::vector<Row> rows(opt.seeds);

  std::atomic<std::int64_t> next{0};
  auto worker = [&]() {
    for (std::int64_t i = next.fetch_add(1); i < opt.seeds; i = next.fetch_add(1)) {
      RandomParams params;
      params.n_resources = opt.resources;
      params.n_red = opt.red;
      params.n_blue = opt.blue;
      params.edge_prob = opt.edge_prob;
      params.tau = tau;
      params.seed = opt.seed_start + static_cast<std::uint64_t>(i);
      Instance g = random_instance(params);

      auto t0 = std::chrono::steady_clock::now();
      GreedyResult greedy = compute_ibe_greedy(g);
      auto t1 = std::chrono::steady_clock::now();
      DynamicsSummary summary = run_dynamics_summary(
          g, random_profile(g, params.seed), mode, Scheduler::round_robin(),
          step_bound_pow5(g.agent_count()));
      auto t2 = std::chrono::steady_clock::now();
      (void)greedy;

      rows[i] = Row{params.seed,
                    g.agent_count(),
                    g.resource_count,
                    g.edge_count(),
                    std::chrono::duration<double, std::micro>(t1 - t0).count(),
                    summary.steps,
                    std::chrono::duration<double, std::micro>(t2 - t1).count()};
    }
  };
  std::int32_t jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (std::int32_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }

  std::cout << "seed,n,k,m,greedy_us,dyn_steps,dyn_us\n";
  for (const Row& row : rows)
    std::cout << row.seed << ',' << row.n << ',' << row.k << ',' << row.m << ','
              << row.greedy_us << ',' << row.dyn_steps << ',' << row.dyn_us
              << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schelling resource selection games: solvers, dynamics, quality reports"};
  app.require_subcommand(1);

  GenerateOptions generate_opt;
  auto* generate = app.add_subcommand("generate", "Write an instance in the text format");
  generate->add_option("family", generate_opt.family,
                       "figure1 | poa | posgap | greedy-ce | random")
      ->required();
  generate->add_option("--tau", generate_opt.tau, "threshold as num/den");
  generate->add_option("--alpha", generate_opt.alpha, "poa family size parameter");
  generate->add_option("--x", generate_opt.x, "posgap x (>= 6)");
  generate->add_option("--y", generate_opt.y, "posgap y (x/y <= 1/2)");
  generate->add_option("--resources", generate_opt.resources, "random: resource count");
  generate->add_option("--red", generate_opt.red, "random: red agents");
  generate->add_option("--blue", generate_opt.blue, "random: blue agents");
  generate->add_option("--edge-prob", generate_opt.edge_prob, "random: edge probability");
  generate->add_option("--seed", generate_opt.seed, "random: 64-bit seed");
  generate->add_option("--out", generate_opt.out, "output file (default stdout)");
  generate->add_option("--profiles", generate_opt.profiles_prefix,
                       "also write fixture profiles as PREFIX-<name>.profile");

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "Compute a profile with a named solver");
  solve->add_option("--algo", solve_opt.algo,
                    "greedy | optimum | deg2sat | deg2match | approx2 | brute")
      ->required();
  solve->add_option("--in", solve_opt.in, "instance file")->required();
  solve->add_option("--out", solve_opt.out, "profile output (default stdout)");
  solve->add_option("--removal-log", solve_opt.removal_log,
                    "greedy: write the removal log CSV here");
  solve->add_option("--max-profiles", solve_opt.max_profiles, "enumeration budget");

  DynamicsOptions dynamics_opt;
  auto* dynamics = app.add_subcommand("dynamics", "Run improving-move dynamics");
  dynamics->add_option("--in", dynamics_opt.in, "instance file")->required();
  dynamics->add_option("--mode", dynamics_opt.mode, "aware | blind");
  dynamics->add_option("--sched", dynamics_opt.sched, "rr | rand:SEED | best");
  dynamics->add_option("--init", dynamics_opt.init, "greedy | random:SEED | file:PATH");
  dynamics->add_option("--max-steps", dynamics_opt.max_steps,
                       "step limit (default n^5)");
  dynamics->add_option("--trace", dynamics_opt.trace, "trace CSV output (default stdout)");

  CheckOptions check_opt;
  auto* check = app.add_subcommand("check", "Check a profile for equilibrium");
  check->add_option("--in", check_opt.in, "instance file")->required();
  check->add_option("--profile", check_opt.profile, "profile file")->required();
  check->add_option("--mode", check_opt.mode, "aware | blind");
  check->add_option("--beta", check_opt.beta,
                    "also check beta-approximate impact-aware stability");

  ReduceOptions reduce_opt;
  auto* reduce = app.add_subcommand("reduce", "Build the satisfiability gadget instance");
  reduce->add_option("--cnf", reduce_opt.cnf, "DIMACS CNF file")->required();
  reduce->add_option("--tau", reduce_opt.tau, "threshold as num/den (> 0)");
  reduce->add_option("--out", reduce_opt.out, "output file (default stdout)");
  reduce->add_flag("--allow-any", reduce_opt.allow_any,
                   "skip the (3,4) occurrence restriction");

  ReportOptions report_opt;
  auto* report = app.add_subcommand("report", "Exact quality report over small instances");
  report->add_option("inputs", report_opt.inputs, "instance files")->required();
  report->add_option("--mode", report_opt.mode, "aware | blind");
  report->add_option("--out", report_opt.out, "CSV output (default stdout)");
  report->add_option("--max-profiles", report_opt.max_profiles, "enumeration budget");
  report->add_option("--jobs", report_opt.jobs, "worker threads (default 1)");

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "Time greedy against dynamics over seeds");
  bench->add_option("--resources", bench_opt.resources, "resource count");
  bench->add_option("--red", bench_opt.red, "red agents");
  bench->add_option("--blue", bench_opt.blue, "blue agents");
  bench->add_option("--edge-prob", bench_opt.edge_prob, "edge probability");
  bench->add_option("--tau", bench_opt.tau, "threshold as num/den");
  bench->add_option("--seed-start", bench_opt.seed_start, "first seed");
  bench->add_option("--seeds", bench_opt.seeds, "number of seeds");
  bench->add_option("--mode", bench_opt.mode, "aware | blind");
  bench->add_option("--jobs", bench_opt.jobs, "worker threads (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*generate) run_generate(generate_opt);
    if (*solve) run_solve(solve_opt);
    if (*dynamics) run_dynamics_command(dynamics_opt);
    if (*check) run_check(check_opt);
    if (*reduce) run_reduce(reduce_opt);
    if (*report) run_report(report_opt);
    if (*bench) run_bench(bench_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
