// vcgen: generate, certify and run branching algorithms for subcubic vertex cover.
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "vcgen/graph_io.hpp"
#include "vcgen/measure.hpp"
#include "vcgen/rulegen.hpp"
#include "vcgen/runtime.hpp"
#include "vcgen/subspace.hpp"

namespace fs = std::filesystem;
using namespace vcgen;

namespace {

enum Exit { kOk = 0, kNo = 1, kGenFailed = 2, kInputError = 3 };

constexpr std::uint64_t kDefaultSeed = 20240917;

struct RunConfig {
  std::string measure;
  std::string mode = "randomized";
  std::vector<std::string> subspaces;
  GenLimits limits;
  std::string out_dir = ".";

  std::string instance;
  std::vector<std::string> tables;
  long budget = -1;
  std::uint64_t seed = kDefaultSeed;
  double safety = 20.0;
  long max_trials = 10'000'000;
  bool trace = false;

  std::string combine;
  std::string vector;

  std::string graph;
};

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_graph(in);
}

RuleTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_table(in);
}

std::vector<std::string> table_paths(const std::vector<std::string>& given) {
  std::vector<std::string> out;
  for (const std::string& p : given) {
    if (fs::is_directory(p)) {
      std::vector<std::string> found;
      for (const auto& e : fs::directory_iterator(p))
        if (e.path().extension() == ".json") found.push_back(e.path().string());
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else {
      out.push_back(p);
    }
  }
  return out;
}

// key=value list, e.g. "a=0.59303 b=0.03958 base_n=1.13735"
std::map<std::string, double> parse_pairs(const std::string& text) {
  std::map<std::string, double> out;
  std::istringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw InputError("expected key=value, got '" + tok + "'");
    out[tok.substr(0, eq)] = to_double(parse_rational(tok.substr(eq + 1)));
  }
  return out;
}

int cmd_generate(const RunConfig& cfg) {
  const Measure m = parse_measure(cfg.measure);
  const FeasibilityReport feas = check_feasibility(m);
  if (!feas.pass) {
    std::cerr << "measure is infeasible:\n";
    for (const auto& v : feas.violated) std::cerr << "  violated: " << v << '\n';
    return kInputError;
  }
  const RuleKind mode = parse_rule_kind(cfg.mode);
  std::vector<int> ids;
  for (const auto& s : cfg.subspaces) ids.push_back(parse_subspace(s));
  if (ids.empty())
    for (int id = 1; id <= kSubspaceCount; ++id) ids.push_back(id);
  fs::create_directories(cfg.out_dir);

  int failed = 0;
  for (int id : ids) {
    GenerationReport rep = generate_subspace(id, m, mode, cfg.limits);
    const std::string name = subspace_name(id);
    if (!rep.success) {
      ++failed;
      std::cout << name << " FAILED: " << rep.reason << '\n';
      for (std::size_t i = 0; i < rep.chain.size(); ++i)
        std::cout << "  " << std::setw(2) << i << "  " << rep.chain[i] << '\n';
      continue;
    }
    const Certificate cert = verify_table(rep.table);
    const GenMetadata& md = rep.table.metadata;
    std::cout << name << (cert.pass ? " certified" : " REJECTED") << " nodes=" << md.nodes
              << " rules=" << md.rules << " refs=" << md.references << " depth=" << md.depth_reached << '\n';
    if (!cert.pass) {
      ++failed;
      for (const auto& f : cert.failures) std::cout << "  " << f << '\n';
      continue;
    }
    const fs::path path = fs::path(cfg.out_dir) / (name + ".json");
    std::ofstream out(path);
    write_table(out, rep.table);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
  }
  return failed ? kGenFailed : kOk;
}

int cmd_solve(const RunConfig& cfg) {
  Instance inst = load_instance(cfg.instance);
  if (cfg.budget >= 0) inst.budget = cfg.budget;
  RuleBook book;
  std::optional<Measure> m;
  std::optional<RuleKind> mode;
  for (const std::string& path : table_paths(cfg.tables)) {
    RuleTable t = load_table(path);
    const Certificate cert = verify_table(t);
    if (!cert.pass) {
      std::cerr << "refusing uncertified table " << path << ":\n";
      for (const auto& f : cert.failures) std::cerr << "  " << f << '\n';
      return kInputError;
    }
    if (m && !(*m == t.measure)) throw InputError("tables disagree on the measure");
    if (mode && *mode != t.mode) throw InputError("tables mix randomized and deterministic rules");
    m = t.measure;
    mode = t.mode;
    book.add(std::move(t));
  }
  if (!m) throw InputError("no rule tables given");

  SolveResult res;
  if (*mode == RuleKind::deterministic) {
    res = solve_deterministic(inst, book, *m);
  } else {
    const TrialPlan plan = plan_trials(inst, *m, cfg.safety, cfg.seed, cfg.max_trials);
    std::cout << "mu " << format_rational(evaluate(*m, inst)) << '\n';
    res = solve_randomized(inst, book, *m, plan, cfg.trace);
    std::cout << "trials " << res.trials_run << " of " << plan.trials << '\n';
    if (cfg.trace)
      for (const TraceStep& s : res.trace) std::cout << format_trace(s) << '\n';
  }
  if (res.fallbacks) std::cerr << "warning: " << res.fallbacks << " residual instance(s) decided exactly after the measure ran out\n";
  std::cout << (res.yes ? "YES" : "NO") << '\n';
  if (res.yes) {
    std::cout << "cover";
    for (Vertex v : res.cover) std::cout << ' ' << v;
    std::cout << '\n';
  }
  return res.yes ? kOk : kNo;
}

int cmd_bound(const RunConfig& cfg) {
  std::cout << std::setprecision(8);
  if (!cfg.combine.empty()) {
    auto kv = parse_pairs(cfg.combine);
    for (const char* key : {"a", "b", "base_n"})
      if (!kv.count(key)) throw InputError(std::string("--combine needs ") + key + "=");
    if (!(kv["base_n"] >= 1.0)) throw InputError("base_n must be at least 1");
    const double d = combine_bound(kv["a"], kv["b"], std::log(kv["base_n"]));
    std::cout << "d " << d << '\n' << "base " << std::exp(d) << '\n';
    return kOk;
  }
  if (!cfg.vector.empty()) {
    BranchVector v;
    std::stringstream ss(cfg.vector);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto colon = item.find(':');
      double w = 1.0, d = 0.0;
      if (colon == std::string::npos) {
        d = to_double(parse_rational(item));
      } else {
        w = to_double(parse_rational(item.substr(0, colon)));
        d = to_double(parse_rational(item.substr(colon + 1)));
      }
      if (!(w > 0) || !(d > 0)) throw InputError("vector entries need positive weight and decrease");
      v.emplace_back(w, d);
    }
    if (v.empty()) throw InputError("empty branching vector");
    std::cout << "branching number " << branching_number(v) << '\n';
    return kOk;
  }
  throw InputError("bound needs --combine or --vector");
}

int cmd_classify(const RunConfig& cfg) {
  std::cout << subspace_name(classify(load_graph(cfg.graph))) << '\n';
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  bool all = true;
  for (const std::string& path : table_paths(cfg.tables)) {
    const RuleTable t = load_table(path);
    const Certificate cert = verify_table(t);
    all = all && cert.pass;
    std::cout << path << ": " << (cert.pass ? "PASS" : "FAIL") << " (" << cert.nodes_checked << " nodes, "
              << cert.leaves.size() << " rules)\n";
    for (const LeafCheck& l : cert.leaves)
      std::cout << "  leaf " << l.node << " objective " << format_double(l.objective)
                << (l.pass ? "" : "  FAIL: " + l.problem) << '\n';
    for (const auto& f : cert.failures) std::cout << "  " << f << '\n';
  }
  return all ? kOk : kGenFailed;
}

int cmd_oracle(const RunConfig& cfg) {
  std::cout << vc_oracle(load_graph(cfg.graph)) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate, certify and run branching algorithms for vertex cover on subcubic graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* gen = app.add_subcommand("generate", "generate and certify rule tables");
  gen->add_option("--measure", cfg.measure, "e.g. 'k-mode a=1', 'n-mode b3=0.25', mu1, mu2")->required();
  gen->add_option("--mode", cfg.mode, "randomized (LP) or deterministic (ILP)")
      ->check(CLI::IsMember({"randomized", "rand", "deterministic", "det"}));
  gen->add_option("--subspace", cfg.subspaces, "P1..P19, repeatable; default all");
  gen->add_option("--depth", cfg.limits.max_depth, "expansion depth limit")->check(CLI::PositiveNumber);
  gen->add_option("--nodes", cfg.limits.max_nodes, "tree node limit")->check(CLI::PositiveNumber);
  gen->add_option("--seconds", cfg.limits.seconds, "wall time limit per subspace")->check(CLI::PositiveNumber);
  gen->add_option("--out", cfg.out_dir, "directory for P<i>.json tables");

  auto* solve = app.add_subcommand("solve", "decide an instance with certified tables");
  solve->add_option("--instance", cfg.instance, "instance file")->required()->check(CLI::ExistingFile);
  solve->add_option("--tables", cfg.tables, "table files or directories")->required();
  solve->add_option("--budget", cfg.budget, "override the instance budget")->check(CLI::NonNegativeNumber);
  solve->add_option("--seed", cfg.seed, "base seed of the trial sequence")->capture_default_str();
  solve->add_option("--safety", cfg.safety, "trials = ceil(2^mu) * safety")->check(CLI::PositiveNumber);
  solve->add_option("--max-trials", cfg.max_trials, "trial cap")->check(CLI::PositiveNumber);
  solve->add_flag("--trace", cfg.trace, "print one line per branching step");

  auto* bound = app.add_subcommand("bound", "bound arithmetic");
  bound->add_option("--combine", cfg.combine, "'a=<a> b=<b> base_n=<base>'");
  bound->add_option("--vector", cfg.vector, "branching vector, weight:decrease pairs, e.g. 1:1,1:3");

  auto* cls = app.add_subcommand("classify", "print the subspace of a graph");
  cls->add_option("graph", cfg.graph, "graph file")->required()->check(CLI::ExistingFile);

  auto* ver = app.add_subcommand("verify", "recheck rule tables");
  ver->add_option("tables", cfg.tables, "table files or directories")->required();

  auto* orc = app.add_subcommand("oracle", "exact vertex cover size");
  orc->add_option("graph", cfg.graph, "graph file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*gen) return cmd_generate(cfg);
    if (*solve) return cmd_solve(cfg);
    if (*bound) return cmd_bound(cfg);
    if (*cls) return cmd_classify(cfg);
    if (*ver) return cmd_verify(cfg);
    if (*orc) return cmd_oracle(cfg);
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << " (use a smaller instance or raise the limit)\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const CertificateViolation& e) {
    std::cerr << "certificate violation: " << e.what() << '\n';
    return kGenFailed;
  }
  return kInputError;
}
