#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include <cayleyfn/cayley.hpp>
#include <cayleyfn/centralizer.hpp>
#include <cayleyfn/digraph.hpp>
#include <cayleyfn/oracle.hpp>
#include <cayleyfn/symbolic.hpp>
#include <cayleyfn/transformation.hpp>

using namespace cayleyfn;

namespace {

// Exit codes are the machine contract: 0 Cayley/Satisfied, 1
// NotCayley/Violated, 2 Unknown, 3 usage or input errors, 4 decider
// disagreement (a library bug, not an input property).
constexpr int kExitError = 3;
constexpr int kExitDisagreement = 4;

int status_exit(CayleyStatus s) {
  switch (s) {
    case CayleyStatus::Cayley: return 0;
    case CayleyStatus::NotCayley: return 1;
    case CayleyStatus::Unknown: return 2;
  }
  return kExitError;
}

int status_exit(SymbolicStatus s) {
  switch (s) {
    case SymbolicStatus::Satisfied: return 0;
    case SymbolicStatus::Violated: return 1;
    case SymbolicStatus::Unknown: return 2;
  }
  return kExitError;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write " + path);
  }
  out << content;
}

Transformation load_transformation(const std::string& path) {
  return parse_transformation(read_file(path));
}

void emit(const json& record) { std::cout << record.dump(2) << "\n"; }

std::string join_labels(const Transformation& f, const std::vector<int>& vertices) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out << (i ? " " : "") << f.label(vertices[i]);
  }
  return out.str();
}

std::string format_path(const Transformation& f, const std::vector<int>& path) {
  std::ostringstream out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    out << (i ? "->" : "") << f.label(path[i]);
  }
  return out.str();
}

void print_verdict(const Transformation& f, const CayleyVerdict& v) {
  std::cout << "status: " << to_string(v.status) << "\n"
            << "criterion: " << v.criterion << "\n";
  if (v.witness) {
    std::cout << "witness: " << f.label(*v.witness) << "\n";
  }
  if (!v.details.empty()) {
    std::cout << "details: " << v.details << "\n";
  }
}

struct AnalyzeOptions {
  std::string file;
  std::string dot_path;
  std::string criterion;  // empty = no verdicts requested
  bool as_json = false;
};

int run_analyze(const AnalyzeOptions& opt) {
  const auto started = std::chrono::steady_clock::now();
  Transformation f = load_transformation(opt.file);
  ComponentDecomposition dec = decompose(f);
  const int s = stabilizer(f);
  std::vector<int> sim = stable_image(f);
  std::vector<int> omega = max_depth_vertices(f);
  const int sup_b = max_branch_length(f);

  CayleyVerdict zupnik;
  CayleyVerdict digraph;
  if (!opt.criterion.empty()) {
    zupnik = zupnik_criterion(f);
    digraph = digraph_criterion(f);
  }

  if (!opt.dot_path.empty()) {
    write_file(opt.dot_path, digraph_to_dot(f));
  }

  if (opt.as_json) {
    // Timing is deliberately omitted: identical inputs and flags must give
    // byte-identical records.
    json record = json::object();
    record["command"] = "analyze";
    record["input"] = transformation_to_json(f);
    json comps = json::array();
    for (const FiniteComponent& comp : dec.components) {
      json c = json::object();
      c["cycle"] = comp.cycle;
      json branches = json::array();
      for (const Branch& b : comp.branches) {
        branches.push_back(b.path);
      }
      c["branches"] = std::move(branches);
      comps.push_back(std::move(c));
    }
    record["components"] = std::move(comps);
    record["stable_image"] = sim;
    record["stabilizer"] = s;
    record["omega"] = omega;
    record["max_branch_length"] = sup_b;
    if (!opt.criterion.empty()) {
      record["verdicts"] = json::object();
      if (opt.criterion == "zupnik" || opt.criterion == "both") {
        record["verdicts"]["zupnik"] = verdict_to_json(zupnik);
      }
      if (opt.criterion == "digraph" || opt.criterion == "both") {
        record["verdicts"]["digraph"] = verdict_to_json(digraph);
      }
    }
    emit(record);
    return 0;
  }

  std::cout << "input: " << f.size() << " points\n";
  for (std::size_t i = 0; i < dec.components.size(); ++i) {
    const FiniteComponent& comp = dec.components[i];
    std::cout << "component " << i + 1 << "/" << dec.components.size()
              << ": cycle (" << join_labels(f, comp.cycle) << ")";
    if (!comp.branches.empty()) {
      std::cout << ", branches:";
      for (const Branch& b : comp.branches) {
        std::cout << " " << format_path(f, b.path);
      }
    }
    std::cout << "\n";
  }
  std::cout << "stable image: " << join_labels(f, sim) << "\n"
            << "stabilizer: " << s << "\n"
            << "omega: " << join_labels(f, omega) << "\n"
            << "max branch length: " << sup_b << "\n";
  if (opt.criterion == "zupnik" || opt.criterion == "both") {
    std::cout << "zupnik: " << to_string(zupnik.status) << " (" << zupnik.details << ")\n";
  }
  if (opt.criterion == "digraph" || opt.criterion == "both") {
    std::cout << "digraph: " << to_string(digraph.status) << " (" << digraph.details << ")\n";
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  std::cout << "elapsed: " << elapsed.count() << " ms\n";
  return 0;
}

struct CayleyOptions {
  std::string file;
  std::string criterion = "both";
  bool as_json = false;
};

int run_cayley(const CayleyOptions& opt) {
  Transformation f = load_transformation(opt.file);

  if (opt.criterion == "oracle") {
    auto witness = find_witness_table(f);
    CayleyVerdict v;
    v.criterion = "oracle";
    if (witness) {
      v.status = CayleyStatus::Cayley;
      v.witness = witness->element;
      v.details = "row " + f.label(witness->element) + " of a verified associative table";
    } else {
      v.status = CayleyStatus::NotCayley;
      v.details = "exhausted every associative table on " +
                  std::to_string(f.size()) + " points";
    }
    if (opt.as_json) {
      json record = verdict_to_json(v);
      if (witness) {
        record["table"] = table_to_json(witness->table);
      }
      emit(record);
    } else {
      print_verdict(f, v);
      if (witness) {
        std::vector<std::string> labels;
        for (int x = 0; x < f.size(); ++x) {
          labels.push_back(f.label(x));
        }
        std::cout << table_to_string(witness->table, labels);
      }
    }
    return status_exit(v.status);
  }

  CayleyVerdict v;
  if (opt.criterion == "zupnik") {
    v = zupnik_criterion(f);
  } else if (opt.criterion == "digraph") {
    v = digraph_criterion(f);
  } else {
    v = is_cayley(f);  // asserts the two deciders agree
  }
  if (opt.as_json) {
    emit(verdict_to_json(v));
  } else {
    print_verdict(f, v);
  }
  return status_exit(v.status);
}

struct CentralizerOptions {
  std::string alpha_file;
  std::string epsilon_file;
  std::string dot_path;
  bool fallback = false;
  bool as_json = false;
};

int run_centralizer(const CentralizerOptions& opt) {
  Transformation f = load_transformation(opt.alpha_file);
  Transformation e = load_transformation(opt.epsilon_file);

  CentralizerCheck membership = check_centralizer(f, e);
  if (!membership.in_centralizer) {
    throw NotInCentralizerError(membership.violation);
  }
  QuotientMap q = quotient_map(f, e);
  SufficiencyVerdict criterion = centralizer_criterion(f, e);
  StructureReport report = verify_structure(f, e);

  bool ran_fallback = false;
  CayleyVerdict fallback;
  if (opt.fallback && criterion.status == CayleyStatus::Unknown) {
    fallback = is_cayley(f);
    ran_fallback = true;
  }

  if (!opt.dot_path.empty()) {
    write_file(opt.dot_path, quotient_to_dot(q));
  }

  if (opt.as_json) {
    json record = json::object();
    record["command"] = "centralizer";
    record["in_centralizer"] = true;
    record["quotient"] = transformation_to_json(q.base);
    record["criterion"] = sufficiency_to_json(criterion);
    record["structure"] = structure_report_to_json(report);
    record["fallback"] = ran_fallback ? verdict_to_json(fallback) : json(nullptr);
    emit(record);
  } else {
    std::cout << "centralizer: yes (" << q.structure.components.size()
              << " components)\n"
              << "quotient: " << format_transformation(q.base) << "\n"
              << "criterion: " << to_string(criterion.status);
    if (criterion.failed_condition) {
      std::cout << " (" << *criterion.failed_condition << ")";
    }
    std::cout << "\n";
    int asserted = 0;
    for (const StructureCheck& c : report.checks) {
      asserted += c.asserted ? 1 : 0;
    }
    std::cout << "structure: " << report.checks.size() << " checks ("
              << asserted << " asserted), "
              << (report.asserted_pass ? "all pass" : "FAILURES") << "\n";
    if (ran_fallback) {
      std::cout << "fallback: " << to_string(fallback.status);
      if (fallback.witness) {
        std::cout << " (witness " << f.label(*fallback.witness) << ")";
      }
      std::cout << "\n";
    }
  }
  if (ran_fallback) {
    return status_exit(fallback.status);
  }
  return status_exit(criterion.status);
}

struct SymbolicOptions {
  std::string file;
  std::string dot_path;
  int radius = -1;
  bool as_json = false;
};

// The twig bound for a double-ray check is the largest finite branch length
// in the window and tails; the condition is vacuous at 0.
int descriptor_twig_bound(const DoubleRayDescriptor& d) {
  int bound = 0;
  auto scan = [&bound](const BranchGroup& group) {
    for (const BranchSpec& b : group) {
      if (b.kind == BranchKind::Finite) {
        bound = std::max(bound, b.length);
      }
    }
  };
  for (const BranchGroup& group : d.window) {
    scan(group);
  }
  for (const auto& tail : {d.left_tail, d.right_tail}) {
    if (tail) {
      for (const BranchGroup& group : tail->pattern) {
        scan(group);
      }
    }
  }
  return bound;
}

int run_symbolic(const SymbolicOptions& opt) {
  json parsed = json::parse(read_file(opt.file));
  auto descriptor = descriptor_from_json(parsed);

  SymbolicVerdict verdict;
  std::string skeleton;
  if (const auto* ray = std::get_if<RightRayDescriptor>(&descriptor)) {
    skeleton = "rro";
    verdict = check_right_ray_condition(*ray);
    if (!opt.dot_path.empty()) {
      if (opt.radius < 0) {
        throw Error("--dot needs --radius for symbolic descriptors");
      }
      write_file(opt.dot_path, materialization_to_dot(materialize(*ray, opt.radius)));
    }
  } else {
    const auto& dray = std::get<DoubleRayDescriptor>(descriptor);
    skeleton = "double_ray";
    verdict = check_double_ray_condition(dray, descriptor_twig_bound(dray));
    if (!opt.dot_path.empty()) {
      if (opt.radius < 0) {
        throw Error("--dot needs --radius for symbolic descriptors");
      }
      write_file(opt.dot_path, materialization_to_dot(materialize(dray, opt.radius)));
    }
  }

  if (opt.as_json) {
    json record = symbolic_verdict_to_json(verdict);
    record["skeleton"] = skeleton;
    emit(record);
  } else {
    std::cout << "skeleton: " << skeleton << "\n"
              << "status: " << to_string(verdict.status) << "\n";
    if (verdict.witness_position) {
      std::cout << "witness position: " << *verdict.witness_position << "\n";
    }
    if (!verdict.detail.empty()) {
      std::cout << "detail: " << verdict.detail << "\n";
    }
  }
  return status_exit(verdict.status);
}

struct SweepOptions {
  int n = 1;
  bool oracle = false;
  int random_samples = 0;
  std::uint64_t seed = 0;
  bool as_json = false;
};

int run_sweep(const SweepOptions& opt) {
  if (opt.n < 1) {
    throw Error("sweep needs n >= 1");
  }
  std::set<std::vector<int>> enumerated;
  if (opt.oracle) {
    for (const Transformation& f : all_cayley_functions(opt.n)) {
      enumerated.insert(f.images());
    }
  }

  long long total = 0;
  long long cayley = 0;
  long long disagreements = 0;
  auto probe = [&](const Transformation& f) {
    ++total;
    CayleyVerdict z = zupnik_criterion(f);
    CayleyVerdict d = digraph_criterion(f);
    if (z.status != d.status) {
      ++disagreements;
    } else if (opt.oracle && (enumerated.count(f.images()) > 0) !=
                                 (z.status == CayleyStatus::Cayley)) {
      ++disagreements;
    }
    if (z.status == CayleyStatus::Cayley) {
      ++cayley;
    }
  };

  if (opt.random_samples > 0) {
    std::mt19937_64 gen(opt.seed);
    std::uniform_int_distribution<int> pick(0, opt.n - 1);
    for (int trial = 0; trial < opt.random_samples; ++trial) {
      std::vector<int> images(opt.n);
      for (int& x : images) {
        x = pick(gen);
      }
      probe(Transformation(images));
    }
  } else {
    std::vector<int> images(opt.n, 0);
    for (;;) {
      probe(Transformation(images));
      int i = 0;
      while (i < opt.n && ++images[i] == opt.n) {
        images[i++] = 0;
      }
      if (i == opt.n) {
        break;
      }
    }
  }

  if (opt.as_json) {
    json record = json::object();
    record["command"] = "sweep";
    record["n"] = opt.n;
    record["maps"] = total;
    record["cayley"] = cayley;
    record["disagreements"] = disagreements;
    record["oracle"] = opt.oracle;
    if (opt.random_samples > 0) {
      record["random_samples"] = opt.random_samples;
      record["seed"] = opt.seed;
    }
    emit(record);
  } else {
    std::cout << "n=" << opt.n << ": " << total << " maps, " << cayley
              << " Cayley, " << disagreements << " disagreements\n";
    if (opt.random_samples > 0) {
      std::cout << "seed: " << opt.seed << "\n";
    }
    if (opt.oracle) {
      std::cout << "oracle: "
                << (disagreements == 0 ? "verdicts match the enumeration"
                                       : "MISMATCH against the enumeration")
                << "\n";
    }
  }
  return disagreements == 0 ? 0 : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley function analysis for finite transformations"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opt;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Decompose a transformation's functional digraph");
  analyze->add_option("file", analyze_opt.file, "transformation file")->required();
  analyze->add_flag("--json", analyze_opt.as_json, "emit one JSON record");
  analyze->add_option("--dot", analyze_opt.dot_path, "write the digraph as DOT");
  analyze->add_option("--criterion", analyze_opt.criterion,
                      "append verdicts: zupnik|digraph|both")
      ->check(CLI::IsMember({"zupnik", "digraph", "both"}));

  CayleyOptions cayley_opt;
  CLI::App* cayley = app.add_subcommand(
      "cayley", "Decide whether a transformation is a Cayley function");
  cayley->add_option("file", cayley_opt.file, "transformation file")->required();
  cayley->add_flag("--json", cayley_opt.as_json, "emit one JSON record");
  cayley->add_option("--criterion", cayley_opt.criterion,
                     "zupnik|digraph|both|oracle (default both)")
      ->check(CLI::IsMember({"zupnik", "digraph", "both", "oracle"}));

  CentralizerOptions centralizer_opt;
  CLI::App* centralizer = app.add_subcommand(
      "centralizer", "Quotient analysis of a map commuting with an idempotent");
  centralizer->add_option("alpha", centralizer_opt.alpha_file, "transformation file")
      ->required();
  centralizer->add_option("epsilon", centralizer_opt.epsilon_file, "idempotent file")
      ->required();
  centralizer->add_flag("--json", centralizer_opt.as_json, "emit one JSON record");
  centralizer->add_option("--dot", centralizer_opt.dot_path,
                          "write the quotient digraph as DOT");
  centralizer->add_flag("--fallback", centralizer_opt.fallback,
                        "on Unknown, append the definitive finite deciders");

  SymbolicOptions symbolic_opt;
  CLI::App* symbolic = app.add_subcommand(
      "symbolic", "Check ray conditions on an eventually periodic descriptor");
  symbolic->add_option("file", symbolic_opt.file, "descriptor JSON file")->required();
  symbolic->add_flag("--json", symbolic_opt.as_json, "emit one JSON record");
  symbolic->add_option("--dot", symbolic_opt.dot_path,
                       "write a materialized truncation as DOT (needs --radius)");
  symbolic->add_option("--radius", symbolic_opt.radius, "truncation radius");

  SweepOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Run both deciders across maps on n points");
  sweep->add_option("n", sweep_opt.n, "carrier size")->required();
  sweep->add_flag("--json", sweep_opt.as_json, "emit one JSON record");
  sweep->add_flag("--oracle", sweep_opt.oracle,
                  "also compare against the exhaustive enumeration (n <= 3)");
  sweep->add_option("--random", sweep_opt.random_samples,
                    "sample this many random maps instead of enumerating");
  sweep->add_option("--seed", sweep_opt.seed, "seed for --random (default 0)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      return run_analyze(analyze_opt);
    }
    if (*cayley) {
      return run_cayley(cayley_opt);
    }
    if (*centralizer) {
      return run_centralizer(centralizer_opt);
    }
    if (*symbolic) {
      return run_symbolic(symbolic_opt);
    }
    if (*sweep) {
      return run_sweep(sweep_opt);
    }
  } catch (const DeciderDisagreement& err) {
    std::cerr << "decider disagreement: " << err.what() << "\n";
    return kExitDisagreement;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
