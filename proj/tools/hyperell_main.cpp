// hyperell command-line front end: check, oracle, gen.

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperell/chipfiring.hpp"
#include "hyperell/dot.hpp"
#include "hyperell/engine.hpp"
#include "hyperell/hgr.hpp"
#include "hyperell/testkit.hpp"

namespace fs = std::filesystem;
using namespace hyperell;

namespace {

constexpr int kExitNo = 1;
constexpr int kExitError = 2;

Multigraph load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::vector<std::string> warnings;
  Multigraph g = parse_hgr(buf.str(), &warnings);
  for (const auto& w : warnings) std::cerr << path << ": warning: " << w << '\n';
  return g;
}

std::string format_step(Flavor f, const ReductionStep& s) {
  std::ostringstream os;
  os << to_string(f) << ' ' << s.rule << " removed=[";
  for (std::size_t i = 0; i < s.removed_vertices.size(); ++i) {
    os << (i ? "," : "") << s.removed_vertices[i].value;
  }
  os << ']';
  if (s.added_constraint) {
    os << " constraint=(" << s.added_constraint->first.value << ',' << s.added_constraint->second.value << ')';
  }
  return os.str();
}

struct ModeResult {
  Flavor flavor;
  Verdict verdict;
};

void write_dots(const Multigraph& g, const ModeResult& r, const fs::path& dir) {
  fs::create_directories(dir);
  Multigraph cur = g;
  auto write = [&](std::size_t i) {
    std::ofstream out(dir / ("step_" + std::to_string(i) + ".dot"));
    out << to_dot(cur, r.flavor, "step_" + std::to_string(i));
    if (!out) throw std::runtime_error("cannot write " + (dir / ("step_" + std::to_string(i) + ".dot")).string());
  };
  write(0);
  for (std::size_t i = 0; i < r.verdict.trace.size(); ++i) {
    replay_step(cur, r.verdict.trace[i]);
    write(i + 1);
  }
}

int cmd_check(const std::string& mode, bool trace, const std::string& dot_dir, const std::string& file) {
  const Multigraph g = load(file);
  std::vector<Flavor> flavors;
  if (mode == "all") {
    flavors = {Flavor::Dgon, Flavor::Sgon, Flavor::Sdgon};
  } else {
    flavors = {*parse_flavor(mode)};
  }
  EngineOptions opt;
  opt.keep_trace = trace || !dot_dir.empty();

  std::vector<std::future<Verdict>> jobs;
  for (Flavor f : flavors) {
    jobs.push_back(std::async(flavors.size() > 1 ? std::launch::async : std::launch::deferred,
                              [&g, f, &opt] { return run(g, f, opt); }));
  }
  std::vector<ModeResult> results;
  for (std::size_t i = 0; i < flavors.size(); ++i) results.push_back({flavors[i], jobs[i].get()});

  bool all_yes = true;
  for (const auto& r : results) {
    const Verdict& v = r.verdict;
    all_yes = all_yes && v.yes;
    std::cout << to_string(r.flavor) << ' ' << (v.yes ? "YES" : "NO") << " reason=" << to_string(v.reason)
              << " steps=" << v.preprocess_steps + v.main_steps << " tree=" << (v.is_tree ? "true" : "false") << '\n';
  }
  if (trace) {
    for (const auto& r : results) {
      for (const auto& s : r.verdict.trace) std::cout << format_step(r.flavor, s) << '\n';
    }
  }
  if (!dot_dir.empty()) {
    for (const auto& r : results) {
      write_dots(g, r, results.size() > 1 ? fs::path(dot_dir) / std::string(to_string(r.flavor)) : fs::path(dot_dir));
    }
  }
  return all_yes ? 0 : kExitNo;
}

int cmd_oracle(const std::string& mode, std::size_t max_subdiv, const std::string& file) {
  const Multigraph g = load(file);
  std::string answer;
  if (mode == "dgon") {
    answer = dgon_at_most_2(g) ? "YES" : "NO";
  } else if (mode == "constrained") {
    answer = constrained_suitable_exists(g) ? "YES" : "NO";
  } else {
    answer = sdgon_leq2_bounded(g, max_subdiv) == BoundedAnswer::Yes ? "YES" : "UNKNOWN";
  }
  std::cout << answer << '\n';
  return 0;
}

int cmd_gen(const std::string& kind, std::uint64_t seed, std::size_t nodes, std::size_t edges) {
  Multigraph g;
  if (kind == "tree") {
    g = gen_multigraph(seed, nodes, nodes == 0 ? 0 : nodes - 1, 0.0, 0.0);
  } else if (kind == "sp") {
    SeriesParallelShape shape;
    shape.target_edges = edges;
    g = gen_series_parallel(seed, nodes, shape);
  } else {
    g = gen_multigraph(seed, nodes, edges, 0.2, 0.05);
  }
  std::cout << print_hgr(g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recognizes multigraphs of divisorial, stable or stable divisorial gonality at most 2"};
  app.require_subcommand(1);

  std::string mode;
  std::string file;
  bool trace = false;
  std::string dot_dir;
  auto* check = app.add_subcommand("check", "Run the reduction engines");
  check->add_option("--mode", mode, "dgon, sgon, sdgon or all")
      ->required()
      ->check(CLI::IsMember({"dgon", "sgon", "sdgon", "all"}));
  check->add_flag("--trace", trace, "Print every applied rule");
  check->add_option("--dot", dot_dir, "Write step_<i>.dot snapshots to this directory");
  check->add_option("file", file, "hgr input")->required();

  std::string oracle_mode;
  std::string oracle_file;
  std::size_t max_subdiv = 2;
  auto* oracle = app.add_subcommand("oracle", "Run a brute-force oracle on a small graph");
  oracle->add_option("--mode", oracle_mode, "dgon, constrained or sdgon-bounded")
      ->required()
      ->check(CLI::IsMember({"dgon", "constrained", "sdgon-bounded"}));
  oracle->add_option("--max-subdiv", max_subdiv, "Subdivisions per edge for sdgon-bounded")->check(CLI::Range(0, 2));
  oracle->add_option("file", oracle_file, "hgr input")->required();

  std::string kind = "random";
  std::uint64_t seed = 1;
  std::size_t nodes = 10;
  std::size_t edges = 0;
  auto* gen = app.add_subcommand("gen", "Print a generated graph in hgr format");
  gen->add_option("--kind", kind, "random, sp or tree")->check(CLI::IsMember({"random", "sp", "tree"}));
  gen->add_option("--seed", seed);
  gen->add_option("--nodes", nodes);
  gen->add_option("--edges", edges, "Edge count (random) or edge cap (sp)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    if (*check) return cmd_check(mode, trace, dot_dir, file);
    if (*oracle) return cmd_oracle(oracle_mode, max_subdiv, oracle_file);
    if (kind == "random" && edges == 0 && nodes > 0) edges = nodes - 1;
    return cmd_gen(kind, seed, nodes, edges);
  } catch (const std::exception& e) {
    std::cerr << "hyperell: " << e.what() << '\n';
    return kExitError;
  }
}
