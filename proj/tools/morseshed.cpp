// morseshed: command-line front end for stacks, gradient fields and
// watershed cuts on pseudomanifolds.
//
// Exit codes: 0 ok, 1 invalid input, 2 a check claim failed, 64 usage.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "morseshed/check_suite.hpp"
#include "morseshed/stack_file.hpp"

using namespace morseshed;

namespace {

constexpr int kInvalidInput = 1;
constexpr int kClaimFailed = 2;
constexpr int kUsage = 64;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ValuedComplex load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return parse_stack_file(in);
  } catch (const ParseError& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void write_dot_file(const std::string& path, const DualGraph& dg, const RelativeForest* forest,
                    const MsfCut* cut) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  write_dot(out, dg, forest, cut);
}

std::string braces(const Simplex& s) { return "{" + s.to_string() + "}"; }

void require_basic_stack(const ValuedComplex& v) {
  const auto cert = check_stack(v);
  if (!cert.valid()) throw InvalidInput("not a stack: " + cert.violation->describe());
  if (!cert.basic()) throw InvalidInput("not a basic stack: " + cert.basic_violation->describe());
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("MORSESHED_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring unparsable MORSESHED_SEED='" << env << "'\n";
    }
  }
  return 0;
}

int cmd_validate(const std::string& path) {
  const auto v = load(path);
  std::cout << "PSEUDOMANIFOLD d=" << v.d() << " OK " << v.lattice().size() << " simplices\n";
  const auto stack = check_stack(v);
  const auto dmf = check_dmf(v);
  auto show = [](const char* what, const Certificate& c) {
    if (!c.valid()) {
      std::cout << what << " NO " << c.violation->describe() << '\n';
    } else if (!c.basic()) {
      std::cout << what << " YES\nBASIC-" << what << " NO " << c.basic_violation->describe() << '\n';
    } else {
      std::cout << what << " YES\nBASIC-" << what << " YES\n";
    }
  };
  show("STACK", stack);
  show("DMF", dmf);
  if (!stack.valid()) return kInvalidInput;
  return 0;
}

int cmd_gvf(const std::string& path, const std::string& reading, const std::string& dot) {
  const auto v = load(path);
  const Reading r = reading == "morse" ? Reading::morse : Reading::stack;
  const auto cert = r == Reading::stack ? check_stack(v) : check_dmf(v);
  if (!cert.valid()) throw InvalidInput("not a " + reading + " function: " + cert.violation->describe());
  const auto g = gvf(v, r);
  for (const auto& [tail, head] : g.as_simplices()) {
    std::cout << "VECTOR " << tail.to_string() << " -> " << head.to_string() << '\n';
  }
  const auto& lat = v.lattice();
  for (SimplexId id : classify(g).critical) std::cout << "CRITICAL " << lat.at(id).to_string() << '\n';
  if (!dot.empty()) {
    if (r != Reading::stack || !cert.basic()) throw InvalidInput("--dot needs a basic stack");
    const DualGraph dg(v);
    const auto forest = induced_forest(g, v);
    write_dot_file(dot, dg, &forest, nullptr);
  }
  return 0;
}

Strategy parse_strategy(const std::string& s) { return s == "kruskal" ? Strategy::via_kruskal : Strategy::via_gvf; }

void check_nonnegative(const ValuedComplex& v) {
  if (v.min_value() < 0) {
    throw InvalidInput("stack takes the negative value " + std::to_string(v.min_value()) +
                       "; shift it to be nonnegative first");
  }
}

int cmd_msf(const std::string& path, const std::string& strategy, const std::string& dot) {
  const auto v = load(path);
  require_basic_stack(v);
  check_nonnegative(v);
  const auto forest = minimum_spanning_forest(v, parse_strategy(strategy));
  const DualGraph dg(v);
  const auto& lat = v.lattice();
  Value total = 0;
  for (SimplexId f : forest.graph.edge_faces) {
    const auto& e = dg.edge_at_face(f);
    total += e.weight;
    std::cout << "FOREST-EDGE " << braces(lat.at(e.a)) << " " << braces(lat.at(e.b)) << " face "
              << braces(lat.at(f)) << " weight " << e.weight << '\n';
  }
  std::cout << "FOREST-WEIGHT " << total << '\n';
  write_dot_file(dot, dg, &forest, nullptr);
  return 0;
}

int cmd_watershed(const std::string& path, const std::string& strategy, const std::string& dot) {
  const auto v = load(path);
  require_basic_stack(v);
  check_nonnegative(v);
  const auto st = parse_strategy(strategy);
  const auto cut = watershed_cut(v, st);
  const auto& lat = v.lattice();
  for (SimplexId f : cut.cut_faces) std::cout << "CUT-FACE " << lat.at(f).to_string() << '\n';
  for (const auto& s : cut.watershed.simplices().sorted()) std::cout << "WATERSHED " << s.to_string() << '\n';
  if (!dot.empty()) {
    const DualGraph dg(v);
    const auto forest = minimum_spanning_forest(v, st);
    write_dot_file(dot, dg, &forest, &cut);
  }
  return 0;
}

int cmd_collapse(const std::string& path, bool ultimate) {
  const auto v = load(path);
  const auto cert = check_stack(v);
  if (!cert.valid()) throw InvalidInput("not a stack: " + cert.violation->describe());
  const auto& lat = v.lattice();
  if (!ultimate) {
    for (const auto& fp : free_pairs_for(v)) {
      std::cout << "FREE-PAIR " << lat.at(fp.sigma).to_string() << " -> " << lat.at(fp.tau).to_string() << '\n';
    }
    return 0;
  }
  write_stack_file(std::cout, ultimate_stack_collapse(v));
  return 0;
}

int cmd_generate(const std::string& kind, int n, std::uint64_t seed) {
  GeneratorSpec spec;
  try {
    spec.kind = parse_space_kind(kind);
  } catch (const std::exception& e) {
    throw InvalidInput(e.what());
  }
  spec.n = n;
  spec.seed = seed;
  try {
    write_stack_file(std::cout, generate(spec));
  } catch (const DomainError& e) {
    throw InvalidInput(e.what());
  }
  return 0;
}

int cmd_check(const std::vector<std::string>& files, std::uint64_t seed, std::size_t seeds, unsigned threads,
              bool quiet) {
  std::vector<Instance> corpus;
  if (files.empty()) {
    corpus = bundled_corpus(seed, seeds);
  } else {
    for (const auto& f : files) {
      auto v = load(f);
      require_basic_stack(v);
      check_nonnegative(v);
      corpus.push_back({f, std::move(v)});
    }
  }
  const auto reports = run_checks(corpus, threads);
  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (!r.pass) ++failed;
    if (!quiet || !r.pass) std::cout << r.to_line() << '\n';
  }
  std::cout << "SUMMARY " << corpus.size() << " instances " << reports.size() << " claims " << failed
            << " failed\n";
  return failed ? kClaimFailed : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Morse theory and watershed cuts on simplicial pseudomanifolds"};
  app.require_subcommand(1);

  std::string file, dot, strategy = "gvf", reading = "stack", kind;
  int n = 0;
  bool ultimate = false, quiet = false;
  std::uint64_t seed = default_seed();
  std::size_t seeds = 50;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::string> files;

  auto* validate = app.add_subcommand("validate", "Certify a stack file (stack, DMF, basic)");
  validate->add_option("file", file)->required();

  auto* gvf_cmd = app.add_subcommand("gvf", "Print the gradient vector field and critical simplices");
  gvf_cmd->add_option("file", file)->required();
  gvf_cmd->add_option("--reading", reading, "Read values as a stack or a Morse function")
      ->check(CLI::IsMember({"stack", "morse"}));
  gvf_cmd->add_option("--dot", dot, "Write the dual graph with the induced forest");

  auto* msf = app.add_subcommand("msf", "Minimum spanning forest relative to the minima");
  msf->add_option("file", file)->required();
  msf->add_option("--strategy", strategy)->check(CLI::IsMember({"gvf", "kruskal"}));
  msf->add_option("--dot", dot, "Write the dual graph with the forest");

  auto* ws = app.add_subcommand("watershed", "Watershed-cut faces and their closure");
  ws->add_option("file", file)->required();
  ws->add_option("--strategy", strategy)->check(CLI::IsMember({"gvf", "kruskal"}));
  ws->add_option("--dot", dot, "Write the dual graph with forest and cut");

  auto* collapse = app.add_subcommand("collapse", "List free pairs, or run the ultimate stack collapse");
  collapse->add_option("file", file)->required();
  collapse->add_flag("--ultimate", ultimate, "Collapse until no free pair is left and print the stack");

  auto* gen = app.add_subcommand("generate", "Emit a random basic stack on a generated pseudomanifold");
  gen->add_option("kind", kind, "cycle | simplex_boundary | torus_grid")->required();
  gen->add_option("n", n)->required();
  gen->add_option("--seed", seed, "Overrides MORSESHED_SEED");

  auto* check = app.add_subcommand("check", "Run the oracle suite on files or on the bundled corpus");
  check->add_option("files", files);
  check->add_option("--seed", seed, "First corpus seed; overrides MORSESHED_SEED");
  check->add_option("--seeds", seeds, "Stacks per corpus space");
  check->add_option("--threads", threads)->check(CLI::PositiveNumber);
  check->add_flag("--quiet", quiet, "Only print failures and the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*gvf_cmd) return cmd_gvf(file, reading, dot);
    if (*msf) return cmd_msf(file, strategy, dot);
    if (*ws) return cmd_watershed(file, strategy, dot);
    if (*collapse) return cmd_collapse(file, ultimate);
    if (*gen) return cmd_generate(kind, n, seed);
    if (*check) return cmd_check(files, seed, seeds, threads, quiet);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kUsage;
}
