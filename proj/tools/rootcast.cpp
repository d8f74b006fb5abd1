#include "rootcast/constructive.hpp"
#include "rootcast/errors.hpp"
#include "rootcast/measures.hpp"
#include "rootcast/numeric.hpp"
#include "rootcast/potentials.hpp"
#include "rootcast/prufer.hpp"
#include "rootcast/rootfind.hpp"
#include "rootcast/score.hpp"
#include "rootcast/tree.hpp"
#include "rootcast/treeio.hpp"
#include "rootcast/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace rootcast;
using nlohmann::json;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ROOTCAST_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      fail(errc::bad_input, std::string("ROOTCAST_SEED is not an unsigned integer: ") + env);
    }
  }
  return 1;
}

void print_repro(const std::vector<std::string>& args) {
  std::cout << "# rootcast";
  for (const auto& a : args) std::cout << ' ' << a;
  std::cout << '\n';
}

json edges_json(const Tree& t) {
  json edges = json::array();
  for (const auto& [u, v] : t.edges()) edges.push_back({t.label(u), t.label(v)});
  if (t.n() == 1) edges.push_back({t.label(0)});
  return edges;
}

void print_report(const PropertyReport& rep) {
  std::cout << "property: " << property_name(rep.property) << '\n'
            << "subject: " << rep.subject << '\n'
            << "trees checked: " << rep.trees_checked << '\n'
            << "verdict: " << (rep.all_pass ? "all-pass" : "fail") << '\n';
  if (rep.fragile) std::cout << "fragile: some comparison within 10x of the float tie tolerance\n";
  if (rep.counterexample) {
    const auto& ce = *rep.counterexample;
    std::cout << "counterexample (" << ce.tree.n() << " vertices):\n"
              << write_edge_list(ce.tree);
    std::cout << "offending vertices:";
    for (int v : ce.vertices) std::cout << ' ' << v;
    std::cout << '\n';
    if (!ce.detail.empty()) std::cout << "scores: " << ce.detail << '\n';
  }
  std::cout << "wall: " << format_double(rep.wall_ms) << " ms\n";

  json record{{"property", property_name(rep.property)},
              {"measure", rep.subject},
              {"verdict", rep.all_pass ? "all-pass" : "fail"},
              {"trees_checked", rep.trees_checked},
              {"fragile", rep.fragile},
              {"wall_ms", rep.wall_ms}};
  if (rep.counterexample) {
    record["counterexample"] = {{"edges", edges_json(rep.counterexample->tree)},
                                {"vertices", rep.counterexample->vertices},
                                {"detail", rep.counterexample->detail}};
  }
  std::cout << record.dump() << '\n';
}

int run_centrality(const std::string& input, const std::string& measure_name) {
  const Measure m = Measure::parse(measure_name);
  const Tree t = read_edge_list_file(input);
  print_repro({"centrality", "--measure", m.name(), "--input", input});
  const auto scores = score_all(m, t);
  for (int v = 0; v < t.n(); ++v)
    std::cout << t.label(v) << '\t' << display_score(m, scores[v]) << '\n';
  return 0;
}

int run_find_root(const std::string& input, const std::string& potential_name, bool both,
                  bool logspace) {
  const ConstructiveSpec spec = ConstructiveSpec::parse(potential_name);
  const Tree t = read_edge_list_file(input);
  const NumericMode mode = logspace ? NumericMode::log_space : NumericMode::exact;
  std::vector<std::string> repro{"find-root", "--input", input, "--potential", spec.name()};
  if (both) repro.push_back("--both");
  repro.push_back(logspace ? "--logspace" : "--exact");
  print_repro(repro);
  const RootResult res = both ? find_roots_both(t, spec, mode) : find_root(t, spec, mode);
  for (size_t i = 0; i < res.roots.size(); ++i)
    std::cout << t.label(res.roots[i]) << '\t' << res.values[i].to_string() << '\n';
  return 0;
}

int run_verify(const std::string& property_name_text, const std::string& measure_name,
               const std::string& potential_name, SweepOptions opt) {
  const PropertyId prop = parse_property(property_name_text);
  if (prop == PropertyId::cstar_no_potential) {
    print_repro({"verify", "--property", property_name_text});
    const PropertyReport rep = cstar_no_potential_demo();
    print_report(rep);
    return rep.all_pass ? 0 : 1;
  }
  Subject subject;
  subject.measure = Measure::parse(measure_name);
  if (prop == PropertyId::potential_equivalence) {
    if (potential_name.empty())
      fail(errc::bad_input, "--potential is required for potential-equivalence");
    subject.potential = Potential::parse(potential_name);
  } else if (!potential_name.empty()) {
    fail(errc::bad_input, "--potential only applies to potential-equivalence");
  }
  std::vector<std::string> repro{"verify",   "--property",     property_name_text,
                                 "--measure", subject.measure.name()};
  if (subject.potential) {
    repro.push_back("--potential");
    repro.push_back(subject.potential->name());
  }
  for (const auto& kv : std::vector<std::pair<std::string, std::string>>{
           {"--max-n", std::to_string(opt.n_max)},
           {"--random", std::to_string(opt.random_budget)},
           {"--random-max-n", std::to_string(opt.random_n_max)},
           {"--seed", std::to_string(opt.seed)},
           {"--jobs", std::to_string(opt.jobs)}}) {
    repro.push_back(kv.first);
    repro.push_back(kv.second);
  }
  if (!opt.consistency_all_roots) repro.push_back("--exists-root");
  print_repro(repro);
  const PropertyReport rep = sweep(prop, subject, opt);
  print_report(rep);
  return rep.all_pass ? 0 : 1;
}

int run_enumerate(int n) {
  print_repro({"enumerate", "--n", std::to_string(n)});
  if (n == 1) {
    std::cout << write_edge_list(Tree::single());
    return 0;
  }
  TreeEnumerator en(n);
  Tree t = Tree::single();
  bool first = true;
  while (en.next(t)) {
    if (!first) std::cout << '\n';
    first = false;
    std::cout << write_edge_list(t);
  }
  return 0;
}

int run_bench(const std::string& sizes_csv, const std::string& potential_name, std::uint64_t seed,
              int repeats, int naive_cap, bool exact_flag, bool logspace_flag) {
  const ConstructiveSpec spec = ConstructiveSpec::parse(potential_name);
  std::vector<int> sizes;
  std::stringstream ss(sizes_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      sizes.push_back(std::stoi(item));
    } catch (const std::exception&) {
      fail(errc::bad_input, "bad size '" + item + "' in --sizes");
    }
  }
  if (sizes.empty()) fail(errc::bad_input, "--sizes needs at least one value");
  // Exact all-subgraphs counts at benchmark scale would be astronomically
  // large integers, so product monoids default to log-space timing.
  NumericMode mode = spec.product_monoid() ? NumericMode::log_space : NumericMode::exact;
  if (exact_flag) mode = NumericMode::exact;
  if (logspace_flag) mode = NumericMode::log_space;
  std::vector<std::string> repro{"bench",  "--sizes",        sizes_csv,
                                 "--potential", spec.name(), "--seed",
                                 std::to_string(seed)};
  repro.push_back(mode == NumericMode::log_space ? "--logspace" : "--exact");
  print_repro(repro);
  const BenchReport rep = bench_scaling(sizes, spec, seed, mode, repeats, naive_cap);
  std::cout << "n\talgo1_ms\tnaive_ms\n";
  for (const auto& row : rep.rows) {
    std::cout << row.n << '\t' << format_double(row.algo1_ms) << '\t';
    if (row.naive_ms >= 0)
      std::cout << format_double(row.naive_ms);
    else
      std::cout << "-";
    std::cout << '\n';
  }
  std::cout << "# algo1 log-log slope: " << format_double(rep.algo1_slope) << '\n';
  if (!std::isnan(rep.naive_slope))
    std::cout << "# naive log-log slope: " << format_double(rep.naive_slope) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tree centrality toolkit: centrality scores, potential-based root "
               "finding, and property verification sweeps"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string measure_name = "closeness";
  std::string potential_name;
  std::string property_text;
  std::string sizes_csv;
  bool both = false, logspace = false, exact = false, exists_root = false;
  int n = 4, repeats = 5, naive_cap = 20000;
  SweepOptions opt;
  std::uint64_t seed_flag = 0;
  bool seed_given = false;

  auto* centrality = app.add_subcommand("centrality", "score every vertex under a measure");
  centrality->add_option("--measure", measure_name, "measure name, e.g. closeness or decay:alpha=0.5");
  centrality->add_option("--input", input, "edge-list file, or - for stdin");

  auto* find = app.add_subcommand("find-root", "run Find-a-root under a constructive potential");
  find->add_option("--input", input, "edge-list file, or - for stdin");
  find->add_option("--potential", potential_name, "built-in spec name or abc:a=..,b=..,c=..")
      ->required();
  find->add_flag("--both", both, "also report a tied second root");
  auto* fr_exact = find->add_flag("--exact", exact, "exact arithmetic (default)");
  find->add_flag("--logspace", logspace, "carry ln f in doubles (product monoids)")
      ->excludes(fr_exact);

  auto* verify = app.add_subcommand("verify", "sweep a property over small trees");
  verify->add_option("--property", property_text,
                     "rooting | amop | symmetry | consistency | monotonicity | "
                     "potential-equivalence | cstar-no-potential")
      ->required();
  verify->add_option("--measure", measure_name, "measure under test");
  verify->add_option("--potential", potential_name, "potential for potential-equivalence");
  verify->add_option("--max-n", opt.n_max, "exhaustive sweep bound (2..8)");
  verify->add_option("--random", opt.random_budget, "random trees after the exhaustive part");
  verify->add_option("--random-max-n", opt.random_n_max, "max size of random trees");
  verify->add_option("--seed", seed_flag, "seed for the random part");
  verify->add_option("--jobs", opt.jobs, "worker threads for the exhaustive part");
  verify->add_flag("--exists-root", exists_root,
                   "relax consistency to: some old root explains the new root set");

  auto* enumerate = app.add_subcommand("enumerate", "list all labeled trees on n vertices");
  enumerate->add_option("--n", n, "vertex count (1..8)")->required();

  auto* bench = app.add_subcommand("bench", "time find-root against the naive baseline");
  bench->add_option("--sizes", sizes_csv, "comma-separated vertex counts")->required();
  bench->add_option("--potential", potential_name, "constructive spec")->required();
  bench->add_option("--seed", seed_flag, "tree stream seed");
  bench->add_option("--repeats", repeats, "trees per size (median is reported)");
  bench->add_option("--naive-cap", naive_cap, "skip the naive baseline above this size");
  auto* b_exact = bench->add_flag("--exact", exact, "force exact arithmetic");
  bench->add_flag("--logspace", logspace, "force log-space doubles")->excludes(b_exact);

  auto* demo = app.add_subcommand("demo-cstar", "three-join pattern ruling out a C* potential");

  // Track whether --seed was supplied anywhere, to fall back on ROOTCAST_SEED.
  for (auto* sub : {verify, bench})
    if (auto* o = sub->get_option_no_throw("--seed"))
      o->each([&](const std::string&) { seed_given = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const std::uint64_t seed = seed_given ? seed_flag : default_seed();
    if (centrality->parsed()) return run_centrality(input, measure_name);
    if (find->parsed()) return run_find_root(input, potential_name, both, logspace);
    if (verify->parsed()) {
      opt.seed = seed;
      opt.consistency_all_roots = !exists_root;
      return run_verify(property_text, measure_name, potential_name, opt);
    }
    if (enumerate->parsed()) return run_enumerate(n);
    if (bench->parsed())
      return run_bench(sizes_csv, potential_name, seed, repeats, naive_cap, exact, logspace);
    if (demo->parsed()) {
      print_repro({"demo-cstar"});
      const PropertyReport rep = cstar_no_potential_demo();
      print_report(rep);
      return rep.all_pass ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
