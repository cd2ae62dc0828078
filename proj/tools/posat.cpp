// posat: command-line front end.
//
// Exit codes: 0 affirmative, 1 negative verdict (witness printed), 2 usage
// or input error. Reports go to stdout as JSON.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "posat/constructions.hpp"
#include "posat/embedding.hpp"
#include "posat/family_io.hpp"
#include "posat/oracle.hpp"
#include "posat/poset_expr.hpp"
#include "posat/report.hpp"
#include "posat/saturation.hpp"

namespace {

using namespace posat;

constexpr int kAffirmative = 0;
constexpr int kNegative = 1;
constexpr int kUsageError = 2;

struct Common {
  std::string poset;
  std::string mode;
  int threads = 0;
  bool cross_check = false;
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

SubsetMask parse_set(const std::string& text, int n) {
  const SetFamily one = parse_family("n " + std::to_string(n) + "\n" + text + "\n");
  if (one.size() != 1) throw Error("expected exactly one set, got '" + text + "'");
  return one[0];
}

/// "v:a-b,c-d" (0-based vertices), "triangle" or "cycle:k".
Multigraph parse_graph(const std::string& text) {
  Multigraph g;
  if (text == "triangle") {
    g.vertices = 3;
    g.edges = {{0, 1}, {1, 2}, {0, 2}};
    return g;
  }
  if (text.rfind("cycle:", 0) == 0) {
    g.vertices = std::stoi(text.substr(6));
    if (g.vertices < 2) throw Error("cycle needs at least 2 vertices");
    for (int i = 0; i < g.vertices; ++i) g.edges.emplace_back(i, (i + 1) % g.vertices);
    return g;
  }
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error("graph must look like 'v:a-b,c-d'");
  g.vertices = std::stoi(text.substr(0, colon));
  std::stringstream edges(text.substr(colon + 1));
  std::string item;
  while (std::getline(edges, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw Error("edge '" + item + "' must look like 'a-b'");
    g.edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
  }
  return g;
}

int cmd_greedy(const Common& c, int n, const std::string& out) {
  const Poset p = load_poset(c.poset);
  const GreedyTrace t = greedy_colex(n, p, parse_copy_mode(c.mode));
  if (!out.empty()) write_family(out, t.family);
  emit(greedy_json(t));
  return kAffirmative;
}

int cmd_verify(const Common& c, const std::string& family_path, std::optional<int> tail, bool free_only) {
  const Poset p = load_poset(c.poset);
  const SetFamily f = read_family(family_path);
  SaturationOptions opt;
  opt.threads = c.threads;
  opt.symmetric_tail = tail;
  opt.cross_check = c.cross_check;
  const CopyMode mode = parse_copy_mode(c.mode);
  const SaturationReport r = free_only ? is_p_free(f, p, mode, opt) : is_saturating(f, p, mode, opt);
  emit(saturation_json(r, f));
  if (r.cross_check_agrees && !*r.cross_check_agrees) {
    std::cerr << "cross-check disagrees with the reduced check\n";
    return kUsageError;
  }
  return r.affirmative() ? kAffirmative : kNegative;
}

struct ConstructArgs {
  std::string name;
  int n = 0;
  int k = 0;
  int s = 0;
  int t = 0;
  int l = 0;
  std::string graph;
  std::string target = "2C2";
  std::string out;
};

int cmd_construct(const Common& c, const ConstructArgs& a) {
  TaggedFamily t;
  if (a.name == "chain") {
    t = chain_family(a.k, a.n);
  } else if (a.name == "max1") {
    t = max1_family(load_poset(c.poset), a.n);
  } else if (a.name == "kst") {
    t = kst_family(a.s, a.t, a.n);
  } else if (a.name == "graph") {
    t = graph_family(parse_graph(a.graph), a.n);
  } else if (a.name == "chain-singletons") {
    SingletonTarget target;
    if (a.target == "2C2" || a.target == "2*C2") {
      target = SingletonTarget::TwoC2;
    } else if (a.target == "D'") {
      target = SingletonTarget::DiamondPrime;
    } else {
      throw Error("chain-singletons target must be 2C2 or D'");
    }
    t = chain_plus_singletons(a.n, target);
  } else if (a.name == "chain-singletons-cosingletons") {
    t = chain_singletons_cosingletons(a.n);
  } else if (a.name == "interval-hat") {
    t = interval_hat(a.k, a.n);
  } else if (a.name == "butterfly") {
    t = butterfly_H(a.n);
  } else if (a.name == "chain-plus-shallow") {
    const Poset p0 = load_poset(c.poset.empty() ? "C1" : c.poset);
    const std::uint64_t size = chain_plus_shallow_size(a.k, a.l);
    if (size > kMaterializeCap) {
      Json j;
      j["schema"] = "posat.construction/" + std::to_string(kReportVersion);
      j["name"] = "chain-plus-shallow";
      j["target"] = poset_json(disjoint_union(chain(a.k), p0));
      j["target_expr"] = nullptr;
      j["mode"] = "induced";
      j["n"] = a.n;
      j["size"] = nullptr;
      j["claimed_size"] = size;
      j["validity"] = a.l;
      j["hypotheses_met"] = chain_plus_shallow_hypotheses(p0, a.k, a.l);
      j["materialized"] = false;
      emit(j);
      return kAffirmative;
    }
    t = chain_plus_shallow(p0, a.k, a.l, a.n);
  } else {
    throw Error("unknown construction '" + a.name + "'");
  }
  Json j = construction_json(t);
  j["materialized"] = true;
  if (!a.out.empty()) {
    write_family(a.out, t.family);
    std::ofstream sidecar(a.out + ".json");
    if (!sidecar) throw Error("cannot write sidecar '" + a.out + ".json'");
    sidecar << j.dump(2) << '\n';
  } else {
    j["family"] = family_json(t.family);
  }
  emit(j);
  return kAffirmative;
}

int cmd_minsat(const Common& c, int n, int max_size, bool all) {
  const Poset p = load_poset(c.poset);
  OracleOptions opt;
  opt.max_size = max_size;
  opt.threads = c.threads;
  opt.witness_cap = all ? 0 : 1;
  const OracleResult r = min_saturating(n, p, parse_copy_mode(c.mode), opt);
  Json j = oracle_json(r);
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) j["witnesses"][i]["text"] = format_family(r.witnesses[i]);
  emit(j);
  return r.minimum ? kAffirmative : kNegative;
}

int cmd_classify(const Common& c, int estar_cap, int greedy_cap) {
  const Poset p = load_poset(c.poset);
  const Classification cl = classify(p, parse_copy_mode(c.mode), estar_cap, greedy_cap);
  emit(classification_json(cl));
  return cl.kind == Boundedness::Unknown ? kNegative : kAffirmative;
}

int cmd_estar(const Common& c, int cap) {
  const Poset p = load_poset(c.poset);
  const CopyMode mode = parse_copy_mode(c.mode);
  const EstarEstimate e = estar_estimate(p, mode, cap);
  emit(estar_json(e, p, mode));
  return e.certified_upper ? kAffirmative : kNegative;
}

int cmd_embed(const Common& c, const std::string& family_path, const std::string& containing) {
  const Poset p = load_poset(c.poset);
  const SetFamily f = read_family(family_path);
  const CopyMode mode = parse_copy_mode(c.mode);
  std::optional<Embedding> e;
  if (containing.empty()) {
    e = find_copy(f, p, mode);
  } else {
    e = find_copy_containing(f, p, mode, parse_set(containing, f.ground_size()));
  }
  if (e && !verify_embedding(f, p, mode, *e)) throw Error("internal error: embedding failed verification");
  emit(embed_json(f, p, mode, e));
  return e ? kAffirmative : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"posat: saturating families of subsets of [n]"};
  app.require_subcommand(1);

  Common common;
  auto add_poset = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--poset,-p", common.poset, "poset expression or poset file");
    if (required) opt->required();
  };
  auto add_mode = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--mode,-m", common.mode, "induced or non-induced");
    if (required) opt->required();
  };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", common.threads, "worker threads (default: POSAT_THREADS or all cores)");
  };

  int n = 0;
  std::string out;
  auto* greedy = app.add_subcommand("greedy", "run the greedy colex process");
  add_poset(greedy, true);
  add_mode(greedy, true);
  greedy->add_option("-n", n, "ground size")->required();
  greedy->add_option("--out,-o", out, "write the family here");

  std::string family_path;
  std::optional<int> tail;
  bool free_only = false;
  auto* verify = app.add_subcommand("verify", "check freeness and saturation of a family");
  add_poset(verify, true);
  add_mode(verify, true);
  add_threads(verify);
  verify->add_option("--family,-f", family_path, "family file")->required()->check(CLI::ExistingFile);
  verify->add_option("--tail", tail, "members are constant on {m..n}; test candidates up to that symmetry");
  verify->add_flag("--free-only", free_only, "only check P-freeness");
  verify->add_flag("--cross-check", common.cross_check, "also run the unreduced general search and compare");

  ConstructArgs cargs;
  auto* construct = app.add_subcommand("construct", "generate an explicit family");
  construct->add_option("name", cargs.name,
                        "chain | max1 | kst | graph | chain-singletons | chain-singletons-cosingletons | "
                        "interval-hat | butterfly | chain-plus-shallow")
      ->required();
  construct->add_option("-n", cargs.n, "ground size")->required();
  construct->add_option("-k", cargs.k, "chain length or interval size");
  construct->add_option("-s", cargs.s, "K(s,t): bottom count");
  construct->add_option("-t", cargs.t, "K(s,t): top count");
  construct->add_option("-l", cargs.l, "chain-plus-shallow: middle-levels ground size");
  construct->add_option("--graph", cargs.graph, "graph as 'v:a-b,c-d', 'triangle' or 'cycle:k'");
  construct->add_option("--target", cargs.target, "chain-singletons target: 2C2 or D'");
  construct->add_option("--out,-o", cargs.out, "family file; a .json sidecar is written next to it");
  add_poset(construct, false);

  int max_size = 0;
  bool all = false;
  auto* minsat = app.add_subcommand("minsat", "exact minimum saturating family size by exhaustive search");
  add_poset(minsat, true);
  add_mode(minsat, true);
  add_threads(minsat);
  minsat->add_option("-n", n, "ground size")->required();
  minsat->add_option("--max-size", max_size, "largest family size tried");
  minsat->add_flag("--all", all, "report every minimum witness");

  int estar_cap = 12;
  int greedy_cap = 9;
  auto* classify_cmd = app.add_subcommand("classify", "bounded / unbounded induced saturation number");
  add_poset(classify_cmd, true);
  add_mode(classify_cmd, false);
  classify_cmd->add_option("--estar-cap", estar_cap, "largest cube for e* estimates");
  classify_cmd->add_option("--greedy-cap", greedy_cap, "largest m for greedy certificates");

  int cap = 12;
  auto* estar = app.add_subcommand("estar", "estimate e*(P) from consecutive-level windows");
  add_poset(estar, true);
  add_mode(estar, false);
  estar->add_option("--cap", cap, "largest cube examined");

  std::string containing;
  auto* embed = app.add_subcommand("embed", "find a copy of P in a family");
  add_poset(embed, true);
  add_mode(embed, true);
  embed->add_option("--family,-f", family_path, "family file")->required()->check(CLI::ExistingFile);
  embed->add_option("--containing", containing, "only copies through this member, e.g. 1,3 or -");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kAffirmative : kUsageError;
  }

  try {
    if (common.mode.empty()) common.mode = "induced";
    if (greedy->parsed()) return cmd_greedy(common, n, out);
    if (verify->parsed()) return cmd_verify(common, family_path, tail, free_only);
    if (construct->parsed()) return cmd_construct(common, cargs);
    if (minsat->parsed()) return cmd_minsat(common, n, max_size, all);
    if (classify_cmd->parsed()) return cmd_classify(common, estar_cap, greedy_cap);
    if (estar->parsed()) return cmd_estar(common, cap);
    if (embed->parsed()) return cmd_embed(common, family_path, containing);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
