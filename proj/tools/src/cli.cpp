#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <optional>
#include <random>

#include "tightturan/constructions.hpp"
#include "tightturan/embedding.hpp"
#include "tightturan/extremal_search.hpp"
#include "tightturan/hypergraph_io.hpp"
#include "tightturan/report.hpp"
#include "tightturan/weights.hpp"

namespace tightturan::cli {

namespace {

struct Options {
  std::string input;
  std::string tree;
  std::string tournament;
  std::string coeff;
  std::optional<std::size_t> n;
  std::optional<unsigned> r;
  std::optional<std::size_t> t;
  std::optional<std::size_t> grid;
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> seed;
  std::size_t count = 100;
  unsigned threads = 1;
  bool json = false;
  bool timing = false;
};

/// Raised for argument problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  Json result;
  std::optional<bool> pass;  // nullopt: the command has no verdict
  std::string text;          // replaces the key/value rendering when non-empty
};

Hypergraph load_hypergraph(const std::string& path, const char* flag) {
  if (path.empty()) throw UsageError(std::string(flag) + " FILE is required");
  try {
    return read_hypergraph(path);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Tournament load_tournament(const std::string& path) {
  try {
    return read_tournament(path);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

template <typename T>
T require(const std::optional<T>& value, const char* flag) {
  if (!value) throw UsageError(std::string(flag) + " is required");
  return *value;
}

SearchOptions search_options(const Options& o) {
  SearchOptions s;
  if (o.budget) s.budget = *o.budget;
  s.threads = std::max(1u, o.threads);
  return s;
}

Json edge_list(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(json_of(s));
  return out;
}

Json graph_stats(const Hypergraph& g) {
  const std::size_t s = shadow(g).size();
  Json out{{"hypergraph", json_of(g)}, {"edges", g.edge_count()}, {"shadow_size", s}};
  out["edge_shadow_ratio"] = s == 0 ? Json(nullptr) : json_of(Rational(BigInt(g.edge_count()), BigInt(s)));
  return out;
}

// ------------------------------------------------------------ commands

Outcome cmd_shadow(const Options& o) {
  Hypergraph g = load_hypergraph(o.input, "--input");
  auto sh = shadow(g);
  return {Json{{"edges", g.edge_count()}, {"shadow_size", sh.size()}, {"shadow", edge_list(sh)}}, std::nullopt, {}};
}

Outcome cmd_weights(const Options& o) {
  Hypergraph g = load_hypergraph(o.input, "--input");
  WeightMap w = default_weights(g);
  const std::size_t s = shadow(g).size();
  const bool holds = w.total_edge_weight() == Rational(s);
  Json result = json_of(w);
  result["shadow_size"] = s;
  result["identity_holds"] = holds;
  return {result, holds, {}};
}

Outcome cmd_is_tight_tree(const Options& o) {
  Hypergraph g = load_hypergraph(o.input, "--input");
  auto cert = tight_order(g);
  Json result{{"tight_tree", cert.has_value()},
              {"edges", g.edge_count()},
              {"vertices", g.non_isolated_vertices().size()},
              {"certificate", cert ? json_of(*cert) : Json(nullptr)}};
  return {result, cert.has_value(), {}};
}

Outcome cmd_partition(const Options& o) {
  Hypergraph g = load_hypergraph(o.input, "--input");
  auto cert = tight_order(g);
  if (!cert) throw Error(ErrorCode::NotATightTree, "input is not a tight tree");
  return {Json{{"certificate", json_of(*cert)}, {"partition", json_of(r_partition(g, *cert))}}, std::nullopt, {}};
}

Outcome cmd_trunk(const Options& o) {
  Hypergraph g = load_hypergraph(o.input, "--input");
  TrunkNumber tn = trunk_number(g);
  return {Json{{"c", tn.c}, {"star_shaped", is_star_shaped(g)}, {"trunk", json_of(tn.cert)}}, std::nullopt, {}};
}

Outcome cmd_enumerate(const Options& o) {
  const unsigned r = require(o.r, "--r");
  const std::size_t t = require(o.t, "--t");
  auto trees = enumerate_tight_trees(r, t);
  Json list = Json::array();
  for (const auto& tr : trees) list.push_back(json_of(tr));
  return {Json{{"r", r}, {"t", t}, {"count", trees.size()}, {"trees", list}}, std::nullopt, {}};
}

Outcome cmd_embed(const Options& o) {
  Hypergraph host = load_hypergraph(o.input, "--input");
  Hypergraph tree = load_hypergraph(o.tree, "--tree");
  auto f = find_embedding(tree, host);
  return {Json{{"contained", f.has_value()}, {"embedding", f ? json_of(*f) : Json(nullptr)}}, f.has_value(), {}};
}

Outcome cmd_embed_trunk(const Options& o) {
  Hypergraph host = load_hypergraph(o.input, "--input");
  Hypergraph tree = load_hypergraph(o.tree, "--tree");
  TrunkNumber tn = trunk_number(tree);
  try {
    BoundedTrunkEmbedding out = embed_bounded_trunk(host, tree, tn.cert);
    const bool valid = is_valid_embedding(tree, host, out.embedding);
    return {Json{{"trunk", json_of(tn.cert)}, {"trace", json_of(out.trace)}, {"valid", valid}}, valid, {}};
  } catch (const EmbedInvariantError& e) {
    return {Json{{"trunk", json_of(tn.cert)}, {"trace", json_of(e.trace())}, {"valid", false}, {"error", e.what()}},
            false,
            {}};
  }
}

Outcome cmd_embed_small(const Options& o) {
  Hypergraph host = load_hypergraph(o.input, "--input");
  Hypergraph tree = load_hypergraph(o.tree, "--tree");
  Embedding f = embed_small_tree(host, tree);
  const bool valid = is_valid_embedding(tree, host, f);
  return {Json{{"embedding", json_of(f)}, {"valid", valid}}, valid, {}};
}

Outcome cmd_turan(const Options& o) {
  Hypergraph tree = load_hypergraph(o.tree, "--tree");
  SearchResult res = turan_exact(require(o.n, "--n"), tree, search_options(o));
  Json result = json_of(res);
  result["witness_forbidden_free"] = !find_embedding(tree, res.witness);
  return {result, std::nullopt, {}};
}

Outcome cmd_beta(const Options& o) {
  Hypergraph tree = load_hypergraph(o.tree, "--tree");
  RatioResult res = beta_exact(require(o.n, "--n"), tree, search_options(o));
  Json result = json_of(res);
  result["witness_forbidden_free"] = !find_embedding(tree, res.witness);
  return {result, std::nullopt, {}};
}

Outcome cmd_verify_kalai(const Options& o) {
  Hypergraph tree = load_hypergraph(o.tree, "--tree");
  KalaiReport rep = verify_kalai(require(o.n, "--n"), tree, search_options(o));
  return {json_of(rep), rep.pass, {}};
}

Outcome cmd_verify_shadow(const Options& o) {
  Hypergraph host = load_hypergraph(o.input, "--input");
  Hypergraph tree = load_hypergraph(o.tree, "--tree");
  Rational coeff = o.coeff.empty() ? Rational(BigInt(tree.edge_count()) - 1, BigInt(tree.uniformity()))
                                   : parse_rational(o.coeff);
  ShadowBoundReport rep = verify_shadow_bound(host, tree, coeff);
  Json result = json_of(rep);
  if (!rep.forbidden_free) result["note"] = "host contains the forbidden graph; the inequality was not tested";
  return {result, rep.pass, {}};
}

Outcome construct_outcome(const Hypergraph& g, Json extra = Json::object()) {
  Json result = graph_stats(g);
  result.update(extra);
  return {result, std::nullopt, format_hypergraph(g)};
}

Outcome cmd_construct_complete(const Options& o) {
  return construct_outcome(complete_hypergraph(require(o.n, "--n"), require(o.r, "--r")));
}

Outcome cmd_construct_ekr(const Options& o) {
  return construct_outcome(ekr_family(require(o.n, "--n"), require(o.r, "--r")));
}

Outcome cmd_construct_tournament(const Options& o) {
  const std::size_t n = require(o.n, "--n");
  Tournament d = o.tournament.empty() ? cyclic_tournament(n / 3) : load_tournament(o.tournament);
  Hypergraph g = tournament_family(n, d);
  const std::size_t s = shadow(g).size();
  const bool full = BigInt(s) == binomial(static_cast<unsigned>(n), 2);
  Json extra{{"tournament", json_of(d)},
             {"sinks", d.sinks()},
             {"shadow_is_all_pairs", full}};
  if (!full) extra["note"] = "pairs inside the blocks of sink vertices are not covered, so |shadow| < C(n,2)";
  return construct_outcome(g, extra);
}

Outcome cmd_construct_cliques(const Options& o) {
  return construct_outcome(disjoint_cliques(require(o.n, "--n"), require(o.t, "--t")));
}

Outcome cmd_construct_packing(const Options& o) {
  Hypergraph g = load_hypergraph(o.input, "--input");
  const std::size_t n = require(o.n, "--n");
  std::optional<std::vector<VertexSet>> candidates;
  if (o.grid) {
    if (*o.grid * *o.grid > n) throw UsageError("--grid k needs --n >= k*k");
    candidates = grid_candidates(*o.grid);
  }
  PackingResult p = shadow_disjoint_packing(g, n, o.budget.value_or(10'000'000), candidates);
  Json extra = json_of(p);
  extra.erase("union");
  return construct_outcome(p.union_graph, extra);
}

/// Random hypergraph with each r-set present independently with probability 1/2.
Hypergraph random_hypergraph(unsigned r, std::size_t n, std::mt19937_64& rng) {
  std::vector<VertexSet> edges;
  std::bernoulli_distribution coin(0.5);
  const Hypergraph complete = complete_hypergraph(n, r);
  for (const auto& e : complete.edges()) {
    if (coin(rng)) edges.push_back(e);
  }
  return Hypergraph(r, n, std::move(edges));
}

Outcome cmd_fuzz(const Options& o) {
  const std::uint64_t seed = require(o.seed, "--seed");
  std::mt19937_64 rng(seed);
  std::size_t weight_failures = 0, arrange_failures = 0, rainbow_failures = 0, tested = 0;
  for (std::size_t i = 0; i < o.count; ++i) {
    const unsigned r = o.r ? *o.r : 2 + static_cast<unsigned>(rng() % 3);
    const std::size_t n = o.n ? *o.n : r + static_cast<std::size_t>(rng() % (13 - r));
    Hypergraph g = random_hypergraph(r, n, rng);
    while (g.empty()) g = random_hypergraph(r, n, rng);
    ++tested;
    const CodegreeIndex index(g);
    if (default_weights(g).total_edge_weight() != Rational(index.shadow_size())) ++weight_failures;
    for (const auto& e : g.edges()) {
      std::vector<std::size_t> d;
      for (Vertex v : e) d.push_back(index.codegree(e.without(v)));
      std::sort(d.begin(), d.end());
      Rational s = 0;
      for (auto x : d) s += Rational(BigInt(1), BigInt(x));
      for (std::size_t k = 0; k < d.size(); ++k) {
        if (Rational(d[k]) < Rational(BigInt(k + 1)) / s) {
          ++arrange_failures;
          break;
        }
      }
    }
    try {
      rainbow_subgraph(g);
    } catch (const Error&) {
      ++rainbow_failures;
    }
  }
  const bool pass = weight_failures == 0 && arrange_failures == 0 && rainbow_failures == 0;
  return {Json{{"seed", seed},
               {"hypergraphs_tested", tested},
               {"weight_identity_failures", weight_failures},
               {"arrange_bound_failures", arrange_failures},
               {"rainbow_bound_failures", rainbow_failures}},
          pass,
          {}};
}

// ------------------------------------------------------------ rendering

void render_text(const Json& j, std::ostream& out, const std::string& prefix) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix + key;
    if (value.is_object() && value.size() == 2 && value.contains("num") && value.contains("den")) {
      out << name << ": " << to_fraction_string(rational_from_json(value)) << "\n";
    } else if (value.is_object()) {
      render_text(value, out, name + ".");
    } else if (value.is_string() && value.get<std::string>().find('\n') != std::string::npos) {
      out << name << ":\n" << value.get<std::string>();
    } else if (value.is_string()) {
      out << name << ": " << value.get<std::string>() << "\n";
    } else {
      out << name << ": " << value.dump() << "\n";
    }
  }
}

Json parameters_of(const Options& o) {
  Json p = Json::object();
  if (!o.input.empty()) p["input"] = o.input;
  if (!o.tree.empty()) p["tree"] = o.tree;
  if (!o.tournament.empty()) p["tournament"] = o.tournament;
  if (!o.coeff.empty()) p["coeff"] = o.coeff;
  if (o.n) p["n"] = *o.n;
  if (o.r) p["r"] = *o.r;
  if (o.t) p["t"] = *o.t;
  if (o.grid) p["grid"] = *o.grid;
  if (o.budget) p["budget"] = *o.budget;
  if (o.seed) p["seed"] = *o.seed;
  return p;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for Turan problems of tight hypergraph trees", "tightturan"};
  app.require_subcommand(1);
  Options o;

  using Handler = std::function<Outcome(const Options&)>;
  std::string command;
  Handler handler;
  bool deterministic = true;

  auto add = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h,
                 std::initializer_list<const char*> flags, bool fuzz = false) {
    CLI::App* sub = parent->add_subcommand(name, help);
    for (std::string_view f : flags) {
      if (f == "input") sub->add_option("--input", o.input, "hypergraph file");
      if (f == "tree") sub->add_option("--tree", o.tree, "forbidden or embedded tree file");
      if (f == "tournament") sub->add_option("--tournament", o.tournament, "tournament file (default: cyclic)");
      if (f == "coeff") sub->add_option("--coeff", o.coeff, "exact coefficient p/q (default (t-1)/r)");
      if (f == "n") sub->add_option("--n", o.n, "vertex count");
      if (f == "r") sub->add_option("--r", o.r, "uniformity");
      if (f == "t") sub->add_option("--t", o.t, "edge count / clique size");
      if (f == "grid") sub->add_option("--grid", o.grid, "use rows and columns of a k x k grid as candidates");
      if (f == "budget") sub->add_option("--budget", o.budget, "node or candidate limit");
      if (f == "threads") sub->add_option("--threads", o.threads, "worker threads (results do not depend on it)");
      if (f == "count") sub->add_option("--count", o.count, "number of random hypergraphs");
    }
    sub->add_option("--seed", o.seed, "random seed (fuzz only)");
    sub->add_flag("--json", o.json, "emit a JSON report");
    sub->add_flag("--timing", o.timing, "add wall time to the report (breaks byte-identity)");
    const std::string full = parent == &app ? name : parent->get_name() + " " + name;
    sub->callback([&, full, h, fuzz] {
      command = full;
      handler = h;
      deterministic = !fuzz;
    });
    return sub;
  };

  add(&app, "shadow", "list the (r-1)-shadow", cmd_shadow, {"input"});
  add(&app, "weights", "default weights and the identity sum w(e) = |shadow|", cmd_weights, {"input"});
  add(&app, "is-tight-tree", "certify a tight tree ordering", cmd_is_tight_tree, {"input"});
  add(&app, "partition", "the unique r-partition of a tight tree", cmd_partition, {"input"});
  add(&app, "trunk", "minimum trunk and star-shapedness", cmd_trunk, {"input"});
  add(&app, "enumerate-trees", "tight r-trees with t edges up to isomorphism", cmd_enumerate, {"r", "t"});
  add(&app, "embed", "containment oracle", cmd_embed, {"input", "tree"});
  add(&app, "embed-trunk", "bounded-trunk embedding with full trace", cmd_embed_trunk, {"input", "tree"});
  add(&app, "embed-small", "embedding for trees with at most four edges", cmd_embed_small, {"input", "tree"});
  add(&app, "turan", "exact Turan number by branch and bound", cmd_turan, {"tree", "n", "budget", "threads"});
  add(&app, "beta", "exact maximum of e/|shadow| over tree-free hosts", cmd_beta, {"tree", "n", "budget", "threads"});
  add(&app, "verify-kalai", "compare ex_r(n,T) with (t-1)/r C(n,r-1)", cmd_verify_kalai,
      {"tree", "n", "budget", "threads"});
  add(&app, "verify-shadow", "check tree-freeness and e <= coeff |shadow|", cmd_verify_shadow,
      {"input", "tree", "coeff"});
  add(&app, "fuzz", "random checks of the weight identity, arrange bound and rainbow bound", cmd_fuzz,
      {"count", "n", "r"}, true);

  CLI::App* construct = app.add_subcommand("construct", "generate extremal families");
  construct->require_subcommand(1);
  add(construct, "complete", "K_n^r", cmd_construct_complete, {"n", "r"});
  add(construct, "ekr", "all r-sets through vertex 0", cmd_construct_ekr, {"n", "r"});
  add(construct, "tournament", "tournament family of triples", cmd_construct_tournament, {"n", "tournament"});
  add(construct, "cliques", "disjoint copies of K_t", cmd_construct_cliques, {"n", "t"});
  add(construct, "packing", "greedy shadow-disjoint packing of --input", cmd_construct_packing,
      {"input", "n", "grid", "budget"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (o.seed && deterministic) {
      throw UsageError("--seed is only accepted by fuzz; '" + command + "' is deterministic");
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = handler(o);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const int code = outcome.pass.value_or(true) ? kPass : kFail;

    if (o.json) {
      Json report{{"command", command}, {"parameters", parameters_of(o)}, {"result", outcome.result}};
      report["verdict"] = outcome.pass ? Json(*outcome.pass ? "pass" : "fail") : Json(nullptr);
      if (o.timing) report["timing"] = Json{{"seconds", seconds}};
      out << report.dump(2) << "\n";
    } else if (!outcome.text.empty()) {
      out << outcome.text;
      if (outcome.result.contains("note")) err << "note: " << outcome.result["note"].get<std::string>() << "\n";
    } else {
      render_text(outcome.result, out, "");
      if (outcome.pass) out << "verdict: " << (*outcome.pass ? "pass" : "fail") << "\n";
      if (o.timing) out << "seconds: " << seconds << "\n";
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return e.code() == ErrorCode::InvariantViolation ? kFail : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return run(args, out, err);
}

}  // namespace tightturan::cli
