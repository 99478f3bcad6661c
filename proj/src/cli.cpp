#include "ekcodes/cli.hpp"

#include <climits>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ekcodes/bounds.hpp"
#include "ekcodes/cyclic.hpp"
#include "ekcodes/designs.hpp"
#include "ekcodes/io.hpp"
#include "ekcodes/metric.hpp"
#include "ekcodes/search.hpp"
#include "ekcodes/verify.hpp"

namespace ekc {

using Json = nlohmann::ordered_json;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (text.empty()) break;
      throw ParameterError("empty element in list \"" + text + "\"");
    }
    const auto last = item.find_last_not_of(" \t");
    const std::string trimmed = item.substr(first, last - first + 1);
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(trimmed, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != trimmed.size() || value < INT_MIN || value > INT_MAX) {
      throw ParameterError("not an integer: \"" + trimmed + "\"");
    }
    out.push_back(static_cast<int>(value));
  }
  return out;
}

std::vector<std::vector<int>> parse_parts(const std::string& text) {
  std::vector<std::vector<int>> parts;
  std::size_t start = 0;
  while (true) {
    const auto bar = text.find('|', start);
    parts.push_back(parse_int_list(text.substr(start, bar - start)));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return parts;
}

namespace {

enum class Format { text, json, csv };

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string pair_text(const std::vector<int>& s, const std::vector<int>& t) {
  return join(s) + "|" + join(t);
}

std::string csv_cell(const Json& value) {
  std::string cell = value.is_string() ? value.get<std::string>() : value.dump();
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (const char c : cell) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

// Flat record printed as "key: value" lines, one JSON object, or a header plus one CSV row.
std::string render(const Json& record, Format format, std::optional<std::uint64_t> seed) {
  std::ostringstream out;
  switch (format) {
    case Format::json: {
      Json full = Json::object();
      if (seed) full["seed"] = *seed;
      for (const auto& [key, value] : record.items()) full[key] = value;
      out << full.dump() << "\n";
      break;
    }
    case Format::csv: {
      if (seed) out << "# seed=" << *seed << "\n";
      bool first = true;
      for (const auto& [key, value] : record.items()) {
        out << (first ? "" : ",") << key;
        first = false;
      }
      out << "\n";
      first = true;
      for (const auto& [key, value] : record.items()) {
        out << (first ? "" : ",") << csv_cell(value);
        first = false;
      }
      out << "\n";
      break;
    }
    case Format::text:
      if (seed) out << "# seed=" << *seed << "\n";
      for (const auto& [key, value] : record.items()) {
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
            << "\n";
      }
      break;
  }
  return out.str();
}

Json distance_json(const std::optional<int>& d) { return d ? Json(*d) : Json(nullptr); }

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SearchFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 1;
  int threads = 0;
  std::string format = "text";
  double budget_seconds = 0.0;
  std::string out_path;
};

class Session {
 public:
  Session(std::ostream& out, std::ostream& err, const Globals& globals)
      : out_(out), err_(err), g_(globals) {}

  Format format() const {
    if (g_.format == "json") return Format::json;
    if (g_.format == "csv") return Format::csv;
    return Format::text;
  }
  const Globals& globals() const { return g_; }
  std::ostream& err() { return err_; }

  /// Summary only: always stdout.
  void summary(const Json& record, std::optional<std::uint64_t> seed = std::nullopt) {
    out_ << render(record, format(), seed);
  }

  /// Artifact to --out with the summary on stdout; without --out the artifact
  /// takes stdout and the summary moves to stderr.
  void artifact(const std::string& contents, const Json& record,
                std::optional<std::uint64_t> seed = std::nullopt) {
    if (!g_.out_path.empty()) {
      write_file(g_.out_path, contents);
      out_ << render(record, format(), seed);
    } else {
      out_ << contents;
      if (contents.empty() || contents.back() != '\n') out_ << "\n";
      err_ << render(record, format(), seed);
    }
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  Globals g_;
};

Json code_summary(const Code& code) {
  Json r;
  r["n"] = code.params.n;
  r["k"] = code.params.k;
  r["s"] = code.params.s;
  r["q"] = code.params.q;
  r["d"] = code.design_distance;
  r["words"] = code.size();
  r["verified_min_distance"] = distance_json(code.verified_min_distance);
  return r;
}

void require_distance(const Code& code) {
  if (code.verified_min_distance && *code.verified_min_distance < code.design_distance) {
    throw VerificationFailed("minimum distance " + std::to_string(*code.verified_min_distance) +
                             " is below the claimed " + std::to_string(code.design_distance));
  }
}

std::vector<int> reduce_mod(std::vector<int> v, int m) {
  if (m < 1) throw ParameterError("modulus must be >= 1");
  for (int& x : v) x = ((x % m) + m) % m;
  return v;
}

Json pairs_json(const std::vector<CyclicGeneratorPair>& pairs) {
  Json list = Json::array();
  for (const auto& p : pairs) list.push_back(pair_text(p.s(), p.t()));
  return list;
}

// ---- subcommand bodies ----

struct DistArgs {
  int n = 0, k = 0, q = 0;
  std::string a, b;
};

void cmd_dist(Session& session, const DistArgs& args) {
  const auto a = parse_parts(args.a);
  const auto b = parse_parts(args.b);
  if (a.size() != b.size()) throw ParameterError("words have different numbers of parts");
  const CodeParams params{args.n, args.k, static_cast<int>(a.size()), args.q};
  validate_params(params);
  const int d = word_distance(params, canonical_word(params, a), canonical_word(params, b));
  session.summary(Json{{"distance", d}});
}

struct VerifyArgs {
  std::string file;
  std::optional<int> d;
};

void cmd_verify(Session& session, const VerifyArgs& args) {
  Code code = code_from_json(read_file(args.file));
  const auto recorded = code.verified_min_distance;
  if (args.d) code.design_distance = *args.d;
  const auto result = verify_code(code);
  Json r = code_summary(code);
  r["min_distance"] = result.infinite() ? Json("infinite") : Json(result.distance);
  r["pairs_checked"] = result.pairs_checked;
  const bool meets = result.infinite() || result.distance >= code.design_distance;
  const bool consistent = recorded == code.verified_min_distance;
  r["ok"] = meets && consistent;
  if (!session.globals().out_path.empty()) {
    session.artifact(code_to_json(code), r);
  } else {
    session.summary(r);
  }
  if (!consistent) {
    throw VerificationFailed("recorded verified_min_distance disagrees with the recomputed value");
  }
  require_distance(code);
}

struct BoundArgs {
  std::string kind = "upper";
  int n = 0, k = 0, d = 0, u = -1, v = -1, t = 0, s = 2, q = 2;
  std::string variant = "pair";
  std::string sizes;
};

Json bound_json(const BoundReport& b) {
  Json r;
  r["exact"] = format_rational(b.exact_value);
  r["floor"] = b.floor_value.str();
  r["split"] = b.realizing_split
                   ? Json(std::to_string(b.realizing_split->first) + "," +
                          std::to_string(b.realizing_split->second))
                   : Json(nullptr);
  r["kind"] = to_string(b.kind);
  r["source"] = b.source;
  return r;
}

void cmd_bound(Session& session, const BoundArgs& a) {
  Json r;
  if (a.kind == "upper") {
    r = bound_json(upper_bound(a.n, a.k, a.d));
  } else if (a.kind == "split") {
    if (a.u < 0 || a.v < 0) throw ParameterError("--kind split needs --u and --v");
    r = bound_json(upper_bound_split(a.n, a.k, a.d, a.u, a.v));
  } else if (a.kind == "packing") {
    r = bound_json(packing_bound(a.n, a.k, a.t));
  } else if (a.kind == "divisibility") {
    Json levels = Json::array();
    for (const bool ok : divisibility_levels(a.n, a.k, a.t)) levels.push_back(ok);
    r["levels"] = levels;
    r["divisible"] = divisibility_check(a.n, a.k, a.t);
  } else if (a.kind == "generalized") {
    r["divisible"] = generalized_divisibility_check(a.n, parse_int_list(a.sizes));
  } else if (a.kind == "asymptotic") {
    static const std::map<std::string, AsymptoticVariant> variants{
        {"pair", AsymptoticVariant::pair},
        {"stuple", AsymptoticVariant::stuple},
        {"qary", AsymptoticVariant::qary},
        {"qary-pair", AsymptoticVariant::qary_pair}};
    const auto it = variants.find(a.variant);
    if (it == variants.end()) throw ParameterError("unknown variant " + a.variant);
    const auto c = asymptotic_constant(it->second, AsymptoticParams{a.s, a.k, a.d, a.q});
    r["coefficient"] = format_rational(c.coefficient);
    r["n_exponent"] = c.n_exponent;
    r["q_exponent"] = c.q_exponent;
    r["kind"] = to_string(BoundKind::asymptotic_constant);
  } else if (a.kind == "degree") {
    std::pair<int, int> split{a.u, a.v};
    if (a.u < 0 || a.v < 0) split = balanced_split(a.k, a.d);
    r["u"] = split.first;
    r["v"] = split.second;
    r["degree"] = witness_degree(a.n, a.k, a.d, split.first, split.second).str();
  } else if (a.kind == "fractional") {
    r["value"] = format_rational(fractional_value(a.n, a.k, a.d));
  } else {
    throw ParameterError("unknown bound kind " + a.kind);
  }
  session.summary(r);
}

struct KnownArgs {
  int n = 0, k = 0, d = 0;
};

void cmd_known(Session& session, const KnownArgs& a) {
  const auto known = known_value(a.n, a.k, a.d);
  Json r;
  r["known"] = known.has_value();
  if (known) {
    const Json fields = bound_json(*known);
    for (const auto& [key, value] : fields.items()) r[key] = value;
  }
  session.summary(r);
}

struct CyclicArgs {
  int m = 0;
  std::string s, t;
};

CyclicGeneratorPair generator_from(const CyclicArgs& a) {
  return CyclicGeneratorPair(a.m, reduce_mod(parse_int_list(a.s), a.m),
                             reduce_mod(parse_int_list(a.t), a.m));
}

void cmd_antagonistic_check(Session& session, const CyclicArgs& a) {
  const auto g = generator_from(a);
  const auto report = is_antagonistic(g);
  const auto canon = canonical_form(g);
  Json r;
  r["m"] = g.m();
  r["pair"] = pair_text(g.s(), g.t());
  r["canonical"] = pair_text(canon.s(), canon.t());
  r["antagonistic"] = report.antagonistic;
  r["violation"] = report.antagonistic ? Json(nullptr) : Json(report.describe());
  session.summary(r);
  if (!report.antagonistic) throw VerificationFailed(report.describe());
}

struct SearchArgs {
  int k = 2, m = 9;
  std::size_t limit = 0;
  std::uint64_t max_nodes = 0;
  int split_depth = 3;
  std::string frontier_out;
  std::string resume;
};

void cmd_antagonistic_search(Session& session, const SearchArgs& a) {
  AntagonisticSearchOptions options;
  options.k = a.k;
  options.m = a.m;
  options.limit = a.limit;
  options.budget_seconds = session.globals().budget_seconds;
  options.node_budget = a.max_nodes;
  options.split_depth = a.split_depth;
  if (!a.resume.empty()) {
    auto [header, nodes] = frontier_from_text(read_file(a.resume));
    if (header != std::pair{a.k, a.m}) {
      throw ParameterError("frontier file was written for k=" + std::to_string(header.first) +
                           " m=" + std::to_string(header.second));
    }
    if (nodes.empty()) throw ParameterError("frontier file holds no open nodes");
    options.resume_from = std::move(nodes);
  }
  const auto result = search_antagonistic(options);
  if (!a.frontier_out.empty()) write_file(a.frontier_out, frontier_to_text(a.k, a.m, result.frontier));
  Json r;
  r["k"] = a.k;
  r["m"] = a.m;
  r["found"] = result.pairs.size();
  r["exhausted"] = result.exhausted;
  r["budget_hit"] = result.budget_hit;
  r["frontier"] = result.frontier.size();
  r["pairs"] = pairs_json(result.pairs);
  session.summary(r);
  if (result.pairs.empty()) {
    throw SearchFailed(result.exhausted ? "search exhausted without an antagonistic pair"
                                        : "budget exceeded without an antagonistic pair");
  }
}

void cmd_antagonistic_orbit(Session& session, const CyclicArgs& a) {
  Code code = orbit_code(generator_from(a));
  verify_code(code);
  session.artifact(code_to_json(code), code_summary(code));
  require_distance(code);
}

struct MultiOrbitArgs {
  int m = 0;
  int d = 1;
  std::vector<std::string> generators;
};

void cmd_multi_orbit(Session& session, const MultiOrbitArgs& a) {
  std::vector<DisjointPair> gens;
  for (const auto& text : a.generators) {
    const auto parts = parse_parts(text);
    if (parts.size() != 2) throw ParameterError("generator \"" + text + "\" is not a pair");
    gens.emplace_back(reduce_mod(parts[0], a.m), reduce_mod(parts[1], a.m), a.m);
  }
  const Code code = multi_orbit_code(a.m, gens, a.d);
  session.artifact(code_to_json(code), code_summary(code));
  require_distance(code);
}

Json design_summary(const BlockDesign& design, const DesignVerdict& verdict) {
  Json r;
  r["v"] = design.v;
  r["t"] = design.t;
  r["blocks"] = design.blocks.size();
  r["status"] = to_string(verdict.status);
  r["covered_tsets"] = verdict.covered_tsets;
  r["total_tsets"] = verdict.total_tsets;
  r["certificate"] = verdict.certificate.empty() ? Json(nullptr) : Json(join(verdict.certificate));
  return r;
}

void emit_design(Session& session, const BlockDesign& design, Json extra = Json::object(),
                 std::optional<std::uint64_t> seed = std::nullopt) {
  const auto verdict = verify_design(design);
  Json r = design_summary(design, verdict);
  for (const auto& [key, value] : extra.items()) r[key] = value;
  session.artifact(design_to_json(design), r, seed);
  if (verdict.status == DesignStatus::invalid) throw VerificationFailed(verdict.reason);
}

struct DesignArgs {
  int p = 0, r = 0, q = 0, m = 0, t = 2, v = 0;
  std::string base;
  std::string file;
  std::string expect = "packing";
};

void cmd_design_verify(Session& session, const DesignArgs& a) {
  const auto design = design_from_json(read_file(a.file));
  const auto verdict = verify_design(design);
  Json r = design_summary(design, verdict);
  r["reason"] = verdict.reason;
  session.summary(r);
  if (verdict.status == DesignStatus::invalid) throw VerificationFailed(verdict.reason);
  if (a.expect == "design" && verdict.status != DesignStatus::design) {
    throw VerificationFailed("not every t-set is covered");
  }
}

struct ComposeArgs {
  std::string design;
  std::vector<std::string> bases;
  int k = 0, d = 0;
};

void cmd_compose(Session& session, const ComposeArgs& a) {
  const auto design = design_from_json(read_file(a.design));
  std::map<int, Code> base;
  for (const auto& path : a.bases) {
    Code code = code_from_json(read_file(path));
    const int n = code.params.n;
    if (!base.emplace(n, std::move(code)).second) {
      throw ParameterError("two base codes for block size " + std::to_string(n));
    }
  }
  auto composed = compose_code(design, base, a.k, a.d);
  for (const auto& w : composed.warnings) session.err() << "warning: " << w << "\n";
  verify_code(composed.code);
  session.artifact(code_to_json(composed.code), code_summary(composed.code));
  require_distance(composed.code);
}

struct GreedyArgs {
  int n = 0, k = 0, d = 0, s = 2, q = 0;
};

void cmd_greedy(Session& session, const GreedyArgs& a) {
  GreedyOptions options;
  options.n = a.n;
  options.k = a.k;
  options.d = a.d;
  options.s = a.s;
  options.q = a.q;
  options.seed = session.globals().seed;
  Code code = greedy_code(options);
  verify_code(code);
  Json r = code_summary(code);
  if (a.s == 2 && a.q == 0) r["upper_bound_floor"] = upper_bound(a.n, a.k, a.d).floor_value.str();
  session.artifact(code_to_json(code), r, options.seed);
  require_distance(code);
}

struct ExactArgs {
  int n = 0, k = 0, d = 0;
  std::uint64_t max_nodes = 0;
  std::size_t ceiling = kDefaultWordCeiling;
};

void cmd_exact(Session& session, const ExactArgs& a) {
  const auto report = exact_max_code(a.n, a.k, a.d,
                                     SearchBudget{session.globals().budget_seconds, a.max_nodes},
                                     a.ceiling);
  Code code = report.best_code;
  verify_code(code);
  Json r = code_summary(code);
  r["optimal"] = report.optimal;
  r["upper_bound_floor"] = report.upper_bound_floor.str();
  r["meets_upper_bound"] = report.meets_upper_bound;
  r["nodes"] = report.nodes_explored;
  r["budget_hit"] = report.wall_budget_hit || report.node_budget_hit;
  session.artifact(code_to_json(code), r);
  require_distance(code);
  if (!report.optimal) throw SearchFailed("budget exceeded before optimality was proved");
}

struct RatioArgs {
  int k = 2, d = 3, reps = 1;
  std::string n_list = "50,100,200";
};

void cmd_ratio(Session& session, const RatioArgs& a) {
  const auto seed = session.globals().seed;
  const auto rows = ratio_experiment(a.k, a.d, parse_int_list(a.n_list), seed, a.reps);
  std::string contents;
  if (session.format() == Format::json) {
    Json list = Json::array();
    for (const auto& row : rows) {
      Json j;
      j["n"] = row.n;
      j["greedy_size"] = row.greedy_size;
      j["upper_bound_floor"] = row.upper_bound_floor.str();
      j["ratio_to_bound"] = row.ratio_to_bound;
      j["normalized_ratio"] = row.normalized_ratio;
      j["theorem2_constant"] = format_rational(row.theorem2_constant);
      list.push_back(j);
    }
    contents = Json{{"seed", seed}, {"k", a.k}, {"d", a.d}, {"rows", list}}.dump() + "\n";
  } else {
    contents = "# seed=" + std::to_string(seed) + "\n" + ratio_csv(rows);
  }
  if (session.globals().out_path.empty()) {
    session.artifact(contents, Json{{"rows", rows.size()}}, seed);
  } else {
    session.artifact(contents, Json{{"rows", rows.size()}, {"out", session.globals().out_path}},
                     seed);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Codes over pairs of disjoint k-subsets under the transportation distance",
               args.empty() ? "ekcodes" : args.front()};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "random seed for randomized commands")->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads (EK_THREADS if unset)");
  app.add_option("--format", g.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--budget-seconds", g.budget_seconds, "wall-clock budget for searches");
  app.add_option("--out", g.out_path, "artifact output path");

  std::function<void(Session&)> action;

  DistArgs dist;
  auto* c_dist = app.add_subcommand("dist", "distance between two words");
  c_dist->add_option("--n", dist.n)->required();
  c_dist->add_option("--k", dist.k)->required();
  c_dist->add_option("--q", dist.q, "0 for k-subsets, >= 2 for q-ary words");
  c_dist->add_option("--a", dist.a, "first word, parts separated by |")->required();
  c_dist->add_option("--b", dist.b)->required();
  c_dist->callback([&] { action = [&](Session& s) { cmd_dist(s, dist); }; });

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "recompute the minimum distance of a code file");
  c_verify->add_option("file", verify.file)->required();
  c_verify->add_option("--d", verify.d, "claimed distance (default: the file's d)");
  c_verify->callback([&] { action = [&](Session& s) { cmd_verify(s, verify); }; });

  BoundArgs bound;
  auto* c_bound = app.add_subcommand("bound", "exact bound formulas");
  c_bound->add_option("--kind", bound.kind)
      ->check(CLI::IsMember({"upper", "split", "packing", "divisibility", "generalized",
                             "asymptotic", "degree", "fractional"}))
      ->capture_default_str();
  c_bound->add_option("--n", bound.n, "ground set size (v for packing/divisibility)");
  c_bound->add_option("--k", bound.k);
  c_bound->add_option("--d", bound.d);
  c_bound->add_option("--u", bound.u);
  c_bound->add_option("--v", bound.v);
  c_bound->add_option("--t", bound.t);
  c_bound->add_option("--s", bound.s);
  c_bound->add_option("--q", bound.q);
  c_bound->add_option("--variant", bound.variant, "pair, stuple, qary or qary-pair");
  c_bound->add_option("--sizes", bound.sizes, "block sizes for --kind generalized");
  c_bound->callback([&] { action = [&](Session& s) { cmd_bound(s, bound); }; });

  KnownArgs known;
  auto* c_known = app.add_subcommand("known", "known exact value of C(n,k,d)");
  c_known->add_option("--n", known.n)->required();
  c_known->add_option("--k", known.k)->required();
  c_known->add_option("--d", known.d)->required();
  c_known->callback([&] { action = [&](Session& s) { cmd_known(s, known); }; });

  auto* c_anta = app.add_subcommand("antagonistic", "antagonistic generator pairs mod m");
  c_anta->require_subcommand(1);
  CyclicArgs cyclic;
  auto add_cyclic = [&](CLI::App* c) {
    c->add_option("--m", cyclic.m)->required();
    c->add_option("--s", cyclic.s)->required();
    c->add_option("--t", cyclic.t)->required();
  };
  auto* c_check = c_anta->add_subcommand("check", "test conditions (i)-(iii)");
  add_cyclic(c_check);
  c_check->callback([&] { action = [&](Session& s) { cmd_antagonistic_check(s, cyclic); }; });
  auto* c_orbit = c_anta->add_subcommand("orbit", "the m cyclic shifts as a code");
  add_cyclic(c_orbit);
  c_orbit->callback([&] { action = [&](Session& s) { cmd_antagonistic_orbit(s, cyclic); }; });
  SearchArgs search;
  auto* c_search = c_anta->add_subcommand("search", "backtracking search up to equivalence");
  c_search->add_option("--k", search.k)->required();
  c_search->add_option("--m", search.m)->required();
  c_search->add_option("--limit", search.limit, "stop after this many pairs (0: all)");
  c_search->add_option("--max-nodes", search.max_nodes, "node budget (0: none)");
  c_search->add_option("--split-depth", search.split_depth)->capture_default_str();
  c_search->add_option("--frontier-out", search.frontier_out, "write unfinished nodes here");
  c_search->add_option("--resume", search.resume, "continue from a frontier file");
  c_search->callback([&] { action = [&](Session& s) { cmd_antagonistic_search(s, search); }; });

  MultiOrbitArgs multi;
  auto* c_multi = app.add_subcommand("multi-orbit", "union of cyclic orbits of several pairs");
  c_multi->add_option("--m", multi.m)->required();
  c_multi->add_option("--gen", multi.generators, "generator pair \"a1,a2|b1,b2\"")->required();
  c_multi->add_option("--d", multi.d, "claimed distance")->required();
  c_multi->callback([&] { action = [&](Session& s) { cmd_multi_orbit(s, multi); }; });

  auto* c_design = app.add_subcommand("design", "block designs and packings");
  c_design->require_subcommand(1);
  DesignArgs design;
  auto* c_affine = c_design->add_subcommand("affine", "affine plane of prime order p");
  c_affine->add_option("--p", design.p)->required();
  c_affine->callback([&] { action = [&](Session& s) { emit_design(s, affine_plane(design.p)); }; });
  auto* c_sqs = c_design->add_subcommand("sqs", "zero-sum quadruples of GF(2)^r");
  c_sqs->add_option("--r", design.r)->required();
  c_sqs->callback(
      [&] { action = [&](Session& s) { emit_design(s, zero_sum_quadruples(design.r)); }; });
  auto* c_pds = c_design->add_subcommand("pds", "planar difference set mod q^2+q+1, developed");
  c_pds->add_option("--q", design.q)->required();
  c_pds->callback([&] {
    action = [&](Session& s) {
      const auto base = planar_difference_set(design.q);
      if (!base) throw SearchFailed("no planar difference set of order " + std::to_string(design.q));
      const int m = design.q * design.q + design.q + 1;
      emit_design(s, develop_difference_set(*base, m), Json{{"base", join(*base)}});
    };
  });
  auto* c_develop = c_design->add_subcommand("develop", "translates of a base block mod m");
  c_develop->add_option("--base", design.base)->required();
  c_develop->add_option("--m", design.m)->required();
  c_develop->add_option("--t", design.t)->capture_default_str();
  c_develop->callback([&] {
    action = [&](Session& s) {
      emit_design(s, develop_difference_set(parse_int_list(design.base), design.m, design.t));
    };
  });
  auto* c_gpack = c_design->add_subcommand("greedy-pack", "random-order greedy t-packing");
  c_gpack->add_option("--v", design.v)->required();
  c_gpack->add_option("--p", design.p, "block size")->required();
  c_gpack->add_option("--t", design.t)->capture_default_str();
  c_gpack->callback([&] {
    action = [&](Session& s) {
      const auto seed = s.globals().seed;
      emit_design(s, greedy_packing(design.v, design.p, design.t, seed), Json::object(), seed);
    };
  });
  auto* c_dverify = c_design->add_subcommand("verify", "check a design file");
  c_dverify->add_option("file", design.file)->required();
  c_dverify->add_option("--expect", design.expect, "packing or design")
      ->check(CLI::IsMember({"packing", "design"}))
      ->capture_default_str();
  c_dverify->callback([&] { action = [&](Session& s) { cmd_design_verify(s, design); }; });

  ComposeArgs compose;
  auto* c_compose = app.add_subcommand("compose", "place base codes on the blocks of a packing");
  c_compose->add_option("--design", compose.design)->required();
  c_compose->add_option("--base", compose.bases, "base code file, one per block size")->required();
  c_compose->add_option("--k", compose.k)->required();
  c_compose->add_option("--d", compose.d)->required();
  c_compose->callback([&] { action = [&](Session& s) { cmd_compose(s, compose); }; });

  GreedyArgs greedy;
  auto* c_greedy = app.add_subcommand("greedy", "seeded random-order greedy code");
  c_greedy->add_option("--n", greedy.n)->required();
  c_greedy->add_option("--k", greedy.k)->required();
  c_greedy->add_option("--d", greedy.d)->required();
  c_greedy->add_option("--s", greedy.s)->capture_default_str();
  c_greedy->add_option("--q", greedy.q, "0 for k-subsets, >= 2 for q-ary words");
  c_greedy->callback([&] { action = [&](Session& s) { cmd_greedy(s, greedy); }; });

  ExactArgs exact;
  auto* c_exact = app.add_subcommand("exact", "maximum code by branch and bound");
  c_exact->add_option("--n", exact.n)->required();
  c_exact->add_option("--k", exact.k)->required();
  c_exact->add_option("--d", exact.d)->required();
  c_exact->add_option("--max-nodes", exact.max_nodes, "node budget (0: none)");
  c_exact->add_option("--max-words", exact.ceiling, "refuse larger universes")
      ->capture_default_str();
  c_exact->callback([&] { action = [&](Session& s) { cmd_exact(s, exact); }; });

  RatioArgs ratio;
  auto* c_ratio = app.add_subcommand("ratio", "greedy size against the upper bound");
  c_ratio->add_option("--k", ratio.k)->capture_default_str();
  c_ratio->add_option("--d", ratio.d)->capture_default_str();
  c_ratio->add_option("--n-list", ratio.n_list)->capture_default_str();
  c_ratio->add_option("--reps", ratio.reps)->capture_default_str();
  c_ratio->callback([&] { action = [&](Session& s) { cmd_ratio(s, ratio); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  int threads = g.threads;
  if (threads <= 0) {
    if (const char* env = std::getenv("EK_THREADS")) threads = std::atoi(env);
  }
  set_thread_count(threads);

  Session session(out, err, g);
  try {
    action(session);
  } catch (const VerificationFailed& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const SearchFailed& e) {
    err << "search failed: " << e.what() << "\n";
    return kExitSearchFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}

}  // namespace ekc
