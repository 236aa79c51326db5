// chromprof: command-line front end for the chromprof library.

#include "CLI11.hpp"
#include "json.hpp"

#include <chromprof/chromprof.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <thread>

namespace {

using json = nlohmann::ordered_json;
using namespace chromprof;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitParameter = 3;
constexpr int kExitClaim = 4;
constexpr int kExitInvariant = 5;
constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

auto env_workers() -> int {
  if (const char *w = std::getenv("CHROMPROF_WORKERS")) {
    try {
      const int n = std::stoi(w);
      if (n >= 1)
        return n;
    } catch (const std::exception &) {
    }
    throw UsageError("CHROMPROF_WORKERS must be a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

auto colour_enabled() -> bool {
  const char *c = std::getenv("CHROMPROF_COLOR");
  return c != nullptr && std::string(c) != "0" && std::getenv("NO_COLOR") == nullptr;
}

auto envelope(const std::string &command) -> json { return json{{"schema_version", kSchemaVersion}, {"command", command}}; }

auto emit(const std::string &text, const std::string &out_path) -> void {
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    write_text_file(out_path, text);
}

auto arcs_json(const Digraph &d) -> json {
  json arcs = json::array();
  for (auto [u, v] : d.arcs())
    arcs.push_back({u, v});
  return arcs;
}

auto digraph_json(const Digraph &d) -> json { return {{"n", d.vertex_count()}, {"arcs", arcs_json(d)}}; }

auto verdict_json(const ConstructionVerdict &v) -> json {
  json j{{"delta_plus", v.delta_plus}, {"chi", v.chi}};
  for (const auto &[slug_name, free] : v.free_of)
    j[slug_name + "_free"] = free;
  return j;
}

auto parse_rational(const std::string &s) -> Rational {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos)
      return {std::stoll(s), 1};
    return {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
  } catch (const std::exception &) {
    throw ParameterError("epsilon must look like p/q");
  }
}

auto parse_orientation(const std::string &s) -> C5Orientation {
  if (s == "arrow")
    return C5Orientation::Arrow;
  if (s == "prime")
    return C5Orientation::Prime;
  if (s == "double-prime")
    return C5Orientation::DoublePrime;
  if (s == "triple-prime")
    return C5Orientation::TriplePrime;
  throw UsageError("orientation must be arrow, prime, double-prime or triple-prime");
}

auto parse_list(const std::string &s) -> std::vector<int> {
  std::vector<int> out;
  std::stringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception &) {
      throw UsageError("vertex list must be comma-separated integers");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

struct ConstructOpts {
  std::string family, out, format = "text", orientation = "prime", eps = "1/20";
  int n = 0, r = 3, t = 1, k = 3;
  bool check = false, json_out = false;
};

auto build_family(const ConstructOpts &o) -> Digraph {
  const auto &f = o.family;
  if (f == "aes")
    return extremal_aes(o.n, o.r);
  if (f == "aes-relaxed")
    return extremal_aes_relaxed(o.n, o.r);
  if (f == "a")
    return a_n(o.n);
  if (f == "b")
    return b_n(o.n);
  if (f == "c3")
    return c3_blowup_n(o.n);
  if (f == "tr")
    return transitive_tournament(o.r);
  if (f == "tr-blowup")
    return tr_blowup(o.r, o.t);
  if (f == "cycle")
    return directed_cycle(o.k);
  if (f == "c5")
    return c5_pattern(parse_orientation(o.orientation));
  if (f == "wheel")
    return wheel_like(o.r, o.t);
  if (f == "remark")
    return remark_construction(o.n, parse_rational(o.eps));
  throw UsageError("unknown family '" + f + "'");
}

auto format_digraph(const Digraph &d, const std::string &format) -> std::string {
  if (format == "dot")
    return to_dot(d);
  if (format == "json")
    return digraph_json(d).dump(2) + "\n";
  return serialize_digraph(d);
}

auto cmd_construct(const ConstructOpts &o) -> int {
  const Digraph d = build_family(o);
  if (!o.check) {
    emit(format_digraph(d, o.format), o.out);
    return kExitOk;
  }
  if (!o.out.empty())
    emit(format_digraph(d, o.format), o.out);
  const auto v = construction_verdict(d, family_forbidden(o.family, o.r));
  if (o.json_out) {
    json j = envelope("construct");
    j["family"] = o.family;
    j["n"] = d.vertex_count();
    j["verdict"] = verdict_json(v);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "delta_plus " << v.delta_plus << "\nchi " << v.chi << "\n";
    for (const auto &[name, free] : v.free_of)
      std::cout << name << "_free " << (free ? "true" : "false") << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct CheckOpts {
  std::string in;
  std::vector<std::string> patterns;
  int k = 0;
  bool json_out = false;
};

auto cmd_check(const CheckOpts &o) -> int {
  const Digraph d = read_digraph_file(o.in);
  json j = envelope("check");
  j["n"] = d.vertex_count();
  j["arcs"] = d.arc_count();
  j["delta_plus"] = d.vertex_count() ? min_out_degree(d) : 0;
  const auto chi = chromatic_number(d);
  j["chi"] = chi.chi;
  const auto og = odd_girth(d);
  j["odd_girth"] = og.value ? json(*og.value) : json(nullptr);
  j["bipartite"] = !og.value.has_value();
  if (o.k > 0)
    j["k_colorable"] = chi.chi <= o.k;
  json free = json::object();
  for (const auto &text : o.patterns) {
    const PatternId p = parse_pattern_id(text);
    const auto e = contains_pattern(d, p);
    free[to_string(p)] = e ? json{{"free", false}, {"embedding", e->map}} : json{{"free", true}};
  }
  if (!o.patterns.empty())
    j["patterns"] = free;
  if (o.json_out) {
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "schema_version" && it.key() != "command")
      std::cout << it.key() << " " << it.value().dump() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct WitnessOpts {
  std::string op, in, target = "C5'", cycle, embedding;
  int r = 3, l = 3;
  bool json_out = false;
};

auto finder_json(const FinderResult &res) -> json {
  if (const auto *f = found(res))
    return {{"status", "found"}, {"route", f->route}, {"embedding", f->embedding.map}};
  const auto &s = std::get<Stall>(res);
  return {{"status", "stall"}, {"stage", s.stage}, {"partial", s.partial}, {"counters", s.counters}};
}

auto cmd_witness(const WitnessOpts &o) -> int {
  const Digraph d = read_digraph_file(o.in);
  json j = envelope("witness");
  j["op"] = o.op;
  if (o.op == "find-tr") {
    j["r"] = o.r;
    j["result"] = {{"status", "found"}, {"embedding", find_tr_by_degree(d, o.r).map}};
  } else if (o.op == "find-cycle") {
    j["l"] = o.l;
    j["result"] = {{"status", "found"}, {"embedding", find_directed_cycle(d, o.l).map}};
  } else if (o.op == "find-c5pp") {
    j["result"] = finder_json(find_c5pp_from_triangle(d));
  } else if (o.op == "find-c5p") {
    Embedding e{5, parse_list(o.embedding)};
    if (o.embedding.empty()) {
      const auto pp = find_c5pp_from_triangle(d);
      if (!found(pp)) {
        j["result"] = finder_json(pp);
        std::cout << j.dump(2) << "\n";
        return kExitOk;
      }
      e = found(pp)->embedding;
    }
    j["source"] = e.map;
    j["result"] = finder_json(find_c5p_from_c5pp(d, e));
  } else if (o.op == "morph") {
    std::vector<int> start = o.cycle.empty() ? odd_girth(d).witness : parse_list(o.cycle);
    if (start.size() != 5)
      throw HypothesisError("morph needs a 5-cycle; pass --cycle or use a host with odd girth 5");
    j["start"] = start;
    j["target"] = o.target;
    j["result"] = finder_json(morph_pentagon(d, start, parse_pattern_id(o.target)));
  } else if (o.op == "saturate") {
    const auto s = saturate_tr(d, o.r);
    json added = json::array();
    for (auto [u, v] : s.added_arcs)
      added.push_back({u, v});
    j["r"] = o.r;
    j["result"] = {{"status", "found"}, {"added_arcs", added}, {"saturated", digraph_json(s.saturated)}};
  } else if (o.op == "extract-wheel") {
    const auto w = extract_wheel(d, o.r);
    j["r"] = o.r;
    j["result"] = {{"status", "found"}, {"v", w.v},   {"w1", w.w1}, {"w2", w.w2},
                   {"q1", w.q1},        {"q2", w.q2}, {"t", w.t},   {"verified", verify_wheel_like(d, w, o.r)}};
  } else {
    throw UsageError("unknown witness op '" + o.op + "'");
  }
  if (o.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j["result"].dump() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ProfileOpts {
  std::string pattern, mode = "exhaustive", start;
  int k = 2, n = 0;
  std::optional<std::uint64_t> seed;
  std::uint64_t trials = 10000;
  bool json_out = false;
};

auto report_json(const ThresholdReport &r) -> json {
  json mode{{"kind", to_string(r.config.mode)}};
  if (r.config.mode != SearchMode::Exhaustive) {
    mode["seed"] = r.config.seed;
    mode[r.config.mode == SearchMode::Random ? "trials" : "iters"] = r.config.trials;
  }
  json j{{"pattern", to_string(r.pattern)}, {"k", r.k}, {"n", r.n}, {"mode", mode}};
  j["best_delta_plus"] = r.best_delta_plus ? json(*r.best_delta_plus) : json(nullptr);
  j["certificate"] = r.certificate ? digraph_json(*r.certificate) : json(nullptr);
  j["counts"] = {{"scanned", r.counts.scanned},
                 {"pattern_free", r.counts.pattern_free},
                 {"non_colorable", r.counts.non_colorable}};
  return j;
}

auto cmd_profile(const ProfileOpts &o) -> int {
  const PatternId p = parse_pattern_id(o.pattern);
  ThresholdReport rep;
  if (o.mode == "exhaustive") {
    rep = empirical_profile(p, o.k, o.n, {SearchMode::Exhaustive, 0, 0, env_workers()});
  } else if (o.mode == "random") {
    if (!o.seed)
      throw UsageError("--seed is required in random mode");
    rep = empirical_profile(p, o.k, o.n, {SearchMode::Random, *o.seed, o.trials, env_workers()});
  } else if (o.mode == "hillclimb") {
    if (!o.seed)
      throw UsageError("--seed is required in hillclimb mode");
    std::optional<Digraph> start;
    if (!o.start.empty())
      start = read_digraph_file(o.start);
    rep = hillclimb_extremal(p, o.k, o.n, *o.seed, o.trials, start);
  } else {
    throw UsageError("mode must be exhaustive, random or hillclimb");
  }
  json j = envelope("profile");
  j["report"] = report_json(rep);
  if (o.json_out) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "pattern " << to_string(rep.pattern) << " k " << rep.k << " n " << rep.n << " mode " << o.mode
              << "\nbest_delta_plus " << (rep.best_delta_plus ? std::to_string(*rep.best_delta_plus) : "none")
              << "\nscanned " << rep.counts.scanned << " pattern_free " << rep.counts.pattern_free
              << " non_colorable " << rep.counts.non_colorable << "\n";
    if (rep.certificate)
      std::cout << serialize_digraph(*rep.certificate);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyOpts {
  std::string theorem, h = "C5'", mode = "exhaustive";
  int r = 3, l = 3, n = 0;
  std::optional<std::uint64_t> seed;
  std::uint64_t trials = 10000;
  bool json_out = false;
};

auto cmd_verify(const VerifyOpts &o) -> int {
  TheoremId t;
  if (o.theorem == "aes")
    t = TheoremId::aes(o.r);
  else if (o.theorem == "directed-cycle")
    t = TheoremId::directed_cycle(o.l);
  else if (o.theorem == "pentagon-bipartite")
    t = TheoremId::pentagon_bipartite(parse_pattern_id(o.h).kind);
  else
    throw UsageError("theorem must be aes, directed-cycle or pentagon-bipartite");
  SearchConfig cfg{SearchMode::Exhaustive, 0, 0, env_workers()};
  if (o.mode == "random") {
    if (!o.seed)
      throw UsageError("--seed is required in random mode");
    cfg = {SearchMode::Random, *o.seed, o.trials, env_workers()};
  } else if (o.mode != "exhaustive") {
    throw UsageError("mode must be exhaustive or random");
  }
  const auto c = verify_theorem(t, o.n, cfg);
  const bool failed = c.conclusion_failures > 0;
  const std::string status = !failed ? "verified" : c.asymptotic ? "finite-artifact" : "failed";
  json j = envelope("verify");
  j["theorem"] = to_string(c.theorem);
  j["n"] = c.n;
  j["mode"] = to_string(cfg.mode);
  j["scanned"] = c.scanned;
  j["hypothesis_count"] = c.hypothesis_count;
  j["conclusion_failures"] = c.conclusion_failures;
  j["counterexample"] = c.counterexample ? digraph_json(*c.counterexample) : json(nullptr);
  j["status"] = status;
  if (o.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j["theorem"].get<std::string>() << " n=" << c.n << " scanned " << c.scanned << " hypothesis "
              << c.hypothesis_count << " failures " << c.conclusion_failures << " -> " << status << "\n";
  return status == "failed" ? kExitClaim : kExitOk;
}

// ---------------------------------------------------------------------------

struct SuiteOpts {
  std::string only, json_path, evidence_dir;
  int n_max = kMaxEnumerationOrder;
  std::uint64_t seed = 1;
};

auto claim_json(const ClaimResult &r, bool with_runtime) -> json {
  json facts = json::object();
  for (const auto &[k, v] : r.facts)
    facts[k] = v;
  json j{{"claim", r.id},          {"criterion", r.criterion}, {"parameters", r.parameters},
         {"status", to_string(r.status)}, {"checks", r.checks},      {"failures", r.failures},
         {"facts", facts}};
  if (with_runtime)
    j["runtime_seconds"] = r.seconds;
  return j;
}

auto cmd_suite(const SuiteOpts &o) -> int {
  if (o.n_max < 1 || o.n_max > kMaxEnumerationOrder)
    throw UsageError("--n-max must lie in 1.." + std::to_string(kMaxEnumerationOrder));
  SuiteOptions opt{o.n_max, env_workers(), o.seed, o.only};
  const auto results = run_suite(opt);
  if (results.empty())
    throw UsageError("--only '" + o.only + "' matches no claim");
  bool any_failed = false;
  json report = envelope("verify-paper");
  report["n_max"] = o.n_max;
  report["claims"] = json::array();
  const bool colour = colour_enabled();
  for (const auto &r : results) {
    any_failed = any_failed || r.status == ClaimStatus::Failed;
    report["claims"].push_back(claim_json(r, true));
    if (!o.evidence_dir.empty()) {
      std::filesystem::create_directories(o.evidence_dir);
      json ev = envelope("verify-paper");
      ev["evidence"] = claim_json(r, false);
      write_text_file((std::filesystem::path(o.evidence_dir) / (r.id + ".json")).string(), ev.dump(2) + "\n");
    }
    const std::string status = to_string(r.status);
    const char *on = !colour ? "" : r.status == ClaimStatus::Failed ? "\033[31m" : "\033[32m";
    std::cout << "[" << r.criterion << "] " << r.id << ": " << on << status << (colour ? "\033[0m" : "") << " ("
              << r.checks << " checks)\n";
    for (const auto &f : r.failures)
      std::cout << "    " << f << "\n";
  }
  report["ok"] = !any_failed;
  if (!o.json_path.empty())
    write_text_file(o.json_path, report.dump(2) + "\n");
  return any_failed ? kExitClaim : kExitOk;
}

// ---------------------------------------------------------------------------

struct DotOpts {
  std::string in, out, name = "D";
};

auto cmd_export_dot(const DotOpts &o) -> int {
  emit(to_dot(read_digraph_file(o.in), o.name), o.out);
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Chromatic profile toolkit for digraphs"};
  app.require_subcommand(1);

  ConstructOpts co;
  auto *construct = app.add_subcommand("construct", "build a named digraph family");
  construct->add_option("--family", co.family, "aes, aes-relaxed, a, b, c3, tr, tr-blowup, cycle, c5, wheel, remark")
      ->required();
  construct->add_option("--n", co.n, "vertex count");
  construct->add_option("--r", co.r, "tournament order");
  construct->add_option("--t", co.t, "blowup factor or wheel overlap");
  construct->add_option("--k", co.k, "cycle length");
  construct->add_option("--orientation", co.orientation, "pentagon orientation");
  construct->add_option("--eps", co.eps, "epsilon as p/q for the remark family");
  construct->add_option("--out", co.out, "output path (stdout when omitted)");
  construct->add_option("--format", co.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  construct->add_flag("--check", co.check, "print delta+, chi and freeness verdict");
  construct->add_flag("--json", co.json_out, "machine-readable verdict");

  CheckOpts ck;
  auto *check = app.add_subcommand("check", "freeness, chi and delta+ of a digraph file");
  check->add_option("--in", ck.in, "digraph file")->required();
  check->add_option("--pattern", ck.patterns, "pattern id (repeatable)");
  check->add_option("--k", ck.k, "report k-colourability");
  check->add_flag("--json", ck.json_out);

  WitnessOpts wo;
  auto *witness = app.add_subcommand("witness", "run a constructive finder");
  witness->add_option("--op", wo.op, "find-tr, find-cycle, find-c5pp, find-c5p, morph, saturate, extract-wheel")
      ->required();
  witness->add_option("--in", wo.in, "host digraph file")->required();
  witness->add_option("--r", wo.r);
  witness->add_option("--l", wo.l);
  witness->add_option("--target", wo.target, "morph target pattern");
  witness->add_option("--cycle", wo.cycle, "starting 5-cycle for morph, comma-separated");
  witness->add_option("--embedding", wo.embedding, "C5'' embedding for find-c5p, comma-separated A..E");
  witness->add_flag("--json", wo.json_out);

  ProfileOpts po;
  std::uint64_t profile_seed = 0;
  auto *profile = app.add_subcommand("profile", "empirical chromatic-profile search");
  profile->add_option("--pattern", po.pattern)->required();
  profile->add_option("--k", po.k);
  profile->add_option("--n", po.n)->required();
  profile->add_option("--mode", po.mode)->check(CLI::IsMember({"exhaustive", "random", "hillclimb"}));
  auto *pseed = profile->add_option("--seed", profile_seed);
  profile->add_option("--trials,--iters", po.trials);
  profile->add_option("--start", po.start, "hill-climb start digraph file");
  profile->add_flag("--json", po.json_out);

  VerifyOpts vo;
  std::uint64_t verify_seed = 0;
  auto *verify = app.add_subcommand("verify", "re-check a theorem on every enumerable digraph");
  verify->add_option("--theorem", vo.theorem, "aes, directed-cycle, pentagon-bipartite")->required();
  verify->add_option("--r", vo.r);
  verify->add_option("--l", vo.l);
  verify->add_option("--pentagon", vo.h, "forbidden pentagon for pentagon-bipartite");
  verify->add_option("--n", vo.n)->required();
  verify->add_option("--mode", vo.mode)->check(CLI::IsMember({"exhaustive", "random"}));
  auto *vseed = verify->add_option("--seed", verify_seed);
  verify->add_option("--trials", vo.trials);
  verify->add_flag("--json", vo.json_out);

  SuiteOpts pp;
  auto *suite_cmd = app.add_subcommand("verify-paper", "run the full verification suite");
  suite_cmd->add_option("--only", pp.only, "substring filter on claim ids");
  suite_cmd->add_option("--n-max", pp.n_max, "largest exhaustive n");
  suite_cmd->add_option("--json", pp.json_path, "write the report here");
  suite_cmd->add_option("--evidence-dir", pp.evidence_dir, "write one evidence file per claim");
  suite_cmd->add_option("--seed", pp.seed, "seed for the sampled corpora");

  DotOpts dot;
  auto *export_dot = app.add_subcommand("export-dot", "convert a digraph file to Graphviz");
  export_dot->add_option("--in", dot.in)->required();
  export_dot->add_option("--out", dot.out);
  export_dot->add_option("--name", dot.name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*pseed)
      po.seed = profile_seed;
    if (*vseed)
      vo.seed = verify_seed;
    if (*construct)
      return cmd_construct(co);
    if (*check)
      return cmd_check(ck);
    if (*witness)
      return cmd_witness(wo);
    if (*profile)
      return cmd_profile(po);
    if (*verify)
      return cmd_verify(vo);
    if (*suite_cmd)
      return cmd_suite(pp);
    if (*export_dot)
      return cmd_export_dot(dot);
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantViolation &e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParameter;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitUsage;
}
