#include "cli.hpp"

#include "sopi/distribution.hpp"
#include "sopi/errors.hpp"
#include "sopi/experiments.hpp"
#include "sopi/io.hpp"
#include "sopi/large_object.hpp"
#include "sopi/overlap.hpp"
#include "sopi/set_designer.hpp"
#include "sopi/sopi.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace sopi::cli {

namespace {

enum class Format { json, csv, text };

struct Globals {
  std::uint32_t n = kMersenne31;
  std::uint64_t seed = 1;
  std::string out_path;
  Format format = Format::text;
};

// A rendered result: the JSON document plus its text and CSV views.
struct Rendered {
  Json json;
  std::string text;
  std::string csv;
};

void emit(const Globals& g, const Rendered& r, std::ostream& out) {
  std::string body;
  switch (g.format) {
    case Format::json:
      body = r.json.dump(2) + "\n";
      break;
    case Format::csv:
      body = r.csv;
      break;
    case Format::text:
      body = r.text;
      break;
  }
  if (g.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(g.out_path);
  if (!file) throw InvalidArgument("cannot write " + g.out_path);
  file << body;
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

// ---- eval -------------------------------------------------------------------

struct EvalArgs {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::optional<std::uint64_t> pos;
  std::optional<std::uint64_t> len;
};

Rendered cmd_eval(const Globals& g, const EvalArgs& args) {
  const FieldParams field = FieldParams::make(g.n);
  const Sopi s = Sopi::make(args.a, args.b, field);
  Rendered r;
  r.json = Json{{"N", field.n()}, {"sopi", to_json(s)}};
  if (args.pos) {
    const SymbolId id = symbol_id_at(s, *args.pos, field);
    r.json["position"] = *args.pos;
    r.json["symbol"] = id.value;
    r.text = std::to_string(id.value) + "\n";
    r.csv = "position,symbol\n" + std::to_string(*args.pos) + "," + std::to_string(id.value) + "\n";
    return r;
  }
  const auto ids = prefix({s, *args.len}, field);
  Json arr = Json::array();
  r.csv = "position,symbol\n";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    arr.push_back(ids[i].value);
    r.text += (i == 0 ? "" : " ") + std::to_string(ids[i].value);
    r.csv += std::to_string(i) + "," + std::to_string(ids[i].value) + "\n";
  }
  r.text += "\n";
  r.json["prefix"] = std::move(arr);
  return r;
}

// ---- distance ---------------------------------------------------------------

struct DistanceArgs {
  std::uint32_t b0 = 0;
  std::uint32_t b1 = 0;
  std::uint32_t m = 0;
};

Rendered cmd_distance(const Globals& g, const DistanceArgs& args) {
  const FieldParams field = FieldParams::make(g.n);
  const DistanceResult d = distance(args.b0, args.b1, DiffSet(args.m), field);
  Rendered r;
  r.json = Json{{"N", field.n()}, {"B0", args.b0}, {"B1", args.b1}, {"M", args.m}};
  r.json.update(to_json(d));
  if (d.matched) {
    r.text = "distance " + std::to_string(d.distance) + " pair (" + std::to_string(d.d0) + "," +
             std::to_string(d.d1) + ")\n";
  } else {
    r.text = "distance " + std::to_string(d.distance) + " unmatched\n";
  }
  r.csv = "B0,B1,M,matched,d0,d1,distance\n" + std::to_string(args.b0) + "," + std::to_string(args.b1) + "," +
          std::to_string(args.m) + "," + (d.matched ? "true" : "false") + "," + std::to_string(d.d0) + "," +
          std::to_string(d.d1) + "," + std::to_string(d.distance) + "\n";
  return r;
}

// ---- genset -----------------------------------------------------------------

struct GensetArgs {
  std::uint32_t d = 0;
  std::uint32_t m = 0;
  std::size_t b_cap = 16;
  std::size_t a_cap = 16;
  std::string strategy = "incremental";
  bool audit = false;
};

std::string capacity_line(const CapacityBounds& c) {
  return "capacity: b_lower=" + fixed(c.b_lower, 10) + " a_lower=" + fixed(c.a_lower, 10) +
         " total_lower=" + fixed(c.total_lower, 10) + "\n";
}

Rendered render_set(const SopiSet& set) {
  Rendered r;
  r.json = to_json(set);
  r.csv = "A,B\n";
  for (const Sopi& s : set.entries()) r.csv += std::to_string(s.a) + "," + std::to_string(s.b) + "\n";
  r.text = "N=" + std::to_string(set.design.field().n()) + " d=" + std::to_string(set.design.min_distance()) +
           " M=" + std::to_string(set.design.max_length()) + " strategy=" + std::string(to_string(set.strategy)) +
           " seed=" + std::to_string(set.seed) + "\n";
  r.text += "strides=" + std::to_string(set.b_values.size()) + " sopis=" + std::to_string(set.size()) + "\n";
  r.text += capacity_line(capacity_bounds(set.design));
  for (const Sopi& s : set.entries()) r.text += to_text(s) + "\n";
  return r;
}

int cmd_genset(const Globals& g, const GensetArgs& args, std::ostream& out, std::ostream& err) {
  const FieldParams field = FieldParams::make(g.n);
  const DesignParams design = DesignParams::make(field, args.d, args.m);
  const SopiSet set = build_sopi_set(design, args.b_cap, args.a_cap, g.seed, parse_strategy(args.strategy));
  err << capacity_line(capacity_bounds(design));
  emit(g, render_set(set), out);
  if (args.audit) {
    const AuditReport audit = audit_sopi_set(set);
    err << "audit: " << audit.stride_pairs_checked << " stride pairs, " << audit.offset_groups_checked
        << " offset groups, " << audit.violations.size() << " violations\n";
    for (const auto& v : audit.violations) err << "  " << v << "\n";
    if (!audit.ok()) return kExitDomain;
  }
  return kExitOk;
}

// ---- partition --------------------------------------------------------------

struct PartitionArgs {
  std::uint64_t f = 0;
  std::uint64_t t = 0;
  std::uint64_t ws = 0;
};

Rendered cmd_partition(const PartitionArgs& args) {
  const BlockStructure s = block_structure(args.f, args.t, args.ws);
  Rendered r;
  r.json = to_json(s);
  r.text = "Kt=" + std::to_string(s.total_symbols) + " Kmax=" + std::to_string(s.max_block_symbols) +
           " Z=" + std::to_string(s.block_count) + " KL=" + std::to_string(s.split.large_size) +
           " KS=" + std::to_string(s.split.small_size) + " ZL=" + std::to_string(s.split.large_count) +
           " ZS=" + std::to_string(s.split.small_count) + "\n";
  r.csv = "F,T,WS,Kt,Z,KL,KS,ZL,ZS\n";
  bool first = true;
  for (const auto& [key, value] : r.json.items()) {
    r.csv += (first ? "" : ",") + value.dump();
    first = false;
  }
  r.csv += "\n";
  return r;
}

// ---- color ------------------------------------------------------------------

struct ColorArgs {
  std::string graph;
  std::string set;
  std::string validate;
};

Rendered render_assignment(const Assignment& a) {
  Rendered r;
  r.json = to_json(a);
  r.csv = "node,A,B\n";
  for (const auto& [node, s] : a.sopi_of) {
    r.csv += node + "," + std::to_string(s.a) + "," + std::to_string(s.b) + "\n";
    r.text += node + " " + to_text(s) + "\n";
  }
  r.text += "colors_used " + std::to_string(a.colors_used) + "\n";
  return r;
}

int cmd_color(const Globals& g, const ColorArgs& args, std::ostream& out, std::ostream& err) {
  const NodeGraph graph = node_graph_from_json(read_json_file(args.graph));
  if (!args.validate.empty()) {
    const FieldParams field = FieldParams::make(g.n);
    const Assignment a = assignment_from_json(read_json_file(args.validate), field);
    const auto violations = validate_assignment(graph, a);
    Rendered r;
    Json list = Json::array();
    r.csv = "u,v\n";
    for (const auto& [u, v] : violations) {
      list.push_back(Json::array({u, v}));
      r.text += "violation " + u + " " + v + "\n";
      r.csv += u + "," + v + "\n";
    }
    r.text += std::to_string(violations.size()) + " violated edges\n";
    r.json = Json{{"violations", std::move(list)}};
    emit(g, r, out);
    return violations.empty() ? kExitOk : kExitDomain;
  }
  if (args.set.empty()) {
    throw InvalidArgument("color needs --set (or --validate)");
  }
  const SopiSet set = sopi_set_from_json(read_json_file(args.set));
  const auto palette = set.entries();
  try {
    emit(g, render_assignment(greedy_color(graph, palette)), out);
  } catch (const InsufficientPalette& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

// ---- experiment -------------------------------------------------------------

struct ExperimentArgs {
  std::string kind = "random";
  // random
  std::uint64_t k = 0;
  std::vector<double> deltas{0.1};
  std::vector<std::uint32_t> streams{2};
  std::uint64_t trials = 1000;
  std::string split = "equal";
  unsigned threads = 0;
  bool per_trial = false;
  // designed
  std::string set_path;
  std::uint32_t d = 0;
  std::uint32_t m = 0;
  std::size_t b_cap = 10;
  std::size_t a_cap = 10;
  std::string strategy = "incremental";
  std::uint64_t total = 0;
  std::uint64_t samples = 100;
  // simulate
  std::string graph_path;
  std::string assignment_path;
  std::vector<std::string> client;
  std::uint64_t f = 0;
  std::uint64_t t = 0;
  std::uint64_t ws = 0;
  std::uint64_t budget = 0;
};

std::string report_line(const ExperimentReport& r) {
  std::ostringstream os;
  os << std::left << std::setw(12) << r.config.field.n() << std::setw(8) << r.config.source_symbols << std::setw(8)
     << r.config.delta << std::setw(4) << r.config.streams << std::setw(8) << r.config.total_symbols << std::setw(10)
     << r.trials_run << std::setw(10) << r.failures << std::setw(14) << fixed(r.failure_rate, 6) << std::setw(14)
     << fixed(r.theorem_bound, 6) << std::setw(12) << fixed(r.mean_duplicates, 6) << std::setw(8) << r.max_duplicates
     << (r.within_bound ? "ok" : "EXCEEDED") << "  (" << fixed(r.wall_time_seconds, 3) << " s)\n";
  return os.str();
}

int cmd_experiment_random(const Globals& g, const ExperimentArgs& args, std::ostream& out) {
  const FieldParams field = FieldParams::make(g.n);
  if (args.k == 0) throw InvalidArgument("--k is required for --kind random");
  Rendered r;
  Json reports = Json::array();
  r.text = "N           K       delta   s   M       trials    failures  failure_rate  bound         "
           "mean_dups   max\n";
  r.csv = args.per_trial ? "N,K,delta,s,M,trial,distinct,duplicates,recoverable\n"
                         : "N,K,delta,s,M,split,trials,failures,failure_rate,theorem_bound,within_bound,"
                           "mean_duplicates,max_duplicates\n";
  bool all_within = true;
  for (const double delta : args.deltas) {
    for (const std::uint32_t s : args.streams) {
      TrialConfig config = TrialConfig::make(field, args.k, delta, s, parse_split(args.split), args.trials, g.seed);
      config.threads = args.threads;
      const ExperimentReport rep = estimate_failure_probability(config);
      all_within = all_within && rep.within_bound;
      reports.push_back(to_json(rep));
      r.text += report_line(rep);
      const std::string prefix = std::to_string(field.n()) + "," + std::to_string(config.source_symbols) + "," +
                                 fixed(delta, 17) + "," + std::to_string(s) + "," +
                                 std::to_string(config.total_symbols) + ",";
      if (args.per_trial) {
        for (std::uint64_t t = 0; t < config.trials; ++t) {
          const TrialOutcome o = run_random_trial(config, t);
          r.csv += prefix + std::to_string(t) + "," + std::to_string(o.distinct) + "," + std::to_string(o.duplicates) +
                   "," + (o.recoverable ? "true" : "false") + "\n";
        }
      } else {
        r.csv += prefix + std::string(to_string(config.split)) + "," + std::to_string(rep.trials_run) + "," +
                 std::to_string(rep.failures) + "," + fixed(rep.failure_rate, 17) + "," +
                 fixed(rep.theorem_bound, 17) + "," + (rep.within_bound ? "true" : "false") + "," +
                 fixed(rep.mean_duplicates, 17) + "," + std::to_string(rep.max_duplicates) + "\n";
      }
    }
  }
  r.json = Json{{"kind", "random"}, {"reports", std::move(reports)}};
  emit(g, r, out);
  return all_within ? kExitOk : kExitDomain;
}

int cmd_experiment_designed(const Globals& g, const ExperimentArgs& args, std::ostream& out) {
  SopiSet set = [&] {
    if (!args.set_path.empty()) return sopi_set_from_json(read_json_file(args.set_path));
    if (args.d == 0 || args.m == 0) throw InvalidArgument("designed experiment needs --set or --d and --m");
    const DesignParams design = DesignParams::make(FieldParams::make(g.n), args.d, args.m);
    return build_sopi_set(design, args.b_cap, args.a_cap, g.seed, parse_strategy(args.strategy));
  }();
  if (args.streams.size() != 1) throw InvalidArgument("designed experiment takes a single --s");
  const std::uint64_t total = args.total != 0 ? args.total : set.design.max_length();
  const DesignedOverlapReport rep = designed_overlap_experiment(set, args.streams.front(), total, args.samples, g.seed);
  Rendered r;
  r.json = Json{{"kind", "designed"}, {"N", set.design.field().n()}, {"set_size", set.size()}};
  r.json.update(to_json(rep));
  r.text = "designed set N=" + std::to_string(set.design.field().n()) + " d=" + std::to_string(rep.min_distance) +
           " M=" + std::to_string(set.design.max_length()) + " |set|=" + std::to_string(set.size()) + "\n" +
           "s=" + std::to_string(rep.streams) + " m=" + std::to_string(rep.total_symbols) +
           " samples=" + std::to_string(rep.samples) + "\n" +
           "worst-case duplicates " + fixed(rep.worst_case_duplicates, 8) + " (" +
           fixed(100.0 * rep.worst_case_duplicate_fraction, 6) + "%)\n" +
           "measured max " + std::to_string(rep.max_duplicates) + " (" + fixed(100.0 * rep.max_duplicate_fraction, 6) +
           "%) mean " + fixed(rep.mean_duplicates, 8) + "\n" +
           "same-stride pairs " + std::to_string(rep.same_stride_pairs) + " with " +
           std::to_string(rep.same_stride_duplicates) + " duplicates\n" +
           "violations " + std::to_string(rep.violations) + "\n";
  r.csv = "samples,s,m,d,worst_case_duplicates,max_duplicates,mean_duplicates,violations\n" +
          std::to_string(rep.samples) + "," + std::to_string(rep.streams) + "," + std::to_string(rep.total_symbols) +
          "," + std::to_string(rep.min_distance) + "," + fixed(rep.worst_case_duplicates, 17) + "," +
          std::to_string(rep.max_duplicates) + "," + fixed(rep.mean_duplicates, 17) + "," +
          std::to_string(rep.violations) + "\n";
  emit(g, r, out);
  return rep.violations == 0 ? kExitOk : kExitDomain;
}

int cmd_experiment_simulate(const Globals& g, const ExperimentArgs& args, std::ostream& out) {
  if (args.graph_path.empty() && args.assignment_path.empty()) {
    throw InvalidArgument("simulate needs --assignment, or --graph with --set");
  }
  if (args.client.empty()) throw InvalidArgument("simulate needs --client");
  const FieldParams field = FieldParams::make(g.n);
  Assignment assignment;
  if (!args.assignment_path.empty()) {
    assignment = assignment_from_json(read_json_file(args.assignment_path), field);
  } else {
    if (args.set_path.empty()) throw InvalidArgument("simulate with --graph also needs --set");
    const NodeGraph graph = node_graph_from_json(read_json_file(args.graph_path));
    const SopiSet set = sopi_set_from_json(read_json_file(args.set_path));
    assignment = greedy_color(graph, set.entries());
  }
  const BlockStructure structure = block_structure(args.f, args.t, args.ws);
  const std::uint64_t k = args.k != 0 ? args.k : structure.total_symbols;
  const std::uint64_t budget = args.budget != 0 ? args.budget : k;
  const DownloadReport rep = simulate_multi_source_download(structure, assignment, args.client, k, budget, field, g.seed);
  Rendered r;
  r.json = Json{{"kind", "simulate"}, {"structure", to_json(structure)}};
  r.json.update(to_json(rep));
  r.text = "streams offered " + std::to_string(rep.offers.size()) + ", selected " + std::to_string(rep.selected.size()) +
           "\n";
  for (std::size_t i = 0; i < rep.selected.size(); ++i) {
    r.text += "  " + rep.selected[i].node + " " + to_text(rep.selected[i].sopi) + " length " +
              std::to_string(rep.stream_lengths[i]) + "\n";
  }
  r.csv = "block,distinct,needed\n";
  for (std::size_t j = 0; j < rep.block_distinct.size(); ++j) {
    r.text += "block " + std::to_string(j) + ": " + std::to_string(rep.block_distinct[j]) + " distinct / " +
              std::to_string(rep.block_needed[j]) + " needed\n";
    r.csv += std::to_string(j) + "," + std::to_string(rep.block_distinct[j]) + "," +
             std::to_string(rep.block_needed[j]) + "\n";
  }
  r.text += "requested " + std::to_string(rep.symbols_requested) + " distinct " + std::to_string(rep.distinct) +
            " duplicates " + std::to_string(rep.duplicates) + (rep.recoverable ? " recoverable\n" : " NOT recoverable\n");
  emit(g, r, out);
  return kExitOk;
}

int cmd_experiment(const Globals& g, const ExperimentArgs& args, std::ostream& out) {
  if (args.kind == "random") return cmd_experiment_random(g, args, out);
  if (args.kind == "designed") return cmd_experiment_designed(g, args, out);
  return cmd_experiment_simulate(g, args, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SOPI toolkit: stream object permutation identifiers for multi-source fountain-code downloads",
               "sopi"};
  app.require_subcommand(1);

  Globals g;
  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
  app.option_defaults()->always_capture_default();
  app.add_option("--n", g.n, "prime modulus N (count of symbol IDs)");
  app.add_option("--seed", g.seed, "RNG seed");
  app.add_option("--out", g.out_path, "write the result to this path instead of stdout");
  app.add_option("--format", g.format, "output format: json, csv or text")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
      ->option_text("FORMAT [text]");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "symbol ID at a position, or a prefix of the stream");
  eval_cmd->add_option("--a", eval.a, "offset A")->required();
  eval_cmd->add_option("--b", eval.b, "stride B")->required();
  auto* eval_what = eval_cmd->add_option_group("what", "exactly one of --pos, --len");
  eval_what->add_option("--pos", eval.pos, "position i");
  eval_what->add_option("--len", eval.len, "prefix length");
  eval_what->require_option(1);

  DistanceArgs dist;
  auto* dist_cmd = app.add_subcommand("distance", "B-distance of two strides within prefixes of total length M");
  dist_cmd->add_option("--b0", dist.b0)->required();
  dist_cmd->add_option("--b1", dist.b1)->required();
  dist_cmd->add_option("--m", dist.m, "maximum aggregate prefix length M")->required();

  GensetArgs gen;
  auto* gen_cmd = app.add_subcommand("genset", "construct a designed SOPI set");
  gen_cmd->add_option("--d", gen.d, "minimum pairwise stride distance")->required();
  gen_cmd->add_option("--m", gen.m, "maximum aggregate prefix length M")->required();
  gen_cmd->add_option("--b-cap", gen.b_cap, "maximum number of strides");
  gen_cmd->add_option("--a-cap", gen.a_cap, "maximum number of offsets per stride");
  gen_cmd->add_option("--strategy", gen.strategy)->check(CLI::IsMember({"incremental", "sieve"}));
  gen_cmd->add_flag("--audit", gen.audit, "re-verify set invariants; exit 3 on violation");

  PartitionArgs part;
  auto* part_cmd = app.add_subcommand("partition", "source-block structure of an object");
  part_cmd->add_option("--f", part.f, "object size in bytes")->required();
  part_cmd->add_option("--t", part.t, "symbol size in bytes")->required();
  part_cmd->add_option("--ws", part.ws, "maximum source block size in bytes")->required();

  ColorArgs color;
  auto* color_cmd = app.add_subcommand("color", "assign SOPIs to encoding nodes by greedy graph coloring");
  color_cmd->add_option("--graph", color.graph, "graph JSON file")->required()->check(CLI::ExistingFile);
  color_cmd->add_option("--set", color.set, "SOPI set JSON file (palette)")->check(CLI::ExistingFile);
  color_cmd->add_option("--validate", color.validate, "assignment JSON file to check against the graph")
      ->check(CLI::ExistingFile);

  ExperimentArgs exp;
  auto* exp_cmd = app.add_subcommand("experiment", "Monte Carlo and simulation experiments");
  exp_cmd->add_option("--kind", exp.kind)->check(CLI::IsMember({"random", "designed", "simulate"}));
  exp_cmd->add_option("--k", exp.k, "source symbols K");
  exp_cmd->add_option("--delta", exp.deltas, "overhead fraction(s) delta")->expected(1, -1);
  exp_cmd->add_option("--s", exp.streams, "stream count(s)")->expected(1, -1);
  exp_cmd->add_option("--trials", exp.trials);
  exp_cmd->add_option("--split", exp.split)->check(CLI::IsMember({"equal", "random"}));
  exp_cmd->add_option("--threads", exp.threads, "worker threads (0 = all cores)");
  exp_cmd->add_flag("--per-trial", exp.per_trial, "CSV: one row per trial");
  exp_cmd->add_option("--set", exp.set_path, "SOPI set JSON file")->check(CLI::ExistingFile);
  exp_cmd->add_option("--d", exp.d);
  exp_cmd->add_option("--m", exp.m);
  exp_cmd->add_option("--b-cap", exp.b_cap);
  exp_cmd->add_option("--a-cap", exp.a_cap);
  exp_cmd->add_option("--strategy", exp.strategy)->check(CLI::IsMember({"incremental", "sieve"}));
  exp_cmd->add_option("--total", exp.total, "total symbols m over all streams");
  exp_cmd->add_option("--samples", exp.samples);
  exp_cmd->add_option("--graph", exp.graph_path)->check(CLI::ExistingFile);
  exp_cmd->add_option("--assignment", exp.assignment_path)->check(CLI::ExistingFile);
  exp_cmd->add_option("--client", exp.client, "nodes reachable by the client, in preference order")->expected(1, -1);
  exp_cmd->add_option("--f", exp.f, "object size in bytes");
  exp_cmd->add_option("--t", exp.t, "symbol size in bytes");
  exp_cmd->add_option("--ws", exp.ws, "maximum source block size in bytes");
  exp_cmd->add_option("--budget", exp.budget, "symbols to request in total");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) {
      emit(g, cmd_eval(g, eval), out);
      return kExitOk;
    }
    if (dist_cmd->parsed()) {
      emit(g, cmd_distance(g, dist), out);
      return kExitOk;
    }
    if (gen_cmd->parsed()) return cmd_genset(g, gen, out, err);
    if (part_cmd->parsed()) {
      emit(g, cmd_partition(part), out);
      return kExitOk;
    }
    if (color_cmd->parsed()) return cmd_color(g, color, out, err);
    return cmd_experiment(g, exp, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace sopi::cli
