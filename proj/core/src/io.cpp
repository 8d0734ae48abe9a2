#include "sopi/io.hpp"

#include "sopi/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>

namespace sopi {

namespace {

template <typename T>
T field_as(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgument(std::string("missing JSON field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidArgument(std::string("JSON field \"") + key + "\" has the wrong type");
  }
}

std::uint32_t u32_field(const Json& j, const char* key) {
  const auto v = field_as<std::uint64_t>(j, key);
  if (v > 0xFFFFFFFFull) {
    throw InvalidArgument(std::string("JSON field \"") + key + "\" out of range");
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace

Json to_json(const Sopi& sopi) {
  return Json{{"A", sopi.a}, {"B", sopi.b}};
}

Sopi sopi_from_json(const Json& j, const FieldParams& field) {
  return Sopi::make(u32_field(j, "A"), u32_field(j, "B"), field);
}

Json to_json(const LargeSopi& sopi) {
  return Json{{"A", sopi.a}, {"B", sopi.b}, {"C", sopi.c}, {"D", sopi.d}};
}

LargeSopi large_sopi_from_json(const Json& j, const FieldParams& field) {
  return LargeSopi::make(u32_field(j, "A"), u32_field(j, "B"), u32_field(j, "C"), u32_field(j, "D"), field);
}

Json to_json(const SopiSet& set) {
  Json entries = Json::array();
  for (const Sopi& s : set.entries()) entries.push_back(to_json(s));
  return Json{{"N", set.design.field().n()},
              {"d", set.design.min_distance()},
              {"M", set.design.max_length()},
              {"seed", set.seed},
              {"strategy", std::string(to_string(set.strategy))},
              {"entries", std::move(entries)}};
}

SopiSet sopi_set_from_json(const Json& j) {
  const FieldParams field = FieldParams::make(u32_field(j, "N"));
  const DesignParams design = DesignParams::make(field, u32_field(j, "d"), u32_field(j, "M"));
  SopiSet set{design, parse_strategy(field_as<std::string>(j, "strategy")), field_as<std::uint64_t>(j, "seed"), {}, {}};
  if (!j.at("entries").is_array()) {
    throw InvalidArgument("\"entries\" must be an array");
  }
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_stride;
  for (const auto& e : j.at("entries")) {
    const Sopi s = sopi_from_json(e, field);
    by_stride[s.b].push_back(s.a);
  }
  for (auto& [b, as] : by_stride) {
    set.b_values.push_back(b);
    set.a_values_per_b.push_back(std::move(as));
  }
  return set;
}

Json to_json(const BlockStructure& s) {
  return Json{{"F", s.object_size},         {"T", s.symbol_size},         {"WS", s.max_block_bytes},
              {"Kt", s.total_symbols},      {"Z", s.block_count},         {"KL", s.split.large_size},
              {"KS", s.split.small_size},   {"ZL", s.split.large_count},  {"ZS", s.split.small_count}};
}

BlockStructure block_structure_from_json(const Json& j) {
  const BlockStructure s = block_structure(field_as<std::uint64_t>(j, "F"), field_as<std::uint64_t>(j, "T"),
                                           field_as<std::uint64_t>(j, "WS"));
  // Derived fields are optional on input but must agree when present.
  const Json derived = to_json(s);
  for (const auto& [key, value] : derived.items()) {
    if (j.contains(key) && j.at(key) != value) {
      throw InvalidArgument("block structure field \"" + key + "\" is inconsistent with F, T, WS");
    }
  }
  return s;
}

Json to_json(const NodeGraph& graph) {
  Json edges = Json::array();
  for (const auto& [u, v] : graph.edges()) edges.push_back(Json::array({u, v}));
  return Json{{"nodes", graph.nodes()}, {"edges", std::move(edges)}};
}

NodeGraph node_graph_from_json(const Json& j) {
  const auto nodes = field_as<std::vector<std::string>>(j, "nodes");
  std::vector<NodeGraph::Edge> edges;
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw InvalidArgument("each edge must be a pair of node names");
      }
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return NodeGraph::make(nodes, std::move(edges));
}

Json to_json(const Assignment& assignment) {
  Json nodes = Json::object();
  for (const auto& [node, s] : assignment.sopi_of) nodes[node] = to_json(s);
  return Json{{"assignments", std::move(nodes)}, {"colors_used", assignment.colors_used}};
}

Assignment assignment_from_json(const Json& j, const FieldParams& field) {
  Assignment a;
  if (!j.contains("assignments") || !j.at("assignments").is_object()) {
    throw InvalidArgument("missing JSON object \"assignments\"");
  }
  for (const auto& [node, s] : j.at("assignments").items()) a.sopi_of[node] = sopi_from_json(s, field);
  a.colors_used = j.value("colors_used", std::size_t{0});
  return a;
}

Json to_json(const DistanceResult& r) {
  Json j{{"matched", r.matched}, {"distance", r.distance}};
  if (r.matched) {
    j["d0"] = r.d0;
    j["d1"] = r.d1;
  }
  return j;
}

Json to_json(const CapacityBounds& b) {
  return Json{{"b_lower", b.b_lower}, {"a_lower", b.a_lower}, {"total_lower", b.total_lower}};
}

Json to_json(const AuditReport& r) {
  return Json{{"ok", r.ok()},
              {"stride_pairs_checked", r.stride_pairs_checked},
              {"offset_groups_checked", r.offset_groups_checked},
              {"violations", r.violations}};
}

Json to_json(const TrialConfig& c) {
  return Json{{"N", c.field.n()},      {"K", c.source_symbols},           {"delta", c.delta},
              {"s", c.streams},        {"M", c.total_symbols},            {"split", std::string(to_string(c.split))},
              {"trials", c.trials},    {"seed", c.seed}};
}

Json to_json(const ExperimentReport& r) {
  return Json{{"config", to_json(r.config)},
              {"trials_run", r.trials_run},
              {"failures", r.failures},
              {"failure_rate", r.failure_rate},
              {"theorem_bound", r.theorem_bound},
              {"bound_sigma", r.bound_sigma},
              {"within_bound", r.within_bound},
              {"mean_duplicates", r.mean_duplicates},
              {"max_duplicates", r.max_duplicates},
              {"expected_duplicates_bound", r.expected_duplicates_bound}};
}

Json to_json(const DesignedOverlapReport& r) {
  return Json{{"samples", r.samples},
              {"s", r.streams},
              {"m", r.total_symbols},
              {"d", r.min_distance},
              {"seed", r.seed},
              {"worst_case_duplicates", r.worst_case_duplicates},
              {"worst_case_duplicate_fraction", r.worst_case_duplicate_fraction},
              {"max_duplicates", r.max_duplicates},
              {"mean_duplicates", r.mean_duplicates},
              {"max_duplicate_fraction", r.max_duplicate_fraction},
              {"violations", r.violations},
              {"same_stride_pairs", r.same_stride_pairs},
              {"same_stride_duplicates", r.same_stride_duplicates}};
}

Json to_json(const DownloadReport& r) {
  auto offers_json = [](const std::vector<StreamOffer>& offers) {
    Json a = Json::array();
    for (const auto& o : offers) a.push_back(Json{{"node", o.node}, {"A", o.sopi.a}, {"B", o.sopi.b}});
    return a;
  };
  return Json{{"offers", offers_json(r.offers)},
              {"selected", offers_json(r.selected)},
              {"stream_lengths", r.stream_lengths},
              {"symbols_requested", r.symbols_requested},
              {"block_distinct", r.block_distinct},
              {"block_needed", r.block_needed},
              {"distinct", r.distinct},
              {"duplicates", r.duplicates},
              {"recoverable", r.recoverable}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidArgument("cannot open " + path.string());
  }
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) {
    throw InvalidArgument("cannot write " + path.string());
  }
  out << j.dump(2) << '\n';
}

}  // namespace sopi
