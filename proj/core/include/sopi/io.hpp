#pragma once

// JSON encodings of the library's value types. Key order follows the
// documented file formats; parsing validates against the given field.

#include "sopi/distribution.hpp"
#include "sopi/experiments.hpp"
#include "sopi/large_object.hpp"
#include "sopi/overlap.hpp"
#include "sopi/set_designer.hpp"
#include "sopi/sopi.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>

namespace sopi {

using Json = nlohmann::ordered_json;

Json to_json(const Sopi& sopi);
Sopi sopi_from_json(const Json& j, const FieldParams& field);

Json to_json(const LargeSopi& sopi);
LargeSopi large_sopi_from_json(const Json& j, const FieldParams& field);

/// {"N", "d", "M", "seed", "strategy", "entries": [{"A", "B"}, ...]} with entries sorted by (B, A).
Json to_json(const SopiSet& set);
SopiSet sopi_set_from_json(const Json& j);

/// {"F", "T", "WS", "Kt", "Z", "KL", "KS", "ZL", "ZS"}.
Json to_json(const BlockStructure& structure);
/// Recomputes the structure from F, T, WS and rejects inconsistent derived fields.
BlockStructure block_structure_from_json(const Json& j);

/// {"nodes": [...], "edges": [["a", "b"], ...]}.
Json to_json(const NodeGraph& graph);
NodeGraph node_graph_from_json(const Json& j);

/// {"assignments": {"node": {"A", "B"}}, "colors_used"}. Palette indices are not stored.
Json to_json(const Assignment& assignment);
Assignment assignment_from_json(const Json& j, const FieldParams& field);

Json to_json(const DistanceResult& result);
Json to_json(const CapacityBounds& bounds);
Json to_json(const AuditReport& report);
Json to_json(const TrialConfig& config);
/// Excludes wall time so that seeded reports are byte-identical.
Json to_json(const ExperimentReport& report);
Json to_json(const DesignedOverlapReport& report);
Json to_json(const DownloadReport& report);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace sopi
