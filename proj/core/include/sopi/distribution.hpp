#pragma once

#include "sopi/errors.hpp"
#include "sopi/sopi.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sopi {

/// Conflict graph of encoding nodes. An edge joins two nodes a client might
/// download the same object from.
class NodeGraph {
 public:
  using Edge = std::pair<std::string, std::string>;

  /// Validates and canonicalizes: rejects duplicate nodes, self-loops and
  /// dangling endpoints; edges are stored once with endpoints in sorted order.
  static NodeGraph make(std::vector<std::string> nodes, std::vector<Edge> edges);

  const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::string>& neighbors(const std::string& node) const;
  std::size_t degree(const std::string& node) const { return neighbors(node).size(); }
  std::size_t max_degree() const noexcept;

 private:
  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
  std::map<std::string, std::vector<std::string>> adjacency_;
};

struct Assignment {
  std::map<std::string, std::size_t> color_of;  // node -> palette index
  std::map<std::string, Sopi> sopi_of;          // node -> palette[color_of[node]]
  std::size_t colors_used = 0;
};

/// Thrown by greedy_color when every palette entry is taken by a neighbor.
class InsufficientPalette : public DomainFailure {
 public:
  InsufficientPalette(std::string node, std::size_t palette_size);
  const std::string& blocked_node() const noexcept { return node_; }

 private:
  std::string node_;
};

/// Welsh-Powell greedy coloring: nodes in descending degree (ties by id), each
/// takes the lowest palette index not used by an already-colored neighbor.
Assignment greedy_color(const NodeGraph& graph, std::span<const Sopi> palette);

/// Edges whose endpoints carry the same SOPI, or touch an unassigned node.
std::vector<NodeGraph::Edge> validate_assignment(const NodeGraph& graph, const Assignment& assignment);

struct StreamOffer {
  std::string node;
  Sopi sopi;

  friend bool operator==(const StreamOffer&, const StreamOffer&) = default;
};

/// Keeps the first offer for each distinct SOPI, preserving input order.
std::vector<StreamOffer> select_streams(std::span<const StreamOffer> offers);

}  // namespace sopi
