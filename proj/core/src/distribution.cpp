#include "sopi/distribution.hpp"

#include "sopi/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace sopi {

NodeGraph NodeGraph::make(std::vector<std::string> nodes, std::vector<Edge> edges) {
  NodeGraph g;
  for (auto& node : nodes) {
    if (g.adjacency_.count(node) != 0) {
      throw InvalidArgument("duplicate node '" + node + "'");
    }
    g.adjacency_[node];
    g.nodes_.push_back(std::move(node));
  }
  std::set<Edge> seen;
  for (auto& [u, v] : edges) {
    if (u == v) {
      throw InvalidArgument("self-loop on node '" + u + "'");
    }
    for (const auto* endpoint : {&u, &v}) {
      if (g.adjacency_.count(*endpoint) == 0) {
        throw InvalidArgument("edge references unknown node '" + *endpoint + "'");
      }
    }
    Edge e = u < v ? Edge{u, v} : Edge{v, u};
    if (!seen.insert(e).second) continue;
    g.adjacency_[e.first].push_back(e.second);
    g.adjacency_[e.second].push_back(e.first);
    g.edges_.push_back(std::move(e));
  }
  return g;
}

const std::vector<std::string>& NodeGraph::neighbors(const std::string& node) const {
  const auto it = adjacency_.find(node);
  if (it == adjacency_.end()) {
    throw InvalidArgument("unknown node '" + node + "'");
  }
  return it->second;
}

std::size_t NodeGraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& [node, adj] : adjacency_) best = std::max(best, adj.size());
  return best;
}

InsufficientPalette::InsufficientPalette(std::string node, std::size_t palette_size)
    : DomainFailure("insufficient palette: node '" + node + "' has all " + std::to_string(palette_size) +
                    " SOPIs taken by neighbors"),
      node_(std::move(node)) {}

Assignment greedy_color(const NodeGraph& graph, std::span<const Sopi> palette) {
  if (palette.empty()) {
    throw InvalidArgument("palette must not be empty");
  }
  std::vector<const std::string*> order;
  order.reserve(graph.nodes().size());
  for (const auto& node : graph.nodes()) order.push_back(&node);
  std::sort(order.begin(), order.end(), [&](const std::string* x, const std::string* y) {
    const std::size_t dx = graph.degree(*x);
    const std::size_t dy = graph.degree(*y);
    return dx != dy ? dx > dy : *x < *y;
  });

  Assignment result;
  std::vector<bool> taken(palette.size());
  for (const std::string* node : order) {
    std::fill(taken.begin(), taken.end(), false);
    for (const auto& nb : graph.neighbors(*node)) {
      const auto it = result.color_of.find(nb);
      if (it != result.color_of.end()) taken[it->second] = true;
    }
    const auto free = std::find(taken.begin(), taken.end(), false);
    if (free == taken.end()) {
      throw InsufficientPalette(*node, palette.size());
    }
    const auto color = static_cast<std::size_t>(free - taken.begin());
    result.color_of[*node] = color;
    result.sopi_of[*node] = palette[color];
    result.colors_used = std::max(result.colors_used, color + 1);
  }
  return result;
}

std::vector<NodeGraph::Edge> validate_assignment(const NodeGraph& graph, const Assignment& assignment) {
  std::vector<NodeGraph::Edge> violations;
  for (const auto& edge : graph.edges()) {
    const auto u = assignment.sopi_of.find(edge.first);
    const auto v = assignment.sopi_of.find(edge.second);
    if (u == assignment.sopi_of.end() || v == assignment.sopi_of.end() || u->second == v->second) {
      violations.push_back(edge);
    }
  }
  return violations;
}

std::vector<StreamOffer> select_streams(std::span<const StreamOffer> offers) {
  std::vector<StreamOffer> kept;
  std::unordered_set<Sopi> seen;
  for (const auto& offer : offers) {
    if (seen.insert(offer.sopi).second) kept.push_back(offer);
  }
  return kept;
}

}  // namespace sopi
