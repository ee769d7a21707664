#pragma once

#include <limits>
#include <vector>

namespace circlepat {

/// Shortest-augmenting-path (Edmonds-Karp) max flow on real capacities.
/// Residual capacities at or below `tolerance` count as saturated.
class FlowNetwork {
 public:
  static constexpr double kInfinite = std::numeric_limits<double>::infinity();

  explicit FlowNetwork(int nodes, double tolerance = 1e-11);

  /// Returns the arc id.
  int add_arc(int from, int to, double capacity);

  double max_flow(int source, int sink);

  /// Nodes reachable from the source in the final residual graph.
  std::vector<char> source_side(int source) const;

  double flow(int arc) const { return arcs_[arc].flow; }
  int node_count() const { return static_cast<int>(adjacency_.size()); }

 private:
  struct Arc {
    int to;
    double capacity;
    double flow;
  };
  double residual(int arc) const { return arcs_[arc].capacity - arcs_[arc].flow; }

  double tolerance_;
  std::vector<Arc> arcs_;  // arc 2k forward, 2k+1 its reverse
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace circlepat
