#include "circlepat/maxflow.hpp"

#include <algorithm>
#include <queue>

namespace circlepat {

FlowNetwork::FlowNetwork(int nodes, double tolerance) : tolerance_(tolerance), adjacency_(nodes) {}

int FlowNetwork::add_arc(int from, int to, double capacity) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, 0.0});
  arcs_.push_back({from, 0.0, 0.0});
  adjacency_[from].push_back(id);
  adjacency_[to].push_back(id + 1);
  return id;
}

double FlowNetwork::max_flow(int source, int sink) {
  double total = 0.0;
  std::vector<int> parent_arc(adjacency_.size());
  while (true) {
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    std::queue<int> queue;
    queue.push(source);
    parent_arc[source] = -2;
    while (!queue.empty() && parent_arc[sink] == -1) {
      const int u = queue.front();
      queue.pop();
      for (const int a : adjacency_[u]) {
        const int v = arcs_[a].to;
        if (parent_arc[v] == -1 && residual(a) > tolerance_) {
          parent_arc[v] = a;
          queue.push(v);
        }
      }
    }
    if (parent_arc[sink] == -1) break;

    double bottleneck = kInfinite;
    for (int v = sink; v != source; v = arcs_[parent_arc[v] ^ 1].to) {
      bottleneck = std::min(bottleneck, residual(parent_arc[v]));
    }
    // An all-infinite path means the cut is unbounded; callers never build one.
    if (bottleneck == kInfinite) break;
    for (int v = sink; v != source; v = arcs_[parent_arc[v] ^ 1].to) {
      arcs_[parent_arc[v]].flow += bottleneck;
      arcs_[parent_arc[v] ^ 1].flow -= bottleneck;
    }
    total += bottleneck;
  }
  return total;
}

std::vector<char> FlowNetwork::source_side(int source) const {
  std::vector<char> seen(adjacency_.size(), 0);
  std::queue<int> queue;
  queue.push(source);
  seen[source] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (const int a : adjacency_[u]) {
      const int v = arcs_[a].to;
      if (!seen[v] && residual(a) > tolerance_) {
        seen[v] = 1;
        queue.push(v);
      }
    }
  }
  return seen;
}

}  // namespace circlepat
