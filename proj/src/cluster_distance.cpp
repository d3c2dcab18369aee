#include "tspforge/cluster_distance.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace tspforge::lk {

ClusterDistanceMatrix cluster_distances(const DistanceMatrix& dm) {
  const int n = dm.n();
  const double inf = std::numeric_limits<double>::infinity();

  // Prim over the complete graph; index tie-break keeps it deterministic.
  std::vector<int> parent(static_cast<size_t>(n), -1);
  std::vector<double> key(static_cast<size_t>(n), inf);
  std::vector<bool> in_tree(static_cast<size_t>(n), false);
  key[0] = 0.0;
  for (int it = 0; it < n; ++it) {
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (!in_tree[static_cast<size_t>(v)] &&
          (u == -1 || key[static_cast<size_t>(v)] < key[static_cast<size_t>(u)])) {
        u = v;
      }
    }
    in_tree[static_cast<size_t>(u)] = true;
    for (int v = 0; v < n; ++v) {
      if (!in_tree[static_cast<size_t>(v)] &&
          dm(u, v) < key[static_cast<size_t>(v)]) {
        key[static_cast<size_t>(v)] = dm(u, v);
        parent[static_cast<size_t>(v)] = u;
      }
    }
  }

  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (int v = 1; v < n; ++v) {
    adj[static_cast<size_t>(v)].push_back(parent[static_cast<size_t>(v)]);
    adj[static_cast<size_t>(parent[static_cast<size_t>(v)])].push_back(v);
  }

  ClusterDistanceMatrix cdm;
  cdm.n_ = n;
  cdm.c_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);

  // Walk the tree from every root, carrying the max edge seen so far.
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    double* row = cdm.c_.data() + static_cast<size_t>(root) * static_cast<size_t>(n);
    std::vector<bool> seen(static_cast<size_t>(n), false);
    seen[static_cast<size_t>(root)] = true;
    stack.assign(1, root);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj[static_cast<size_t>(u)]) {
        if (seen[static_cast<size_t>(v)]) continue;
        seen[static_cast<size_t>(v)] = true;
        row[v] = std::max(row[u], dm(u, v));
        stack.push_back(v);
      }
    }
  }
  return cdm;
}

}  // namespace tspforge::lk
