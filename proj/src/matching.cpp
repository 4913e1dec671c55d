#include <algorithm>
#include <limits>
#include <queue>
#include <tuple>

#include "jisolve/error.hpp"
#include "jisolve/reductions.hpp"

namespace jis {

namespace {

class HopcroftKarp {
 public:
  HopcroftKarp(const std::vector<std::vector<int>>& adj, int right_size)
      : adj_(adj),
        match_left_(adj.size(), -1),
        match_right_(static_cast<std::size_t>(right_size), -1),
        dist_(adj.size()) {}

  std::vector<int> run() {
    while (bfs()) {
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (match_left_[u] < 0) dfs(static_cast<int>(u));
      }
    }
    return match_left_;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  // Layers free left vertices at 0; true if some augmenting path exists.
  bool bfs() {
    std::queue<int> q;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      dist_[u] = match_left_[u] < 0 ? 0 : kInf;
      if (dist_[u] == 0) q.push(static_cast<int>(u));
    }
    bool found = false;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj_[u]) {
        const int w = match_right_[v];
        if (w < 0) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int v : adj_[u]) {
      const int w = match_right_[v];
      if (w < 0 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  std::vector<int> match_left_, match_right_;
  std::vector<int> dist_;
};

std::vector<int> cluster_ids(const CompactRep& r, int& count) {
  std::vector<int> id(r.size(), -1);
  count = 0;
  for (const auto& comp : components(r)) {
    for (VertexId v : comp) id[v] = count;
    ++count;
  }
  return id;
}

}  // namespace

std::vector<int> max_bipartite_matching(const std::vector<std::vector<int>>& adj, int right_size) {
  return HopcroftKarp(adj, right_size).run();
}

Solution solve_cluster_cluster(const TwoUnionInstance& t) {
  if (t.rep1.size() != t.rep2.size()) {
    throw InputError("2-union sides have different vertex counts");
  }
  if (!is_cluster(t.rep1) || !is_cluster(t.rep2)) {
    throw PreconditionError("cluster-cluster solver requires cluster graphs");
  }
  if (!t.has_unit_weights()) throw PreconditionError("cluster-cluster solver is unweighted");

  int left = 0, right = 0;
  const std::vector<int> c1 = cluster_ids(t.rep1, left);
  const std::vector<int> c2 = cluster_ids(t.rep2, right);

  // One edge per clique pair, labelled by the lowest shared vertex.
  std::vector<std::tuple<int, int, VertexId>> edges;
  for (VertexId v = 0; v < t.size(); ++v) edges.emplace_back(c1[v], c2[v], v);
  std::sort(edges.begin(), edges.end());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(left));
  std::vector<std::vector<VertexId>> witness(static_cast<std::size_t>(left));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b, v] = edges[i];
    if (i > 0 && std::get<0>(edges[i - 1]) == a && std::get<1>(edges[i - 1]) == b) continue;
    adj[a].push_back(b);
    witness[a].push_back(v);
  }

  const std::vector<int> match = max_bipartite_matching(adj, right);
  Solution s;
  for (std::size_t a = 0; a < adj.size(); ++a) {
    if (match[a] < 0) continue;
    const auto it = std::find(adj[a].begin(), adj[a].end(), match[a]);
    s.vertices.push_back(witness[a][static_cast<std::size_t>(it - adj[a].begin())]);
  }
  std::sort(s.vertices.begin(), s.vertices.end());
  s.value = static_cast<Weight>(s.vertices.size());
  return s;
}

}  // namespace jis
