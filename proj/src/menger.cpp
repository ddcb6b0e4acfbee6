#include "halin/menger.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <map>

namespace halin {

namespace {

void check_sides(const FiniteGraph& g, const std::set<Vertex>& A, const std::set<Vertex>& B) {
  require(!A.empty() && !B.empty(), ErrorCode::PreconditionViolated, "A and B must be nonempty");
  for (Vertex a : A) {
    require(g.has_vertex(a), ErrorCode::PreconditionViolated, "A vertex " + std::to_string(a.id) + " not in graph");
    require(!B.count(a), ErrorCode::PreconditionViolated, "A and B share vertex " + std::to_string(a.id));
  }
  for (Vertex b : B)
    require(g.has_vertex(b), ErrorCode::PreconditionViolated, "B vertex " + std::to_string(b.id) + " not in graph");
}

struct FlowNet {
  struct Arc {
    int to;
    int cap;
    int rev;
    bool forward;
  };
  std::vector<std::vector<Arc>> adj;

  explicit FlowNet(int n) : adj(static_cast<std::size_t>(n)) {}

  void add(int u, int v, int cap) {
    adj[u].push_back({v, cap, static_cast<int>(adj[v].size()), true});
    adj[v].push_back({u, 0, static_cast<int>(adj[u].size()) - 1, false});
  }

  // BFS in arc insertion order; returns false when no augmenting path remains.
  bool augment(int s, int t) {
    std::vector<std::pair<int, int>> parent(adj.size(), {-1, -1});
    parent[s] = {s, -1};
    std::deque<int> queue{s};
    while (!queue.empty() && parent[t].first < 0) {
      int u = queue.front();
      queue.pop_front();
      for (int i = 0; i < static_cast<int>(adj[u].size()); ++i) {
        const Arc& a = adj[u][i];
        if (a.cap > 0 && parent[a.to].first < 0) {
          parent[a.to] = {u, i};
          queue.push_back(a.to);
        }
      }
    }
    if (parent[t].first < 0) return false;
    for (int v = t; v != s;) {
      auto [u, i] = parent[v];
      Arc& a = adj[u][i];
      a.cap -= 1;
      adj[v][a.rev].cap += 1;
      v = u;
    }
    return true;
  }

  std::vector<bool> reachable(int s) const {
    std::vector<bool> seen(adj.size(), false);
    seen[s] = true;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (const Arc& a : adj[u])
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = true;
          queue.push_back(a.to);
        }
    }
    return seen;
  }
};

constexpr int kInf = INT_MAX / 4;

}  // namespace

MengerSolution menger_solve(const FiniteGraph& g, const std::set<Vertex>& A,
                            const std::set<Vertex>& B) {
  check_sides(g, A, B);
  const std::vector<Vertex> verts = g.vertices();
  std::map<Vertex, int> idx;
  for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
  const int n = static_cast<int>(verts.size());
  const int source = 2 * n, sink = 2 * n + 1;
  auto in = [](int i) { return 2 * i; };
  auto out = [](int i) { return 2 * i + 1; };

  FlowNet net(2 * n + 2);
  for (int i = 0; i < n; ++i) net.add(in(i), out(i), 1);
  for (Vertex a : A) net.add(source, in(idx[a]), kInf);
  for (const auto& [u, succ] : g.out_adjacency())
    for (Vertex v : succ) net.add(out(idx[u]), in(idx[v]), kInf);
  for (Vertex b : B) net.add(out(idx[b]), sink, kInf);

  while (net.augment(source, sink)) {
  }

  MengerSolution sol;
  const auto seen = net.reachable(source);
  for (int i = 0; i < n; ++i)
    if (seen[in(i)] && !seen[out(i)]) sol.separator.insert(verts[i]);

  // Flow on a forward arc = its reverse capacity.
  auto flow_on = [&](int u, int k) { return net.adj[net.adj[u][k].to][net.adj[u][k].rev].cap; };
  auto take = [&](int u, int k) {
    FlowNet::Arc& a = net.adj[u][k];
    net.adj[a.to][a.rev].cap -= 1;
  };
  for (int k = 0; k < static_cast<int>(net.adj[source].size()); ++k) {
    if (net.adj[source][k].cap >= kInf) continue;
    while (flow_on(source, k) > 0) {
      take(source, k);
      Path walk;
      int node = net.adj[source][k].to;
      while (node != sink) {
        if (node % 2 == 0) walk.push_back(verts[node / 2]);
        int next = -1;
        for (int j = 0; j < static_cast<int>(net.adj[node].size()); ++j) {
          const auto& a = net.adj[node][j];
          if (a.forward && flow_on(node, j) > 0) {
            take(node, j);
            next = a.to;
            break;
          }
        }
        require(next >= 0, ErrorCode::PreconditionViolated, "flow decomposition stalled");
        node = next;
      }
      std::size_t first = 0;
      for (std::size_t i = 0; i < walk.size(); ++i)
        if (A.count(walk[i])) first = i;
      std::size_t last = first;
      while (!B.count(walk[last])) ++last;
      sol.paths.emplace_back(walk.begin() + static_cast<std::ptrdiff_t>(first),
                             walk.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    }
  }
  std::sort(sol.paths.begin(), sol.paths.end());
  require(sol.paths.size() == sol.separator.size(), ErrorCode::PreconditionViolated,
          "duality mismatch in flow readback");
  return sol;
}

bool separates(const FiniteGraph& g, const std::set<Vertex>& A, const std::set<Vertex>& B,
               const std::set<Vertex>& sep) {
  std::set<Vertex> seen;
  std::deque<Vertex> queue;
  for (Vertex a : A)
    if (!sep.count(a)) {
      seen.insert(a);
      queue.push_back(a);
    }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (B.count(u)) return false;
    for (Vertex v : g.successors(u))
      if (!sep.count(v) && seen.insert(v).second) queue.push_back(v);
  }
  return true;
}

MengerOptima brute_force_menger(const FiniteGraph& g, const std::set<Vertex>& A,
                                const std::set<Vertex>& B) {
  check_sides(g, A, B);
  require(g.vertex_count() <= 12, ErrorCode::TooLarge,
          std::to_string(g.vertex_count()) + " vertices exceeds brute-force limit 12");
  const std::vector<Vertex> verts = g.vertices();
  std::map<Vertex, int> idx;
  for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);

  // vertex masks of A-B paths whose interior avoids A and B
  std::set<unsigned> masks;
  std::function<void(Vertex, unsigned)> dfs = [&](Vertex u, unsigned mask) {
    for (Vertex v : g.successors(u)) {
      const unsigned bit = 1u << idx[v];
      if (mask & bit) continue;
      if (B.count(v)) masks.insert(mask | bit);
      else if (!A.count(v)) dfs(v, mask | bit);
    }
  };
  for (Vertex a : A) dfs(a, 1u << idx[a]);
  std::vector<unsigned> paths;
  for (unsigned m : masks) {
    bool minimal = true;
    for (unsigned o : masks)
      if (o != m && (o & m) == o) minimal = false;
    if (minimal) paths.push_back(m);
  }

  MengerOptima out;
  std::function<void(std::size_t, unsigned, std::size_t)> pack = [&](std::size_t i, unsigned used,
                                                                    std::size_t count) {
    out.max_paths = std::max(out.max_paths, count);
    if (count + (paths.size() - i) <= out.max_paths) return;
    for (std::size_t j = i; j < paths.size(); ++j)
      if (!(paths[j] & used)) pack(j + 1, used | paths[j], count + 1);
  };
  pack(0, 0, 0);

  const std::size_t n = verts.size();
  std::vector<unsigned> subsets(1u << n);
  for (unsigned s = 0; s < subsets.size(); ++s) subsets[s] = s;
  std::stable_sort(subsets.begin(), subsets.end(), [](unsigned x, unsigned y) {
    return __builtin_popcount(x) < __builtin_popcount(y);
  });
  for (unsigned s : subsets) {
    std::set<Vertex> sep;
    for (std::size_t i = 0; i < n; ++i)
      if (s & (1u << i)) sep.insert(verts[i]);
    if (separates(g, A, B, sep)) {
      out.min_separator = sep.size();
      break;
    }
  }
  return out;
}

}  // namespace halin
