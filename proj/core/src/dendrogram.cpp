#include "robinson/dendrogram.hpp"

#include <algorithm>
#include <limits>

namespace robinson {

int TreeArena::addLeaf(int point) {
  nodes.push_back(Node{point, Weight(0), {}});
  return static_cast<int>(nodes.size()) - 1;
}

int TreeArena::addNode(Weight weight, std::vector<int> children) {
  nodes.push_back(Node{-1, weight, std::move(children)});
  return static_cast<int>(nodes.size()) - 1;
}

void TreeArena::collectLeaves(int id, std::vector<int>& out) const {
  std::vector<int> stack{id};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (isLeaf(v)) {
      out.push_back(nodes[v].point);
      continue;
    }
    const auto& ch = nodes[v].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
}

IndexSet TreeArena::leafSet(int id) const {
  IndexSet out;
  collectLeaves(id, out);
  std::sort(out.begin(), out.end());
  return out;
}

int TreeArena::firstLeaf(int id) const {
  while (!isLeaf(id)) id = nodes[id].children.front();
  return nodes[id].point;
}

Dendrogram::Dendrogram(TreeArena arena, int root)
    : arena_(std::move(arena)), root_(root) {
  const int count = static_cast<int>(arena_.nodes.size());
  parent_.assign(count, -1);
  depth_.assign(count, 0);
  int maxPoint = -1;
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    maxPoint = std::max(maxPoint, arena_.nodes[v].point);
    for (int c : arena_.nodes[v].children) {
      parent_[c] = v;
      depth_[c] = depth_[v] + 1;
      stack.push_back(c);
    }
  }
  leafOf_.assign(maxPoint + 1, -1);
  stack.push_back(root_);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (arena_.isLeaf(v)) leafOf_[arena_.nodes[v].point] = v;
    for (int c : arena_.nodes[v].children) stack.push_back(c);
  }
}

int Dendrogram::leafOf(int point) const {
  if (point < 0 || point >= static_cast<int>(leafOf_.size())) return -1;
  return leafOf_[point];
}

int Dendrogram::lca(int a, int b) const {
  while (depth_[a] > depth_[b]) a = parent_[a];
  while (depth_[b] > depth_[a]) b = parent_[b];
  while (a != b) {
    a = parent_[a];
    b = parent_[b];
  }
  return a;
}

Dendrogram buildDendrogram(const DissimilarityMatrix& m, const IndexSet& subset) {
  if (subset.empty()) throw Error(Errc::EmptySubset, "dendrogram of an empty set");
  const int k = static_cast<int>(subset.size());
  TreeArena arena;
  // Children are kept reversed while building so that prepending is a
  // push_back; the first child is children.back().
  int root = arena.addLeaf(subset[0]);
  const auto inf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> p(k, inf);
  std::vector<char> visited(k, 0);
  visited[0] = 1;
  for (int v = 1; v < k; ++v) p[v] = m(subset[0], subset[v]).units();

  for (int step = 1; step < k; ++step) {
    int u = -1;
    for (int v = 0; v < k; ++v)
      if (!visited[v] && (u < 0 || p[v] < p[u])) u = v;
    visited[u] = 1;
    const Weight rho(p[u]);
    const int leaf = arena.addLeaf(subset[u]);

    int cur = root;
    int parent = -1;
    while (true) {
      const bool leafNode = arena.isLeaf(cur);
      const Weight w = arena.nodes[cur].weight;
      if (leafNode || w < rho) {
        const int fresh = arena.addNode(rho, {cur, leaf});
        if (parent < 0)
          root = fresh;
        else
          arena.nodes[parent].children.back() = fresh;
        break;
      }
      if (w == rho) {
        arena.nodes[cur].children.push_back(leaf);
        break;
      }
      parent = cur;
      cur = arena.nodes[cur].children.back();
    }

    for (int v = 0; v < k; ++v)
      if (!visited[v]) p[v] = std::min(p[v], m(subset[u], subset[v]).units());
  }
  for (auto& node : arena.nodes) std::reverse(node.children.begin(), node.children.end());
  return Dendrogram(std::move(arena), root);
}

Weight subdominantDistance(const Dendrogram& dend, int x, int y) {
  const int a = dend.leafOf(x);
  const int b = dend.leafOf(y);
  if (a < 0) throw Error(Errc::NotALeaf, "point " + std::to_string(x) + " is not a leaf", {x});
  if (b < 0) throw Error(Errc::NotALeaf, "point " + std::to_string(y) + " is not a leaf", {y});
  if (a == b) return Weight(0);
  return dend.node(dend.lca(a, b)).weight;
}

IndexSet clusterOf(const Dendrogram& dend, int node) { return dend.arena().leafSet(node); }

}  // namespace robinson
