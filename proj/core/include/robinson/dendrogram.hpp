#pragma once

#include <vector>

#include "robinson/core.hpp"

namespace robinson {

// Node storage shared by dendrograms and refinement forests. A node is a
// leaf when point >= 0; internal nodes carry a weight and children.
struct TreeArena {
  struct Node {
    int point = -1;
    Weight weight;
    std::vector<int> children;
  };

  std::vector<Node> nodes;

  int addLeaf(int point);
  int addNode(Weight weight, std::vector<int> children);

  bool isLeaf(int id) const { return nodes[id].point >= 0; }
  void collectLeaves(int id, std::vector<int>& out) const;
  IndexSet leafSet(int id) const;  // sorted
  int firstLeaf(int id) const;
};

class Dendrogram {
 public:
  Dendrogram() = default;
  Dendrogram(TreeArena arena, int root);

  const TreeArena& arena() const { return arena_; }
  int root() const { return root_; }
  const TreeArena::Node& node(int id) const { return arena_.nodes[id]; }

  // Arena id of the leaf holding point, or -1.
  int leafOf(int point) const;
  int parent(int id) const { return parent_[id]; }
  int lca(int a, int b) const;

 private:
  TreeArena arena_;
  int root_ = -1;
  std::vector<int> parent_;
  std::vector<int> depth_;
  std::vector<int> leafOf_;
};

Dendrogram buildDendrogram(const DissimilarityMatrix& m, const IndexSet& subset);

Weight subdominantDistance(const Dendrogram& dend, int x, int y);

IndexSet clusterOf(const Dendrogram& dend, int node);

}  // namespace robinson
