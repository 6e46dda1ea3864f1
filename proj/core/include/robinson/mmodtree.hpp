#pragma once

#include <optional>
#include <vector>

#include "robinson/core.hpp"

namespace robinson {

struct MModuleTree {
  enum class Kind { Leaf, Cup, Cap };

  Kind kind = Kind::Leaf;
  int point = -1;
  std::vector<MModuleTree> children;
  std::optional<Weight> special;  // set on special Cap nodes
  int largeChild = -1;            // index into children when special

  static MModuleTree leaf(int point);
  static MModuleTree cup(std::vector<MModuleTree> children);
  static MModuleTree cap(std::vector<MModuleTree> children);
  static MModuleTree specialCap(std::vector<MModuleTree> children, Weight delta,
                                int largeChild);

  bool isLeaf() const { return kind == Kind::Leaf; }
  IndexSet leafSet() const;  // sorted
  int firstLeaf() const;
  int size() const;  // number of leaves
};

// Cup of arity two is stored as Cap.
MModuleTree makeCup(std::vector<MModuleTree> children);

MModuleTree mmoduleTree(const DissimilarityMatrix& m, const IndexSet& subset);

std::vector<IndexSet> maximalMModules(const DissimilarityMatrix& m, const IndexSet& subset);

bool isMModuleViaTree(const MModuleTree& tree, const IndexSet& candidate);

// Children sorted by smallest leaf, large-child index remapped.
MModuleTree canonicalMModuleTree(const MModuleTree& tree);

// Equal up to reordering of children.
bool sameMModuleTree(const MModuleTree& a, const MModuleTree& b);

}  // namespace robinson
