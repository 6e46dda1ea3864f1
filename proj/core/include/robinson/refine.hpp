#pragma once

#include <vector>

#include "robinson/core.hpp"
#include "robinson/dendrogram.hpp"

namespace robinson {

using OrderedPartition = std::vector<IndexSet>;

struct CopointPartition {
  int p = -1;
  std::vector<IndexSet> classes;  // classes[0] == {p}
};

// Classes of cls by increasing d(q, .), input order kept inside a class.
OrderedPartition refineByPivot(const DissimilarityMatrix& m, int q, const IndexSet& cls);

OrderedPartition stablePartition(const DissimilarityMatrix& m, const IndexSet& subset,
                                 const OrderedPartition& initial);

CopointPartition copointPartition(const DissimilarityMatrix& m, const IndexSet& subset,
                                  int p);

// Splits the tree rooted at root into trees of constant d(q, .). New join
// nodes are appended to arena and carry the weight of the node whose
// children they group.
std::vector<int> pivotTree(const DissimilarityMatrix& m, int q, TreeArena& arena, int root);

// Refines a forest whose leaf sets partition a subset into the maximal
// mmodules of that subset inside each tree.
std::vector<int> stableTrees(const DissimilarityMatrix& m, TreeArena& arena,
                             const std::vector<int>& roots);

}  // namespace robinson
