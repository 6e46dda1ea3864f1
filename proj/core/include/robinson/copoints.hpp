#pragma once

#include <optional>
#include <string>
#include <vector>

#include "robinson/core.hpp"
#include "robinson/mmodtree.hpp"
#include "robinson/pqtree.hpp"
#include "robinson/refine.hpp"

namespace robinson {

// flags[i] is set iff [C0, Ci] is an mmodule; flags[0] is always set.
using FrontierFlags = std::vector<char>;

FrontierFlags frontiers(const DissimilarityMatrix& m, const CopointPartition& cp);

struct FrontierSplit {
  std::vector<int> left;   // copoint indices, in order
  int frontier = 0;        // last frontier index, 0 when none
  std::vector<int> right;  // copoint indices, in order
};

// Copoints are classes[1..k] of cp; only the first k are considered.
FrontierSplit nextFrontier(const DissimilarityMatrix& m, const CopointPartition& cp, int k);

PQTree copointsToPqTree(const DissimilarityMatrix& m, const CopointPartition& cp, int k);

// One-based hole j: the new child goes between children j and j+1.
std::size_t admissibleHole(const DissimilarityMatrix& m, Weight delta,
                           const std::vector<PQTree>& children);

PQTree pqTree2(const DissimilarityMatrix& m, const IndexSet& subset);

struct RecognitionResult {
  bool robinson = false;
  std::optional<PQTree> tree;
  Order witness;
  std::string reason;                 // set on refusal
  std::optional<Errc> code;           // structural failure, when any
  std::vector<int> violation;         // offending points, when any
};

RecognitionResult recognizeRobinson(const DissimilarityMatrix& m);

// Copoints at p read off the path from the root to p.
std::vector<IndexSet> copointsFromMModuleTree(const MModuleTree& tree, int p);

struct UpsilonReport {
  std::vector<IndexSet> standardNodes;  // leaf sets of standard nodes on the path to p
  std::vector<IndexSet> frontierIntervals;
};

// Standard nodes on the path from p to the root against frontier intervals
// that are also blocks.
UpsilonReport upsilonFrontierCheck(const DissimilarityMatrix& m, const PQTree& tree, int p);

// True iff the set is an interval in every order the tree represents.
bool isBlockOfTree(const PQTree& tree, const IndexSet& candidate);

}  // namespace robinson
