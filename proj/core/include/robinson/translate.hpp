#pragma once

#include <vector>

#include "robinson/core.hpp"
#include "robinson/mmodtree.hpp"
#include "robinson/pqtree.hpp"

namespace robinson {

MModuleTree pqToMModuleTree(const DissimilarityMatrix& m, const PQTree& tree);

PQTree mmoduleToPqTree(const DissimilarityMatrix& m, const MModuleTree& tree);

// One-based j: the first j children form one side of the large mmodule.
std::size_t findBipartition(const DissimilarityMatrix& m, Weight delta,
                            const std::vector<PQTree>& children);

struct CorrespondenceReport {
  std::size_t matched = 0;
  std::vector<IndexSet> unmatchedMModule;  // large children of special Cap nodes
  std::vector<IndexSet> unmatchedPq;       // split apex children
};

CorrespondenceReport nodeCorrespondence(const DissimilarityMatrix& m, const PQTree& pq,
                                        const MModuleTree& mt);

}  // namespace robinson
