#pragma once

#include <algorithm>
#include <initializer_list>
#include <random>
#include <vector>

#include "robinson/core.hpp"
#include "robinson/mmodtree.hpp"
#include "robinson/pqtree.hpp"

// Shared instances for the test suites. Helpers take one-based labels, as
// printed in the literature, and return zero-based library values.
namespace fixtures {

using robinson::DissimilarityMatrix;
using robinson::IndexSet;
using robinson::MModuleTree;
using robinson::Order;
using robinson::PQTree;
using robinson::Weight;

inline IndexSet S(std::initializer_list<int> oneBased) {
  IndexSet out;
  for (int x : oneBased) out.push_back(x - 1);
  std::sort(out.begin(), out.end());
  return out;
}

inline IndexSet range(int first, int last) {
  IndexSet out;
  for (int x = first; x <= last; ++x) out.push_back(x - 1);
  return out;
}

inline Order O(std::initializer_list<int> oneBased) {
  Order out;
  for (int x : oneBased) out.push_back(x - 1);
  return out;
}

inline Weight W(std::int64_t v) { return Weight(v); }

inline DissimilarityMatrix example12() {
  const std::vector<std::vector<std::int64_t>> upper = {
      {0, 2, 2, 3, 5, 5, 5, 8, 8, 8, 8, 8}, {0, 1, 2, 5, 5, 5, 8, 8, 8, 8, 8},
      {0, 2, 5, 5, 5, 8, 8, 8, 8, 8},       {0, 5, 5, 5, 8, 8, 8, 8, 8},
      {0, 1, 1, 6, 6, 6, 6, 6},             {0, 1, 6, 6, 6, 6, 6},
      {0, 6, 6, 6, 6, 6},                   {0, 1, 2, 2, 3},
      {0, 2, 2, 2},                         {0, 2, 2},
      {0, 2},                               {0}};
  DissimilarityMatrix m(12);
  for (int i = 0; i < 12; ++i)
    for (std::size_t t = 0; t < upper[i].size(); ++t)
      m.setSymmetric(i, i + static_cast<int>(t), Weight(upper[i][t]));
  return m;
}

// a, b, c = points 1, 2, 3 with d(a,b) = d(b,c) = 1, d(a,c) = 2.
inline DissimilarityMatrix flat3() { return DissimilarityMatrix::fromRows({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}); }

inline DissimilarityMatrix equalTriple() {
  return DissimilarityMatrix::fromRows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}

inline DissimilarityMatrix notRobinson4() {
  return DissimilarityMatrix::fromRows({{0, 1, 3, 2}, {1, 0, 1, 3}, {3, 1, 0, 1}, {2, 3, 1, 0}});
}

inline DissimilarityMatrix pair(std::int64_t d) { return DissimilarityMatrix::fromRows({{0, d}, {d, 0}}); }

inline PQTree L(int oneBased) { return PQTree::leaf(oneBased - 1); }
inline PQTree P(std::vector<PQTree> c) { return PQTree::p(std::move(c)); }
inline PQTree Q(std::vector<PQTree> c) { return PQTree::q(std::move(c)); }

// Q(P(1,2,3),4,5,6,7).
inline PQTree pqTree1() { return Q({P({L(1), L(2), L(3)}), L(4), L(5), L(6), L(7)}); }

// The PQ-tree drawn for the twelve-point space.
inline PQTree example12Pq() {
  return Q({Q({L(1), P({L(2), L(3)}), L(4)}), P({L(5), L(6), L(7)}),
            Q({L(8), L(9), P({L(10), L(11)}), L(12)})});
}

inline MModuleTree ML(int oneBased) { return MModuleTree::leaf(oneBased - 1); }
inline MModuleTree Cup(std::vector<MModuleTree> c) { return MModuleTree::cup(std::move(c)); }
inline MModuleTree Cap(std::vector<MModuleTree> c) { return MModuleTree::cap(std::move(c)); }
inline MModuleTree SCap(std::vector<MModuleTree> c, std::int64_t delta, int large) {
  return MModuleTree::specialCap(std::move(c), Weight(delta), large);
}

// The mmodule tree of the twelve-point space, with its special annotations.
inline MModuleTree example12Mm() {
  return Cup({SCap({Cap({ML(1), ML(4)}), Cap({ML(2), ML(3)})}, 2, 0),
              Cap({ML(5), ML(6), ML(7)}),
              SCap({ML(10), ML(11), Cup({ML(8), ML(9), ML(12)})}, 2, 2)});
}

// Symmetric matrix with zero diagonal and entries drawn from [0, maxValue].
inline DissimilarityMatrix randomSymmetric(int n, int maxValue, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> value(0, maxValue);
  DissimilarityMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.setSymmetric(i, j, Weight(value(rng)));
  return m;
}

}  // namespace fixtures
