#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "robinson/core.hpp"

namespace robinson {

struct PQTree {
  enum class Kind { Leaf, P, Q };

  Kind kind = Kind::Leaf;
  int point = -1;
  std::vector<PQTree> children;

  static PQTree leaf(int point);
  static PQTree p(std::vector<PQTree> children);
  static PQTree q(std::vector<PQTree> children);

  bool isLeaf() const { return kind == Kind::Leaf; }
  IndexSet leafSet() const;  // sorted
  int firstLeaf() const;
  int lastLeaf() const;

  friend bool operator==(const PQTree&, const PQTree&) = default;
};

struct NodeClassification {
  std::optional<Weight> delta;  // conical: distance from the apex to the rest
  int apex = -1;                // child index of the apex
  bool split = false;           // apex leaf set is disconnected in G_delta
};

using BigCount = boost::multiprecision::cpp_int;

Order canonicalOrder(const PQTree& tree);

BigCount countOrders(const PQTree& tree);

// Every represented order once; TooManyOrders when the count exceeds cap.
std::vector<Order> enumerateOrders(const PQTree& tree, std::size_t cap);

bool representsOrder(const PQTree& tree, const Order& order);

// P children sorted by smallest leaf, Q nodes oriented lexicographically.
PQTree normalForm(const PQTree& tree);

bool equivalent(const PQTree& a, const PQTree& b);

// Distance between two disjoint mmodules, read off representatives.
Weight treeDistance(const DissimilarityMatrix& m, const PQTree& a, const PQTree& b);

// Diameter from the root shape: P by any two children, Q by its ends.
Weight treeDiameter(const DissimilarityMatrix& m, const PQTree& tree);

// Apex search only; the split flag is left unset.
NodeClassification conicalApex(const DissimilarityMatrix& m, const PQTree& node);

NodeClassification classify(const DissimilarityMatrix& m, const PQTree& node);

// Classification of every internal node in preorder.
std::vector<NodeClassification> classifyAll(const DissimilarityMatrix& m, const PQTree& tree);

// delta*(T): cross distance of a P root, apex distance of a conical Q root.
std::optional<Weight> treeDeltaStar(const DissimilarityMatrix& m, const PQTree& tree);

// Builders used during construction. makeP merges P children that share the
// new node's cross distance; arity-one nodes collapse to their child and
// two-child Q nodes become P nodes.
PQTree makeP(const DissimilarityMatrix& m, std::vector<PQTree> children);
PQTree makeQ(const DissimilarityMatrix& m, std::vector<PQTree> children);

// Bottom-up application of the builders.
PQTree normalize(const DissimilarityMatrix& m, const PQTree& tree);

// Minimal i in [1, l) with d(c_i, c_{l-1}) <= delta and d(c_{i-1}, c_i) >= delta,
// zero-based; the new child goes before children[i].
std::optional<std::size_t> insertionIndex(const DissimilarityMatrix& m, Weight delta,
                                          const std::vector<PQTree>& children);

PQTree deltaPqTree(const DissimilarityMatrix& m, const IndexSet& subset);

}  // namespace robinson
