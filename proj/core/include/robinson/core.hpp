#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace robinson {

// Exact dissimilarity value, stored as integer units of 10^-scale.
class Weight {
 public:
  constexpr Weight() = default;
  constexpr explicit Weight(std::int64_t units) : units_(units) {}

  constexpr std::int64_t units() const { return units_; }

  friend constexpr auto operator<=>(Weight, Weight) = default;
  friend constexpr bool operator==(Weight, Weight) = default;

 private:
  std::int64_t units_ = 0;
};

using IndexSet = std::vector<int>;  // sorted, strictly increasing
using Order = std::vector<int>;

enum class Errc {
  AsymmetricInput,
  NonzeroDiagonal,
  EmptyMatrix,
  NegativeWeight,
  SubsetTooSmall,
  EmptySubset,
  NotALeaf,
  PivotInsideClass,
  NotAPartition,
  PivotIsLeaf,
  NotRobinson,
  NotAnMModulePartition,
  TooManyOrders,
  NoBipartition,
  CorrespondenceViolation,
  SideConflict,
  NoAdmissibleHole,
  InstanceTooLarge,
  ParseError,
};

const char* errcName(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::vector<int> witness = {});

  Errc code() const { return code_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  Errc code_;
  std::vector<int> witness_;
};

// Symmetric n x n matrix of exact weights with zero diagonal once validated.
class DissimilarityMatrix {
 public:
  DissimilarityMatrix() = default;
  explicit DissimilarityMatrix(int n, int scale = 0);

  // Builds from integer rows; the rows must form a square.
  static DissimilarityMatrix fromRows(
      const std::vector<std::vector<std::int64_t>>& rows, int scale = 0);

  int size() const { return n_; }
  int scale() const { return scale_; }

  Weight operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * n_ + j];
  }
  void set(int i, int j, Weight w) {
    entries_[static_cast<std::size_t>(i) * n_ + j] = w;
  }
  void setSymmetric(int i, int j, Weight w) {
    set(i, j, w);
    set(j, i, w);
  }

  IndexSet all() const;

  friend bool operator==(const DissimilarityMatrix&,
                         const DissimilarityMatrix&) = default;

 private:
  int n_ = 0;
  int scale_ = 0;
  std::vector<Weight> entries_;
};

void validate(const DissimilarityMatrix& m);

// Positions (i, j, k) in order with d(o_i,o_k) < max(d(o_i,o_j), d(o_j,o_k)).
std::optional<std::array<int, 3>> findOrderViolation(
    const DissimilarityMatrix& m, const Order& order);

bool isCompatibleOrder(const DissimilarityMatrix& m, const IndexSet& subset,
                       const Order& order);

Weight deltaStar(const DissimilarityMatrix& m, const IndexSet& subset);

std::vector<IndexSet> deltaGraphComponents(const DissimilarityMatrix& m,
                                           const IndexSet& subset, Weight delta);

std::vector<IndexSet> rhoComponents(const DissimilarityMatrix& m,
                                    const IndexSet& subset);

bool isMModule(const DissimilarityMatrix& m, const IndexSet& subset,
               const IndexSet& candidate);

DissimilarityMatrix quotient(const DissimilarityMatrix& m,
                             const std::vector<IndexSet>& parts);

std::tuple<Weight, int, int> diameterAndPair(const DissimilarityMatrix& m,
                                             const IndexSet& subset);

// True iff the two sets are disjoint and every cross pair is at distance w.
bool uniformCross(const DissimilarityMatrix& m, const IndexSet& a,
                  const IndexSet& b, Weight w);

IndexSet setUnion(const IndexSet& a, const IndexSet& b);
IndexSet setDifference(const IndexSet& a, const IndexSet& b);

}  // namespace robinson
