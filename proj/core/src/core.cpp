#include "robinson/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace robinson {

const char* errcName(Errc code) {
  switch (code) {
    case Errc::AsymmetricInput: return "AsymmetricInput";
    case Errc::NonzeroDiagonal: return "NonzeroDiagonal";
    case Errc::EmptyMatrix: return "EmptyMatrix";
    case Errc::NegativeWeight: return "NegativeWeight";
    case Errc::SubsetTooSmall: return "SubsetTooSmall";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::NotALeaf: return "NotALeaf";
    case Errc::PivotInsideClass: return "PivotInsideClass";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::PivotIsLeaf: return "PivotIsLeaf";
    case Errc::NotRobinson: return "NotRobinson";
    case Errc::NotAnMModulePartition: return "NotAnMModulePartition";
    case Errc::TooManyOrders: return "TooManyOrders";
    case Errc::NoBipartition: return "NoBipartition";
    case Errc::CorrespondenceViolation: return "CorrespondenceViolation";
    case Errc::SideConflict: return "SideConflict";
    case Errc::NoAdmissibleHole: return "NoAdmissibleHole";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what, std::vector<int> witness)
    : std::runtime_error(std::string(errcName(code)) + ": " + what),
      code_(code),
      witness_(std::move(witness)) {}

DissimilarityMatrix::DissimilarityMatrix(int n, int scale)
    : n_(n), scale_(scale), entries_(static_cast<std::size_t>(n) * n) {}

DissimilarityMatrix DissimilarityMatrix::fromRows(
    const std::vector<std::vector<std::int64_t>>& rows, int scale) {
  const int n = static_cast<int>(rows.size());
  DissimilarityMatrix m(n, scale);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw Error(Errc::ParseError, "row " + std::to_string(i) + " is not of length n");
    for (int j = 0; j < n; ++j) m.set(i, j, Weight(rows[i][j]));
  }
  return m;
}

IndexSet DissimilarityMatrix::all() const {
  IndexSet s(n_);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

void validate(const DissimilarityMatrix& m) {
  const int n = m.size();
  if (n == 0) throw Error(Errc::EmptyMatrix, "matrix has no points");
  for (int i = 0; i < n; ++i) {
    if (m(i, i) != Weight(0))
      throw Error(Errc::NonzeroDiagonal, "d(i,i) != 0 at i=" + std::to_string(i), {i});
    for (int j = i + 1; j < n; ++j) {
      if (m(i, j) != m(j, i))
        throw Error(Errc::AsymmetricInput,
                    "d(i,j) != d(j,i) at (" + std::to_string(i) + "," + std::to_string(j) + ")",
                    {i, j});
      if (m(i, j) < Weight(0))
        throw Error(Errc::NegativeWeight, "negative entry", {i, j});
    }
  }
}

std::optional<std::array<int, 3>> findOrderViolation(const DissimilarityMatrix& m,
                                                     const Order& order) {
  const int k = static_cast<int>(order.size());
  // Adjacent-step form of the triple condition: rows grow rightwards,
  // columns grow upwards.
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j + 1 < k; ++j) {
      if (m(order[i], order[j]) > m(order[i], order[j + 1])) return std::array{i, j, j + 1};
    }
  }
  for (int c = 0; c < k; ++c) {
    for (int i = 0; i + 1 < c; ++i) {
      if (m(order[i], order[c]) < m(order[i + 1], order[c])) return std::array{i, i + 1, c};
    }
  }
  return std::nullopt;
}

bool isCompatibleOrder(const DissimilarityMatrix& m, const IndexSet& subset,
                       const Order& order) {
  Order sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != subset) return false;
  return !findOrderViolation(m, order).has_value();
}

Weight deltaStar(const DissimilarityMatrix& m, const IndexSet& subset) {
  const int k = static_cast<int>(subset.size());
  if (k < 2) throw Error(Errc::SubsetTooSmall, "deltaStar needs at least two points");
  // Prim on the complete graph; the answer is the heaviest tree edge.
  const auto inf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> best(k, inf);
  std::vector<char> done(k, 0);
  best[0] = 0;
  std::int64_t result = 0;
  for (int step = 0; step < k; ++step) {
    int u = -1;
    for (int v = 0; v < k; ++v)
      if (!done[v] && (u < 0 || best[v] < best[u])) u = v;
    done[u] = 1;
    result = std::max(result, best[u]);
    for (int v = 0; v < k; ++v)
      if (!done[v]) best[v] = std::min(best[v], m(subset[u], subset[v]).units());
  }
  return Weight(result);
}

namespace {

// Components of the graph on subset whose edges satisfy adjacent(d).
template <class Adjacent>
std::vector<IndexSet> components(const DissimilarityMatrix& m, const IndexSet& subset,
                                 Adjacent adjacent) {
  std::vector<int> unvisited(subset.rbegin(), subset.rend());
  std::vector<IndexSet> out;
  std::vector<int> stack;
  while (!unvisited.empty()) {
    IndexSet comp;
    stack.push_back(unvisited.back());
    unvisited.pop_back();
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      std::size_t keep = 0;
      for (std::size_t t = 0; t < unvisited.size(); ++t) {
        const int v = unvisited[t];
        if (adjacent(m(u, v)))
          stack.push_back(v);
        else
          unvisited[keep++] = v;
      }
      unvisited.resize(keep);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::vector<IndexSet> deltaGraphComponents(const DissimilarityMatrix& m,
                                           const IndexSet& subset, Weight delta) {
  return components(m, subset, [delta](Weight w) { return w != delta; });
}

std::vector<IndexSet> rhoComponents(const DissimilarityMatrix& m, const IndexSet& subset) {
  const Weight rho = deltaStar(m, subset);
  return components(m, subset, [rho](Weight w) { return w < rho; });
}

bool isMModule(const DissimilarityMatrix& m, const IndexSet& subset,
               const IndexSet& candidate) {
  if (candidate.size() < 2) return true;
  const IndexSet outside = setDifference(subset, candidate);
  const int first = candidate.front();
  for (int z : outside)
    for (std::size_t t = 1; t < candidate.size(); ++t)
      if (m(z, candidate[t]) != m(z, first)) return false;
  return true;
}

DissimilarityMatrix quotient(const DissimilarityMatrix& m,
                             const std::vector<IndexSet>& parts) {
  const int k = static_cast<int>(parts.size());
  DissimilarityMatrix q(k, m.scale());
  for (int a = 0; a < k; ++a) {
    if (parts[a].empty()) throw Error(Errc::NotAnMModulePartition, "empty part");
    for (int b = a + 1; b < k; ++b) {
      const Weight w = m(parts[a].front(), parts[b].front());
      for (int x : parts[a])
        for (int y : parts[b])
          if (m(x, y) != w)
            throw Error(Errc::NotAnMModulePartition,
                        "parts " + std::to_string(a) + " and " + std::to_string(b) +
                            " are not at uniform distance",
                        {x, y});
      q.setSymmetric(a, b, w);
    }
  }
  return q;
}

std::tuple<Weight, int, int> diameterAndPair(const DissimilarityMatrix& m,
                                             const IndexSet& subset) {
  if (subset.size() < 2) throw Error(Errc::SubsetTooSmall, "diameter needs two points");
  std::tuple<Weight, int, int> best{m(subset[0], subset[1]), subset[0], subset[1]};
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a + 1; b < subset.size(); ++b)
      if (m(subset[a], subset[b]) > std::get<0>(best))
        best = {m(subset[a], subset[b]), subset[a], subset[b]};
  return best;
}

bool uniformCross(const DissimilarityMatrix& m, const IndexSet& a, const IndexSet& b,
                  Weight w) {
  for (int x : a)
    for (int y : b)
      if (m(x, y) != w) return false;
  return true;
}

IndexSet setUnion(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet setDifference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace robinson
