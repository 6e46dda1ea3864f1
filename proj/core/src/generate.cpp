#include "robinson/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace robinson {

Profile parseProfile(const std::string& name) {
  if (name == "generic") return Profile::Generic;
  if (name == "ultrametric") return Profile::Ultrametric;
  if (name == "flat-heavy") return Profile::FlatHeavy;
  if (name == "tie-heavy") return Profile::TieHeavy;
  throw Error(Errc::ParseError, "unknown profile '" + name + "'");
}

const char* profileName(Profile profile) {
  switch (profile) {
    case Profile::Generic: return "generic";
    case Profile::Ultrametric: return "ultrametric";
    case Profile::FlatHeavy: return "flat-heavy";
    case Profile::TieHeavy: return "tie-heavy";
  }
  return "unknown";
}

namespace {

// Adjacent clusters merge at nondecreasing heights; d is the merge height.
DissimilarityMatrix ultrametric(int n, std::mt19937_64& rng) {
  DissimilarityMatrix m(n);
  std::vector<std::pair<int, int>> clusters;  // [first, last] in the line
  for (int i = 0; i < n; ++i) clusters.emplace_back(i, i);
  std::int64_t height = 0;
  std::bernoulli_distribution raise(0.6);
  while (clusters.size() > 1) {
    if (raise(rng) || height == 0) ++height;
    std::uniform_int_distribution<std::size_t> pick(0, clusters.size() - 2);
    const std::size_t a = pick(rng);
    const auto [lo, mid] = clusters[a];
    const auto [mid2, hi] = clusters[a + 1];
    for (int x = lo; x <= mid; ++x)
      for (int y = mid2; y <= hi; ++y) m.setSymmetric(x, y, Weight(height));
    clusters[a] = {lo, hi};
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(a) + 1);
  }
  return m;
}

}  // namespace

DissimilarityMatrix generateRobinsonOrdered(int n, std::uint64_t seed, Profile profile) {
  if (n < 1) throw Error(Errc::EmptyMatrix, "generator needs at least one point");
  std::mt19937_64 rng(seed);
  if (profile == Profile::Ultrametric) return ultrametric(n, rng);

  std::uniform_int_distribution<int> generic(0, 3);
  std::uniform_int_distribution<int> wide(1, 5);
  std::bernoulli_distribution tie(0.7);
  auto increment = [&]() -> std::int64_t {
    switch (profile) {
      case Profile::FlatHeavy: return wide(rng);
      case Profile::TieHeavy: return tie(rng) ? 0 : 1;
      default: return generic(rng);
    }
  };
  DissimilarityMatrix m(n);
  for (int len = 1; len < n; ++len) {
    for (int i = 0; i + len < n; ++i) {
      const int j = i + len;
      const Weight base = std::max(m(i, j - 1), m(i + 1, j));
      m.setSymmetric(i, j, Weight(base.units() + increment()));
    }
  }
  return m;
}

DissimilarityMatrix permuteMatrix(const DissimilarityMatrix& m, const std::vector<int>& perm) {
  DissimilarityMatrix out(m.size(), m.scale());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) out.set(i, j, m(perm[i], perm[j]));
  return out;
}

DissimilarityMatrix generateRobinson(int n, std::uint64_t seed, Profile profile) {
  const DissimilarityMatrix ordered = generateRobinsonOrdered(n, seed, profile);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return permuteMatrix(ordered, perm);
}

}  // namespace robinson
