#pragma once

#include <cstdint>
#include <string>

#include "robinson/core.hpp"

namespace robinson {

enum class Profile { Generic, Ultrametric, FlatHeavy, TieHeavy };

Profile parseProfile(const std::string& name);
const char* profileName(Profile profile);

// Robinson matrix built in a compatible order and then randomly relabelled.
// Deterministic for a given seed.
DissimilarityMatrix generateRobinson(int n, std::uint64_t seed, Profile profile);

// Same matrix before relabelling; the identity order is compatible.
DissimilarityMatrix generateRobinsonOrdered(int n, std::uint64_t seed, Profile profile);

// Relabels points: result(i, j) = m(perm[i], perm[j]).
DissimilarityMatrix permuteMatrix(const DissimilarityMatrix& m, const std::vector<int>& perm);

}  // namespace robinson
