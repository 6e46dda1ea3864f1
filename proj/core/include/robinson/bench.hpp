#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace robinson {

struct BenchRow {
  int n = 0;
  double dendrogram = 0;  // median seconds
  double mmodule = 0;
  double pqtree = 0;
  double toMModule = 0;
  double toPq = 0;
};

struct BenchTable {
  std::vector<BenchRow> rows;

  // rows[i] over rows[i-1] for each stage, starting at i = 1.
  std::vector<BenchRow> ratios() const;
};

// Generic-profile instances, one per repetition, seeded from seed.
BenchTable runBench(const std::vector<int>& sizes, int repetitions, std::uint64_t seed);

std::string formatBenchTable(const BenchTable& table);

}  // namespace robinson
