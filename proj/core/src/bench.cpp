#include "robinson/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "robinson/copoints.hpp"
#include "robinson/dendrogram.hpp"
#include "robinson/generate.hpp"
#include "robinson/mmodtree.hpp"
#include "robinson/translate.hpp"

namespace robinson {

namespace {

template <class F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2;
}

}  // namespace

std::vector<BenchRow> BenchTable::ratios() const {
  std::vector<BenchRow> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const BenchRow& a = rows[i - 1];
    const BenchRow& b = rows[i];
    auto r = [](double x, double y) { return x > 0 ? y / x : 0.0; };
    out.push_back(BenchRow{b.n, r(a.dendrogram, b.dendrogram), r(a.mmodule, b.mmodule),
                           r(a.pqtree, b.pqtree), r(a.toMModule, b.toMModule), r(a.toPq, b.toPq)});
  }
  return out;
}

BenchTable runBench(const std::vector<int>& sizes, int repetitions, std::uint64_t seed) {
  BenchTable table;
  if (repetitions <= 0) return table;
  for (int n : sizes) {
    std::vector<double> dend, mm, pq, toMm, toPq;
    for (int r = 0; r < repetitions; ++r) {
      const DissimilarityMatrix m = generateRobinson(n, seed + static_cast<std::uint64_t>(r), Profile::Generic);
      const IndexSet all = m.all();
      dend.push_back(seconds([&] { buildDendrogram(m, all); }));
      mm.push_back(seconds([&] { mmoduleTree(m, all); }));
      PQTree tree;
      pq.push_back(seconds([&] { tree = pqTree2(m, all); }));
      MModuleTree mt;
      toMm.push_back(seconds([&] { mt = pqToMModuleTree(m, tree); }));
      toPq.push_back(seconds([&] { mmoduleToPqTree(m, mt); }));
    }
    table.rows.push_back(BenchRow{n, median(dend), median(mm), median(pq), median(toMm), median(toPq)});
  }
  return table;
}

std::string formatBenchTable(const BenchTable& table) {
  std::string out = "n,dendrogram_s,mmodule_s,pqtree_s,pq_to_mmodule_s,mmodule_to_pq_s\n";
  char line[256];
  for (const auto& r : table.rows) {
    std::snprintf(line, sizeof line, "%d,%.6f,%.6f,%.6f,%.6f,%.6f\n", r.n, r.dendrogram, r.mmodule,
                  r.pqtree, r.toMModule, r.toPq);
    out += line;
  }
  const auto ratios = table.ratios();
  if (!ratios.empty()) {
    out += "\nratio,dendrogram,mmodule,pqtree,pq_to_mmodule,mmodule_to_pq\n";
    for (const auto& r : ratios) {
      std::snprintf(line, sizeof line, "%d,%.3f,%.3f,%.3f,%.3f,%.3f\n", r.n, r.dendrogram, r.mmodule,
                    r.pqtree, r.toMModule, r.toPq);
      out += line;
    }
  }
  return out;
}

}  // namespace robinson
