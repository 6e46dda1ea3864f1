// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "robinson/bench.hpp"
#include "robinson/copoints.hpp"
#include "robinson/dendrogram.hpp"
#include "robinson/generate.hpp"
#include "robinson/translate.hpp"

using namespace robinson;
using namespace fixtures;

namespace {

constexpr double kExampleSeconds = 1.0;
constexpr double kOrderSetSeconds = 60.0;
constexpr int kOrderSetPerProfile = 500;
constexpr int kRecognitionInstances = 500;
constexpr int kMModuleInstances = 200;
constexpr int kRoundtripInstances = 500;
constexpr int kSubdominantInstances = 100;
constexpr int kUltrametricInstances = 100;
constexpr int kBoundInstances = 300;
constexpr std::size_t kCountCap = 10000;
constexpr double kBenchMedianSeconds = 5.0;
constexpr double kBenchRatio = 5.0;
constexpr int kBenchReps = 5;

const Profile kProfiles[] = {Profile::Generic, Profile::Ultrametric, Profile::FlatHeavy,
                             Profile::TieHeavy};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double secondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(3);
  out << v;
  return out.str();
}

std::vector<IndexSet> sortedSets(std::vector<IndexSet> v) {
  for (auto& s : v) std::sort(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

std::map<IndexSet, Weight> dendrogramClusters(const Dendrogram& d) {
  std::map<IndexSet, Weight> out;
  for (std::size_t id = 0; id < d.arena().nodes.size(); ++id)
    if (!d.arena().isLeaf(static_cast<int>(id)))
      out[clusterOf(d, static_cast<int>(id))] = d.node(static_cast<int>(id)).weight;
  return out;
}

void pqClusters(const PQTree& t, std::set<IndexSet>& out) {
  if (t.isLeaf()) return;
  out.insert(t.leafSet());
  for (const auto& c : t.children) pqClusters(c, out);
}

void mmClusters(const MModuleTree& t, std::set<IndexSet>& out) {
  if (t.isLeaf()) return;
  out.insert(t.leafSet());
  for (const auto& c : t.children) mmClusters(c, out);
}

std::string describe(int instance, const DissimilarityMatrix& m) {
  return "instance " + std::to_string(instance) + " (n=" + std::to_string(m.size()) + ")";
}

// 1. Worked example.
Outcome workedExample() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto m = example12();
  const IndexSet all = m.all();
  o.require(equivalent(pqTree2(m, all), example12Pq()), "pqTree2 differs from the drawn PQ-tree");
  o.require(equivalent(deltaPqTree(m, all), example12Pq()), "deltaPqTree differs from the drawn PQ-tree");

  const MModuleTree built = mmoduleTree(m, all);
  o.require(sameMModuleTree(built, example12Mm()), "mmoduleTree differs from the drawn tree");
  o.require(sameMModuleTree(pqToMModuleTree(m, example12Pq()), example12Mm()),
            "pqToMModuleTree differs from the drawn tree");
  const MModuleTree canon = canonicalMModuleTree(built);
  bool xi3 = false;
  for (const auto& c : canon.children)
    if (c.leafSet() == range(8, 12))
      xi3 = c.special && *c.special == W(2) && c.children[c.largeChild].leafSet() == S({8, 9, 12});
  o.require(xi3, "third block is not 2-special with large child {8,9,12}");

  // Non-trivial copoints with their attaching points, as tabulated.
  std::set<std::pair<IndexSet, int>> table;
  auto attach = [&table](const IndexSet& c, const IndexSet& points) {
    for (int p : points) table.insert({c, p});
  };
  attach(S({2, 3}), S({1, 4}));
  attach(S({1, 4}), S({2, 3}));
  attach(range(1, 4), range(5, 12));
  attach(S({5, 6}), S({7}));
  attach(S({5, 7}), S({6}));
  attach(S({6, 7}), S({5}));
  attach(range(5, 7), setUnion(range(1, 4), range(8, 12)));
  attach(S({10, 11}), S({8, 9, 12}));
  attach(S({8, 9, 10, 12}), S({11}));
  attach(S({8, 9, 11, 12}), S({10}));
  attach(range(8, 12), range(1, 7));
  std::set<std::pair<IndexSet, int>> computed;
  for (int p : all) {
    const auto cp = copointPartition(m, all, p);
    for (std::size_t k = 1; k < cp.classes.size(); ++k) {
      IndexSet c = cp.classes[k];
      std::sort(c.begin(), c.end());
      if (c.size() >= 2) computed.insert({c, p});
    }
  }
  o.require(computed == table, "copoints differ from the tabulated ones");

  const std::map<IndexSet, Weight> clusters{
      {S({2, 3}), W(1)},    {range(1, 4), W(2)}, {range(5, 7), W(1)}, {S({8, 9}), W(1)},
      {range(8, 12), W(2)}, {range(1, 7), W(5)}, {all, W(6)}};
  o.require(dendrogramClusters(buildDendrogram(m, all)) == clusters,
            "dendrogram clusters or weights differ from the figure");
  const double t = secondsSince(start);
  o.require(t < kExampleSeconds, "took " + fmt(t) + " s");
  if (o.pass) o.detail = fmt(t) + " s";
  return o;
}

// 2. Order sets against brute-force enumeration.
Outcome orderSets() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  int count = 0;
  for (Profile profile : kProfiles) {
    for (int i = 0; i < kOrderSetPerProfile && o.pass; ++i) {
      const int n = 2 + i % 8;
      const auto m = generateRobinson(n, 20000 + static_cast<std::uint64_t>(i), profile);
      const auto r = recognizeRobinson(m);
      if (!r.robinson) {
        o.require(false, std::string(profileName(profile)) + " " + describe(i, m) + " rejected");
        break;
      }
      auto got = enumerateOrders(*r.tree, 400000);
      std::sort(got.begin(), got.end());
      o.require(got == oracle::bruteCompatibleOrders(m, m.all()),
                std::string(profileName(profile)) + " " + describe(i, m) + " order sets differ");
      ++count;
    }
  }
  const double t = secondsSince(start);
  o.require(t < kOrderSetSeconds, "took " + fmt(t) + " s");
  if (o.pass) o.detail = std::to_string(count) + " instances, " + fmt(t) + " s";
  return o;
}

// 3. Recognition verdicts on mixed instances.
Outcome recognition() {
  Outcome o;
  std::mt19937_64 rng(31);
  int robinson = 0;
  for (int i = 0; i < kRecognitionInstances && o.pass; ++i) {
    const int n = 2 + i % 7;
    DissimilarityMatrix m;
    if (i % 3 == 0) {
      m = randomSymmetric(n, 1 + i % 4, rng);
    } else {
      m = generateRobinson(n, 30000 + static_cast<std::uint64_t>(i), kProfiles[i % 4]);
      if (i % 3 == 2 && n > 1) {
        std::uniform_int_distribution<int> pick(0, n - 1);
        int x = pick(rng);
        int y = pick(rng);
        if (x == y) y = (x + 1) % n;
        const std::int64_t v = m(x, y).units();
        m.setSymmetric(x, y, Weight(v > 0 && rng() % 2 ? v - 1 : v + 1));
      }
    }
    const auto r = recognizeRobinson(m);
    const bool expected = !oracle::bruteCompatibleOrders(m, m.all()).empty();
    robinson += expected ? 1 : 0;
    o.require(r.robinson == expected, describe(i, m) + " verdict differs");
    if (r.robinson) o.require(isCompatibleOrder(m, m.all(), r.witness), describe(i, m) + " witness fails");
  }
  if (o.pass)
    o.detail = std::to_string(robinson) + " Robinson, " +
               std::to_string(kRecognitionInstances - robinson) + " not";
  return o;
}

// 4. Mmodules and copoints against brute force.
Outcome mmodules() {
  Outcome o;
  for (int i = 0; i < kMModuleInstances && o.pass; ++i) {
    const int n = 2 + i % 11;
    const auto m = generateRobinson(n, 40000 + static_cast<std::uint64_t>(i), kProfiles[i % 4]);
    const IndexSet all = m.all();
    const MModuleTree tree = mmoduleTree(m, all);
    const auto mods = oracle::bruteMModules(m, all);
    const std::set<IndexSet> lookup(mods.begin(), mods.end());
    for (int mask = 0; mask < (1 << n) && o.pass; ++mask) {
      IndexSet c;
      for (int x = 0; x < n; ++x)
        if (mask >> x & 1) c.push_back(x);
      o.require(isMModuleViaTree(tree, c) == (lookup.count(c) == 1),
                describe(i, m) + " mmodule query differs");
    }
    for (int p : all) {
      const auto expected = oracle::bruteCopoints(m, all, p);
      o.require(sortedSets(copointPartition(m, all, p).classes) == expected,
                describe(i, m) + " copointPartition differs at " + std::to_string(p + 1));
      auto fromTree = copointsFromMModuleTree(tree, p);
      fromTree.push_back({p});
      o.require(sortedSets(fromTree) == expected,
                describe(i, m) + " tree copoints differ at " + std::to_string(p + 1));
    }
  }
  if (o.pass) o.detail = std::to_string(kMModuleInstances) + " instances, n <= 12";
  return o;
}

// 5. Roundtrips between the two tree forms.
Outcome roundtrips() {
  Outcome o;
  for (int i = 0; i < kRoundtripInstances && o.pass; ++i) {
    const int n = 2 + i % 39;
    const auto m = generateRobinson(n, 50000 + static_cast<std::uint64_t>(i), kProfiles[i % 4]);
    const PQTree pq = pqTree2(m, m.all());
    const MModuleTree mt = mmoduleTree(m, m.all());
    o.require(equivalent(mmoduleToPqTree(m, pqToMModuleTree(m, pq)), pq),
              describe(i, m) + " pq roundtrip differs");
    o.require(sameMModuleTree(pqToMModuleTree(m, mmoduleToPqTree(m, mt)), mt),
              describe(i, m) + " mmodule roundtrip differs");
  }
  if (o.pass) o.detail = std::to_string(kRoundtripInstances) + " instances, n <= 40";
  return o;
}

// 6. Subdominant ultrametric.
Outcome subdominant() {
  Outcome o;
  std::mt19937_64 rng(61);
  for (int i = 0; i < kSubdominantInstances && o.pass; ++i) {
    const int n = 2 + (i * 7) % 63;
    const auto m = i % 2 ? randomSymmetric(n, 1 + i % 9, rng)
                         : generateRobinson(n, 60000 + static_cast<std::uint64_t>(i), kProfiles[i % 4]);
    const Dendrogram d = buildDendrogram(m, m.all());
    const auto ref = oracle::bruteSubdominant(m, m.all());
    for (int x = 0; x < n && o.pass; ++x)
      for (int y = x + 1; y < n; ++y)
        o.require(subdominantDistance(d, x, y) == ref(x, y), describe(i, m) + " distance differs");
    for (std::size_t id = 0; id < d.arena().nodes.size(); ++id) {
      const int parent = d.parent(static_cast<int>(id));
      if (parent >= 0 && !d.arena().isLeaf(static_cast<int>(id)))
        o.require(d.node(static_cast<int>(id)).weight < d.node(parent).weight,
                  describe(i, m) + " weights do not increase");
    }
  }
  if (o.pass) o.detail = std::to_string(kSubdominantInstances) + " instances, n <= 64";
  return o;
}

bool mmAllCapDecreasing(const DissimilarityMatrix& m, const MModuleTree& t) {
  if (t.isLeaf()) return true;
  if (t.kind != MModuleTree::Kind::Cap || t.special) return false;
  const Weight diam = std::get<0>(diameterAndPair(m, t.leafSet()));
  for (const auto& c : t.children) {
    if (!c.isLeaf() && !(std::get<0>(diameterAndPair(m, c.leafSet())) < diam)) return false;
    if (!mmAllCapDecreasing(m, c)) return false;
  }
  return true;
}

bool noLongQ(const PQTree& t) {
  if (t.kind == PQTree::Kind::Q && t.children.size() >= 3) return false;
  return std::all_of(t.children.begin(), t.children.end(), noLongQ);
}

// 7. Ultrametric specializations.
Outcome ultrametrics() {
  Outcome o;
  for (int i = 0; i < kUltrametricInstances && o.pass; ++i) {
    const int n = 2 + (i * 5) % 63;
    const auto m = generateRobinson(n, 70000 + static_cast<std::uint64_t>(i), Profile::Ultrametric);
    const PQTree pq = pqTree2(m, m.all());
    const MModuleTree mt = mmoduleTree(m, m.all());
    const Dendrogram d = buildDendrogram(m, m.all());
    o.require(noLongQ(pq), describe(i, m) + " PQ-tree has a Q node of arity >= 3");
    o.require(mmAllCapDecreasing(m, mt), describe(i, m) + " mmodule tree is not all-Cap decreasing");
    std::set<IndexSet> a;
    std::set<IndexSet> b;
    pqClusters(pq, a);
    mmClusters(mt, b);
    std::set<IndexSet> c;
    for (const auto& [set, w] : dendrogramClusters(d)) c.insert(set);
    o.require(a == b && b == c, describe(i, m) + " trees are not isomorphic");
  }
  if (o.pass) o.detail = std::to_string(kUltrametricInstances) + " ultrametrics, n <= 64";
  return o;
}

// 8. Copoint count and the single disconnecting threshold.
Outcome bounds() {
  Outcome o;
  std::mt19937_64 rng(81);
  int subsets = 0;
  for (int i = 0; i < kBoundInstances && o.pass; ++i) {
    const int n = 2 + i % 19;
    const auto m = generateRobinson(n, 80000 + static_cast<std::uint64_t>(i), kProfiles[i % 4]);
    const IndexSet all = m.all();
    std::set<IndexSet> distinct;
    for (int p : all) {
      const auto cp = copointPartition(m, all, p);
      for (std::size_t k = 1; k < cp.classes.size(); ++k) {
        IndexSet c = cp.classes[k];
        std::sort(c.begin(), c.end());
        distinct.insert(c);
      }
    }
    o.require(static_cast<int>(distinct.size()) <= 2 * n - 1,
              describe(i, m) + " has " + std::to_string(distinct.size()) + " copoints");

    std::vector<IndexSet> tested{all};
    for (int r = 0; r < 3; ++r) {
      IndexSet s;
      for (int x : all)
        if (rng() % 2) s.push_back(x);
      if (s.size() >= 2) tested.push_back(s);
    }
    for (const auto& s : tested) {
      std::set<Weight> values;
      for (int x : s)
        for (int y : s)
          if (x < y) values.insert(m(x, y));
      int disconnecting = 0;
      for (Weight w : values)
        if (deltaGraphComponents(m, s, w).size() > 1) ++disconnecting;
      o.require(disconnecting <= 1, describe(i, m) + " has several disconnecting thresholds");
      ++subsets;
    }
  }
  if (o.pass)
    o.detail = std::to_string(kBoundInstances) + " instances, " + std::to_string(subsets) + " subsets";
  return o;
}

// 9. Counting.
Outcome counting() {
  Outcome o;
  o.require(countOrders(pqTree1()) == 12, "tree one does not count 12");
  int checked = 0;
  for (int i = 0; i < 300 && o.pass; ++i) {
    const int n = 1 + i % 12;
    const auto m = generateRobinson(n, 90000 + static_cast<std::uint64_t>(i), kProfiles[i % 4]);
    const PQTree t = pqTree2(m, m.all());
    const BigCount c = countOrders(t);
    if (c > kCountCap) continue;
    const auto orders = enumerateOrders(t, kCountCap);
    const std::set<Order> distinct(orders.begin(), orders.end());
    o.require(c == orders.size() && distinct.size() == orders.size(),
              describe(i, m) + " count " + c.str() + " vs " + std::to_string(orders.size()));
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " trees enumerated";
  return o;
}

// 10. Scaling.
Outcome scaling() {
  Outcome o;
  const BenchTable table = runBench({256, 512, 1024}, kBenchReps, 7);
  const BenchRow& last = table.rows.back();
  const std::pair<const char*, double> medians[] = {
      {"dendrogram", last.dendrogram}, {"mmodule", last.mmodule}, {"pqtree", last.pqtree}};
  for (const auto& [name, v] : medians)
    o.require(v < kBenchMedianSeconds, std::string(name) + " median " + fmt(v) + " s at n=1024");
  std::string ratios;
  for (const BenchRow& r : table.ratios()) {
    const std::pair<const char*, double> rs[] = {
        {"dendrogram", r.dendrogram}, {"mmodule", r.mmodule}, {"pqtree", r.pqtree}};
    for (const auto& [name, v] : rs) {
      o.require(v <= kBenchRatio, std::string(name) + " ratio " + fmt(v) + " at n=" + std::to_string(r.n));
      ratios += " " + std::string(name) + "@" + std::to_string(r.n) + "=" + fmt(v);
    }
  }
  const std::string medianText = "medians at 1024: " + fmt(last.dendrogram) + "/" + fmt(last.mmodule) +
                                 "/" + fmt(last.pqtree) + " s; ratios" + ratios;
  o.detail = o.pass ? medianText : o.detail + "; " + medianText;
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"worked example", workedExample}, {"order sets", orderSets},
      {"recognition", recognition},      {"mmodules and copoints", mmodules},
      {"roundtrips", roundtrips},        {"subdominant ultrametric", subdominant},
      {"ultrametric trees", ultrametrics}, {"structural bounds", bounds},
      {"counting", counting},            {"scaling", scaling}};
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
