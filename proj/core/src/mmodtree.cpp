#include "robinson/mmodtree.hpp"

#include <algorithm>
#include <numeric>

#include "robinson/dendrogram.hpp"
#include "robinson/refine.hpp"

namespace robinson {

MModuleTree MModuleTree::leaf(int point) {
  MModuleTree t;
  t.point = point;
  return t;
}

MModuleTree MModuleTree::cup(std::vector<MModuleTree> children) {
  MModuleTree t;
  t.kind = Kind::Cup;
  t.children = std::move(children);
  return t;
}

MModuleTree MModuleTree::cap(std::vector<MModuleTree> children) {
  MModuleTree t;
  t.kind = Kind::Cap;
  t.children = std::move(children);
  return t;
}

MModuleTree MModuleTree::specialCap(std::vector<MModuleTree> children, Weight delta,
                                    int largeChild) {
  MModuleTree t = cap(std::move(children));
  t.special = delta;
  t.largeChild = largeChild;
  return t;
}

namespace {

void collect(const MModuleTree& t, IndexSet& out) {
  if (t.isLeaf()) {
    out.push_back(t.point);
    return;
  }
  for (const auto& c : t.children) collect(c, out);
}

}  // namespace

IndexSet MModuleTree::leafSet() const {
  IndexSet out;
  collect(*this, out);
  std::sort(out.begin(), out.end());
  return out;
}

int MModuleTree::firstLeaf() const {
  const MModuleTree* t = this;
  while (!t->isLeaf()) t = &t->children.front();
  return t->point;
}

int MModuleTree::size() const {
  if (isLeaf()) return 1;
  int total = 0;
  for (const auto& c : children) total += c.size();
  return total;
}

MModuleTree makeCup(std::vector<MModuleTree> children) {
  if (children.size() == 1) return std::move(children.front());
  if (children.size() == 2) return MModuleTree::cap(std::move(children));
  return MModuleTree::cup(std::move(children));
}

namespace {

class MModuleBuilder {
 public:
  MModuleBuilder(const DissimilarityMatrix& m, TreeArena arena)
      : m_(m), arena_(std::move(arena)), comp_(m.size(), -1) {}

  MModuleTree build(int node) {
    if (arena_.isLeaf(node)) return MModuleTree::leaf(arena_.nodes[node].point);

    const Weight rho = arena_.nodes[node].weight;
    const std::vector<int> comps = arena_.nodes[node].children;
    const int k = static_cast<int>(comps.size());

    std::vector<IndexSet> leaves(k);
    IndexSet all;
    for (int i = 0; i < k; ++i) {
      leaves[i] = arena_.leafSet(comps[i]);
      for (int x : leaves[i]) comp_[x] = i;
      all.insert(all.end(), leaves[i].begin(), leaves[i].end());
    }

    std::vector<char> notRho(k, 0);
    std::vector<char> farther(static_cast<std::size_t>(k) * k, 0);
    for (std::size_t a = 0; a < all.size(); ++a) {
      for (std::size_t b = a + 1; b < all.size(); ++b) {
        const int ca = comp_[all[a]];
        const int cb = comp_[all[b]];
        if (ca == cb) continue;
        const Weight w = m_(all[a], all[b]);
        if (w == rho) continue;
        notRho[ca] = notRho[cb] = 1;
        if (w > rho) farther[ca * k + cb] = farther[cb * k + ca] = 1;
      }
    }

    std::vector<int> inI;
    std::vector<int> inJ;
    for (int i = 0; i < k; ++i) (notRho[i] ? inI : inJ).push_back(i);

    if (inI.empty()) {
      std::vector<MModuleTree> children;
      for (int c : comps) children.push_back(build(c));
      return MModuleTree::cap(std::move(children));
    }
    if (inJ.empty()) return connected(rho, comps, leaves);
    return largeComponent(rho, comps, inI, inJ, farther);
  }

 private:
  MModuleTree connected(Weight rho, const std::vector<int>& comps,
                        const std::vector<IndexSet>& leaves) {
    const int k = static_cast<int>(comps.size());
    int c1 = 0;
    for (int i = 1; i < k; ++i) {
      if (leaves[i].size() < leaves[c1].size() ||
          (leaves[i].size() == leaves[c1].size() && leaves[i].front() < leaves[c1].front()))
        c1 = i;
    }
    std::vector<int> others;
    for (int i = 0; i < k; ++i)
      if (i != c1) others.push_back(comps[i]);
    const int rest = others.size() == 1 ? others.front() : arena_.addNode(rho, others);

    const std::vector<int> parts = stableTrees(m_, arena_, {comps[c1], rest});
    const int l = static_cast<int>(parts.size());
    std::vector<IndexSet> sets(l);
    for (int t = 0; t < l; ++t) sets[t] = arena_.leafSet(parts[t]);
    auto dist = [&](int a, int b) { return m_(sets[a].front(), sets[b].front()); };

    int partner = -1;
    if (sets[0].size() == leaves[c1].size()) {
      for (int j = 1; j < l; ++j) {
        if (dist(0, j) != rho) continue;
        bool ok = true;
        for (int h = 1; h < l && ok; ++h)
          if (h != j && dist(0, h) != dist(j, h)) ok = false;
        if (!ok) continue;
        if (partner >= 0)
          throw Error(Errc::NotRobinson, "dwarf component has two partners", sets[0]);
        partner = j;
      }
    }

    std::vector<MModuleTree> children;
    if (partner < 0) {
      for (int t : parts) children.push_back(build(t));
      return makeCup(std::move(children));
    }
    const int giant = parts[partner];
    int merged;
    if (!arena_.isLeaf(giant) && arena_.nodes[giant].weight == rho) {
      std::vector<int> ch = arena_.nodes[giant].children;
      ch.push_back(parts[0]);
      merged = arena_.addNode(rho, std::move(ch));
    } else {
      merged = arena_.addNode(rho, {parts[0], giant});
    }
    children.push_back(build(merged));
    for (int h = 1; h < l; ++h)
      if (h != partner) children.push_back(build(parts[h]));
    return makeCup(std::move(children));
  }

  MModuleTree largeComponent(Weight rho, const std::vector<int>& comps,
                             const std::vector<int>& inI, const std::vector<int>& inJ,
                             const std::vector<char>& farther) {
    const int k = static_cast<int>(comps.size());
    // Two-colour the graph H on I; it must be connected and bipartite.
    std::vector<int> colour(k, -1);
    std::vector<int> queue{inI.front()};
    colour[inI.front()] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int v : inI) {
        if (!farther[u * k + v]) continue;
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          throw Error(Errc::NotRobinson, "components at distance above rho form an odd cycle");
        }
      }
    }
    if (queue.size() != inI.size())
      throw Error(Errc::NotRobinson, "large component graph is disconnected");

    std::vector<int> lower;
    std::vector<int> upper;
    for (int i : inI) (colour[i] == 0 ? lower : upper).push_back(comps[i]);
    auto join = [&](const std::vector<int>& ids) {
      return ids.size() == 1 ? ids.front() : arena_.addNode(rho, ids);
    };
    const int lowerTree = join(lower);
    const int upperTree = join(upper);
    const std::vector<int> parts = stableTrees(m_, arena_, {lowerTree, upperTree});

    std::vector<MModuleTree> children;
    for (int j : inJ) children.push_back(build(comps[j]));
    std::vector<MModuleTree> large;
    for (int t : parts) large.push_back(build(t));
    if (parts.size() == 2)
      children.push_back(MModuleTree::cap(std::move(large)));
    else
      children.push_back(makeCup(std::move(large)));
    const int largeIndex = static_cast<int>(children.size()) - 1;
    return MModuleTree::specialCap(std::move(children), rho, largeIndex);
  }

  const DissimilarityMatrix& m_;
  TreeArena arena_;
  std::vector<int> comp_;
};

}  // namespace

MModuleTree mmoduleTree(const DissimilarityMatrix& m, const IndexSet& subset) {
  if (subset.empty()) throw Error(Errc::EmptySubset, "mmodule tree of an empty set");
  Dendrogram dend = buildDendrogram(m, subset);
  MModuleBuilder builder(m, dend.arena());
  return builder.build(dend.root());
}

std::vector<IndexSet> maximalMModules(const DissimilarityMatrix& m, const IndexSet& subset) {
  if (subset.size() < 2) throw Error(Errc::SubsetTooSmall, "maximal mmodules need two points");
  const MModuleTree tree = mmoduleTree(m, subset);
  std::vector<IndexSet> out;
  for (const auto& c : tree.children) {
    IndexSet leaves = c.leafSet();
    out.push_back(tree.kind == MModuleTree::Kind::Cup ? leaves : setDifference(subset, leaves));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Pertinent {
  std::size_t target;
  const std::vector<char>& member;
  bool found = false;
  bool answer = false;

  // Returns (candidate leaves below, leaves below).
  std::pair<std::size_t, std::size_t> visit(const MModuleTree& t) {
    if (t.isLeaf()) return {member[t.point] ? 1u : 0u, 1u};
    std::size_t hits = 0;
    std::size_t size = 0;
    std::vector<std::pair<std::size_t, std::size_t>> sub;
    for (const auto& c : t.children) {
      auto r = visit(c);
      if (found) return {0, 0};
      hits += r.first;
      size += r.second;
      sub.push_back(r);
    }
    if (hits == target) {
      found = true;
      answer = hits == size;
      if (!answer && t.kind == MModuleTree::Kind::Cap) {
        answer = std::all_of(sub.begin(), sub.end(),
                             [](auto r) { return r.first == 0 || r.first == r.second; });
      }
    }
    return {hits, size};
  }
};

}  // namespace

bool isMModuleViaTree(const MModuleTree& tree, const IndexSet& candidate) {
  if (candidate.size() <= 1) return true;
  const int maxPoint = std::max(candidate.back(), tree.leafSet().back());
  std::vector<char> member(maxPoint + 1, 0);
  for (int x : candidate) member[x] = 1;
  Pertinent search{candidate.size(), member};
  search.visit(tree);
  return search.answer;
}

MModuleTree canonicalMModuleTree(const MModuleTree& tree) {
  if (tree.isLeaf()) return tree;
  std::vector<MModuleTree> children;
  for (const auto& c : tree.children) children.push_back(canonicalMModuleTree(c));
  std::vector<int> idx(children.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return children[a].firstLeaf() < children[b].firstLeaf();
  });
  MModuleTree out = tree;
  out.children.clear();
  out.largeChild = -1;
  for (std::size_t t = 0; t < idx.size(); ++t) {
    if (idx[t] == tree.largeChild) out.largeChild = static_cast<int>(t);
    out.children.push_back(std::move(children[idx[t]]));
  }
  return out;
}

namespace {

bool sameCanonical(const MModuleTree& a, const MModuleTree& b) {
  if (a.kind != b.kind || a.point != b.point || a.special != b.special ||
      a.largeChild != b.largeChild || a.children.size() != b.children.size())
    return false;
  for (std::size_t t = 0; t < a.children.size(); ++t)
    if (!sameCanonical(a.children[t], b.children[t])) return false;
  return true;
}

}  // namespace

bool sameMModuleTree(const MModuleTree& a, const MModuleTree& b) {
  return sameCanonical(canonicalMModuleTree(a), canonicalMModuleTree(b));
}

}  // namespace robinson
