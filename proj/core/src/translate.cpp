#include "robinson/translate.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "robinson/copoints.hpp"

namespace robinson {

MModuleTree pqToMModuleTree(const DissimilarityMatrix& m, const PQTree& tree) {
  if (tree.isLeaf()) return MModuleTree::leaf(tree.point);
  if (tree.kind == PQTree::Kind::P) {
    std::vector<MModuleTree> children;
    for (const auto& c : tree.children) children.push_back(pqToMModuleTree(m, c));
    return MModuleTree::cap(std::move(children));
  }
  const NodeClassification cls = conicalApex(m, tree);
  if (!cls.delta) {
    std::vector<MModuleTree> children;
    for (const auto& c : tree.children) children.push_back(pqToMModuleTree(m, c));
    return MModuleTree::cup(std::move(children));
  }
  const Weight delta = *cls.delta;
  std::vector<MModuleTree> rest;
  for (std::size_t i = 0; i < tree.children.size(); ++i)
    if (static_cast<int>(i) != cls.apex) rest.push_back(pqToMModuleTree(m, tree.children[i]));
  std::vector<MModuleTree> children;
  children.push_back(makeCup(std::move(rest)));
  const PQTree& apex = tree.children[cls.apex];
  const auto inner = treeDeltaStar(m, apex);
  if (!inner || *inner < delta) {
    children.push_back(pqToMModuleTree(m, apex));
  } else {
    for (const auto& g : apex.children) children.push_back(pqToMModuleTree(m, g));
  }
  return MModuleTree::specialCap(std::move(children), delta, 0);
}

std::size_t findBipartition(const DissimilarityMatrix& m, Weight delta,
                            const std::vector<PQTree>& children) {
  const std::size_t l = children.size();
  std::size_t i0 = 0;
  for (std::size_t i = 1; i < l; ++i)
    if (treeDistance(m, children[i - 1], children[l - 1]) > delta) i0 = i;
  if (i0 == 0) throw Error(Errc::NoBipartition, "no child far from the last one");
  for (std::size_t i = i0; i < l; ++i)
    if (treeDistance(m, children[i - 1], children[i]) >= delta) return i;
  throw Error(Errc::NoBipartition, "no separating gap in the large mmodule");
}

PQTree mmoduleToPqTree(const DissimilarityMatrix& m, const MModuleTree& tree) {
  if (tree.isLeaf()) return PQTree::leaf(tree.point);
  std::vector<PQTree> children;
  for (const auto& c : tree.children) children.push_back(mmoduleToPqTree(m, c));

  if (tree.kind == MModuleTree::Kind::Cup) {
    IndexSet reps;
    std::unordered_map<int, std::size_t> owner;
    for (std::size_t i = 0; i < children.size(); ++i) {
      reps.push_back(children[i].firstLeaf());
      owner[reps.back()] = i;
    }
    std::sort(reps.begin(), reps.end());
    const PQTree flat = pqTree2(m, reps);
    if (flat.kind != PQTree::Kind::Q || flat.children.size() != reps.size())
      throw Error(Errc::NotRobinson, "quotient by maximal mmodules is not flat", reps);
    std::vector<PQTree> ordered;
    for (int x : canonicalOrder(flat)) ordered.push_back(std::move(children[owner.at(x)]));
    return makeQ(m, std::move(ordered));
  }

  const Weight delta = treeDistance(m, children[0], children[1]);
  std::size_t large = children.size();
  for (std::size_t i = 0; i < children.size(); ++i)
    if (treeDiameter(m, children[i]) > delta) large = i;
  if (large == children.size()) return makeP(m, std::move(children));

  PQTree big = std::move(children[large]);
  children.erase(children.begin() + static_cast<std::ptrdiff_t>(large));
  if (big.kind == PQTree::Kind::P && big.children.size() != 2)
    throw Error(Errc::NotRobinson, "large child has a P root of arity above two", big.leafSet());
  std::vector<PQTree> gammas = std::move(big.children);
  const std::size_t j = findBipartition(m, delta, gammas);
  PQTree apex = children.size() == 1 ? std::move(children.front()) : makeP(m, std::move(children));
  gammas.insert(gammas.begin() + static_cast<std::ptrdiff_t>(j), std::move(apex));
  return makeQ(m, std::move(gammas));
}

namespace {

enum class NodeKind { P, ConicalQ, FlatQ, Cap, SpecialCap, Cup };

void pqNodes(const DissimilarityMatrix& m, const PQTree& t, bool splitChild,
             std::map<IndexSet, std::pair<NodeKind, bool>>& out) {
  if (t.isLeaf()) return;
  NodeClassification cls;
  NodeKind kind = NodeKind::P;
  if (t.kind == PQTree::Kind::Q) {
    cls = conicalApex(m, t);
    kind = cls.delta ? NodeKind::ConicalQ : NodeKind::FlatQ;
  }
  out[t.leafSet()] = {kind, splitChild};
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    bool split = false;
    if (cls.delta && static_cast<int>(i) == cls.apex && !t.children[i].isLeaf())
      split = deltaGraphComponents(m, t.children[i].leafSet(), *cls.delta).size() > 1;
    pqNodes(m, t.children[i], split, out);
  }
}

void mtNodes(const MModuleTree& t, bool largeChild,
             std::map<IndexSet, std::pair<NodeKind, bool>>& out) {
  if (t.isLeaf()) return;
  NodeKind kind = NodeKind::Cup;
  if (t.kind == MModuleTree::Kind::Cap) kind = t.special ? NodeKind::SpecialCap : NodeKind::Cap;
  out[t.leafSet()] = {kind, largeChild};
  for (std::size_t i = 0; i < t.children.size(); ++i)
    mtNodes(t.children[i], t.special && static_cast<int>(i) == t.largeChild, out);
}

bool kindsMatch(NodeKind pq, NodeKind mt) {
  return (pq == NodeKind::P && mt == NodeKind::Cap) ||
         (pq == NodeKind::FlatQ && mt == NodeKind::Cup) ||
         (pq == NodeKind::ConicalQ && mt == NodeKind::SpecialCap);
}

}  // namespace

CorrespondenceReport nodeCorrespondence(const DissimilarityMatrix& m, const PQTree& pq,
                                        const MModuleTree& mt) {
  std::map<IndexSet, std::pair<NodeKind, bool>> a;
  std::map<IndexSet, std::pair<NodeKind, bool>> b;
  pqNodes(m, pq, false, a);
  mtNodes(mt, false, b);
  CorrespondenceReport report;
  for (const auto& [set, info] : a) {
    const auto it = b.find(set);
    if (it == b.end()) {
      if (!info.second)
        throw Error(Errc::CorrespondenceViolation, "PQ node without mmodule counterpart", set);
      report.unmatchedPq.push_back(set);
      continue;
    }
    if (info.second || it->second.second)
      throw Error(Errc::CorrespondenceViolation, "split or large node matched", set);
    if (!kindsMatch(info.first, it->second.first))
      throw Error(Errc::CorrespondenceViolation, "matched nodes have different kinds", set);
    ++report.matched;
  }
  for (const auto& [set, info] : b) {
    if (a.count(set)) continue;
    if (!info.second)
      throw Error(Errc::CorrespondenceViolation, "mmodule node without PQ counterpart", set);
    report.unmatchedMModule.push_back(set);
  }
  return report;
}

}  // namespace robinson
