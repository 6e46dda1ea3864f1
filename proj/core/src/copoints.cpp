#include "robinson/copoints.hpp"

#include <algorithm>
#include <deque>

namespace robinson {

namespace {

int rep(const CopointPartition& cp, int i) { return cp.classes[i].front(); }

Weight dist(const DissimilarityMatrix& m, const CopointPartition& cp, int i, int j) {
  return m(rep(cp, i), rep(cp, j));
}

}  // namespace

FrontierFlags frontiers(const DissimilarityMatrix& m, const CopointPartition& cp) {
  const int k = static_cast<int>(cp.classes.size()) - 1;
  FrontierFlags flags(k + 1, 1);
  for (int jp = 1; jp <= k; ++jp) {
    const Weight toP = dist(m, cp, 0, jp);
    int j = 1;
    while (j < jp && dist(m, cp, j, jp) == toP) ++j;
    for (int t = j; t < jp; ++t) flags[t] = 0;
  }
  return flags;
}

FrontierSplit nextFrontier(const DissimilarityMatrix& m, const CopointPartition& cp, int k) {
  enum Side : char { None, Left, Right };
  std::vector<char> side(k + 1, None);
  std::deque<int> left;
  std::deque<int> right{k};
  side[k] = Right;
  auto place = [&](int j, Side s) {
    if (side[j] != None)
      throw Error(Errc::SideConflict, "copoint forced to both sides", cp.classes[j]);
    side[j] = s;
  };

  int i = k;
  for (int l = k; l >= i; --l) {
    const Weight toP = dist(m, cp, 0, l);
    for (int j = i - 1; j >= 1; --j) {
      const Weight w = dist(m, cp, j, l);
      const bool inL = side[l] == Left;
      const bool inR = side[l] == Right;
      if ((w < toP && inL) || (w > toP && inR)) {
        place(j, Left);
        left.push_front(j);
        for (int t = i - 1; t > j; --t) {
          place(t, Right);
          right.push_front(t);
        }
        i = j;
      } else if ((w < toP && inR) || (w > toP && inL)) {
        place(j, Right);
        right.push_front(j);
        for (int t = i - 1; t > j; --t) {
          place(t, Left);
          left.push_front(t);
        }
        i = j;
      }
    }
  }
  FrontierSplit out;
  out.left.assign(left.rbegin(), left.rend());
  out.frontier = i - 1;
  out.right.assign(right.begin(), right.end());
  return out;
}

std::size_t admissibleHole(const DissimilarityMatrix& m, Weight delta,
                           const std::vector<PQTree>& children) {
  const auto at = insertionIndex(m, delta, children);
  if (!at) throw Error(Errc::NoAdmissibleHole, "no admissible hole for the new apex");
  return *at;
}

PQTree copointsToPqTree(const DissimilarityMatrix& m, const CopointPartition& cp, int k) {
  const int p = cp.p;
  if (k == 0) return PQTree::leaf(p);
  const FrontierSplit fs = nextFrontier(m, cp, k);
  const int i = fs.frontier;
  PQTree tp = i > 0 ? copointsToPqTree(m, cp, i) : PQTree::leaf(p);

  if (i < k - 1) {
    std::vector<PQTree> children;
    for (int c : fs.left) children.push_back(pqTree2(m, cp.classes[c]));
    children.push_back(std::move(tp));
    for (int c : fs.right) children.push_back(pqTree2(m, cp.classes[c]));
    return makeQ(m, std::move(children));
  }

  PQTree alpha = pqTree2(m, cp.classes[k]);
  const Weight delta = m(p, rep(cp, k));
  const Weight diam = treeDiameter(m, alpha);

  if (alpha.kind == PQTree::Kind::P && diam == delta) {
    std::vector<PQTree> children = std::move(alpha.children);
    children.push_back(std::move(tp));
    return makeP(m, std::move(children));
  }
  if (alpha.isLeaf() || (alpha.kind == PQTree::Kind::P && diam < delta) ||
      (alpha.kind == PQTree::Kind::Q && diam <= delta)) {
    std::vector<PQTree> children;
    children.push_back(std::move(alpha));
    children.push_back(std::move(tp));
    return makeP(m, std::move(children));
  }
  if (alpha.kind == PQTree::Kind::P) {
    if (alpha.children.size() != 2)
      throw Error(Errc::NotRobinson, "far copoint has a P root of arity above two",
                  cp.classes[k]);
    std::vector<PQTree> children;
    children.push_back(std::move(alpha.children[0]));
    children.push_back(std::move(tp));
    children.push_back(std::move(alpha.children[1]));
    return makeQ(m, std::move(children));
  }

  std::vector<PQTree> children = std::move(alpha.children);
  const NodeClassification cls = conicalApex(m, PQTree::q(children));
  if (cls.delta && *cls.delta == delta) {
    PQTree& apex = children[cls.apex];
    if (apex.kind == PQTree::Kind::P && treeDiameter(m, apex) == delta) {
      std::vector<PQTree> gammas = std::move(apex.children);
      gammas.push_back(std::move(tp));
      apex = makeP(m, std::move(gammas));
    } else {
      std::vector<PQTree> pair;
      pair.push_back(std::move(apex));
      pair.push_back(std::move(tp));
      apex = makeP(m, std::move(pair));
    }
    return makeQ(m, std::move(children));
  }
  const std::size_t hole = admissibleHole(m, delta, children);
  children.insert(children.begin() + static_cast<std::ptrdiff_t>(hole), std::move(tp));
  return makeQ(m, std::move(children));
}

PQTree pqTree2(const DissimilarityMatrix& m, const IndexSet& subset) {
  if (subset.empty()) throw Error(Errc::EmptySubset, "PQ-tree of an empty set");
  if (subset.size() == 1) return PQTree::leaf(subset.front());
  const CopointPartition cp = copointPartition(m, subset, subset.front());
  return copointsToPqTree(m, cp, static_cast<int>(cp.classes.size()) - 1);
}

RecognitionResult recognizeRobinson(const DissimilarityMatrix& m) {
  validate(m);
  RecognitionResult out;
  try {
    out.tree = normalForm(pqTree2(m, m.all()));
  } catch (const Error& e) {
    out.reason = e.what();
    out.code = e.code();
    out.violation = e.witness();
    return out;
  }
  out.witness = canonicalOrder(*out.tree);
  if (const auto bad = findOrderViolation(m, out.witness)) {
    out.reason = "candidate order violates the Robinson condition";
    for (int pos : *bad) out.violation.push_back(out.witness[pos]);
    out.tree.reset();
    out.witness.clear();
    return out;
  }
  out.robinson = true;
  return out;
}

namespace {

template <class Tree>
bool pathTo(const Tree& t, int p, std::vector<const Tree*>& path) {
  path.push_back(&t);
  if (t.isLeaf()) {
    if (t.point == p) return true;
  } else {
    for (const auto& c : t.children)
      if (pathTo(c, p, path)) return true;
  }
  path.pop_back();
  return false;
}

}  // namespace

std::vector<IndexSet> copointsFromMModuleTree(const MModuleTree& tree, int p) {
  std::vector<const MModuleTree*> path;
  if (!pathTo(tree, p, path)) throw Error(Errc::NotALeaf, "point is not a leaf of the tree", {p});
  std::vector<IndexSet> out;
  for (std::size_t t = 0; t + 1 < path.size(); ++t) {
    const MModuleTree& alpha = *path[t];
    const MModuleTree* beta = path[t + 1];
    if (alpha.kind == MModuleTree::Kind::Cap) {
      out.push_back(setDifference(alpha.leafSet(), beta->leafSet()));
    } else {
      for (const auto& c : alpha.children)
        if (&c != beta) out.push_back(c.leafSet());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct BlockSearch {
  std::size_t target;
  const std::vector<char>& member;
  bool found = false;
  bool answer = false;

  std::pair<std::size_t, std::size_t> visit(const PQTree& t) {
    if (t.isLeaf()) {
      const bool hit = t.point < static_cast<int>(member.size()) && member[t.point];
      return {hit ? 1u : 0u, 1u};
    }
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
      if (!answer && t.kind == PQTree::Kind::Q) {
        std::size_t first = sub.size();
        std::size_t last = 0;
        bool whole = true;
        for (std::size_t i = 0; i < sub.size(); ++i) {
          if (sub[i].first == 0) continue;
          whole = whole && sub[i].first == sub[i].second;
          first = std::min(first, i);
          last = i;
        }
        bool contiguous = true;
        for (std::size_t i = first; i <= last; ++i) contiguous = contiguous && sub[i].first > 0;
        answer = whole && contiguous;
      }
    }
    return {hits, size};
  }
};

}  // namespace

bool isBlockOfTree(const PQTree& tree, const IndexSet& candidate) {
  if (candidate.size() <= 1) return true;
  std::vector<char> member(candidate.back() + 1, 0);
  for (int x : candidate) member[x] = 1;
  BlockSearch search{candidate.size(), member};
  search.visit(tree);
  return search.found && search.answer;
}

UpsilonReport upsilonFrontierCheck(const DissimilarityMatrix& m, const PQTree& tree, int p) {
  std::vector<const PQTree*> path;
  if (!pathTo(tree, p, path)) throw Error(Errc::NotALeaf, "point is not a leaf of the tree", {p});
  UpsilonReport report;
  for (std::size_t t = 0; t + 1 < path.size(); ++t) {
    const PQTree& node = *path[t];
    bool split = false;
    if (t > 0) {
      const PQTree& parent = *path[t - 1];
      const NodeClassification cls = conicalApex(m, parent);
      if (cls.delta && &parent.children[cls.apex] == &node)
        split = deltaGraphComponents(m, node.leafSet(), *cls.delta).size() > 1;
    }
    if (!split) report.standardNodes.push_back(node.leafSet());
  }

  const CopointPartition cp = copointPartition(m, tree.leafSet(), p);
  const FrontierFlags flags = frontiers(m, cp);
  IndexSet interval = cp.classes[0];
  for (std::size_t i = 1; i < cp.classes.size(); ++i) {
    interval = setUnion(interval, cp.classes[i]);
    if (flags[i] && isBlockOfTree(tree, interval)) report.frontierIntervals.push_back(interval);
  }

  std::vector<IndexSet> a = report.standardNodes;
  std::vector<IndexSet> b = report.frontierIntervals;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) {
    std::vector<IndexSet> diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(diff));
    throw Error(Errc::CorrespondenceViolation,
                "standard path nodes and frontier intervals disagree", diff.front());
  }
  return report;
}

}  // namespace robinson
