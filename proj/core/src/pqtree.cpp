#include "robinson/pqtree.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "robinson/copoints.hpp"
#include "robinson/mmodtree.hpp"

namespace robinson {

PQTree PQTree::leaf(int point) {
  PQTree t;
  t.point = point;
  return t;
}

PQTree PQTree::p(std::vector<PQTree> children) {
  PQTree t;
  t.kind = Kind::P;
  t.children = std::move(children);
  return t;
}

PQTree PQTree::q(std::vector<PQTree> children) {
  PQTree t;
  t.kind = Kind::Q;
  t.children = std::move(children);
  return t;
}

namespace {

void appendLeaves(const PQTree& t, Order& out) {
  if (t.isLeaf()) {
    out.push_back(t.point);
    return;
  }
  for (const auto& c : t.children) appendLeaves(c, out);
}

int minLeaf(const PQTree& t) {
  if (t.isLeaf()) return t.point;
  int best = minLeaf(t.children.front());
  for (std::size_t i = 1; i < t.children.size(); ++i) best = std::min(best, minLeaf(t.children[i]));
  return best;
}

}  // namespace

IndexSet PQTree::leafSet() const {
  Order out;
  appendLeaves(*this, out);
  std::sort(out.begin(), out.end());
  return out;
}

int PQTree::firstLeaf() const {
  const PQTree* t = this;
  while (!t->isLeaf()) t = &t->children.front();
  return t->point;
}

int PQTree::lastLeaf() const {
  const PQTree* t = this;
  while (!t->isLeaf()) t = &t->children.back();
  return t->point;
}

Order canonicalOrder(const PQTree& tree) {
  Order out;
  appendLeaves(tree, out);
  return out;
}

BigCount countOrders(const PQTree& tree) {
  if (tree.isLeaf()) return 1;
  BigCount total = 1;
  for (const auto& c : tree.children) total *= countOrders(c);
  if (tree.kind == PQTree::Kind::Q) return total * 2;
  for (std::size_t k = 2; k <= tree.children.size(); ++k) total *= k;
  return total;
}

namespace {

// All orders obtained by concatenating one order of each child, in sequence.
std::vector<Order> concatenations(const std::vector<const std::vector<Order>*>& parts) {
  std::vector<Order> acc{Order{}};
  for (const auto* part : parts) {
    std::vector<Order> next;
    next.reserve(acc.size() * part->size());
    for (const auto& prefix : acc) {
      for (const auto& suffix : *part) {
        Order o = prefix;
        o.insert(o.end(), suffix.begin(), suffix.end());
        next.push_back(std::move(o));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

std::vector<Order> ordersOf(const PQTree& t) {
  if (t.isLeaf()) return {Order{t.point}};
  std::vector<std::vector<Order>> sub;
  for (const auto& c : t.children) sub.push_back(ordersOf(c));
  std::vector<int> arrangement(sub.size());
  std::iota(arrangement.begin(), arrangement.end(), 0);
  std::vector<Order> out;
  auto emit = [&] {
    std::vector<const std::vector<Order>*> parts;
    for (int i : arrangement) parts.push_back(&sub[i]);
    auto orders = concatenations(parts);
    out.insert(out.end(), std::make_move_iterator(orders.begin()),
               std::make_move_iterator(orders.end()));
  };
  if (t.kind == PQTree::Kind::Q) {
    emit();
    std::reverse(arrangement.begin(), arrangement.end());
    emit();
  } else {
    do emit();
    while (std::next_permutation(arrangement.begin(), arrangement.end()));
  }
  return out;
}

struct Span {
  int lo;
  int hi;
  int size;
  bool ok;
};

Span spanOf(const PQTree& t, const std::vector<int>& pos) {
  if (t.isLeaf()) return {pos[t.point], pos[t.point], 1, true};
  std::vector<Span> sub;
  Span s{1 << 30, -1, 0, true};
  for (const auto& c : t.children) {
    Span cs = spanOf(c, pos);
    if (!cs.ok) return cs;
    s.lo = std::min(s.lo, cs.lo);
    s.hi = std::max(s.hi, cs.hi);
    s.size += cs.size;
    sub.push_back(cs);
  }
  s.ok = s.hi - s.lo + 1 == s.size;
  if (s.ok && t.kind == PQTree::Kind::Q) {
    bool up = true;
    bool down = true;
    for (std::size_t i = 1; i < sub.size(); ++i) {
      up = up && sub[i - 1].lo < sub[i].lo;
      down = down && sub[i - 1].lo > sub[i].lo;
    }
    s.ok = up || down;
  }
  return s;
}

}  // namespace

std::vector<Order> enumerateOrders(const PQTree& tree, std::size_t cap) {
  if (countOrders(tree) > cap)
    throw Error(Errc::TooManyOrders, "represented orders exceed the cap");
  return ordersOf(tree);
}

bool representsOrder(const PQTree& tree, const Order& order) {
  IndexSet leaves = tree.leafSet();
  Order sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != leaves) return false;
  std::vector<int> pos(leaves.back() + 1, -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  return spanOf(tree, pos).ok;
}

PQTree normalForm(const PQTree& tree) {
  if (tree.isLeaf()) return tree;
  std::vector<PQTree> children;
  for (const auto& c : tree.children) children.push_back(normalForm(c));
  if (tree.kind == PQTree::Kind::P) {
    std::sort(children.begin(), children.end(),
              [](const PQTree& a, const PQTree& b) { return minLeaf(a) < minLeaf(b); });
  } else {
    std::vector<int> keys;
    for (const auto& c : children) keys.push_back(minLeaf(c));
    std::vector<int> reversed(keys.rbegin(), keys.rend());
    if (reversed < keys) std::reverse(children.begin(), children.end());
  }
  PQTree out = tree;
  out.children = std::move(children);
  return out;
}

bool equivalent(const PQTree& a, const PQTree& b) { return normalForm(a) == normalForm(b); }

Weight treeDistance(const DissimilarityMatrix& m, const PQTree& a, const PQTree& b) {
  return m(a.firstLeaf(), b.firstLeaf());
}

Weight treeDiameter(const DissimilarityMatrix& m, const PQTree& tree) {
  if (tree.isLeaf()) return Weight(0);
  if (tree.kind == PQTree::Kind::P) return treeDistance(m, tree.children[0], tree.children[1]);
  return m(tree.firstLeaf(), tree.lastLeaf());
}

NodeClassification conicalApex(const DissimilarityMatrix& m, const PQTree& node) {
  NodeClassification out;
  if (node.kind != PQTree::Kind::Q) return out;
  const auto& c = node.children;
  const std::size_t k = c.size();
  std::vector<int> rep(k);
  for (std::size_t i = 0; i < k; ++i) rep[i] = c[i].firstLeaf();
  for (std::size_t i = 1; i + 1 < k; ++i) {
    const Weight w = m(rep[0], rep[i]);
    if (m(rep[i - 1], rep[i]) == w && m(rep[i], rep[i + 1]) == w && m(rep[i], rep[k - 1]) == w) {
      out.delta = w;
      out.apex = static_cast<int>(i);
      return out;
    }
  }
  return out;
}

namespace {

void classifyInto(const DissimilarityMatrix& m, const PQTree& t,
                  std::vector<NodeClassification>& out) {
  if (t.isLeaf()) return;
  out.push_back(classify(m, t));
  for (const auto& c : t.children) classifyInto(m, c, out);
}

}  // namespace

NodeClassification classify(const DissimilarityMatrix& m, const PQTree& node) {
  NodeClassification out;
  if (node.isLeaf()) return out;
  if (node.kind == PQTree::Kind::P) {
    out.delta = treeDistance(m, node.children[0], node.children[1]);
    return out;
  }
  out = conicalApex(m, node);
  if (out.delta) {
    const IndexSet apexLeaves = node.children[out.apex].leafSet();
    out.split = deltaGraphComponents(m, apexLeaves, *out.delta).size() > 1;
  }
  return out;
}

std::vector<NodeClassification> classifyAll(const DissimilarityMatrix& m, const PQTree& tree) {
  std::vector<NodeClassification> out;
  classifyInto(m, tree, out);
  return out;
}

std::optional<Weight> treeDeltaStar(const DissimilarityMatrix& m, const PQTree& tree) {
  if (tree.isLeaf()) return std::nullopt;
  if (tree.kind == PQTree::Kind::P) return treeDistance(m, tree.children[0], tree.children[1]);
  return conicalApex(m, tree).delta;
}

PQTree makeP(const DissimilarityMatrix& m, std::vector<PQTree> children) {
  if (children.size() == 1) return std::move(children.front());
  const Weight cross = treeDistance(m, children[0], children[1]);
  std::vector<PQTree> flat;
  for (auto& c : children) {
    if (c.kind == PQTree::Kind::P && treeDistance(m, c.children[0], c.children[1]) == cross) {
      for (auto& g : c.children) flat.push_back(std::move(g));
    } else {
      flat.push_back(std::move(c));
    }
  }
  return PQTree::p(std::move(flat));
}

PQTree makeQ(const DissimilarityMatrix& m, std::vector<PQTree> children) {
  if (children.size() <= 2) return makeP(m, std::move(children));
  return PQTree::q(std::move(children));
}

PQTree normalize(const DissimilarityMatrix& m, const PQTree& tree) {
  if (tree.isLeaf()) return tree;
  std::vector<PQTree> children;
  for (const auto& c : tree.children) children.push_back(normalize(m, c));
  if (tree.kind == PQTree::Kind::P) return makeP(m, std::move(children));
  return makeQ(m, std::move(children));
}

std::optional<std::size_t> insertionIndex(const DissimilarityMatrix& m, Weight delta,
                                          const std::vector<PQTree>& children) {
  const std::size_t l = children.size();
  if (l < 2) return std::nullopt;
  const int last = children[l - 1].firstLeaf();
  for (std::size_t i = 1; i < l; ++i) {
    const Weight toLast = i + 1 == l ? Weight(0) : m(children[i].firstLeaf(), last);
    if (toLast <= delta && treeDistance(m, children[i - 1], children[i]) >= delta) return i;
  }
  return std::nullopt;
}

PQTree deltaPqTree(const DissimilarityMatrix& m, const IndexSet& subset) {
  if (subset.empty()) throw Error(Errc::EmptySubset, "PQ-tree of an empty set");
  if (subset.size() == 1) return PQTree::leaf(subset.front());

  const Weight rho = deltaStar(m, subset);
  const std::vector<IndexSet> comps = deltaGraphComponents(m, subset, rho);

  if (comps.size() == 1) {
    const std::vector<IndexSet> modules = maximalMModules(m, subset);
    IndexSet reps;
    std::unordered_map<int, std::size_t> owner;
    for (std::size_t i = 0; i < modules.size(); ++i) {
      reps.push_back(modules[i].front());
      owner[modules[i].front()] = i;
    }
    std::sort(reps.begin(), reps.end());
    const PQTree flat = pqTree2(m, reps);
    if (flat.kind != PQTree::Kind::Q || flat.children.size() != reps.size())
      throw Error(Errc::NotRobinson, "quotient by maximal mmodules is not flat");
    std::vector<PQTree> children;
    for (int x : canonicalOrder(flat)) children.push_back(deltaPqTree(m, modules[owner.at(x)]));
    return makeQ(m, std::move(children));
  }

  std::vector<PQTree> trees;
  for (const auto& c : comps) trees.push_back(deltaPqTree(m, c));
  std::size_t large = trees.size();
  for (std::size_t j = 0; j < trees.size(); ++j)
    if (treeDiameter(m, trees[j]) > rho) large = j;
  if (large == trees.size()) return makeP(m, std::move(trees));

  PQTree base = std::move(trees[large]);
  trees.erase(trees.begin() + static_cast<std::ptrdiff_t>(large));
  if (base.kind == PQTree::Kind::P && base.children.size() != 2)
    throw Error(Errc::NotRobinson, "large component has a P root of arity above two");
  const auto at = insertionIndex(m, rho, base.children);
  if (!at) throw Error(Errc::NotRobinson, "no admissible position for the apex");
  PQTree apex = trees.size() == 1 ? std::move(trees.front()) : makeP(m, std::move(trees));
  std::vector<PQTree> children = std::move(base.children);
  children.insert(children.begin() + static_cast<std::ptrdiff_t>(*at), std::move(apex));
  return makeQ(m, std::move(children));
}

}  // namespace robinson
