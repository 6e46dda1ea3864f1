#include "robinson/refine.hpp"

#include <algorithm>
#include <map>

namespace robinson {

namespace {

// Pivot queues Z(B) as persistent singly linked lists. After a split into
// B_1..B_m, each Z(B_i) is one chunk over the shared list B_1..B_m skipping
// B_i, followed by the shared tail Z \ {q}.
class PivotQueues {
 public:
  explicit PivotQueues(std::vector<IndexSet>& blocks) : blocks_(blocks) {}

  // Position inside a persistent list of chunks; chunk < 0 is the end.
  struct Cursor {
    int chunk = -1;
    int member = 0;
    int offset = 0;
    bool empty() const { return chunk < 0; }
  };

  int front(Cursor c) const {
    return blocks_[groups_[chunks_[c.chunk].group][c.member]][c.offset];
  }

  Cursor popFront(Cursor c) const {
    const Chunk& chunk = chunks_[c.chunk];
    if (c.offset + 1 < static_cast<int>(blocks_[groups_[chunk.group][c.member]].size()))
      return {c.chunk, c.member, c.offset + 1};
    return settle(c.chunk, c.member + 1);
  }

  // A list of block ids shared by the queues of its members.
  int addGroup(std::vector<int> ids) {
    groups_.push_back(std::move(ids));
    return static_cast<int>(groups_.size()) - 1;
  }

  // Blocks of group without its member skip, followed by tail.
  Cursor concatenate(int group, int skip, Cursor tail) {
    chunks_.push_back(Chunk{group, skip, tail});
    return settle(static_cast<int>(chunks_.size()) - 1, 0);
  }

 private:
  struct Chunk {
    int group;
    int skip;
    Cursor next;
  };

  Cursor settle(int chunk, int member) const {
    const Chunk& c = chunks_[chunk];
    const auto& ids = groups_[c.group];
    for (; member < static_cast<int>(ids.size()); ++member)
      if (member != c.skip && !blocks_[ids[member]].empty()) return {chunk, member, 0};
    return c.next;
  }

  std::vector<IndexSet>& blocks_;
  std::vector<std::vector<int>> groups_;
  std::vector<Chunk> chunks_;
};

bool constantFrom(const DissimilarityMatrix& m, int q, const IndexSet& cls) {
  const Weight first = m(cls.front(), q);
  for (int x : cls)
    if (m(x, q) != first) return false;
  return true;
}

OrderedPartition splitByPivot(const DissimilarityMatrix& m, int q, const IndexSet& cls) {
  std::map<Weight, IndexSet> byDistance;
  for (int x : cls) byDistance[m(x, q)].push_back(x);
  OrderedPartition out;
  out.reserve(byDistance.size());
  for (auto& [w, part] : byDistance) out.push_back(std::move(part));
  return out;
}

void checkPartition(const IndexSet& subset, const std::vector<IndexSet>& classes) {
  std::vector<int> all;
  for (const auto& c : classes) all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end());
  if (all != subset) throw Error(Errc::NotAPartition, "classes do not partition the subset");
}

class TreePivot {
 public:
  TreePivot(const DissimilarityMatrix& m, TreeArena& arena) : m_(m), arena_(arena) {}

  const std::vector<int>& run(int q, int root) {
    q_ = q;
    if (value_.size() < arena_.nodes.size()) {
      value_.resize(arena_.nodes.size() * 2);
      constant_.resize(arena_.nodes.size() * 2, 0);
    }
    evaluate(root);
    out_.clear();
    split(root, out_);
    return out_;
  }

 private:
  void evaluate(int id) {
    const auto& node = arena_.nodes[id];
    if (node.point >= 0) {
      if (node.point == q_)
        throw Error(Errc::PivotIsLeaf, "pivot is a leaf of the tree", {q_});
      constant_[id] = 1;
      value_[id] = m_(node.point, q_);
      return;
    }
    bool constant = true;
    std::optional<Weight> value;
    for (int c : node.children) {
      evaluate(c);
      if (!constant_[c])
        constant = false;
      else if (!value)
        value = value_[c];
      else if (*value != value_[c])
        constant = false;
    }
    constant_[id] = constant;
    if (constant) value_[id] = *value;
  }

  void split(int id, std::vector<int>& out) {
    if (constant_[id]) {
      out.push_back(id);
      return;
    }
    const std::vector<int> children = arena_.nodes[id].children;
    const Weight weight = arena_.nodes[id].weight;
    std::map<Weight, std::vector<int>> groups;
    for (int c : children) {
      if (constant_[c])
        groups[value_[c]].push_back(c);
      else
        split(c, out);
    }
    for (auto& [w, group] : groups) {
      if (group.size() == 1)
        out.push_back(group.front());
      else
        out.push_back(arena_.addNode(weight, std::move(group)));
    }
  }

  const DissimilarityMatrix& m_;
  TreeArena& arena_;
  int q_ = -1;
  std::vector<Weight> value_;
  std::vector<char> constant_;
  std::vector<int> out_;
};

// Vote of reference point z on whether x should precede y, both at distance
// delta from p: +1 for x first, -1 for y first, 0 when z says nothing. The
// vote only has to hold in compatible orders placing x and y on the same side
// of p; there, a point at distance above the larger of d(z,p) and delta from
// x or y lies on the other side, and a far point nearer to x or y than to p
// lies beyond both.
int tieVote(const DissimilarityMatrix& m, int p, int z, int x, int y, Weight delta) {
  const Weight zx = m(x, z);
  const Weight zy = m(y, z);
  if (zx == zy) return 0;
  const Weight zp = m(p, z);
  const Weight bound = std::max(zp, delta);
  if (zp < delta || zx > bound || zy > bound) return zx < zy ? 1 : -1;
  if (zp > delta && (zx < zp || zy < zp)) return zx > zy ? 1 : -1;
  return 0;
}

// Reorders copoints at equal distance from p so that, in every compatible
// order, no copoint lies between p and an earlier one. Pairs on opposite
// sides of p (d(x,y) > delta) are left unconstrained.
void orderTies(const DissimilarityMatrix& m, CopointPartition& cp) {
  auto& cls = cp.classes;
  const int p = cp.p;
  const std::size_t k = cls.size();
  std::size_t start = 1;
  while (start < k) {
    const Weight delta = m(p, cls[start].front());
    std::size_t end = start + 1;
    while (end < k && m(p, cls[end].front()) == delta) ++end;
    const std::size_t g = end - start;
    if (g > 1) {
      std::vector<int> rep(g);
      for (std::size_t a = 0; a < g; ++a) rep[a] = cls[start + a].front();
      // rel[a][b] = 1: a precedes b whenever both lie on the same side of p.
      std::vector<std::vector<int>> rel(g, std::vector<int>(g, 0));
      auto settle = [&](std::size_t a, std::size_t b, int forward, int backward) {
        if (forward > 0 && backward == 0) {
          rel[a][b] = 1;
          rel[b][a] = -1;
          return true;
        }
        if (backward > 0 && forward == 0) {
          rel[a][b] = -1;
          rel[b][a] = 1;
          return true;
        }
        return false;
      };
      for (std::size_t a = 0; a < g; ++a) {
        for (std::size_t b = a + 1; b < g; ++b) {
          const int x = rep[a];
          const int y = rep[b];
          if (m(x, y) > delta) continue;
          int forward = 0;
          int backward = 0;
          for (std::size_t c = 0; c < k; ++c) {
            if (c == start + a || c == start + b) continue;
            const int v = tieVote(m, p, cls[c].front(), x, y, delta);
            forward += v > 0;
            backward += v < 0;
          }
          settle(a, b, forward, backward);
        }
      }
      // Tie members already placed before or beyond both points of a pair
      // act as pivots for it.
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t a = 0; a < g; ++a) {
          for (std::size_t b = a + 1; b < g; ++b) {
            const int x = rep[a];
            const int y = rep[b];
            if (rel[a][b] != 0 || m(x, y) > delta) continue;
            int forward = 0;
            int backward = 0;
            for (std::size_t c = 0; c < g; ++c) {
              if (c == a || c == b) continue;
              const Weight zx = m(rep[c], x);
              const Weight zy = m(rep[c], y);
              if (zx == zy || (zx >= delta && zy >= delta)) continue;
              int v = 0;
              if (rel[a][c] == 1 && rel[b][c] == 1) v = zx > zy ? 1 : -1;
              if (rel[a][c] == -1 && rel[b][c] == -1) v = zx < zy ? 1 : -1;
              forward += v > 0;
              backward += v < 0;
            }
            changed |= settle(a, b, forward, backward);
          }
        }
      }
      std::vector<std::vector<std::size_t>> succ(g);
      std::vector<int> indegree(g, 0);
      for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b)
          if (rel[a][b] == 1) {
            succ[a].push_back(b);
            ++indegree[b];
          }
      // Kahn's algorithm, smallest original position first.
      std::vector<std::size_t> order;
      std::vector<char> done(g, 0);
      while (order.size() < g) {
        std::size_t pick = g;
        for (std::size_t a = 0; a < g && pick == g; ++a)
          if (!done[a] && indegree[a] == 0) pick = a;
        if (pick == g)
          for (std::size_t a = 0; a < g && pick == g; ++a)
            if (!done[a]) pick = a;
        done[pick] = 1;
        order.push_back(pick);
        for (std::size_t b : succ[pick]) --indegree[b];
      }
      std::vector<IndexSet> group;
      for (std::size_t a : order) group.push_back(std::move(cls[start + a]));
      std::move(group.begin(), group.end(), cls.begin() + static_cast<std::ptrdiff_t>(start));
    }
    start = end;
  }
}

}  // namespace

OrderedPartition refineByPivot(const DissimilarityMatrix& m, int q, const IndexSet& cls) {
  if (std::binary_search(cls.begin(), cls.end(), q))
    throw Error(Errc::PivotInsideClass, "pivot belongs to the class", {q});
  return splitByPivot(m, q, cls);
}

OrderedPartition stablePartition(const DissimilarityMatrix& m, const IndexSet& subset,
                                 const OrderedPartition& initial) {
  checkPartition(subset, initial);
  std::vector<IndexSet> blocks;
  std::vector<int> initialIds;
  for (const auto& c : initial) {
    if (c.empty()) continue;
    initialIds.push_back(static_cast<int>(blocks.size()));
    blocks.push_back(c);
  }
  PivotQueues queues(blocks);

  struct Frame {
    int block;
    PivotQueues::Cursor z;
  };
  OrderedPartition out;
  std::vector<Frame> stack;
  const int initialGroup = queues.addGroup(initialIds);
  for (std::size_t i = 0; i < initialIds.size(); ++i) {
    stack.push_back(Frame{initialIds[i], queues.concatenate(initialGroup, static_cast<int>(i), {})});
    while (!stack.empty()) {
      const Frame f = stack.back();
      stack.pop_back();
      if (f.z.empty() || blocks[f.block].size() == 1) {
        out.push_back(blocks[f.block]);
        continue;
      }
      const int q = queues.front(f.z);
      const PivotQueues::Cursor rest = queues.popFront(f.z);
      if (constantFrom(m, q, blocks[f.block])) {
        stack.push_back(Frame{f.block, rest});
        continue;
      }
      OrderedPartition parts = splitByPivot(m, q, blocks[f.block]);
      if (parts.size() == 1) {
        stack.push_back(Frame{f.block, rest});
        continue;
      }
      std::vector<int> ids;
      for (auto& part : parts) {
        ids.push_back(static_cast<int>(blocks.size()));
        blocks.push_back(std::move(part));
      }
      const int group = queues.addGroup(ids);
      for (std::size_t t = ids.size(); t-- > 0;)
        stack.push_back(Frame{ids[t], queues.concatenate(group, static_cast<int>(t), rest)});
    }
  }
  return out;
}

CopointPartition copointPartition(const DissimilarityMatrix& m, const IndexSet& subset, int p) {
  if (!std::binary_search(subset.begin(), subset.end(), p))
    throw Error(Errc::NotAPartition, "p is not in the subset", {p});
  CopointPartition cp;
  cp.p = p;
  cp.classes = stablePartition(m, subset, {IndexSet{p}, setDifference(subset, IndexSet{p})});
  orderTies(m, cp);
  return cp;
}

std::vector<int> pivotTree(const DissimilarityMatrix& m, int q, TreeArena& arena, int root) {
  TreePivot pivot(m, arena);
  return pivot.run(q, root);
}

std::vector<int> stableTrees(const DissimilarityMatrix& m, TreeArena& arena,
                             const std::vector<int>& roots) {
  std::vector<IndexSet> blocks;
  std::vector<int> ids;
  std::vector<int> all;
  for (int r : roots) {
    ids.push_back(static_cast<int>(blocks.size()));
    blocks.push_back(arena.leafSet(r));
    all.insert(all.end(), blocks.back().begin(), blocks.back().end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw Error(Errc::NotAPartition, "trees share a leaf");

  PivotQueues queues(blocks);
  TreePivot pivot(m, arena);
  struct Frame {
    int tree;
    int block;
    PivotQueues::Cursor z;
  };
  std::vector<int> out;
  std::vector<Frame> stack;
  const int initialGroup = queues.addGroup(ids);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    stack.push_back(Frame{roots[i], ids[i], queues.concatenate(initialGroup, static_cast<int>(i), {})});
    while (!stack.empty()) {
      const Frame f = stack.back();
      stack.pop_back();
      if (f.z.empty() || arena.isLeaf(f.tree)) {
        out.push_back(f.tree);
        continue;
      }
      const int q = queues.front(f.z);
      const PivotQueues::Cursor rest = queues.popFront(f.z);
      const std::vector<int>& parts = pivot.run(q, f.tree);
      if (parts.size() == 1) {
        stack.push_back(Frame{parts.front(), f.block, rest});
        continue;
      }
      std::vector<int> partBlocks;
      for (int t : parts) {
        partBlocks.push_back(static_cast<int>(blocks.size()));
        blocks.push_back(arena.leafSet(t));
      }
      const int group = queues.addGroup(partBlocks);
      for (std::size_t t = parts.size(); t-- > 0;)
        stack.push_back(Frame{parts[t], partBlocks[t], queues.concatenate(group, static_cast<int>(t), rest)});
    }
  }
  return out;
}

}  // namespace robinson
