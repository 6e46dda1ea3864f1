#include "robinson/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <nlohmann/json.hpp>
#include <sstream>

namespace robinson {

using nlohmann::json;

namespace {

constexpr int kMaxScale = 18;

[[noreturn]] void parseFail(const std::string& what, int line = 0, int column = 0) {
  std::string where;
  if (line > 0) where = "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
  throw Error(Errc::ParseError, where + what,
              line > 0 ? std::vector<int>{line, column} : std::vector<int>{});
}

std::int64_t pow10(int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= 10;
  return r;
}

struct Token {
  std::string text;
  int line;
  int column;
};

// Splits a decimal literal into digits before and after the point.
bool splitDecimal(const std::string& s, std::string& whole, std::string& frac) {
  const auto dot = s.find('.');
  whole = s.substr(0, dot);
  frac = dot == std::string::npos ? "" : s.substr(dot + 1);
  if (whole.empty() && frac.empty()) return false;
  auto digits = [](const std::string& t) {
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  return digits(whole) && digits(frac);
}

// Returns false on overflow.
bool scaledValue(const std::string& whole, const std::string& frac, int scale, std::int64_t& out) {
  std::int64_t v = 0;
  auto push = [&v](char c) {
    return !__builtin_mul_overflow(v, 10, &v) && !__builtin_add_overflow(v, c - '0', &v);
  };
  for (char c : whole)
    if (!push(c)) return false;
  for (int i = 0; i < scale; ++i)
    if (!push(i < static_cast<int>(frac.size()) ? frac[i] : '0')) return false;
  out = v;
  return true;
}

}  // namespace

Weight parseWeight(const std::string& text, int scale) {
  std::string whole;
  std::string frac;
  if (!text.empty() && text.front() == '-')
    throw Error(Errc::NegativeWeight, "negative weight '" + text + "'");
  if (!splitDecimal(text, whole, frac)) parseFail("malformed weight '" + text + "'");
  if (static_cast<int>(frac.size()) > scale)
    parseFail("weight '" + text + "' has more fractional digits than the matrix");
  std::int64_t v;
  if (!scaledValue(whole, frac, scale, v)) parseFail("weight '" + text + "' overflows");
  return Weight(v);
}

std::string formatWeight(Weight w, int scale) {
  const std::int64_t unit = pow10(scale);
  std::string out = std::to_string(w.units() / unit);
  if (scale > 0) {
    std::string frac = std::to_string(w.units() % unit);
    out += '.' + std::string(scale - frac.size(), '0') + frac;
  }
  return out;
}

DissimilarityMatrix parseMatrix(const std::string& text) {
  std::vector<std::vector<Token>> rows;
  std::istringstream in(text);
  std::string raw;
  int lineNo = 0;
  while (std::getline(in, raw)) {
    ++lineNo;
    std::vector<Token> row;
    std::size_t i = 0;
    while (i < raw.size()) {
      const char c = raw[i];
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])) && raw[j] != ',' &&
             raw[j] != '#')
        ++j;
      row.push_back(Token{raw.substr(i, j - i), lineNo, static_cast<int>(i) + 1});
      i = j;
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw Error(Errc::EmptyMatrix, "matrix has no rows");

  bool square = true;
  bool upper = true;
  for (int r = 0; r < n; ++r) {
    square = square && static_cast<int>(rows[r].size()) == n;
    upper = upper && static_cast<int>(rows[r].size()) == n - r;
  }
  if (!square && !upper) {
    for (int r = 0; r < n; ++r) {
      if (static_cast<int>(rows[r].size()) != n && static_cast<int>(rows[r].size()) != n - r)
        parseFail("row has " + std::to_string(rows[r].size()) + " entries, expected " +
                      std::to_string(n) + " or " + std::to_string(n - r),
                  rows[r].front().line, rows[r].front().column);
    }
    parseFail("rows mix square and triangular layouts", rows.front().front().line, 1);
  }

  int scale = 0;
  for (const auto& row : rows) {
    for (const auto& t : row) {
      std::string whole;
      std::string frac;
      if (!t.text.empty() && t.text.front() == '-')
        throw Error(Errc::NegativeWeight,
                    "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) +
                        ": negative weight '" + t.text + "'",
                    {t.line, t.column});
      if (!splitDecimal(t.text, whole, frac))
        parseFail("malformed weight '" + t.text + "'", t.line, t.column);
      scale = std::max(scale, static_cast<int>(frac.size()));
    }
  }
  if (scale > kMaxScale) parseFail("too many fractional digits");

  DissimilarityMatrix m(n, scale);
  for (int r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const Token& t = rows[r][c];
      std::string whole;
      std::string frac;
      splitDecimal(t.text, whole, frac);
      std::int64_t v;
      if (!scaledValue(whole, frac, scale, v))
        parseFail("weight '" + t.text + "' overflows", t.line, t.column);
      const int col = square ? static_cast<int>(c) : r + static_cast<int>(c);
      if (square)
        m.set(r, col, Weight(v));
      else
        m.setSymmetric(r, col, Weight(v));
    }
  }
  validate(m);
  return m;
}

std::string readTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

DissimilarityMatrix readMatrixFile(const std::string& path) { return parseMatrix(readTextFile(path)); }

std::string formatMatrix(const DissimilarityMatrix& m) {
  std::string out;
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (j > 0) out += ' ';
      out += formatWeight(m(i, j), m.scale());
    }
    out += '\n';
  }
  return out;
}

namespace {

json pqNode(const PQTree& t) {
  if (t.isLeaf()) return {{"type", "leaf"}, {"point", t.point + 1}};
  json children = json::array();
  for (const auto& c : t.children) children.push_back(pqNode(c));
  return {{"type", t.kind == PQTree::Kind::P ? "P" : "Q"}, {"children", children}};
}

json mmNode(const MModuleTree& t, int scale) {
  if (t.isLeaf()) return {{"type", "leaf"}, {"point", t.point + 1}};
  json children = json::array();
  for (const auto& c : t.children) children.push_back(mmNode(c, scale));
  json node = {{"type", t.kind == MModuleTree::Kind::Cup ? "cup" : "cap"}, {"children", children}};
  if (t.special) {
    node["special"] = formatWeight(*t.special, scale);
    node["largeChild"] = t.largeChild;
  }
  return node;
}

json dendNode(const TreeArena& a, int id, int scale) {
  const auto& n = a.nodes[id];
  if (n.point >= 0) return {{"type", "leaf"}, {"point", n.point + 1}};
  json children = json::array();
  for (int c : n.children) children.push_back(dendNode(a, c, scale));
  return {{"type", "internal"}, {"weight", formatWeight(n.weight, scale)}, {"children", children}};
}

std::string document(const char* kind, json root) {
  return json{{"kind", kind}, {"root", std::move(root)}}.dump(2) + "\n";
}

json parseDocument(const std::string& text, const std::string& kind) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parseFail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("root")) parseFail("tree document lacks a root");
  if (doc.value("kind", std::string()) != kind)
    parseFail("expected a '" + kind + "' tree document");
  return doc["root"];
}

int leafPoint(const json& node) {
  if (!node.contains("point") || !node["point"].is_number_integer()) parseFail("leaf lacks a point");
  const int p = node["point"].get<int>();
  if (p < 1) parseFail("point labels start at 1");
  return p - 1;
}

const json& childrenOf(const json& node, std::size_t minimum) {
  if (!node.contains("children") || !node["children"].is_array() ||
      node["children"].size() < minimum)
    parseFail("internal node needs at least " + std::to_string(minimum) + " children");
  return node["children"];
}

std::string typeOf(const json& node) {
  if (!node.is_object() || !node.contains("type") || !node["type"].is_string())
    parseFail("node lacks a type");
  return node["type"].get<std::string>();
}

PQTree pqFrom(const json& node) {
  const std::string type = typeOf(node);
  if (type == "leaf") return PQTree::leaf(leafPoint(node));
  if (type != "P" && type != "Q") parseFail("unknown PQ node type '" + type + "'");
  std::vector<PQTree> children;
  for (const auto& c : childrenOf(node, type == "P" ? 2 : 3)) children.push_back(pqFrom(c));
  return type == "P" ? PQTree::p(std::move(children)) : PQTree::q(std::move(children));
}

MModuleTree mmFrom(const json& node, int scale) {
  const std::string type = typeOf(node);
  if (type == "leaf") return MModuleTree::leaf(leafPoint(node));
  if (type != "cup" && type != "cap") parseFail("unknown mmodule node type '" + type + "'");
  std::vector<MModuleTree> children;
  for (const auto& c : childrenOf(node, type == "cup" ? 3 : 2)) children.push_back(mmFrom(c, scale));
  if (type == "cup") return MModuleTree::cup(std::move(children));
  if (!node.contains("special")) return MModuleTree::cap(std::move(children));
  const int large = node.value("largeChild", -1);
  if (large < 0 || large >= static_cast<int>(children.size())) parseFail("bad largeChild index");
  return MModuleTree::specialCap(std::move(children),
                                 parseWeight(node["special"].get<std::string>(), scale), large);
}

int dendFrom(const json& node, int scale, TreeArena& arena) {
  const std::string type = typeOf(node);
  if (type == "leaf") return arena.addLeaf(leafPoint(node));
  if (type != "internal") parseFail("unknown dendrogram node type '" + type + "'");
  std::vector<int> children;
  for (const auto& c : childrenOf(node, 2)) children.push_back(dendFrom(c, scale, arena));
  if (!node.contains("weight") || !node["weight"].is_string()) parseFail("internal node lacks a weight");
  return arena.addNode(parseWeight(node["weight"].get<std::string>(), scale), std::move(children));
}

}  // namespace

std::string pqTreeToJson(const PQTree& tree) { return document("pq", pqNode(tree)); }

std::string mmoduleTreeToJson(const MModuleTree& tree, int scale) {
  return document("mmodule", mmNode(tree, scale));
}

std::string dendrogramToJson(const Dendrogram& dend, int scale) {
  return document("dendrogram", dendNode(dend.arena(), dend.root(), scale));
}

PQTree pqTreeFromJson(const std::string& text) { return pqFrom(parseDocument(text, "pq")); }

MModuleTree mmoduleTreeFromJson(const std::string& text, int scale) {
  return mmFrom(parseDocument(text, "mmodule"), scale);
}

Dendrogram dendrogramFromJson(const std::string& text, int scale) {
  TreeArena arena;
  const int root = dendFrom(parseDocument(text, "dendrogram"), scale, arena);
  return Dendrogram(std::move(arena), root);
}

std::string treeDocumentKind(const std::string& text) {
  try {
    const json doc = json::parse(text);
    if (doc.is_object() && doc.contains("kind") && doc["kind"].is_string())
      return doc["kind"].get<std::string>();
  } catch (const json::parse_error& e) {
    parseFail(std::string("invalid JSON: ") + e.what());
  }
  parseFail("tree document lacks a kind");
}

namespace {

class DotWriter {
 public:
  int add(const std::string& label, const std::string& shape) {
    const int id = next_++;
    body_ += "  n" + std::to_string(id) + " [label=\"" + label + "\", shape=" + shape + "];\n";
    return id;
  }
  void edge(int from, int to) {
    body_ += "  n" + std::to_string(from) + " -> n" + std::to_string(to) + ";\n";
  }
  std::string finish(const std::string& name) const {
    return "digraph " + name + " {\n" + body_ + "}\n";
  }

 private:
  int next_ = 0;
  std::string body_;
};

int pqDot(const PQTree& t, DotWriter& w) {
  if (t.isLeaf()) return w.add(std::to_string(t.point + 1), "plaintext");
  const int id = t.kind == PQTree::Kind::P ? w.add("P", "circle") : w.add("Q", "box");
  for (const auto& c : t.children) w.edge(id, pqDot(c, w));
  return id;
}

int mmDot(const MModuleTree& t, int scale, DotWriter& w) {
  if (t.isLeaf()) return w.add(std::to_string(t.point + 1), "plaintext");
  std::string label = t.kind == MModuleTree::Kind::Cup ? "cup" : "cap";
  if (t.special) label += " " + formatWeight(*t.special, scale) + "-special";
  const int id = w.add(label, t.kind == MModuleTree::Kind::Cup ? "box" : "circle");
  for (const auto& c : t.children) w.edge(id, mmDot(c, scale, w));
  return id;
}

int dendDot(const TreeArena& a, int node, int scale, DotWriter& w) {
  const auto& n = a.nodes[node];
  if (n.point >= 0) return w.add(std::to_string(n.point + 1), "plaintext");
  const int id = w.add(formatWeight(n.weight, scale), "circle");
  for (int c : n.children) w.edge(id, dendDot(a, c, scale, w));
  return id;
}

// Children are padded with spaces when an outer child is itself a subtree.
template <class Tree, class Render>
std::string bracketed(const Tree& t, const std::string& open, const std::string& close,
                      Render render) {
  std::string inner;
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i > 0) inner += ' ';
    inner += render(t.children[i], i);
  }
  const bool pad = !t.children.front().isLeaf() || !t.children.back().isLeaf();
  return pad ? open + " " + inner + " " + close : open + inner + close;
}

std::string pqAscii(const PQTree& t) {
  if (t.isLeaf()) return std::to_string(t.point + 1);
  auto render = [](const PQTree& c, std::size_t) { return pqAscii(c); };
  return t.kind == PQTree::Kind::P ? bracketed(t, "P(", ")", render)
                                   : bracketed(t, "Q[", "]", render);
}

std::string mmAscii(const MModuleTree& t, int scale) {
  if (t.isLeaf()) return std::to_string(t.point + 1);
  auto render = [&](const MModuleTree& c, std::size_t i) {
    const std::string s = mmAscii(c, scale);
    return t.special && static_cast<int>(i) == t.largeChild ? "*" + s : s;
  };
  if (t.kind == MModuleTree::Kind::Cup) return bracketed(t, "cup(", ")", render);
  if (t.special) return bracketed(t, "cap<" + formatWeight(*t.special, scale) + ">(", ")", render);
  return bracketed(t, "cap(", ")", render);
}

std::string dendAscii(const TreeArena& a, int node, int scale) {
  const auto& n = a.nodes[node];
  if (n.point >= 0) return std::to_string(n.point + 1);
  std::vector<std::pair<int, int>> kids;
  for (int c : n.children) kids.emplace_back(a.leafSet(c).front(), c);
  std::sort(kids.begin(), kids.end());
  std::string out = "@" + formatWeight(n.weight, scale) + "(";
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i > 0) out += ' ';
    out += dendAscii(a, kids[i].second, scale);
  }
  return out + ")";
}

}  // namespace

std::string pqTreeToDot(const PQTree& tree) {
  DotWriter w;
  pqDot(tree, w);
  return w.finish("pqtree");
}

std::string mmoduleTreeToDot(const MModuleTree& tree, int scale) {
  DotWriter w;
  mmDot(tree, scale, w);
  return w.finish("mmoduletree");
}

std::string dendrogramToDot(const Dendrogram& dend, int scale) {
  DotWriter w;
  dendDot(dend.arena(), dend.root(), scale, w);
  return w.finish("dendrogram");
}

std::string pqTreeToAscii(const PQTree& tree) { return pqAscii(tree) + "\n"; }

std::string mmoduleTreeToAscii(const MModuleTree& tree, int scale) {
  return mmAscii(canonicalMModuleTree(tree), scale) + "\n";
}

std::string dendrogramToAscii(const Dendrogram& dend, int scale) {
  return dendAscii(dend.arena(), dend.root(), scale) + "\n";
}

}  // namespace robinson
