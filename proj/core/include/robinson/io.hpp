#pragma once

#include <string>

#include "robinson/core.hpp"
#include "robinson/dendrogram.hpp"
#include "robinson/mmodtree.hpp"
#include "robinson/pqtree.hpp"

namespace robinson {

// Full square or upper triangle including the diagonal; entries separated by
// whitespace or commas; '#' starts a comment. Decimal weights are scaled to
// the largest number of fractional digits seen. Errors carry line and column.
DissimilarityMatrix parseMatrix(const std::string& text);
DissimilarityMatrix readMatrixFile(const std::string& path);

std::string formatWeight(Weight w, int scale);
Weight parseWeight(const std::string& text, int scale);

// Full square, one row per line.
std::string formatMatrix(const DissimilarityMatrix& m);

// Documents use one-based point labels.
std::string pqTreeToJson(const PQTree& tree);
std::string mmoduleTreeToJson(const MModuleTree& tree, int scale);
std::string dendrogramToJson(const Dendrogram& dend, int scale);

PQTree pqTreeFromJson(const std::string& text);
MModuleTree mmoduleTreeFromJson(const std::string& text, int scale);
Dendrogram dendrogramFromJson(const std::string& text, int scale);

// Reads the "kind" field of a tree document.
std::string treeDocumentKind(const std::string& text);

std::string pqTreeToDot(const PQTree& tree);
std::string mmoduleTreeToDot(const MModuleTree& tree, int scale);
std::string dendrogramToDot(const Dendrogram& dend, int scale);

std::string pqTreeToAscii(const PQTree& tree);
std::string mmoduleTreeToAscii(const MModuleTree& tree, int scale);
std::string dendrogramToAscii(const Dendrogram& dend, int scale);

std::string readTextFile(const std::string& path);

}  // namespace robinson
