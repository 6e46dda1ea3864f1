// Command-line front end: recognize, tree, translate, generate, bench.
#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "robinson/bench.hpp"
#include "robinson/copoints.hpp"
#include "robinson/dendrogram.hpp"
#include "robinson/generate.hpp"
#include "robinson/io.hpp"
#include "robinson/mmodtree.hpp"
#include "robinson/translate.hpp"

namespace {

using namespace robinson;

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kInputError = 2;

std::string labels(const Order& order) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(order[i] + 1);
  }
  return out;
}

std::string renderPq(const PQTree& t, const std::string& format) {
  if (format == "dot") return pqTreeToDot(t);
  if (format == "ascii") return pqTreeToAscii(t);
  return pqTreeToJson(t);
}

std::string renderMm(const MModuleTree& t, int scale, const std::string& format) {
  if (format == "dot") return mmoduleTreeToDot(t, scale);
  if (format == "ascii") return mmoduleTreeToAscii(t, scale);
  return mmoduleTreeToJson(t, scale);
}

std::string renderDend(const Dendrogram& d, int scale, const std::string& format) {
  if (format == "dot") return dendrogramToDot(d, scale);
  if (format == "ascii") return dendrogramToAscii(d, scale);
  return dendrogramToJson(d, scale);
}

int reject(const RecognitionResult& r) {
  std::cout << "robinson: no\nreason: " << r.reason << "\n";
  if (!r.violation.empty()) std::cout << "witness: " << labels(r.violation) << "\n";
  return kRejected;
}

int cmdRecognize(const std::string& input, const std::string& format) {
  const DissimilarityMatrix m = readMatrixFile(input);
  const RecognitionResult r = recognizeRobinson(m);
  if (!r.robinson) return reject(r);
  std::cout << "robinson: yes\norder: " << labels(r.witness) << "\n" << renderPq(*r.tree, format);
  return kOk;
}

int cmdTree(const std::string& input, const std::string& which, const std::string& format) {
  const DissimilarityMatrix m = readMatrixFile(input);
  if (which == "dendrogram") {
    std::cout << renderDend(buildDendrogram(m, m.all()), m.scale(), format);
    return kOk;
  }
  const RecognitionResult r = recognizeRobinson(m);
  if (!r.robinson) return reject(r);
  if (which == "pq")
    std::cout << renderPq(*r.tree, format);
  else
    std::cout << renderMm(mmoduleTree(m, m.all()), m.scale(), format);
  return kOk;
}

template <class Tree>
void checkLeaves(const Tree& tree, const DissimilarityMatrix& m) {
  if (tree.leafSet() != m.all())
    throw Error(Errc::ParseError, "tree leaves do not match the matrix points");
}

int cmdTranslate(const std::string& treePath, const std::string& matrixPath, const std::string& to,
                 const std::string& format) {
  const DissimilarityMatrix m = readMatrixFile(matrixPath);
  const std::string text = readTextFile(treePath);
  const std::string kind = treeDocumentKind(text);
  if (kind == "pq" && to == "mmodule") {
    const PQTree t = pqTreeFromJson(text);
    checkLeaves(t, m);
    std::cout << renderMm(pqToMModuleTree(m, t), m.scale(), format);
  } else if (kind == "mmodule" && to == "pq") {
    const MModuleTree t = mmoduleTreeFromJson(text, m.scale());
    checkLeaves(t, m);
    std::cout << renderPq(mmoduleToPqTree(m, t), format);
  } else {
    throw Error(Errc::ParseError, "cannot translate a '" + kind + "' document to '" + to + "'");
  }
  return kOk;
}

std::vector<int> parseSizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int n = std::stoi(item, &used);
      if (used != item.size() || n < 1) throw std::invalid_argument(item);
      sizes.push_back(n);
    } catch (const std::logic_error&) {
      throw Error(Errc::ParseError, "bad size '" + item + "'");
    }
  }
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robinson dissimilarity recognition and tree representations"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "dot", "ascii"};

  std::string input;
  std::string format = "json";
  std::string which = "pq";
  std::string matrixPath;
  std::string to;
  int n = 10;
  std::uint64_t seed = 1;
  std::string profile = "generic";
  std::string sizes = "256,512,1024";
  int reps = 5;

  auto* recognize = app.add_subcommand("recognize", "Decide whether the matrix is Robinson");
  recognize->add_option("-i,--input", input, "Matrix file")->required();
  recognize->add_option("-f,--format", format, "Tree format")->check(CLI::IsMember(formats));

  auto* tree = app.add_subcommand("tree", "Print the PQ-tree, mmodule tree or dendrogram");
  tree->add_option("-i,--input", input, "Matrix file")->required();
  tree->add_option("-t,--tree", which, "pq, mmodule or dendrogram")
      ->check(CLI::IsMember({"pq", "mmodule", "dendrogram"}));
  tree->add_option("-f,--format", format, "Output format")->check(CLI::IsMember(formats));

  auto* translate = app.add_subcommand("translate", "Translate between PQ-trees and mmodule trees");
  translate->add_option("-i,--input", input, "Tree document (JSON)")->required();
  translate->add_option("-m,--matrix", matrixPath, "Matrix file")->required();
  translate->add_option("--to", to, "pq or mmodule")->required()->check(CLI::IsMember({"pq", "mmodule"}));
  translate->add_option("-f,--format", format, "Output format")->check(CLI::IsMember(formats));

  auto* generate = app.add_subcommand("generate", "Write a random Robinson matrix");
  generate->add_option("-n,--points", n, "Number of points")->check(CLI::PositiveNumber);
  generate->add_option("--seed", seed, "Random seed");
  generate->add_option("--profile", profile, "generic, ultrametric, flat-heavy or tie-heavy")
      ->check(CLI::IsMember({"generic", "ultrametric", "flat-heavy", "tie-heavy"}));

  auto* bench = app.add_subcommand("bench", "Time the constructions on generated instances");
  bench->add_option("--sizes", sizes, "Comma-separated sizes");
  bench->add_option("--reps", reps, "Repetitions per size")->check(CLI::NonNegativeNumber);
  bench->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*recognize) return cmdRecognize(input, format);
    if (*tree) return cmdTree(input, which, format);
    if (*translate) return cmdTranslate(input, matrixPath, to, format);
    if (*generate) {
      std::cout << formatMatrix(generateRobinson(n, seed, parseProfile(profile)));
      return kOk;
    }
    if (*bench) {
      std::cout << formatBenchTable(runBench(parseSizes(sizes), reps, seed));
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool structural = e.code() == Errc::NotRobinson || e.code() == Errc::NoBipartition ||
                            e.code() == Errc::NoAdmissibleHole || e.code() == Errc::SideConflict;
    return structural ? kRejected : kInputError;
  }
  return kInputError;
}
