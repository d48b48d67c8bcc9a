#include "homleib/corpus.hpp"

#include <algorithm>
#include <cstdlib>

namespace homleib::corpus {

std::filesystem::path directory() {
  if (const char* env = std::getenv("HOMLEIB_CORPUS"); env && *env) return env;
  return HOMLEIB_CORPUS_DIR;
}

io::Document document(const std::string& file) { return io::load_document(directory() / file); }

HomAlgebra<Rational> algebra(const std::string& name) { return io::read_algebra<Rational>(document(name + ".json")); }

HomAction<Rational> action(const std::string& name) {
  return io::read_action<Rational>(document(name + ".action.json"));
}

SplitExtension<Rational> split(const std::string& name) {
  return io::read_split_extension<Rational>(document(name + ".split.json"));
}

HomMorphism<Rational> cover(const std::string& name) { return io::read_cover<Rational>(document(name + ".cover.json")); }

Mat<Rational> matrix(const std::string& name) { return io::read_matrix_document<Rational>(document(name + ".json")); }

std::vector<std::string> algebra_names() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(directory())) {
    const auto& p = entry.path();
    if (p.extension() != ".json" || p.stem().has_extension()) continue;
    const io::Document doc = io::load_document(p);
    if (doc.value["kind"] == "algebra") out.push_back(p.stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace homleib::corpus
