#pragma once

// Loading the shipped example corpus over Q.

#include <filesystem>
#include <string>
#include <vector>

#include "homleib/io.hpp"

namespace homleib::corpus {

/// $HOMLEIB_CORPUS if set, otherwise the source-tree corpus directory.
std::filesystem::path directory();

io::Document document(const std::string& file);

HomAlgebra<Rational> algebra(const std::string& name);          // <name>.json
HomAction<Rational> action(const std::string& name);            // <name>.action.json
SplitExtension<Rational> split(const std::string& name);        // <name>.split.json
HomMorphism<Rational> cover(const std::string& name);           // <name>.cover.json
Mat<Rational> matrix(const std::string& name);                  // <name>.json

/// Stems of all algebra files, sorted.
std::vector<std::string> algebra_names();

}  // namespace homleib::corpus
