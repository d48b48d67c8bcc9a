#include "homleib/io.hpp"

#include <fstream>
#include <sstream>

namespace homleib::io {

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t k = 0; k < end; ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

bool is_flat_array(const json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v)
    if (x.is_array() || x.is_object()) return false;
  return true;
}

void format_into(std::ostringstream& os, const json& v, int depth);

void format_array_of_rows(std::ostringstream& os, const json& v, int depth) {
  const std::string indent(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  os << "[\n";
  for (std::size_t i = 0; i < v.size(); ++i) {
    os << indent;
    format_into(os, v[i], depth + 1);
    if (i + 1 < v.size()) os << ",";
    os << "\n";
  }
  os << std::string(static_cast<std::size_t>(2 * depth), ' ') << "]";
}

void format_into(std::ostringstream& os, const json& v, int depth) {
  if (v.is_object()) {
    if (v.empty()) {
      os << "{}";
      return;
    }
    const std::string indent(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    os << "{\n";
    std::size_t k = 0;
    for (auto it = v.begin(); it != v.end(); ++it, ++k) {
      os << indent << json(it.key()).dump() << ": ";
      format_into(os, it.value(), depth + 1);
      if (k + 1 < v.size()) os << ",";
      os << "\n";
    }
    os << std::string(static_cast<std::size_t>(2 * depth), ' ') << "}";
  } else if (v.is_array() && !v.empty() && depth < 2 && !is_flat_array(v)) {
    format_array_of_rows(os, v, depth);
  } else {
    os << v.dump();
  }
}

}  // namespace

Document parse_document(std::string_view text, std::string source, std::filesystem::path dir) {
  Document doc{json(), std::move(source), std::move(dir)};
  try {
    doc.value = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at line x, column y: " prefix.
    if (const auto colon = what.find(": "); colon != std::string::npos) what = what.substr(colon + 2);
    throw InputError(doc.source, line, column, what);
  }
  if (!doc.value.is_object()) fail(doc, "", "top level must be an object");
  const json& version = member(doc, doc.value, "", "format_version");
  if (!version.is_number_integer() || version.get<long>() != kFormatVersion)
    fail(doc, "/format_version", "unsupported format_version (expected " + std::to_string(kFormatVersion) + ")");
  member(doc, doc.value, "", "kind");
  return doc;
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string(), 0, 0, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str(), path.string(), path.parent_path());
}

void fail(const Document& doc, const std::string& pointer, const std::string& message) {
  throw InputError(doc.source, 0, 0, (pointer.empty() ? std::string("/") : pointer) + ": " + message);
}

const json& member(const Document& doc, const json& node, const std::string& pointer, const char* key) {
  if (!node.is_object() || !node.contains(key)) fail(doc, pointer, std::string("missing member \"") + key + "\"");
  return node[key];
}

std::string expect_kind(const Document& doc, std::initializer_list<const char*> kinds) {
  const json& kind = member(doc, doc.value, "", "kind");
  if (!kind.is_string()) fail(doc, "/kind", "expected a string");
  const auto k = kind.get<std::string>();
  std::string expected;
  for (const char* candidate : kinds) {
    if (k == candidate) return k;
    expected += (expected.empty() ? "" : " or ") + std::string(candidate);
  }
  fail(doc, "/kind", "expected " + expected + ", got \"" + k + "\"");
}

Document resolve(const Document& doc, const json& node, const std::string& pointer) {
  if (node.is_string()) {
    const std::filesystem::path target = doc.dir / node.get<std::string>();
    return load_document(target);
  }
  if (node.is_object()) {
    Document inner{node, doc.source + "#" + pointer, doc.dir};
    if (!inner.value.contains("format_version")) inner.value["format_version"] = kFormatVersion;
    member(inner, inner.value, "", "kind");
    return inner;
  }
  fail(doc, pointer, "expected an inline object or a relative path");
}

std::string field_of(const Document& doc) {
  const json& v = doc.value;
  if (v.contains("field")) {
    if (!v["field"].is_string()) fail(doc, "/field", "expected a string");
    return v["field"].get<std::string>();
  }
  for (const char* key : {"actor", "target", "M", "B", "C", "base", "source"})
    if (v.contains(key)) return field_of(resolve(doc, v[key], std::string("/") + key));
  return "Q";
}

std::uint64_t parse_field(const std::string& tag, const Document& doc) {
  if (tag == "Q") return 0;
  if (tag.starts_with("GF(") && tag.ends_with(")")) {
    const std::string digits = tag.substr(3, tag.size() - 4);
    try {
      std::size_t used = 0;
      const unsigned long long p = std::stoull(digits, &used);
      if (used == digits.size() && is_prime(p) && p < (1ull << 31)) return p;
    } catch (const std::exception&) {
    }
  }
  fail(doc, "/field", "expected \"Q\" or \"GF(p)\" with p a prime below 2^31, got \"" + tag + "\"");
}

std::string format(const json& value) {
  std::ostringstream os;
  format_into(os, value, 0);
  os << "\n";
  return os.str();
}

}  // namespace homleib::io
