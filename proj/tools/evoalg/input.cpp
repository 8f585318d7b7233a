#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "cli.hpp"

namespace evoalg::cli {

namespace {

std::string located(const std::string& source, std::optional<std::size_t> line, const std::string& message) {
  std::string s = source;
  if (line) s += ":" + std::to_string(*line);
  return s + ": " + message;
}

std::size_t line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

// nlohmann reports values without positions, so error lines come from a
// small second pass over the raw text. It only needs to follow the top-level
// keys and arrays of the input format; anything unexpected yields nullopt.
class Locator {
 public:
  explicit Locator(std::string_view text) : text_(text) {}

  std::optional<std::size_t> key(std::string_view name) const {
    std::size_t pos = skip_ws(0);
    if (pos >= text_.size() || text_[pos] != '{') return std::nullopt;
    ++pos;
    while (true) {
      pos = skip_ws(pos);
      if (pos >= text_.size() || text_[pos] != '"') return std::nullopt;
      const std::size_t key_start = pos;
      const std::size_t key_end = skip_string(pos);
      if (key_end == npos) return std::nullopt;
      pos = skip_ws(key_end);
      if (pos >= text_.size() || text_[pos] != ':') return std::nullopt;
      pos = skip_ws(pos + 1);
      if (text_.substr(key_start + 1, key_end - key_start - 2) == name) return pos;
      pos = skip_value(pos);
      if (pos == npos) return std::nullopt;
      pos = skip_ws(pos);
      if (pos >= text_.size() || text_[pos] != ',') return std::nullopt;
      ++pos;
    }
  }

  /// Start of element `index` of the array beginning at `pos`.
  std::optional<std::size_t> element(std::optional<std::size_t> pos, std::size_t index) const {
    if (!pos || *pos >= text_.size() || text_[*pos] != '[') return std::nullopt;
    std::size_t p = *pos + 1;
    for (std::size_t k = 0;; ++k) {
      p = skip_ws(p);
      if (p >= text_.size() || text_[p] == ']') return std::nullopt;
      if (k == index) return p;
      p = skip_value(p);
      if (p == npos) return std::nullopt;
      p = skip_ws(p);
      if (p >= text_.size() || text_[p] != ',') return std::nullopt;
      ++p;
    }
  }

  std::optional<std::size_t> line(std::optional<std::size_t> pos) const {
    if (!pos) return std::nullopt;
    return line_at(text_, *pos);
  }

 private:
  static constexpr std::size_t npos = std::string_view::npos;

  std::size_t skip_ws(std::size_t pos) const {
    while (pos < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos]))) ++pos;
    return pos;
  }

  // pos at the opening quote; returns one past the closing quote.
  std::size_t skip_string(std::size_t pos) const {
    for (++pos; pos < text_.size(); ++pos) {
      if (text_[pos] == '\\') {
        ++pos;
      } else if (text_[pos] == '"') {
        return pos + 1;
      }
    }
    return npos;
  }

  std::size_t skip_value(std::size_t pos) const {
    if (pos >= text_.size()) return npos;
    if (text_[pos] == '"') return skip_string(pos);
    if (text_[pos] == '[' || text_[pos] == '{') {
      int depth = 0;
      while (pos < text_.size()) {
        const char c = text_[pos];
        if (c == '"') {
          pos = skip_string(pos);
          if (pos == npos) return npos;
          continue;
        }
        if (c == '[' || c == '{') ++depth;
        if (c == ']' || c == '}') {
          if (--depth == 0) return pos + 1;
        }
        ++pos;
      }
      return npos;
    }
    while (pos < text_.size() && text_[pos] != ',' && text_[pos] != ']' && text_[pos] != '}' &&
           !std::isspace(static_cast<unsigned char>(text_[pos]))) {
      ++pos;
    }
    return pos;
  }

  std::string_view text_;
};

std::string describe(const Json& j) {
  std::string s = j.dump();
  if (s.size() > 40) s = s.substr(0, 37) + "...";
  return s;
}

}  // namespace

FileError::FileError(const std::string& source, std::optional<std::size_t> line, const std::string& message)
    : InputError(located(source, line, message)) {}

AlgebraFile read_algebra_text(std::string_view text, const std::string& source) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::string detail = e.what();
    if (const auto bracket = detail.find("] "); detail.starts_with("[json.exception") && bracket != std::string::npos) {
      detail = detail.substr(bracket + 2);
    }
    throw FileError(source, line_at(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON: " + detail);
  }
  const Locator where(text);
  if (!doc.is_object()) throw FileError(source, 1, "expected a JSON object with keys field, basis, matrix");

  AlgebraFile out;

  if (!doc.contains("field")) throw FileError(source, std::nullopt, "missing key \"field\"");
  const Json& field = doc["field"];
  const auto field_line = where.line(where.key("field"));
  if (!field.is_object() || !field.contains("kind") || !field["kind"].is_string()) {
    throw FileError(source, field_line, "\"field\" must be an object with a string \"kind\"");
  }
  const std::string kind = field["kind"].get<std::string>();
  if (kind == "rational") {
    out.field = FieldSpec::rational();
  } else if (kind == "gf") {
    if (!field.contains("p") || !field["p"].is_number_integer()) {
      throw FileError(source, field_line, "field kind \"gf\" needs an integer \"p\"");
    }
    const auto p = field["p"].get<std::int64_t>();
    if (p < 2) throw FileError(source, field_line, "p must be prime (got " + std::to_string(p) + ")");
    try {
      out.field = FieldSpec::prime(static_cast<std::uint64_t>(p));
    } catch (const InputError& e) {
      throw FileError(source, field_line, e.what());
    }
  } else {
    throw FileError(source, field_line, "unknown field kind \"" + kind + "\" (expected \"gf\" or \"rational\")");
  }

  if (!doc.contains("basis")) throw FileError(source, std::nullopt, "missing key \"basis\"");
  const auto basis_pos = where.key("basis");
  if (!doc["basis"].is_array()) throw FileError(source, where.line(basis_pos), "\"basis\" must be an array of labels");
  if (doc["basis"].empty()) throw FileError(source, where.line(basis_pos), "\"basis\" must not be empty");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < doc["basis"].size(); ++i) {
    const Json& label = doc["basis"][i];
    const auto line = where.line(where.element(basis_pos, i));
    if (!label.is_string() || label.get<std::string>().empty()) {
      throw FileError(source, line, "basis[" + std::to_string(i) + "] must be a non-empty string, got " + describe(label));
    }
    if (!seen.insert(label.get<std::string>()).second) {
      throw FileError(source, line, "duplicate basis label \"" + label.get<std::string>() + "\"");
    }
    out.basis.push_back(label.get<std::string>());
  }

  if (!doc.contains("matrix")) throw FileError(source, std::nullopt, "missing key \"matrix\"");
  const auto matrix_pos = where.key("matrix");
  const Json& matrix = doc["matrix"];
  if (!matrix.is_array()) throw FileError(source, where.line(matrix_pos), "\"matrix\" must be an array of rows");
  const std::size_t n = out.basis.size();
  if (matrix.size() != n) {
    throw FileError(source, where.line(matrix_pos),
                    "dimension mismatch: " + std::to_string(n) + " basis labels but " + std::to_string(matrix.size()) +
                        " matrix rows");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto row_pos = where.element(matrix_pos, i);
    const Json& row = matrix[i];
    if (!row.is_array()) {
      throw FileError(source, where.line(row_pos), "matrix row " + std::to_string(i) + " must be an array");
    }
    if (row.size() != n) {
      throw FileError(source, where.line(row_pos),
                      "dimension mismatch: matrix row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                          " entries, expected " + std::to_string(n));
    }
    std::vector<std::string> entries;
    for (std::size_t j = 0; j < n; ++j) {
      if (!row[j].is_string()) {
        throw FileError(source, where.line(where.element(row_pos, j)),
                        "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "] must be a string, got " +
                            describe(row[j]));
      }
      entries.push_back(row[j].get<std::string>());
    }
    out.matrix.push_back(std::move(entries));
  }
  return out;
}

EvolutionAlgebra parse_algebra_text(std::string_view text, const std::string& source,
                                    const std::optional<FieldSpec>& field_override) {
  const AlgebraFile file = read_algebra_text(text, source);
  const FieldSpec field = field_override.value_or(file.field);
  const Locator where(text);
  const auto matrix_pos = where.key("matrix");
  const std::size_t n = file.basis.size();
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      try {
        m(i, j) = field.parse(file.matrix[i][j]);
      } catch (const InputError& e) {
        throw FileError(source, where.line(where.element(where.element(matrix_pos, i), j)),
                        "unparsable entry matrix[" + std::to_string(i) + "][" + std::to_string(j) + "] = \"" +
                            file.matrix[i][j] + "\" in " + field.name() + ": " + e.what());
      }
    }
  }
  return EvolutionAlgebra(file.basis, std::move(m));
}

EvolutionAlgebra parse_algebra_file(const std::filesystem::path& path, const std::optional<FieldSpec>& field_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(path.string(), std::nullopt, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra_text(buffer.str(), path.string(), field_override);
}

FieldSpec parse_field_flag(std::string_view text) {
  if (text == "rational" || text == "Q") return FieldSpec::rational();
  if (text.starts_with("gf:")) {
    const std::string_view digits = text.substr(3);
    if (!digits.empty() && digits.size() <= 19 &&
        std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      return FieldSpec::prime(std::stoull(std::string(digits)));
    }
  }
  throw InputError("bad --field value \"" + std::string(text) + "\" (expected gf:P or rational)");
}

}  // namespace evoalg::cli
