#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "evoalg/evoalg.hpp"

namespace evoalg::cli {

using Json = nlohmann::ordered_json;

/// Input file contents before the entries are read as scalars.
struct AlgebraFile {
  FieldSpec field;
  std::vector<std::string> basis;
  std::vector<std::vector<std::string>> matrix;
};

/// A problem with an input file. what() reads "source:line: message", or
/// "source: message" when no line applies.
class FileError : public InputError {
 public:
  FileError(const std::string& source, std::optional<std::size_t> line, const std::string& message);
};

/// Shape checks only: field, labels, square matrix of strings.
AlgebraFile read_algebra_text(std::string_view text, const std::string& source);

/// Full validation. With `field_override` the entry strings are read in that
/// field instead of the declared one.
EvolutionAlgebra parse_algebra_text(std::string_view text, const std::string& source,
                                    const std::optional<FieldSpec>& field_override = {});
EvolutionAlgebra parse_algebra_file(const std::filesystem::path& path,
                                    const std::optional<FieldSpec>& field_override = {});

/// "gf:7", "rational" or "Q".
FieldSpec parse_field_flag(std::string_view text);

struct Flags {
  std::optional<FieldSpec> field;
  std::optional<std::uint64_t> points;
  bool dot = false;
  bool json = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitInput = 2;

struct Report {
  std::string command;
  /// Everything the text shows, and nothing more.
  Json data;
  std::string text;
  int exit_code = kExitOk;
};

const std::vector<std::string>& commands();
std::string usage();

Report run_on_algebra(std::string_view command, const EvolutionAlgebra& a, const Flags& flags);
/// Input problems become a report with exit code 2 and an "error" entry.
Report run_command(std::string_view command, const std::filesystem::path& file, const Flags& flags);

/// The whole program: argument parsing, dispatch, output.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace evoalg::cli
