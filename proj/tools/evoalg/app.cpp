#include <ostream>

#include "CLI11.hpp"
#include "cli.hpp"

namespace evoalg::cli {

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evolution algebras: graphs, diagonal groups, automorphisms, derivations"};
  std::string command;
  std::string file;
  std::string field;
  std::uint64_t points = 0;
  Flags flags;
  app.add_option("command", command, "graph, balance, diag, aut, der or check")->required();
  app.add_option("file", file, "JSON algebra file")->required();
  auto* field_opt = app.add_option("--field", field, "gf:P or rational");
  auto* points_opt = app.add_option("--points", points, "list the GF(P)-points of Diag");
  app.add_flag("--dot", flags.dot, "emit Graphviz DOT (graph)");
  app.add_flag("--json", flags.json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << usage();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << usage();
    return kExitInput;
  }

  if (std::find(commands().begin(), commands().end(), command) == commands().end()) {
    err << "error: unknown command \"" << command << "\"\n" << usage();
    return kExitInput;
  }
  try {
    if (*field_opt) flags.field = parse_field_flag(field);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  if (*points_opt) flags.points = points;

  const Report r = run_command(command, file, flags);
  std::ostream& sink = r.exit_code == kExitInput ? err : out;
  if (flags.json) {
    sink << r.data.dump(2) << "\n";
  } else {
    sink << r.text;
  }
  return r.exit_code;
}

}  // namespace evoalg::cli
