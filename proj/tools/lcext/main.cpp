#include <lcext/cli.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string slurp(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Hilbert series of Ext and Tor, Laurent coefficients and the identities between them.\n"
               "usage: lcext [--session FILE | --corpus NAME] COMMAND ARGS... (lcext help for commands)");
  std::string session_path, corpus_name;
  app.add_option("-s,--session", session_path, "declaration file, - for stdin");
  app.add_option("--corpus", corpus_name, "load a built-in corpus entry");
  app.prefix_command();
  CLI11_PARSE(app, argc, argv);

  std::vector<std::string> args = app.remaining();
  if (args.empty() || args.front() == "help") args = {"--help"};
  try {
    lcext::cli::Session session;
    if (!session_path.empty()) session = lcext::cli::parse_session(slurp(session_path));
    if (!corpus_name.empty()) lcext::cli::run_command(session, {"corpus", corpus_name});
    const lcext::cli::CommandResult r = lcext::cli::run_command(session, args);
    std::cout << r.output;
    return r.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
