#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cli_driver.hpp"

namespace {

std::string load_input(const std::string& arg) {
  // inline JSON or a file path
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(arg);
  if (!f) {
    std::cerr << "cannot open input file: " << arg << "\n";
    std::exit(2);
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for coset Helly numbers and closed orbits"};
  app.require_subcommand(1);

  helly::cli::Options opts;
  app.add_option("--max-order", opts.max_order,
                 "Order bound for brute-force group searches")
      ->capture_default_str();
  app.add_option("--max-subset", opts.max_subset,
                 "Cap on certificate subset size (0: input size)")
      ->capture_default_str();
  app.add_option("--seed", opts.seed,
                 "Seed for randomized search order; results do not depend on it")
      ->capture_default_str();

  std::string output_path;
  app.add_option("-o,--output", output_path, "Write the result here instead of stdout");

  struct Cmd {
    CLI::App* sub;
    std::string input;
  };
  std::vector<Cmd> cmds;
  cmds.reserve(helly::cli::verb_names().size());
  for (const std::string& verb : helly::cli::verb_names()) {
    CLI::App* sub = app.add_subcommand(verb);
    sub->fallthrough();
    cmds.push_back({sub, {}});
    sub->add_option("input", cmds.back().input,
                    "Inline JSON, a file path, or - for stdin")
        ->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // malformed command line
  }

  for (std::size_t i = 0; i < cmds.size(); ++i) {
    if (!cmds[i].sub->parsed()) continue;
    const std::string verb = helly::cli::verb_names()[i];
    helly::cli::RunResult r =
        helly::cli::run_verb(verb, load_input(cmds[i].input), opts);
    if (output_path.empty()) {
      std::cout << r.output;
    } else {
      std::ofstream out(output_path);
      out << r.output;
    }
    return r.exit_code;
  }
  return 2;
}
