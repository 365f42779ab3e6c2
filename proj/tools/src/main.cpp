#include <CLI11.hpp>
#include <iostream>

#include "ufsr_app/app.hpp"

int main(int argc, char** argv) {
  CLI::App cli{"Factorization and structure of finite supercommutative superalgebras"};
  cli.require_subcommand(1);

  ufsr::app::Request req;
  std::string format = "text";

  for (const auto& name : ufsr::app::command_names()) {
    auto* sub = cli.add_subcommand(name);
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cap", req.cap, "recursion cap for factorization searches");
    if (name == "census") {
      sub->add_option("--seed", req.seed, "random seed");
      sub->add_option("--max-gens", req.max_gens, "largest number of odd generators (1-4)");
      sub->add_option("--samples", req.samples, "number of random algebras");
      sub->add_option("--field", req.field, "F2, F3 or mixed");
    } else if (name == "verify-paper") {
      sub->add_option("--seed", req.seed, "seed for the random cases");
      sub->add_option("--specs", req.specs_dir, "directory of spec files replacing the built-in ones");
    } else {
      sub->add_option("--spec", req.spec_path, "algebra spec file (JSON)")->required();
      sub->add_option("--element", req.element, "element, e.g. \"t1 + 2*t1*t2\"");
    }
    sub->callback([&req, name] { req.command = name; });
  }

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : ufsr::app::kParseError;
  }
  req.format = format == "json" ? ufsr::app::Format::Json : ufsr::app::Format::Text;

  const auto outcome = ufsr::app::run(req);
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
