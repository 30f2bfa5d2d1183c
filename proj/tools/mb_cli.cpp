// Batch driver: runs one suite and writes its JSON-lines report.
// Exit codes: 0 all checks pass, 1 some check failed, 2 malformed input.

#include "mb/cli/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  mb::SuiteConfig cfg;
  std::string seed = "C0FFEE";

  CLI::App app{"Exact checks for strong monads, bar resolutions and realizations"};
  app.add_option("--suite", cfg.suite, "laws | bar | gabriel | excisive | morita | realize")->required();
  app.add_option("--monad", cfg.monad, "identity | tensor:<C2|Z2|Z|dual|ext> | tensoralg | homtensor:<S>:<P>");
  app.add_option("--context", cfg.context, "fpab | chain-Q | chain-Z");
  app.add_option("--trunc", cfg.N, "simplicial truncation N (>= 2)");
  app.add_option("--seed", seed, "hexadecimal seed");
  app.add_option("--out", cfg.out, "report path (default stdout)");
  app.add_option("--preset", cfg.preset, "suite preset");
  app.add_option("input", cfg.input, "simplicial JSON file for the realize suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  mb::SuiteResult result;
  try {
    if (seed.rfind("0x", 0) == 0 || seed.rfind("0X", 0) == 0) seed = seed.substr(2);
    cfg.seed = mb::parse_hex(seed);
    result = mb::run(cfg);
  } catch (const mb::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  const std::string text = result.text();
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << cfg.out << "'\n";
      return 2;
    }
    out << text;
  }
  if (const auto* f = result.report.first_failure())
    std::cerr << "FAIL " << f->check << " [" << f->instance << "]: " << f->witness << '\n';
  return result.exit_code();
}
