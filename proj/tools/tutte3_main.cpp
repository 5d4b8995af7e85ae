// Command-line front end: tutte, table, check and compatible subcommands.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tutte3/cli.hpp"

namespace {

bool read_input(const std::string& path, std::string& text) {
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trivariate Tutte polynomials of matroid perspectives"};
  app.require_subcommand(1);

  std::string input;
  std::string method = "activities";
  std::uint64_t seed = 1;

  auto* tutte = app.add_subcommand("tutte", "print the polynomial in canonical form");
  tutte->add_option("--method", method, "activities | compatible | rank-gen")
      ->check(CLI::IsMember({"activities", "compatible", "rank-gen"}));
  auto* table = app.add_subcommand("table", "print the B / Int / Ext / X / Term table");
  auto* check = app.add_subcommand("check", "run the bijection and expansion property checks");
  check->add_option("--seed", seed, "seed for the random element orders");
  auto* compatible = app.add_subcommand("compatible", "list the compatible sets D(M,M',<)");
  for (auto* sub : {tutte, table, check, compatible}) {
    sub->add_option("--input,-i", input, "input file (default: standard input)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return tutte3::cli::kParseFailure;
  }

  std::string text;
  if (!read_input(input, text)) {
    std::cerr << "cannot read " << input << '\n';
    return tutte3::cli::kParseFailure;
  }

  tutte3::cli::CommandResult result;
  if (*tutte) {
    result = tutte3::cli::cmd_tutte(text, *tutte3::cli::parse_method(method));
  } else if (*table) {
    result = tutte3::cli::cmd_table(text);
  } else if (*check) {
    result = tutte3::cli::cmd_check(text, seed);
  } else {
    result = tutte3::cli::cmd_compatible(text);
  }
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
