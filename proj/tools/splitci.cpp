#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "splitci/cli.hpp"

namespace {

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Embed split complete intersections into quadratic ones, with exact certificates"};
  app.require_subcommand(1);

  splitci::cli::RunOptions opts;
  std::string input_path;
  std::string output_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input_path, "Input JSON document (default: stdin)");
    sub->add_option("-o,--output", output_path, "Write the result here instead of stdout");
    sub->add_option("--field", opts.field, "Override the field: rational | prime:<p>");
    sub->add_option("--max-total-degree", opts.max_total_degree, "Refuse instances of larger socle degree (0: no cap)");
    sub->add_option("--max-basis-size", opts.max_basis_size, "Abort Groebner bases larger than this (0: no cap)");
    sub->add_flag("--quiet", opts.quiet, "Print nothing; report through the exit status only");
    sub->add_flag("--deterministic", opts.deterministic, "Omit the timing field");
  };

  add_common(app.add_subcommand("verify", "Run every check and print the embedding certificate"));
  add_common(app.add_subcommand("normalize", "Print the normal-form change of coordinates and lambda table"));
  add_common(app.add_subcommand("embed", "Print the quadratic complete intersection and the embedding"));
  add_common(app.add_subcommand("gb", "Print the reduced Groebner basis of the input ideal"));
  add_common(app.add_subcommand("dim", "Print the quotient dimension and Hilbert function"));
  add_common(app.add_subcommand("socle", "Print the socle degree and generator"));
  auto* gen = app.add_subcommand("gen", "Print a random split sequence as an input document");
  gen->add_option("--seed", opts.seed, "Random seed");
  gen->add_option("--degrees", opts.degrees, "Polynomial degrees, each >= 2")->delimiter(',');
  gen->add_option("--field", opts.field, "rational | prime:<p> (default prime:7)");
  gen->add_option("-o,--output", output_path, "Write the document here instead of stdout");
  gen->add_flag("--quiet", opts.quiet, "Print nothing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : splitci::cli::kInputError;
  }
  opts.command = app.get_subcommands().front()->get_name();

  if (opts.command != "gen") {
    if (input_path.empty() || input_path == "-") {
      opts.input_text = read_all(std::cin);
    } else {
      std::ifstream in(input_path);
      if (!in) {
        std::cerr << "splitci: cannot open " << input_path << "\n";
        return splitci::cli::kInputError;
      }
      opts.input_text = read_all(in);
    }
  }

  if (output_path.empty()) return splitci::cli::run(opts, std::cout, std::cerr);
  std::ostringstream buffer;
  const int code = splitci::cli::run(opts, buffer, std::cerr);
  std::ofstream out(output_path);
  if (!out) {
    std::cerr << "splitci: cannot write " << output_path << "\n";
    return splitci::cli::kInputError;
  }
  out << buffer.str();
  return code;
}
