#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace coverinv;
  cli::RunConfig config;
  std::string n_text;
  std::string range_text;
  std::string level_text = "graph";
  std::string format_text;
  std::size_t cap_cover = 0;
  std::size_t cap_vertices = 0;

  CLI::App app{"Cover-poset invariants of topological spaces"};
  app.set_version_flag("--version", COVERINV_VERSION);
  app.add_option("command", config.command,
                 "validate | hclasses | graph | cstar | ktheory | prim | pg | compare | certify | enumerate")
      ->required();
  app.add_option("--input", config.input, "space, cover, arrangement, graph or certificate file");
  app.add_option("--input-b", config.input_b, "second input for compare and certify");
  app.add_option("--n", n_text, "cover size");
  app.add_option("--n-range", range_text, "cover sizes lo..hi");
  app.add_option("--level", level_text, "graph | cstar | ktheory");
  app.add_option("--cap-cover", cap_cover, "largest interval cover size to enumerate");
  app.add_option("--cap-vertices", cap_vertices, "largest graph to canonicalise");
  app.add_option("--format", format_text, "json | dot | text");
  app.add_option("--out", config.out, "write the result here instead of stdout");
  app.add_flag("--replay", config.replay, "certify: re-check an existing certificate given as --input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    const Error err(ErrorKind::InvalidArgument, e.what());
    std::cout << err.to_json().dump(2) << "\n";
    return cli::exit_code(err.kind());
  }

  try {
    cli::apply_env_caps(config.caps);
    if (cap_cover != 0) config.caps.cover = cap_cover;
    if (cap_vertices != 0) config.caps.vertices = cap_vertices;
    if (app.count("--cap-cover") && cap_cover == 0) throw Error(ErrorKind::InvalidArgument, "--cap-cover must be positive");
    if (app.count("--cap-vertices") && cap_vertices == 0) {
      throw Error(ErrorKind::InvalidArgument, "--cap-vertices must be positive");
    }
    if (!n_text.empty()) config.n = cli::parse_n_range(n_text).first;
    if (!n_text.empty() && n_text.find("..") != std::string::npos) {
      throw Error(ErrorKind::InvalidArgument, "--n takes a single count; use --n-range for a range");
    }
    if (!range_text.empty()) config.n_range = cli::parse_n_range(range_text);
    config.level = parse_level(level_text);
    if (!format_text.empty()) config.format = cli::parse_format(format_text);
  } catch (const Error& e) {
    std::cout << e.to_json().dump(2) << "\n";
    return cli::exit_code(e.kind());
  }
  return cli::run(config, std::cout);
}
