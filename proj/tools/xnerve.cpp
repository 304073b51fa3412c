#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "xnerve/cli.hpp"

int main(int argc, char** argv) {
  using namespace xnerve;
  CLI::App app{"Nerves of finite crossed monoids"};
  std::string    command, file, dims, json_out, pi;
  std::uint64_t  seed = 0;
  CommandOptions opts;
  app.add_option("command", command, "command to run")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("file", file, "crossed monoid document (JSON)")->required();
  app.add_option("--dims", dims, "dimension range A..B");
  app.add_option("--max-cells", opts.max_cells, "cell budget per level");
  app.add_option("--json", json_out, "write the report as JSON");
  app.add_option("--basepoint", opts.basepoint, "base object");
  app.add_option("--pi", pi, "homotopy degrees, e.g. 1,2");
  auto* seed_opt = app.add_option("--seed", seed, "sample instead of exhausting");
  try {
    app.parse(argc, argv);
    if (!dims.empty()) {
      opts.dims = parse_dims(dims);
    }
    if (!pi.empty()) {
      opts.pi = parse_pi(pi);
    }
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kStructural;
  } catch (std::invalid_argument const& e) {
    std::cerr << "xnerve: " << e.what() << "\n";
    return kStructural;
  }
  if (*seed_opt) {
    opts.seed = seed;
  }

  auto res = run_file(file, command, opts);
  (res.status == kStructural ? std::cerr : std::cout) << res.text;
  if (!json_out.empty()) {
    std::ofstream out(json_out, std::ios::binary);
    out << res.json;
    if (!out) {
      std::cerr << "xnerve: cannot write " << json_out << "\n";
      return kStructural;
    }
  }
  return res.status;
}
