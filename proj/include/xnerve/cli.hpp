#ifndef XNERVE_CLI_HPP_
#define XNERVE_CLI_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xnerve/io.hpp"
#include "xnerve/nerve.hpp"

namespace xnerve {

  enum ExitStatus : int {
    kPass       = 0,
    kStructural = 1,
    kProperty   = 2,
    kCapacity   = 3,
    kRefused    = 4,
  };

  struct CommandOptions {
    std::optional<std::pair<int, int>> dims;
    std::uint64_t                      max_cells = kDefaultCellCap;
    std::uint32_t                      basepoint = 0;
    std::vector<int>                   pi        = {1, 2};
    std::optional<std::uint64_t>       seed;
  };

  struct CommandResult {
    int         status = kPass;
    std::string text;  // human-readable report
    std::string json;  // the same report as a JSON document
  };

  std::vector<std::string> const& command_names();

  // "2..3" or "4"; throws std::invalid_argument.
  std::pair<int, int> parse_dims(std::string_view s);
  // "1,2,3"; throws std::invalid_argument.
  std::vector<int> parse_pi(std::string_view s);

  CommandResult run_command(InputDocument const& doc, std::string_view command,
                            CommandOptions const& opts);

  // Reads and parses `path` first; parse and I/O failures come back as
  // status 1 reports.
  CommandResult run_file(std::string const& path, std::string_view command,
                         CommandOptions const& opts);

}  // namespace xnerve

#endif  // XNERVE_CLI_HPP_
