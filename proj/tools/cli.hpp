// Command-line front end.
//
// Exit codes: 0 proved or ok, 1 refuted or invalid certificate, 2 unknown
// (budget exhausted), 3 input error.

#ifndef IGCERT_TOOLS_CLI_HPP_
#define IGCERT_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace igcert::cli {

  enum exit_code : int { ok = 0, refuted = 1, unknown = 2, input_error = 3 };

  struct RunConfig {
    std::string                command;
    std::string                input;
    std::vector<std::string>   words;
    std::optional<std::size_t> max_len;
    std::size_t                max_nodes         = 100000;
    std::size_t                power_cap         = 8;
    std::size_t                budget_multiplier = 10;
    std::string                format            = "json";
    std::uint64_t              seed              = 1;
  };

  //! `args` excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace igcert::cli

#endif  // IGCERT_TOOLS_CLI_HPP_
