#ifndef SPS_TOOLS_COMMANDS_HPP
#define SPS_TOOLS_COMMANDS_HPP

#include <map>
#include <optional>
#include <string>

#include <sps/search.hpp>

namespace sps::tools {

// Exit codes shared by every subcommand: 0 success / verified,
// 1 domain failure (verification failed, expectation not met),
// 2 usage or I/O error.
constexpr int kExitOk = 0;
constexpr int kExitDomainFailure = 1;
constexpr int kExitUsage = 2;

int cmd_construct(const std::string& name,
                  const std::map<std::string, std::string>& params,
                  const std::string& out_path);

int cmd_verify(const std::string& in_path, const std::string& profile_text);

int cmd_dualize(const std::string& in_path, const std::string& kind,
                const std::string& out_path);

int cmd_bounds(const std::string& profile_text, unsigned n);

struct SearchArgs {
    std::string profile_text;
    std::optional<std::size_t> m;      // decide one size; unset = maximize
    SearchLimits limits;
    SearchOptions options;
    std::optional<bool> expect_sat;    // --expect-sat / --expect-unsat
    std::string witness_out;           // optional path
};

int cmd_search(const SearchArgs& args);

} // namespace sps::tools

#endif
