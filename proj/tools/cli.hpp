#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sigbary::cli {

enum class Command { Sig, Bary, Recover, NormalForm, Verify, Dim };

struct CliConfig {
    Command command = Command::Verify;
    std::size_t level = 2;
    std::optional<std::size_t> dim;
    std::vector<std::string> inputs;
    std::vector<std::size_t> alpha;
    std::optional<std::string> omega;
    std::optional<std::string> svg;
    bool check = false;
    bool show_poly = false;
    std::size_t samples = 2;
    std::size_t instances = 50;
    std::uint64_t seed = 20240917;
};

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Parses and runs one command. Arguments exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs an already parsed configuration.
int execute(const CliConfig& config, std::ostream& out, std::ostream& err);

} // namespace sigbary::cli
