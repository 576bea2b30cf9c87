#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace pebbling::cli {

enum class Command { table, sequence, enumerate, constants, asymptotic, w0, verify };
enum class Format { text, csv, json };

struct RunConfig {
    Command command = Command::sequence;
    long k_max = 20;
    long m_max = -1;     // -1: command-specific default
    long max_steps = 6;
    long l_max = 10;
    int digits = 15;
    long order = 0;      // 0: derived from the command's needs
    Format format = Format::text;
    std::string out_path;             // empty: stdout
    std::uint64_t state_budget = 20'000'000;  // enumeration ceiling
};

// Exit codes: 0 ok, 1 verification failure, 2 usage error,
// 3 resource ceiling (partial results emitted).
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

// Execute one command, writing the emitted artifact to `out` and
// diagnostics to `err`.  Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parse argv (CLI11) and dispatch.  `stdout_is_tty` selects the default
// format (text on a terminal, json when piped) when --format is absent.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            bool stdout_is_tty);

}  // namespace pebbling::cli
