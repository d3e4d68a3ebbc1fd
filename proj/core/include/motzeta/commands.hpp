#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

namespace motzeta {

// exit-code contract shared by run() and the CLI binary
inline constexpr int kExitOk = 0;          // success / verification passed
inline constexpr int kExitVerifyFail = 1;  // verification failed or no rational fit
inline constexpr int kExitUsage = 2;       // usage, parse or file errors
inline constexpr int kExitBudget = 3;      // enumeration budget exceeded

struct ZetaCmd {
    std::string expr;
    std::uint64_t q = 0;
    int order = 0;  // when > 0, the output also carries the series expansion
};
struct CountCmd {
    std::string expr;
    std::uint64_t q = 0;
    int n_max = 1;
};
struct CountVarietyCmd {
    std::string spec_file;
    int n_max = 1;
};
struct ReconstructCmd {
    std::string counts_file;
};
struct VerifyLefschetzCmd {
    std::string spec_file;
    std::string cohomology_file;
    int n_max = 1;
};
struct WittOpCmd {
    std::string op;  // add | mul | neg
    std::string lhs_file;
    std::string rhs_file;  // unused for neg
};
struct CheckCmd {
    std::string kind;  // functional-equation | weil-bound
    std::string zeta_file;
    std::uint64_t q = 0;
    unsigned g = 0;
};

using Command = std::variant<ZetaCmd, CountCmd, CountVarietyCmd, ReconstructCmd,
                             VerifyLefschetzCmd, WittOpCmd, CheckCmd>;

// Enumeration budget: MOTZETA_BUDGET env var when set, default 2^24 otherwise.
std::uint64_t enumeration_budget();

// Executes the command, writing one JSON document to out and diagnostics to
// err; returns the exit code per the contract above.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

}  // namespace motzeta
