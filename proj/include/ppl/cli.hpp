#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ppl/harness.hpp"

namespace ppl::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitConfig = 2;

enum class Format { json, csv, text };

struct RunConfig {
    std::string command;  // verify | finite-table | coeffs
    std::string check;    // verify target
    CheckParams cp;
    int n_hi = -1;  // n range upper end; -1 for a single n
    Format format = Format::text;
    std::string matrix = "small";
};

// Sample tasks named by a replay document: a single per-sample record, an
// array of records, or a whole report (its failing records, or all of them if
// none failed).
std::vector<SampleTask> replay_tasks(const nlohmann::json& doc);

// Fills A, m and M from PPL_PRECISION, PPL_RIEMANN_M and PPL_SERIES_M where
// they are still zero. Throws std::invalid_argument on malformed values.
void apply_env(CheckParams& cp);

// Runs a parsed configuration; returns the process exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv and runs it.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ppl::cli
