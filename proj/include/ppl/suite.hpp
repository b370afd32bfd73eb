#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ppl/harness.hpp"
#include "ppl/report.hpp"

namespace ppl::suite {

struct Options {
    u64 seed = 1;
    int jobs = 1;
};

// One acceptance criterion: its verdict plus every report it ran.
struct Criterion {
    int id = 0;
    std::string name;
    bool pass = true;
    std::vector<Report> reports;
    std::vector<std::string> notes;  // informational, never affects `pass`
};

inline constexpr int kCriteria = 13;

std::string criterion_name(int id);

Criterion run_criterion(int id, const Options& opt);

// All criteria in order; on_done fires as each finishes.
std::vector<Criterion> run_all(const Options& opt, const std::function<void(const Criterion&)>& on_done = {});

// "PASS  3 uniqueness  (11 runs, 11 records)" plus failing runs.
std::string summary_line(const Criterion& c);

nlohmann::ordered_json to_json(const Criterion& c);

}  // namespace ppl::suite
