#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace ppl {

inline constexpr int kReportSchemaVersion = 1;

// Outcome of one verification run. `params` holds everything needed to
// reproduce the run (prime, degree, precisions, seed, modulus); each
// per-sample record carries its own "pass" flag.
struct Report {
    std::string check;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::vector<nlohmann::ordered_json> per_sample;
    bool pass = true;

    void add_sample(nlohmann::ordered_json record) {
        if (!record.value("pass", false)) pass = false;
        per_sample.push_back(std::move(record));
    }

    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& r : per_sample)
            if (!r.value("pass", false)) ++n;
        return n;
    }

    nlohmann::ordered_json to_json() const;
    // Flat projection: one row per sample, params repeated in leading columns.
    std::string to_csv() const;
    std::string to_text() const;
};

}  // namespace ppl
