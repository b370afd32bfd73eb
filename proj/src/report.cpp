#include "ppl/report.hpp"

#include <algorithm>
#include <sstream>

namespace ppl {

namespace {

std::string csv_cell(const nlohmann::ordered_json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

}  // namespace

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["schemaVersion"] = kReportSchemaVersion;
    j["check"] = check;
    for (const auto& [key, value] : params.items()) j[key] = value;
    j["pass"] = pass;
    j["failures"] = failures();
    j["perSample"] = per_sample;
    return j;
}

std::string Report::to_csv() const {
    std::ostringstream os;
    std::vector<std::string> param_keys, sample_keys;
    for (const auto& [key, value] : params.items()) param_keys.push_back(key);
    for (const auto& r : per_sample)
        for (const auto& [key, value] : r.items())
            if (std::find(sample_keys.begin(), sample_keys.end(), key) == sample_keys.end()) sample_keys.push_back(key);
    os << "check";
    for (const auto& k : param_keys) os << ',' << k;
    for (const auto& k : sample_keys) os << ',' << k;
    os << '\n';
    for (const auto& r : per_sample) {
        os << check;
        for (const auto& k : param_keys) os << ',' << csv_cell(params[k]);
        for (const auto& k : sample_keys) os << ',' << (r.contains(k) ? csv_cell(r[k]) : std::string());
        os << '\n';
    }
    return os.str();
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << check << ": " << (pass ? "PASS" : "FAIL") << " (" << per_sample.size() - failures() << "/"
       << per_sample.size() << " records pass)";
    for (const auto& [key, value] : params.items()) os << "\n  " << key << " = " << value.dump();
    for (const auto& r : per_sample)
        if (!r.value("pass", false)) os << "\n  failing: " << r.dump();
    os << '\n';
    return os.str();
}

}  // namespace ppl
