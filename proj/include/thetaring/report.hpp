#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace thetaring {

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "skipped";
    }
}

inline CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::Pass;
    if (s == "fail") return CheckStatus::Fail;
    if (s == "skipped") return CheckStatus::Skipped;
    throw std::domain_error("unknown check status '" + s + "'");
}

struct CheckRecord {
    std::string name;
    nlohmann::json params;
    CheckStatus status;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteReport {
    std::vector<CheckRecord> records;

    void add(CheckRecord r) { records.push_back(std::move(r)); }
    void merge(const SuiteReport& other) {
        records.insert(records.end(), other.records.begin(), other.records.end());
    }
    bool all_pass() const {
        for (const auto& r : records)
            if (r.status == CheckStatus::Fail) return false;
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& r : records)
            checks.push_back({{"name", r.name},
                              {"params", r.params},
                              {"status", to_string(r.status)},
                              {"detail", r.detail},
                              {"seconds", r.seconds}});
        return {{"checks", checks}, {"all_pass", all_pass()}};
    }

    static SuiteReport from_json(const nlohmann::json& j) {
        SuiteReport report;
        for (const auto& c : j.at("checks"))
            report.add(CheckRecord{c.at("name").get<std::string>(), c.at("params"),
                                   status_from_string(c.at("status").get<std::string>()),
                                   c.at("detail").get<std::string>(),
                                   c.at("seconds").get<double>()});
        return report;
    }

    std::string to_text() const {
        std::string out;
        std::size_t passed = 0, failed = 0, skipped = 0;
        for (const auto& r : records) {
            switch (r.status) {
                case CheckStatus::Pass: out += "[pass] "; ++passed; break;
                case CheckStatus::Fail: out += "[FAIL] "; ++failed; break;
                case CheckStatus::Skipped: out += "[skip] "; ++skipped; break;
            }
            out += r.name;
            if (!r.detail.empty()) out += "  (" + r.detail + ")";
            out += "\n";
        }
        out += "----\n";
        out += std::to_string(passed) + " passed, " + std::to_string(failed) + " failed, " +
               std::to_string(skipped) + " skipped\n";
        return out;
    }
};

}  // namespace thetaring
