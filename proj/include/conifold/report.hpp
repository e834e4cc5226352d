#pragma once

#include <string>
#include <vector>

namespace conifold {

// Machine-readable verification report shared by all CLI subcommands.
struct VerificationReport {
    enum class Status { Pass, Fail, ReportedDiscrepancy };
    struct Check {
        std::string id;
        Status status;
        std::string details;
    };

    std::string suite;
    std::string parameters;
    std::vector<Check> checks;
    std::string toolVersion = "conifold 1.0.0";

    void pass(const std::string& id, const std::string& details = "");
    void fail(const std::string& id, const std::string& details = "");
    void discrepancy(const std::string& id, const std::string& details);

    long long passCount() const;
    long long failCount() const;
    long long discrepancyCount() const;
    bool ok() const { return failCount() == 0; }

    std::string to_json(bool withTimestamp = true) const;
    std::string table() const;  // human-readable summary
};

}  // namespace conifold
