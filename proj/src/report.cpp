#include "conifold/report.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>

namespace conifold {

void VerificationReport::pass(const std::string& id, const std::string& details) {
    checks.push_back({id, Status::Pass, details});
}
void VerificationReport::fail(const std::string& id, const std::string& details) {
    checks.push_back({id, Status::Fail, details});
}
void VerificationReport::discrepancy(const std::string& id, const std::string& details) {
    checks.push_back({id, Status::ReportedDiscrepancy, details});
}

long long VerificationReport::passCount() const {
    long long n = 0;
    for (const auto& c : checks)
        if (c.status == Status::Pass) ++n;
    return n;
}
long long VerificationReport::failCount() const {
    long long n = 0;
    for (const auto& c : checks)
        if (c.status == Status::Fail) ++n;
    return n;
}
long long VerificationReport::discrepancyCount() const {
    long long n = 0;
    for (const auto& c : checks)
        if (c.status == Status::ReportedDiscrepancy) ++n;
    return n;
}

std::string VerificationReport::to_json(bool withTimestamp) const {
    nlohmann::json j;
    j["suite"] = suite;
    j["parameters"] = parameters;
    j["toolVersion"] = toolVersion;
    if (withTimestamp) {
        auto now = std::chrono::system_clock::now().time_since_epoch();
        j["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(now).count();
    }
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        const char* s = c.status == Status::Pass ? "pass"
                        : c.status == Status::Fail ? "fail"
                                                   : "reported-discrepancy";
        j["checks"].push_back({{"id", c.id}, {"status", s}, {"details", c.details}});
    }
    j["summary"] = {{"pass", passCount()},
                    {"fail", failCount()},
                    {"reported-discrepancy", discrepancyCount()}};
    return j.dump(2);
}

std::string VerificationReport::table() const {
    std::ostringstream os;
    os << "== " << suite;
    if (!parameters.empty()) os << " (" << parameters << ")";
    os << " ==\n";
    for (const auto& c : checks) {
        const char* s = c.status == Status::Pass ? "PASS"
                        : c.status == Status::Fail ? "FAIL"
                                                   : "NOTE";
        os << "  [" << s << "] " << c.id;
        if (!c.details.empty()) os << ": " << c.details;
        os << "\n";
    }
    os << "  " << passCount() << " passed, " << failCount() << " failed, "
       << discrepancyCount() << " reported discrepancies\n";
    return os.str();
}

}  // namespace conifold
