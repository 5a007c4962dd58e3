#include "chromascope/report.hpp"

#include <sstream>

#include "chromascope/format.hpp"

namespace chromascope {

namespace {

std::string scalar_text(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return format_double(v.get<double>());
    return v.dump();
}

}  // namespace

void RunReport::add_result(const std::string& key, nlohmann::json value, const std::string& provenance) {
    results_[key] = {{"value", std::move(value)}, {"provenance", provenance}};
}

void RunReport::add_check(std::string name, nlohmann::json expected, nlohmann::json actual, bool pass,
                          std::optional<double> tolerance) {
    checks_.push_back({std::move(name), std::move(expected), std::move(actual), pass, tolerance});
}

bool RunReport::all_passed() const {
    for (const auto& c : checks_)
        if (!c.pass) return false;
    return true;
}

nlohmann::json RunReport::to_json() const {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : checks_) {
        nlohmann::json row = {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}};
        row["tolerance"] = c.tolerance ? nlohmann::json(*c.tolerance) : nlohmann::json(nullptr);
        checks.push_back(std::move(row));
    }
    return {{"schema", kReportSchema},
            {"command", command_},
            {"inputs", inputs_},
            {"results", results_},
            {"checks", checks},
            {"passed", all_passed()}};
}

std::string RunReport::to_text() const {
    std::ostringstream os;
    os << "command: " << command_ << '\n';
    for (const auto& [key, value] : inputs_.items()) os << "  input " << key << " = " << scalar_text(value) << '\n';
    for (const auto& [key, entry] : results_.items())
        os << "  " << key << " = " << scalar_text(entry.at("value")) << "  [" << entry.at("provenance").get<std::string>()
           << "]\n";
    for (const auto& c : checks_) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name << ": expected " << scalar_text(c.expected) << ", actual "
           << scalar_text(c.actual);
        if (c.tolerance) os << ", tolerance " << format_double(*c.tolerance);
        os << '\n';
    }
    os << (all_passed() ? "all checks passed" : "some checks FAILED") << '\n';
    return os.str();
}

}  // namespace chromascope
