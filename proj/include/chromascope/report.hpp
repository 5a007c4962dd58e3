#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace chromascope {

inline constexpr int kReportSchema = 1;

struct CheckRow {
    std::string name;
    nlohmann::json expected;
    nlohmann::json actual;
    bool pass = false;
    std::optional<double> tolerance;
};

/// Structured outcome of one CLI command. Every result carries a provenance
/// string ("exact", "closed-form", "monte-carlo seed=... samples=...", ...).
class RunReport {
public:
    explicit RunReport(std::string command) : command_(std::move(command)) {}

    const std::string& command() const { return command_; }

    void set_input(const std::string& key, nlohmann::json value) { inputs_[key] = std::move(value); }
    void add_result(const std::string& key, nlohmann::json value, const std::string& provenance);
    void add_check(std::string name, nlohmann::json expected, nlohmann::json actual, bool pass,
                   std::optional<double> tolerance = std::nullopt);

    const nlohmann::json& inputs() const { return inputs_; }
    const nlohmann::json& results() const { return results_; }
    const std::vector<CheckRow>& checks() const { return checks_; }

    bool all_passed() const;
    int exit_code() const { return all_passed() ? 0 : 1; }

    /// Tabular side output (curve points, deviation trials).
    void set_csv(std::string csv) { csv_ = std::move(csv); }
    const std::string& csv() const { return csv_; }

    nlohmann::json to_json() const;
    std::string to_text() const;

private:
    std::string command_;
    nlohmann::json inputs_ = nlohmann::json::object();
    nlohmann::json results_ = nlohmann::json::object();
    std::vector<CheckRow> checks_;
    std::string csv_;
};

}  // namespace chromascope
