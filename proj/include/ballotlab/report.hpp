#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

namespace ballotlab {

/// Outcome of one identity check. Failures carry the first counterexample
/// found, with both sides' exact values, instead of throwing: a run over
/// many n aggregates reports and decides the exit code at the end.
struct VerificationReport {
    std::string identity;
    nlohmann::json parameters = nlohmann::json::object();
    bool pass = true;
    std::optional<nlohmann::json> counterexample;
    std::chrono::milliseconds elapsed{0};

    void fail(nlohmann::json ce) {
        if (pass) {
            pass = false;
            counterexample = std::move(ce);
        }
    }

    nlohmann::json to_json() const;
};

/// Runs fn, filling in elapsed time.
VerificationReport timed_report(const std::string& identity,
                                const std::function<void(VerificationReport&)>& fn);

}  // namespace ballotlab
