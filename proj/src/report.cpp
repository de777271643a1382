#include "ballotlab/report.hpp"

namespace ballotlab {

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["identity"] = identity;
    if (parameters.contains("n")) j["n"] = parameters["n"];
    if (!parameters.empty()) j["parameters"] = parameters;
    j["status"] = pass ? "pass" : "fail";
    if (counterexample) j["counterexample"] = *counterexample;
    j["elapsed_ms"] = elapsed.count();
    return j;
}

VerificationReport timed_report(const std::string& identity,
                                const std::function<void(VerificationReport&)>& fn) {
    VerificationReport rep;
    rep.identity = identity;
    auto t0 = std::chrono::steady_clock::now();
    fn(rep);
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return rep;
}

}  // namespace ballotlab
