#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ballotlab/report.hpp"
#include "ballotlab/series.hpp"
#include "ballotlab/stat_table.hpp"

namespace ballotlab {

/// EGF built from enumerated counts: each table entry (n, values) adds
/// count/n! at the exponent vector chosen by to_exps. Entries mapped
/// outside the box are dropped.
Series egf_from_table(const StatTable& table, const TruncationBox& box,
                      const std::function<Exps(int, const std::vector<int>&)>& to_exps);

/// Series equality with the first differing monomial recorded as a
/// counterexample; returns rep.pass.
bool compare_series(VerificationReport& rep, const Series& lhs, const Series& rhs);

/// One verifiable identity. n_max is the identity's scale knob: the top
/// permutation length for enumeration-backed checks, or the x-degree for
/// pure series identities.
struct IdentityCheck {
    std::string name;
    std::string summary;
    int default_n_max;
    std::function<std::vector<VerificationReport>(int n_max)> run;
};

/// All identities reachable from the CLI, in stable order.
const std::vector<IdentityCheck>& identity_registry();

/// Runs one identity by name at n_max (default when absent). Throws
/// std::invalid_argument for unknown names.
std::vector<VerificationReport> run_identity(const std::string& name,
                                             std::optional<int> n_max = std::nullopt);

}  // namespace ballotlab
