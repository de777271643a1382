#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ballotlab/permutation.hpp"

namespace ballotlab {

enum class Stat { Des, Asc, Pk, Depth, Height };
enum class GroundSet { All, Ballot };

/// Throws std::invalid_argument on unknown identifiers.
Stat parse_stat(std::string_view name);
std::string_view stat_name(Stat s);
int eval_stat(Stat s, std::span<const int> word);

/// Exact joint-distribution counts indexed by (n, value tuple). Rows are
/// kept in a sorted map, so iteration order is the canonical export order
/// (by n, then by value tuple lexicographically).
class StatTable {
public:
    using Key = std::pair<int, std::vector<int>>;

    StatTable() = default;
    StatTable(std::vector<std::string> stat_names, int n_max)
        : stat_names_(std::move(stat_names)), n_max_(n_max) {}

    const std::vector<std::string>& stat_names() const { return stat_names_; }
    int n_max() const { return n_max_; }
    const std::map<Key, mpz_class>& entries() const { return entries_; }

    void add(int n, std::vector<int> values, const mpz_class& count = 1);
    /// Count for (n, values); 0 when absent.
    mpz_class at(int n, const std::vector<int>& values) const;
    /// All entries of length n as value-tuple -> count.
    std::map<std::vector<int>, mpz_class> row(int n) const;
    mpz_class row_sum(int n) const;

    /// Additive merge; requires identical stat_names. Associative and
    /// order-independent, so partitioned builds can combine freely.
    void merge(const StatTable& other);

    bool operator==(const StatTable&) const = default;

    /// CSV with header "n,<stat names...>,count", canonical row order.
    std::string to_csv() const;
    /// JSON array of row objects; counts are decimal strings (they
    /// outgrow 64-bit integers quickly).
    std::string to_json() const;

private:
    std::vector<std::string> stat_names_;
    std::map<Key, mpz_class> entries_;
    int n_max_ = -1;
};

/// Joint distribution of the given statistics over S_n (GroundSet::All)
/// or B_n (GroundSet::Ballot) for every n <= n_max.
StatTable make_stat_table(int n_max, GroundSet ground, const std::vector<Stat>& stats);
StatTable make_stat_table(int n_max, GroundSet ground, const std::vector<std::string>& stats);

}  // namespace ballotlab
