#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "ballotlab/permutation.hpp"
#include "ballotlab/stat_table.hpp"

namespace ballotlab {

/// Canonical cycle decomposition: each cycle rotated to start at its
/// minimum, cycles sorted by minimum; together they partition [n].
struct CycleForm {
    std::vector<std::vector<int>> cycles;
    int n = 0;

    bool operator==(const CycleForm&) const = default;
    std::string to_string() const;
};

CycleForm cycle_decomposition(const Permutation& p);
Permutation permutation_from_cycles(const CycleForm& cf);

/// Cyclic descents/ascents of one cycle, read around the cycle with
/// c_{k+1} = c_1. For a singleton the comparison c_1 > c_1 is false both
/// ways, so cdes = casc = 0 (the |c| = cdes + casc identity holds only
/// for |c| >= 2). Throws std::invalid_argument on an empty cycle.
int cdes(std::span<const int> cycle);
int casc(std::span<const int> cycle);

/// True iff every cycle length is odd.
bool is_odd_order(const Permutation& p);

/// Sum over cycles of min(cdes, casc); fixed points contribute 0.
int m_stat(const Permutation& p);

/// Counts |O_n(d)| of odd order permutations with m_stat = d, for all
/// n <= n_max, by filtering S_n. Stat name "M".
StatTable odd_order_table(int n_max);

/// The same table computed purely arithmetically from the recurrence
///   |O_{n+1}(d)| = |O_n(d)| + sum_{i>=1} sum_{k>=i} 2 C(n,2k) E(2k,i-1) |O_{n-2k}(d-i)|
/// seeded by |O_0(0)| = 1. No enumeration, so n_max is bounded only by
/// runtime, not by the enumeration limit.
StatTable spiro_recurrence_table(int n_max);

/// Number of ballot permutations of length n with d descents that contain
/// the contiguous factor i,n,j. Requires 1 <= i,j <= n-1 and i != j.
mpz_class factor_count_ballot(int n, int d, int i, int j);

/// Number of odd order permutations of length n with m_stat = d whose
/// cycle through n visits i -> n -> j. Same domain requirements.
mpz_class cyclic_factor_count_odd(int n, int d, int i, int j);

struct ConjectureRecord {
    int n, d, i, j;
    mpz_class lhs, rhs;
    bool equal;
};

/// All instances b_{n,d}(1,j) + b_{n,d}(j,1) vs 2 p_{n,d}(1,j) for
/// 2 <= j <= n-1 and every d that occurs, for each n <= n_max.
std::vector<ConjectureRecord> conjecture_records(int n_max);

}  // namespace ballotlab
