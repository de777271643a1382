#pragma once

#include <gmpxx.h>

#include <vector>

namespace ballotlab {

/// Eulerian numbers E(n,d) with the extended zero convention:
/// E(0,0) = 1 and E(n,d) = 0 when n < 0, d < 0, d = n >= 1, or d > n.
/// Rows are built once from the recurrence
///   E(n,d) = (d+1) E(n-1,d) + (n-d) E(n-1,d-1)
/// and cached for concurrent read.
class EulerianTable {
public:
    explicit EulerianTable(int n_max = 0) { grow(n_max); }

    void grow(int n_max);
    int n_max() const { return static_cast<int>(rows_.size()) - 1; }

    /// E(n,d) for arbitrary integers; convention fills out-of-range cells.
    const mpz_class& at(int n, int d) const;

    /// Row n = (E(n,0), ..., E(n,n-1)) for n >= 1; row 0 = (1).
    const std::vector<mpz_class>& row(int n) const { return rows_.at(static_cast<size_t>(n)); }

private:
    std::vector<std::vector<mpz_class>> rows_;
};

/// E(n,d) through a process-wide cached table (thread safe).
mpz_class eulerian(int n, int d);

/// Binomial coefficient by exact Pascal table; 0 outside 0 <= k <= n.
mpz_class binomial(int n, int k);

mpz_class factorial(int n);

/// n!! with (-1)!! = 0!! = 1.
mpz_class double_factorial(int n);

/// Number of ballot permutations of length n: [(n-1)!!]^2 for even n,
/// n!!(n-2)!! for odd n.
mpz_class ballot_count(int n);

}  // namespace ballotlab
