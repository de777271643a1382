#pragma once

#include <vector>

#include "ballotlab/permutation.hpp"
#include "ballotlab/report.hpp"

namespace ballotlab {

/// A pair of words whose standardizations are both ballot and whose
/// concatenation is a permutation of [|rho|+|tau|].
struct SplitPair {
    std::vector<int> rho;
    std::vector<int> tau;

    bool operator==(const SplitPair&) const = default;
};

/// True iff the pair satisfies the SplitPair invariants.
bool is_valid_split_pair(const SplitPair& pair);

/// The reversal-concatenation map: (rho, tau) -> reverse(rho)·tau.
/// Throws std::invalid_argument when the invariants fail. Its descent
/// count satisfies
///   des(phi(rho,tau)) = l - 1 - des(rho) + des(tau) + [rho empty or rho_1 > tau_1]
/// with l = |rho| (for (rho,tau) != (e,e)).
Permutation phi(const SplitPair& pair);

/// Inverse of phi on permutations with des = d: cut before the first
/// lowest position, reversing the prefix. Throws std::domain_error on the
/// empty permutation.
SplitPair split_at_first_lowest(const Permutation& p);

/// Inverse of phi on permutations with des = d-1: cut after the last
/// lowest position.
SplitPair split_at_last_lowest(const Permutation& p);

/// Checks, with every table built by enumeration, that for all k >= 0 and
/// 0 <= d <= n with (n,k,d) != (0,0,1):
///   p_n(k,d) + p_n(k,d-1)
///     = sum_{l,i,j} C(n,l) b_l(i,j) b_{n-l}(k-i, d-l+j)
/// where p_n / b_l are the (pk,des) joint counts over S_n / B_l.
VerificationReport verify_e17(int n);

/// The depth-refined analogue: for all (k,h,d) with (n,k,h,d) != (0,0,1,1):
///   p_n(k,h,d) + p_n(k,h-1,d-1)
///     = sum_{i,j} C(n,2i+h) b_{2i+h}(j,i) b_{n-2i-h}(k-j, d-i-h)
/// where p_n counts (pk,depth,des) over S_n.
VerificationReport verify_e21(int n);

}  // namespace ballotlab
