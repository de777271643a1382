#pragma once

#include "ballotlab/series.hpp"

namespace ballotlab {

// Closed-form builders for the generating functions of the toolkit. Each
// takes the nominal box, works internally with the guard-inflated box
// (divisions by t, yt and the like consume guard orders), and returns the
// result truncated back to the nominal bounds. All coefficients are
// exact; n! times the x^n coefficient recovers the integer count.

/// E(x,t) = (e^{(1-t)x} - 1) / (1 - t e^{(1-t)x}); the x^n t^d
/// coefficient times n! is the Eulerian number E(n,d).
Series gf_eulerian(const TruncationBox& box);

/// E(-x,t): the even/odd bookkeeping partner of gf_eulerian.
Series gf_eulerian_neg_x(const TruncationBox& box);

/// sqrt((1+x)/(1-x)): EGF of the ballot permutation counts b_n.
Series gf_ballot_count(const TruncationBox& box);

/// exp(x + 2 sum_{k>=1} sum_{d<=k-1} E(2k,d) t^{d+1} x^{2k+1}/(2k+1)!):
/// joint EGF of descents over ballot permutations.
Series gf_b_des(const TruncationBox& box);

/// Same closed form as gf_b_des; as the EGF of the M statistic over odd
/// order permutations it is the equidistribution statement itself.
Series gf_o(const TruncationBox& box);

/// d/dx O - O * (1 + 2t sum_{k>=1} sum_{d<=k-1} E(2k,d) t^d x^{2k}/(2k)!),
/// truncated to x-degree bound(x)-1; identically zero when the closed
/// form solves its defining differential equation.
Series gf_o_ode_residual(const TruncationBox& box);

/// Peak EGF over ballot permutations,
/// sqrt((C+S)/(C-S)) with C = sum x^{2m}(1-y)^m/(2m)! and
/// S = sum x^{2m+1}(1-y)^m/(2m+1)!; the sqrt(1-y) factors of
/// cosh/sinh(x sqrt(1-y)) cancel in the ratio, so every intermediate is a
/// true power series.
Series gf_b_pk(const TruncationBox& box);

/// Peak EGF over all permutations, C/(C-S) in the same notation.
Series gf_p_pk(const TruncationBox& box);

/// The algebraic pair u(y,t), v(y,t) built from r = sqrt((1+t)^2 - 4yt):
///   u = (1 + t^2 - 2yt - (1-t) r) / (2(1-y)t)
///   v = ((1+t)^2 - 2yt - (1+t) r) / (2yt)
/// and w = exp(x (1+u)(1-v) / (1+uv)).
struct UVW {
    Series u, v, w;
};
UVW gf_uvw(const TruncationBox& box);

/// (pk,des) joint EGF over all permutations,
/// 1 + (1+u) v (w-1) / (y t (1+uv)(1-vw)).
Series gf_p_pk_des(const TruncationBox& box);

/// (pk,des) joint EGF over ballot permutations,
/// exp(D^{t,x} ln(1 + (1+t)(1+u) v (w-1) / (y t (1+uv)(1-vw)))).
Series gf_b_pk_des(const TruncationBox& box);

/// Depth EGF over all permutations,
/// z/(1+z) + sqrt(1-x^2)/((1-x)(1+z)) *
///   exp(xz + 2 sum_{k>=1} sum_{d<=k-1} E(2k,k-1-d) z^{2d+1} x^{2k+1}/(2k+1)!).
Series gf_p_depth(const TruncationBox& box);

/// Evaluates the multinomial expansion of the ballot descent counts:
/// summing over the ways to assemble the count from fixed points and odd
/// blocks of size 2k_j+1 weighted by 2 E(2k_j, d_j), the total
///   sum n! 2^i / (f! i! prod (2k_j+1)!) * prod E(2k_j, d_j)
/// over f + sum(2k_j+1) = n and sum(d_j+1) = d. The rational sum must
/// come out an integer; std::domain_error otherwise.
mpz_class bnd_multinomial(int n, int d);

}  // namespace ballotlab
