#include "ballotlab/gf_builders.hpp"

#include <stdexcept>

#include "ballotlab/eulerian.hpp"

namespace ballotlab {

namespace {

// exp((1-t)*sign*x) on the working box.
Series exp_linear(const TruncationBox& box, int sign) {
    Series arg(box);
    arg.add_term(exps(1), sign);
    arg.add_term(exps(1, 0, 1), -sign);
    return exp_series(arg);
}

Series eulerian_closed(const TruncationBox& box, int sign) {
    Series e = exp_linear(box, sign);  // e^{(1-t)x}
    Series num = e - mpq_class(1);
    Series den = Series::one(box) - Series::var(box, Var::T) * e;
    return num * inverse(den);
}

// x + 2 sum_{k>=1} sum_{0<=d<=k-1} E(2k,d) t^{d+1} x^{2k+1} / (2k+1)!
Series odd_block_exponent(const TruncationBox& box) {
    Series s(box);
    s.add_term(exps(1), 1);
    for (int k = 1; 2 * k + 1 <= box.bound(Var::X); ++k) {
        const mpq_class fac(2, factorial(2 * k + 1));
        for (int d = 0; d <= k - 1 && d + 1 <= box.bound(Var::T); ++d)
            s.add_term(exps(2 * k + 1, 0, d + 1), fac * eulerian(2 * k, d));
    }
    return s;
}

}  // namespace

Series gf_eulerian(const TruncationBox& box) {
    return eulerian_closed(box.inflated(), +1).truncated(box);
}

Series gf_eulerian_neg_x(const TruncationBox& box) {
    return eulerian_closed(box.inflated(), -1).truncated(box);
}

Series gf_ballot_count(const TruncationBox& box) {
    TruncationBox wb = box.inflated();
    Series num = Series::one(wb) + Series::var(wb, Var::X);
    Series den = Series::one(wb) - Series::var(wb, Var::X);
    return sqrt_series(num * inverse(den)).truncated(box);
}

Series gf_b_des(const TruncationBox& box) {
    TruncationBox wb = box.inflated();
    return exp_series(odd_block_exponent(wb)).truncated(box);
}

Series gf_o(const TruncationBox& box) { return gf_b_des(box); }

Series gf_o_ode_residual(const TruncationBox& box) {
    TruncationBox wb = box.inflated();
    Series o = exp_series(odd_block_exponent(wb));
    // 1 + 2t sum E(2k,d) t^d x^{2k} / (2k)!
    Series rate = Series::one(wb);
    for (int k = 1; 2 * k <= wb.bound(Var::X); ++k) {
        const mpq_class fac(2, factorial(2 * k));
        for (int d = 0; d <= k - 1 && d + 1 <= wb.bound(Var::T); ++d)
            rate.add_term(exps(2 * k, 0, d + 1), fac * eulerian(2 * k, d));
    }
    Series residual = derive_x(o) - o * rate;
    TruncationBox cmp = box;
    cmp.bounds[0] -= 1;  // d/dx is exact one order below the x bound
    return residual.truncated(cmp);
}

namespace {

// C = sum x^{2m} (1-y)^m / (2m)!  and  S = sum x^{2m+1} (1-y)^m / (2m+1)!
// (cosh and sinh of x sqrt(1-y) with one sqrt(1-y) factored out of S).
std::pair<Series, Series> cosh_sinh_split(const TruncationBox& box) {
    Series c(box), s(box);
    Series pow = Series::one(box);  // (1-y)^m
    Series base = Series::one(box) - Series::var(box, Var::Y);
    for (int m = 0; 2 * m <= box.bound(Var::X); ++m) {
        if (m > 0) pow = pow * base;
        for (const auto& [mono, coef] : pow.terms()) {
            Exps even = mono, odd = mono;
            even[Var::X] = 2 * m;
            odd[Var::X] = 2 * m + 1;
            c.add_term(even, coef / factorial(2 * m));
            if (2 * m + 1 <= box.bound(Var::X)) s.add_term(odd, coef / factorial(2 * m + 1));
        }
    }
    return {std::move(c), std::move(s)};
}

}  // namespace

Series gf_b_pk(const TruncationBox& box) {
    TruncationBox wb = box.inflated();
    auto [c, s] = cosh_sinh_split(wb);
    return sqrt_series((c + s) * inverse(c - s)).truncated(box);
}

Series gf_p_pk(const TruncationBox& box) {
    TruncationBox wb = box.inflated();
    auto [c, s] = cosh_sinh_split(wb);
    return (c * inverse(c - s)).truncated(box);
}

namespace {

// u, v, w on the working box, no final truncation.
UVW uvw_on(const TruncationBox& wb) {
    const Series one = Series::one(wb);
    const Series y = Series::var(wb, Var::Y);
    const Series t = Series::var(wb, Var::T);
    Series one_plus_t = one + t;
    Series yt = y * t;
    Series r = sqrt_series(one_plus_t * one_plus_t - mpq_class(4) * yt);

    // u = (1 + t^2 - 2yt - (1-t) r) / (2(1-y)t)
    Series u = div_exact(one + t * t - mpq_class(2) * yt - (one - t) * r,
                         mpq_class(2) * (one - y) * t);
    // v = ((1+t)^2 - 2yt - (1+t) r) / (2yt)
    Series v = div_exact(one_plus_t * one_plus_t - mpq_class(2) * yt - one_plus_t * r,
                         mpq_class(2) * yt);
    // w = exp(x (1+u)(1-v) / (1+uv))
    Series w = exp_series(div_exact(Series::var(wb, Var::X) * (one + u) * (one - v), one + u * v));
    return {std::move(u), std::move(v), std::move(w)};
}

// (1+u) v (w-1) / (y t (1+uv)(1-vw)) on the working box; both
// P^{(pk,des)} and B^{(pk,des)} hang off this correction term.
Series pk_des_correction(const TruncationBox& wb) {
    auto [u, v, w] = uvw_on(wb);
    const Series one = Series::one(wb);
    Series yt = Series::var(wb, Var::Y) * Series::var(wb, Var::T);
    Series num = (one + u) * v * (w - mpq_class(1));
    Series den = yt * (one + u * v) * (one - v * w);
    return div_exact(num, den);
}

}  // namespace

UVW gf_uvw(const TruncationBox& box) {
    if (box.guard < 2) throw std::domain_error("gf_uvw: guard must be at least 2");
    auto raw = uvw_on(box.inflated());
    return {raw.u.truncated(box), raw.v.truncated(box), raw.w.truncated(box)};
}

Series gf_p_pk_des(const TruncationBox& box) {
    TruncationBox wb = box.inflated();
    return (Series::one(wb) + pk_des_correction(wb)).truncated(box);
}

Series gf_b_pk_des(const TruncationBox& box) {
    TruncationBox wb = box.inflated();
    Series corr = pk_des_correction(wb);
    Series arg = (Series::one(wb) + Series::var(wb, Var::T)) * corr;
    return exp_series(d_trunc(ln1p_series(arg), Var::T, Var::X)).truncated(box);
}

Series gf_p_depth(const TruncationBox& box) {
    TruncationBox wb = box.inflated();
    const Series one = Series::one(wb);
    const Series x = Series::var(wb, Var::X);
    const Series z = Series::var(wb, Var::Z);
    Series inv_one_plus_z = inverse(one + z);

    Series expo(wb);
    expo.add_term(exps(1, 0, 0, 1), 1);  // xz
    for (int k = 1; 2 * k + 1 <= wb.bound(Var::X); ++k) {
        const mpq_class fac(2, factorial(2 * k + 1));
        for (int d = 0; d <= k - 1 && 2 * d + 1 <= wb.bound(Var::Z); ++d)
            expo.add_term(exps(2 * k + 1, 0, 0, 2 * d + 1), fac * eulerian(2 * k, k - 1 - d));
    }
    Series front = sqrt_series(one - x * x) * inverse(one - x) * inv_one_plus_z;
    return (z * inv_one_plus_z + front * exp_series(expo)).truncated(box);
}

mpz_class bnd_multinomial(int n, int d) {
    if (n < 1 || d < 0 || 2 * d > n - 1)
        throw std::domain_error("bnd_multinomial: need n >= 1 and 0 <= d <= (n-1)/2");
    // g[m][c] = sum over ordered i-tuples of blocks with sum(2k_j+1) = m,
    // sum(d_j+1) = c, for the current i, of prod E(2k_j,d_j)/(2k_j+1)!.
    std::vector<std::vector<mpq_class>> g(static_cast<size_t>(n) + 1,
                                          std::vector<mpq_class>(static_cast<size_t>(d) + 1, 0));
    g[0][0] = 1;
    mpq_class total = 0;
    const mpz_class nfac = factorial(n);
    mpz_class pow2 = 1;
    mpq_class ifac_inv = 1;
    for (int i = 0;; ++i) {
        if (i > 0) {
            // extend every tuple by one more block
            std::vector<std::vector<mpq_class>> next(
                static_cast<size_t>(n) + 1, std::vector<mpq_class>(static_cast<size_t>(d) + 1, 0));
            bool any = false;
            for (int m = 0; m <= n; ++m)
                for (int c = 0; c <= d; ++c) {
                    if (g[static_cast<size_t>(m)][static_cast<size_t>(c)] == 0) continue;
                    for (int k = 1; m + 2 * k + 1 <= n; ++k)
                        for (int e = 0; e <= k - 1 && c + e + 1 <= d; ++e) {
                            mpq_class w(eulerian(2 * k, e), factorial(2 * k + 1));
                            w.canonicalize();
                            if (w == 0) continue;
                            next[static_cast<size_t>(m + 2 * k + 1)][static_cast<size_t>(c + e + 1)] +=
                                g[static_cast<size_t>(m)][static_cast<size_t>(c)] * w;
                            any = true;
                        }
                }
            g = std::move(next);
            pow2 *= 2;
            ifac_inv /= i;
            if (!any) break;
        }
        // f fixed points fill the rest; the d_j sums must hit d exactly.
        for (int m = 0; m <= n; ++m) {
            if (g[static_cast<size_t>(m)][static_cast<size_t>(d)] == 0) continue;
            const int f = n - m;
            mpq_class weight(nfac * pow2, factorial(f));
            weight.canonicalize();
            total += weight * ifac_inv * g[static_cast<size_t>(m)][static_cast<size_t>(d)];
        }
    }
    total.canonicalize();
    if (total.get_den() != 1)
        throw std::domain_error("bnd_multinomial: sum did not come out an integer");
    return total.get_num();
}

}  // namespace ballotlab
