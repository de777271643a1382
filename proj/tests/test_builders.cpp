#include <doctest.h>

#include "ballotlab/cycles.hpp"
#include "ballotlab/enumerate.hpp"
#include "ballotlab/eulerian.hpp"
#include "ballotlab/gf_builders.hpp"
#include "ballotlab/identities.hpp"
#include "ballotlab/stat_table.hpp"

using namespace ballotlab;

namespace {

// n! [x^n y^k t^d z^e] as an exact integer
mpz_class count_at(const Series& s, int n, int k = 0, int d = 0, int e = 0) {
    return egf_count(s, Exps{{n, k, d, e}});
}

}  // namespace

TEST_SUITE_BEGIN("builders");

TEST_CASE("Eulerian EGF rows") {
    Series e = gf_eulerian(TruncationBox(8, 0, 8, 0, 2));
    CHECK(count_at(e, 1, 0, 0) == 1);
    CHECK(count_at(e, 1, 0, 1) == 0);
    CHECK(count_at(e, 4, 0, 0) == 1);
    CHECK(count_at(e, 4, 0, 1) == 11);
    CHECK(count_at(e, 4, 0, 2) == 11);
    CHECK(count_at(e, 4, 0, 3) == 1);
    for (int n = 1; n <= 8; ++n)
        for (int d = 0; d <= n; ++d) CHECK(count_at(e, n, 0, d) == eulerian(n, d));
    CHECK(e.coeff(Exps{}) == 0);
}

TEST_CASE("E + 1 is the descent EGF over S_n") {
    TruncationBox box(6, 0, 6, 0, 2);
    Series e = gf_eulerian(box) + mpq_class(1);
    Series p_des = egf_from_table(make_stat_table(6, GroundSet::All, {Stat::Des}), box,
                                  [](int n, const std::vector<int>& v) { return exps(n, 0, v[0]); });
    CHECK(e == p_des);
}

TEST_CASE("ballot count EGF") {
    Series g = gf_ballot_count(TruncationBox(5, 0, 0, 0, 2));
    mpq_class expected[] = {1, 1, {1, 2}, {1, 2}, {3, 8}, {3, 8}};
    for (int n = 0; n <= 5; ++n) CHECK(g.coeff(exps(n)) == expected[n]);
}

TEST_CASE("descent EGF over ballot permutations: pinned rows") {
    Series b = gf_b_des(TruncationBox(7, 0, 7, 0, 2));
    CHECK(count_at(b, 0) == 1);
    // the identity permutation is the unique descent-free ballot permutation
    for (int n = 0; n <= 7; ++n) CHECK(count_at(b, n, 0, 0) == 1);
    CHECK(count_at(b, 3, 0, 0) == 1);
    CHECK(count_at(b, 3, 0, 1) == 2);
    CHECK(count_at(b, 4, 0, 1) == 8);
    CHECK(count_at(b, 5, 0, 1) == 22);
    CHECK(count_at(b, 5, 0, 2) == 22);
    CHECK(count_at(b, 6, 0, 1) == 52);
    CHECK(count_at(b, 6, 0, 2) == 172);
    CHECK(count_at(b, 7, 0, 1) == 114);
    CHECK(count_at(b, 7, 0, 2) == 856);
    CHECK(count_at(b, 7, 0, 3) == 604);

    // setting t = 1 recovers the plain ballot counts
    Series at1 = specialize(b, Var::T, 1);
    for (int n = 0; n <= 7; ++n) CHECK(egf_count(at1, exps(n)) == ballot_count(n));
}

TEST_CASE("only odd x-powers carry t beyond the bare x term") {
    Series b = gf_b_des(TruncationBox(8, 0, 8, 0, 2));
    // the exponent series itself: ln of the EGF
    Series lnb = ln1p_series(b - mpq_class(1));
    for (const auto& [m, c] : lnb.terms()) {
        if (m[Var::T] == 0) continue;
        CHECK(m[Var::X] % 2 == 1);
        CHECK(m[Var::X] >= 3);
    }
}

TEST_CASE("peak EGF over ballot permutations: pinned rows") {
    Series b = gf_b_pk(TruncationBox(5, 5, 0, 0, 2));
    CHECK(count_at(b, 4, 1) == 8);
    CHECK(count_at(b, 5, 0) == 1);
    CHECK(count_at(b, 5, 1) == 28);
    CHECK(count_at(b, 5, 2) == 16);
}

TEST_CASE("squared peak EGF identity against the closed peak EGF") {
    TruncationBox box(7, 7, 0, 0, 2);
    Series b = gf_b_pk(box);
    Series p = gf_p_pk(box);
    CHECK(b * b == mpq_class(2) * p - mpq_class(1));
    // and the closed P^{pk} is really the peak EGF
    Series p_enum = egf_from_table(make_stat_table(6, GroundSet::All, {Stat::Pk}),
                                   TruncationBox(6, 6, 0, 0, 2),
                                   [](int n, const std::vector<int>& v) { return exps(n, v[0]); });
    CHECK(p.truncated(TruncationBox(6, 6, 0, 0, 2)) == p_enum);
}

TEST_CASE("u, v, w base behavior") {
    TruncationBox box(4, 6, 6, 0, 4);
    UVW uvw = gf_uvw(box);
    CHECK(specialize(uvw.u, Var::Y, 0) == Series::var(uvw.u.box(), Var::T));
    CHECK(specialize(uvw.v, Var::Y, 0) == Series::zero(uvw.v.box()));
    CHECK(uvw.v.coeff(exps(0, 1, 1)) == 1);  // v = yt + higher order
    CHECK(uvw.w.coeff(Exps{}) == 1);
    CHECK_THROWS_AS(gf_uvw(TruncationBox(4, 6, 6, 0, 1)), std::domain_error);
}

TEST_CASE("joint (pk,des) EGF over S_n from u, v, w") {
    TruncationBox box(6, 6, 6, 0, 4);
    Series p = gf_p_pk_des(box);
    // row n=3 by direct enumeration: (pk,des) of the six words
    CHECK(count_at(p, 1, 0, 0) == 1);
    CHECK(count_at(p, 3, 0, 0) == 1);
    CHECK(count_at(p, 3, 0, 1) == 2);
    CHECK(count_at(p, 3, 1, 1) == 2);
    CHECK(count_at(p, 3, 0, 2) == 1);
    CHECK(count_at(p, 3, 1, 0) == 0);

    Series p_enum = egf_from_table(make_stat_table(6, GroundSet::All, {Stat::Pk, Stat::Des}), box,
                                   [](int n, const std::vector<int>& v) { return exps(n, v[0], v[1]); });
    CHECK(p == p_enum);
}

TEST_CASE("zhuang identity instance at n=2") {
    TruncationBox box(0, 6, 6, 0, 4);
    UVW uvw = gf_uvw(box);
    Series q = (Series::one(box) + uvw.u) * inverse(Series::one(box) + uvw.u * uvw.v);
    Series rhs = q * q * q * uvw.v;  // A_2(v) = 1 + v
    rhs = rhs * (Series::one(box) + uvw.v);
    Series lhs(box);
    lhs.add_term(exps(0, 1, 1), 1);  // 12
    lhs.add_term(exps(0, 1, 2), 1);  // 21
    CHECK(lhs == rhs);
}

TEST_CASE("joint (pk,des) EGF over ballot permutations") {
    TruncationBox box(5, 5, 5, 0, 4);
    Series b = gf_b_pk_des(box);
    Series b_enum = egf_from_table(make_stat_table(5, GroundSet::Ballot, {Stat::Pk, Stat::Des}), box,
                                   [](int n, const std::vector<int>& v) { return exps(n, v[0], v[1]); });
    CHECK(b == b_enum);

    // specializations collapse onto the single-statistic EGFs
    Series at_y1 = specialize(b, Var::Y, 1);
    Series b_des = gf_b_des(box);
    CHECK(at_y1 == specialize(b_des, Var::Y, 1));  // b_des has no y anyway

    Series at_t1 = specialize(b, Var::T, 1);
    Series b_pk = gf_b_pk(TruncationBox(5, 5, 5, 0, 4));
    CHECK(at_t1 == b_pk);
}

TEST_CASE("depth EGF over S_n: pinned rows") {
    Series p = gf_p_depth(TruncationBox(6, 0, 0, 6, 2));
    CHECK(count_at(p, 0) == 1);
    CHECK(count_at(p, 3, 0, 0, 0) == 3);
    CHECK(count_at(p, 3, 0, 0, 1) == 2);
    CHECK(count_at(p, 3, 0, 0, 2) == 1);
    CHECK(count_at(p, 4, 0, 0, 0) == 9);
    CHECK(count_at(p, 4, 0, 0, 1) == 11);
    CHECK(count_at(p, 4, 0, 0, 2) == 3);
    CHECK(count_at(p, 4, 0, 0, 3) == 1);

    Series p_enum = egf_from_table(make_stat_table(6, GroundSet::All, {Stat::Depth}),
                                   TruncationBox(6, 0, 0, 6, 2),
                                   [](int n, const std::vector<int>& v) { return exps(n, 0, 0, v[0]); });
    CHECK(p == p_enum);
}

TEST_CASE("odd order EGF equals the ballot descent EGF and solves its ODE") {
    TruncationBox box(7, 0, 7, 0, 2);
    CHECK(gf_o(box) == gf_b_des(box));
    CHECK(count_at(gf_o(box), 0) == 1);
    CHECK(gf_o_ode_residual(TruncationBox(8, 0, 8, 0, 2)).is_zero());

    Series o = gf_o(box);
    StatTable odd = odd_order_table(6);
    for (int n = 0; n <= 6; ++n)
        for (int d = 0; d <= n; ++d) CHECK(count_at(o, n, 0, d) == odd.at(n, {d}));
}

TEST_CASE("closed form matches the recurrence beyond the enumeration limit") {
    // both sides are enumeration-free: the EGF via exp, the table via the
    // block recurrence
    Series o = gf_o(TruncationBox(15, 0, 8, 0, 2));
    StatTable rec = spiro_recurrence_table(15);
    for (int n = 0; n <= 15; ++n)
        for (int d = 0; 2 * d <= n; ++d) CHECK(count_at(o, n, 0, d) == rec.at(n, {d}));
}

TEST_CASE("reflected descent EGF identity") {
    TruncationBox box(8, 0, 9, 0, 2);
    Series b = gf_b_des(box);
    Series lhs = reflect_t(b) * b;
    Series rhs = Series::one(box) + (Series::one(box) + Series::var(box, Var::T)) * gf_eulerian(box);
    CHECK(lhs == rhs);
}

TEST_CASE("filter splits the log of the reflected identity") {
    TruncationBox box(7, 0, 8, 0, 2);
    Series rhs = (Series::one(box) + Series::var(box, Var::T)) * gf_eulerian(box);
    Series ln_rhs = ln1p_series(rhs);
    CHECK(d_trunc(ln_rhs, Var::T, Var::X) + d_trunc_complement(ln_rhs, Var::T, Var::X) == ln_rhs);
    // the kept half exponentiates to the ballot EGF, the discarded half to
    // its reflected factor
    CHECK(exp_series(d_trunc(ln_rhs, Var::T, Var::X)) == gf_b_des(box));
    CHECK(exp_series(d_trunc_complement(ln_rhs, Var::T, Var::X)) == reflect_t(gf_b_des(box)));
}

TEST_CASE("guard soundness: wider guards do not move in-box coefficients") {
    TruncationBox box(5, 5, 5, 5, 4);
    TruncationBox wide = box;
    wide.guard += 2;
    CHECK(gf_b_pk_des(box) == gf_b_pk_des(wide).truncated(box));
    CHECK(gf_p_pk_des(box) == gf_p_pk_des(wide).truncated(box));
    CHECK(gf_p_depth(box) == gf_p_depth(wide).truncated(box));
    CHECK(gf_b_pk(box) == gf_b_pk(wide).truncated(box));
    UVW a = gf_uvw(box), b = gf_uvw(wide);
    CHECK(a.u == b.u.truncated(box));
    CHECK(a.v == b.v.truncated(box));
    CHECK(a.w == b.w.truncated(box));
}

TEST_CASE("multinomial expansion of ballot descent counts") {
    CHECK(bnd_multinomial(1, 0) == 1);
    CHECK(bnd_multinomial(5, 1) == 22);
    CHECK_THROWS_AS(bnd_multinomial(0, 0), std::domain_error);
    CHECK_THROWS_AS(bnd_multinomial(4, 2), std::domain_error);

    StatTable bd = make_stat_table(7, GroundSet::Ballot, {Stat::Des});
    for (int n = 1; n <= 7; ++n)
        for (int d = 0; 2 * d <= n - 1; ++d) CHECK(bnd_multinomial(n, d) == bd.at(n, {d}));
}

TEST_CASE("Eulerian-Catalan instances") {
    StatTable bd = make_stat_table(5, GroundSet::Ballot, {Stat::Des});
    CHECK(bd.at(3, {1}) == 2);
    CHECK(eulerian(3, 1) == 4);
    CHECK(2 * bd.at(3, {1}) == eulerian(3, 1));
    CHECK(bd.at(5, {2}) == 22);
    CHECK(3 * bd.at(5, {2}) == eulerian(5, 2));
}

TEST_SUITE_END();
