#include <doctest.h>

#include "ballotlab/cycles.hpp"
#include "ballotlab/enumerate.hpp"
#include "ballotlab/eulerian.hpp"

using namespace ballotlab;

namespace {

Permutation perm(std::initializer_list<int> w) { return Permutation(std::vector<int>(w)); }

}  // namespace

TEST_SUITE_BEGIN("oddorder");

TEST_CASE("cycle decomposition is canonical and invertible") {
    CycleForm id3 = cycle_decomposition(perm({1, 2, 3}));
    CHECK(id3.cycles == std::vector<std::vector<int>>{{1}, {2}, {3}});

    CycleForm c = cycle_decomposition(perm({2, 3, 1}));
    CHECK(c.cycles == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(c.to_string() == "(1 2 3)");

    CHECK(cycle_decomposition(Permutation()).cycles.empty());

    for (int n = 0; n <= 6; ++n)
        for (const auto& p : permutations(n)) CHECK(permutation_from_cycles(cycle_decomposition(p)) == p);

    CycleForm bad{{{1, 2}, {2, 3}}, 3};
    CHECK_THROWS_AS(permutation_from_cycles(bad), std::invalid_argument);
}

TEST_CASE("odd order predicate") {
    CHECK(is_odd_order(perm({2, 3, 1})));
    CHECK_FALSE(is_odd_order(perm({2, 1})));
    for (int n = 1; n <= 6; ++n) CHECK(is_odd_order(Permutation::identity(n)));
    CHECK(is_odd_order(Permutation()));
}

TEST_CASE("cyclic descents and ascents") {
    std::vector<int> c123 = {1, 2, 3};
    CHECK(cdes(std::span<const int>(c123)) == 1);
    CHECK(casc(std::span<const int>(c123)) == 2);

    std::vector<int> c132 = {1, 3, 2};
    CHECK(cdes(std::span<const int>(c132)) == 2);
    CHECK(casc(std::span<const int>(c132)) == 1);

    // singleton: both cyclic comparisons are c_1 vs itself, so both vanish
    std::vector<int> single = {5};
    CHECK(cdes(std::span<const int>(single)) == 0);
    CHECK(casc(std::span<const int>(single)) == 0);

    std::vector<int> empty;
    CHECK_THROWS_AS(cdes(std::span<const int>(empty)), std::invalid_argument);
    CHECK_THROWS_AS(casc(std::span<const int>(empty)), std::invalid_argument);
}

TEST_CASE("cdes/casc are rotation invariant and sum to the length") {
    std::vector<std::vector<int>> cycles = {{1, 2, 3}, {2, 7, 4, 9, 1}, {1, 5, 2, 4, 3, 8, 6}};
    for (auto c : cycles) {
        int d0 = cdes(std::span<const int>(c)), a0 = casc(std::span<const int>(c));
        CHECK(d0 + a0 == static_cast<int>(c.size()));
        CHECK(d0 >= 1);
        CHECK(a0 >= 1);
        for (size_t r = 1; r < c.size(); ++r) {
            std::rotate(c.begin(), c.begin() + 1, c.end());
            CHECK(cdes(std::span<const int>(c)) == d0);
            CHECK(casc(std::span<const int>(c)) == a0);
        }
    }
}

TEST_CASE("the M statistic") {
    for (int n = 1; n <= 6; ++n) CHECK(m_stat(Permutation::identity(n)) == 0);
    CHECK(m_stat(perm({2, 3, 1})) == 1);
    CHECK(m_stat(perm({3, 1, 2})) == 1);
    CHECK(m_stat(Permutation()) == 0);
}

TEST_CASE("odd order tables by enumeration") {
    StatTable t = odd_order_table(5);
    CHECK(t.row(0) == std::map<std::vector<int>, mpz_class>{{{0}, 1}});
    CHECK(t.row(3) == std::map<std::vector<int>, mpz_class>{{{0}, 1}, {{1}, 2}});
    CHECK(t.row(5) == std::map<std::vector<int>, mpz_class>{{{0}, 1}, {{1}, 22}, {{2}, 22}});

    // row sums count all odd order permutations, which BDN says is b_n
    for (int n = 0; n <= 5; ++n) CHECK(t.row_sum(n) == ballot_count(n));
}

TEST_CASE("M stays within floor((n-1)/2) at desk scale") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : permutations(n))
            if (is_odd_order(p)) CHECK(2 * m_stat(p) <= n - 1);
}

TEST_CASE("recurrence table agrees with enumeration") {
    StatTable rec = spiro_recurrence_table(7);
    CHECK(rec.row(1) == std::map<std::vector<int>, mpz_class>{{{0}, 1}});
    CHECK(rec.row(3) == std::map<std::vector<int>, mpz_class>{{{0}, 1}, {{1}, 2}});
    StatTable enumerated = odd_order_table(7);
    for (int n = 0; n <= 7; ++n) CHECK(rec.row(n) == enumerated.row(n));
}

TEST_CASE("recurrence table runs past the enumeration limit") {
    StatTable rec = spiro_recurrence_table(14);
    mpz_class total = 0;
    for (const auto& [vals, count] : rec.row(14)) total += count;
    CHECK(total == ballot_count(14));  // 13!!^2
}

TEST_CASE("factor counts") {
    CHECK(factor_count_ballot(3, 1, 1, 2) == 1);
    CHECK(factor_count_ballot(4, 1, 1, 2) == 1);  // 1423 is the only candidate
    CHECK(cyclic_factor_count_odd(3, 1, 1, 2) == 1);
    CHECK(cyclic_factor_count_odd(3, 1, 2, 1) == 1);

    CHECK_THROWS_AS(factor_count_ballot(3, 1, 1, 1), std::domain_error);
    CHECK_THROWS_AS(factor_count_ballot(3, 1, 0, 2), std::domain_error);
    CHECK_THROWS_AS(factor_count_ballot(3, 1, 1, 3), std::domain_error);
    CHECK_THROWS_AS(cyclic_factor_count_odd(3, 1, 3, 1), std::domain_error);
}

TEST_CASE("conjecture records at small n") {
    auto records = conjecture_records(6);
    for (const auto& rec : records) CHECK(rec.equal);

    bool found = false;
    for (const auto& rec : records)
        if (rec.n == 3 && rec.d == 1 && rec.j == 2) {
            found = true;
            CHECK(rec.lhs == 2);
            CHECK(rec.rhs == 2);
        }
    CHECK(found);

    // n = 2 contributes no admissible j at all
    for (const auto& rec : conjecture_records(2)) CHECK(rec.n != 2);
}

TEST_SUITE_END();
