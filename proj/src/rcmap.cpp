#include "ballotlab/rcmap.hpp"

#include <algorithm>
#include <stdexcept>

#include "ballotlab/enumerate.hpp"
#include "ballotlab/eulerian.hpp"
#include "ballotlab/stat_table.hpp"

namespace ballotlab {

bool is_valid_split_pair(const SplitPair& pair) {
    std::vector<int> cat = pair.rho;
    cat.insert(cat.end(), pair.tau.begin(), pair.tau.end());
    const int n = static_cast<int>(cat.size());
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : cat) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = true;
    }
    return is_ballot(standardize(std::span<const int>(pair.rho)).word()) &&
           is_ballot(standardize(std::span<const int>(pair.tau)).word());
}

Permutation phi(const SplitPair& pair) {
    if (!is_valid_split_pair(pair))
        throw std::invalid_argument("phi: not a valid split pair");
    std::vector<int> word = reverse_word(std::span<const int>(pair.rho));
    word.insert(word.end(), pair.tau.begin(), pair.tau.end());
    return Permutation::unchecked(std::move(word));
}

namespace {

SplitPair split_at(const Permutation& p, int l) {
    const auto& w = p.word();
    SplitPair pair;
    pair.rho.assign(w.rend() - l, w.rend());  // reversed prefix of length l
    pair.tau.assign(w.begin() + l, w.end());
    return pair;
}

}  // namespace

SplitPair split_at_first_lowest(const Permutation& p) {
    if (p.size() == 0) throw std::domain_error("split_at_first_lowest: empty permutation");
    const auto lows = lowest_positions(p);
    return split_at(p, lows.front() - 1);
}

SplitPair split_at_last_lowest(const Permutation& p) {
    if (p.size() == 0) throw std::domain_error("split_at_last_lowest: empty permutation");
    const auto lows = lowest_positions(p);
    return split_at(p, lows.back());
}

namespace {

nlohmann::json mismatch(int n, const std::vector<std::pair<const char*, int>>& params,
                        const mpz_class& lhs, const mpz_class& rhs) {
    nlohmann::json ce;
    ce["n"] = n;
    for (auto [k, v] : params) ce[k] = v;
    ce["lhs"] = lhs.get_str();
    ce["rhs"] = rhs.get_str();
    return ce;
}

}  // namespace

VerificationReport verify_e17(int n) {
    check_enumerable(n);
    return timed_report("e17", [n](VerificationReport& rep) {
        rep.parameters["n"] = n;
        StatTable p_all = make_stat_table(n, GroundSet::All, {Stat::Pk, Stat::Des});
        StatTable b_tab = make_stat_table(n, GroundSet::Ballot, {Stat::Pk, Stat::Des});
        auto b = [&](int len, int i, int j) -> mpz_class {
            if (len < 0 || i < 0 || j < 0) return 0;
            return b_tab.at(len, {i, j});
        };
        for (int k = 0; k <= n; ++k) {
            for (int d = 0; d <= n; ++d) {
                if (n == 0 && k == 0 && d == 1) continue;
                mpz_class lhs = p_all.at(n, {k, d});
                if (d >= 1) lhs += p_all.at(n, {k, d - 1});
                mpz_class rhs = 0;
                for (int l = 0; l <= n; ++l)
                    for (int i = 0; i <= k; ++i)
                        for (int j = 0; j <= l; ++j)
                            rhs += binomial(n, l) * b(l, i, j) * b(n - l, k - i, d - l + j);
                if (lhs != rhs) {
                    rep.fail(mismatch(n, {{"k", k}, {"d", d}}, lhs, rhs));
                    return;
                }
            }
        }
    });
}

VerificationReport verify_e21(int n) {
    check_enumerable(n);
    return timed_report("e21", [n](VerificationReport& rep) {
        rep.parameters["n"] = n;
        StatTable p_all = make_stat_table(n, GroundSet::All, {Stat::Pk, Stat::Depth, Stat::Des});
        StatTable b_tab = make_stat_table(n, GroundSet::Ballot, {Stat::Pk, Stat::Des});
        auto b = [&](int len, int i, int j) -> mpz_class {
            if (len < 0 || i < 0 || j < 0) return 0;
            return b_tab.at(len, {i, j});
        };
        for (int k = 0; k <= n; ++k) {
            for (int h = 0; h <= n; ++h) {
                for (int d = 0; d <= n; ++d) {
                    if (n == 0 && k == 0 && h == 1 && d == 1) continue;
                    mpz_class lhs = p_all.at(n, {k, h, d});
                    if (h >= 1 && d >= 1) lhs += p_all.at(n, {k, h - 1, d - 1});
                    mpz_class rhs = 0;
                    for (int i = 0; 2 * i + h <= n; ++i)
                        for (int j = 0; j <= k; ++j)
                            rhs += binomial(n, 2 * i + h) * b(2 * i + h, j, i) *
                                   b(n - 2 * i - h, k - j, d - i - h);
                    if (lhs != rhs) {
                        rep.fail(mismatch(n, {{"k", k}, {"h", h}, {"d", d}}, lhs, rhs));
                        return;
                    }
                }
            }
        }
    });
}

}  // namespace ballotlab
