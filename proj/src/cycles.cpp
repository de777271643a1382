#include "ballotlab/cycles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ballotlab/enumerate.hpp"
#include "ballotlab/eulerian.hpp"

namespace ballotlab {

std::string CycleForm::to_string() const {
    if (cycles.empty()) return "()";
    std::string s;
    for (const auto& c : cycles) {
        s += '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i > 0) s += ' ';
            s += std::to_string(c[i]);
        }
        s += ')';
    }
    return s;
}

CycleForm cycle_decomposition(const Permutation& p) {
    const int n = p.size();
    CycleForm cf;
    cf.n = n;
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<int> cycle;
        int cur = start;
        do {
            seen[static_cast<size_t>(cur)] = true;
            cycle.push_back(cur);
            cur = p.apply(cur);
        } while (cur != start);
        cf.cycles.push_back(std::move(cycle));  // starts at its minimum by construction
    }
    return cf;
}

Permutation permutation_from_cycles(const CycleForm& cf) {
    std::vector<int> word(static_cast<size_t>(cf.n), 0);
    for (const auto& c : cf.cycles) {
        if (c.empty()) throw std::invalid_argument("empty cycle");
        for (size_t i = 0; i < c.size(); ++i) {
            int from = c[i], to = c[(i + 1) % c.size()];
            if (from < 1 || from > cf.n || word[static_cast<size_t>(from) - 1] != 0)
                throw std::invalid_argument("cycles do not partition [n]");
            word[static_cast<size_t>(from) - 1] = to;
        }
    }
    return Permutation(std::move(word));
}

int cdes(std::span<const int> cycle) {
    if (cycle.empty()) throw std::invalid_argument("cdes: empty cycle");
    int d = 0;
    for (size_t i = 0; i < cycle.size(); ++i)
        if (cycle[i] > cycle[(i + 1) % cycle.size()]) ++d;
    return d;
}

int casc(std::span<const int> cycle) {
    if (cycle.empty()) throw std::invalid_argument("casc: empty cycle");
    int a = 0;
    for (size_t i = 0; i < cycle.size(); ++i)
        if (cycle[i] < cycle[(i + 1) % cycle.size()]) ++a;
    return a;
}

bool is_odd_order(const Permutation& p) {
    const int n = p.size();
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        int len = 0, cur = start;
        do {
            seen[static_cast<size_t>(cur)] = true;
            ++len;
            cur = p.apply(cur);
        } while (cur != start);
        if (len % 2 == 0) return false;
    }
    return true;
}

int m_stat(const Permutation& p) {
    int m = 0;
    for (const auto& c : cycle_decomposition(p).cycles)
        m += std::min(cdes(std::span<const int>(c)), casc(std::span<const int>(c)));
    return m;
}

StatTable odd_order_table(int n_max) {
    check_enumerable(n_max);
    StatTable table({"M"}, n_max);
    for (int n = 0; n <= n_max; ++n) {
        for_each_word(n, [&](const std::vector<int>& w) {
            Permutation p = Permutation::unchecked(w);
            if (!is_odd_order(p)) return;
            table.add(n, {m_stat(p)});
        });
    }
    return table;
}

StatTable spiro_recurrence_table(int n_max) {
    if (n_max < 0) throw std::domain_error("spiro_recurrence_table: n_max must be nonnegative");
    // rows[n][d] = |O_n(d)|
    std::vector<std::map<int, mpz_class>> rows(static_cast<size_t>(n_max) + 1);
    rows[0][0] = 1;
    for (int n = 0; n + 1 <= n_max; ++n) {
        std::map<int, mpz_class> next = rows[static_cast<size_t>(n)];
        for (int i = 1; 2 * i <= n; ++i) {
            for (int k = i; 2 * k <= n; ++k) {
                const mpz_class coef = 2 * binomial(n, 2 * k) * eulerian(2 * k, i - 1);
                if (coef == 0) continue;
                for (const auto& [d, cnt] : rows[static_cast<size_t>(n - 2 * k)])
                    next[d + i] += coef * cnt;
            }
        }
        rows[static_cast<size_t>(n + 1)] = std::move(next);
    }
    StatTable table({"M"}, n_max);
    for (int n = 0; n <= n_max; ++n)
        for (const auto& [d, cnt] : rows[static_cast<size_t>(n)])
            if (cnt != 0) table.add(n, {d}, cnt);
    return table;
}

namespace {

void check_factor_domain(int n, int i, int j) {
    check_enumerable(n);
    if (i < 1 || i > n - 1 || j < 1 || j > n - 1)
        throw std::domain_error("factor counts need 1 <= i,j <= n-1");
    if (i == j) throw std::domain_error("factor counts need i != j");
}

}  // namespace

mpz_class factor_count_ballot(int n, int d, int i, int j) {
    check_factor_domain(n, i, j);
    mpz_class count = 0;
    for_each_word(n, [&](const std::vector<int>& w) {
        std::span<const int> span(w);
        if (!is_ballot(span) || des(span) != d) return;
        for (size_t p = 1; p + 1 < w.size(); ++p)
            if (w[p] == n && w[p - 1] == i && w[p + 1] == j) {
                ++count;
                return;
            }
    });
    return count;
}

mpz_class cyclic_factor_count_odd(int n, int d, int i, int j) {
    check_factor_domain(n, i, j);
    mpz_class count = 0;
    for_each_word(n, [&](const std::vector<int>& w) {
        Permutation p = Permutation::unchecked(w);
        if (p.apply(i) != n || p.apply(n) != j) return;
        if (!is_odd_order(p) || m_stat(p) != d) return;
        ++count;
    });
    return count;
}

std::vector<ConjectureRecord> conjecture_records(int n_max) {
    check_enumerable(n_max);
    std::vector<ConjectureRecord> out;
    for (int n = 3; n <= n_max; ++n) {  // a factor i,n,j needs three letters
        // (d, i, j) -> count, one pass over S_n for both sides
        std::map<std::tuple<int, int, int>, mpz_class> ballot_side, odd_side;
        int d_hi = 0;
        for_each_word(n, [&](const std::vector<int>& w) {
            std::span<const int> span(w);
            if (is_ballot(span)) {
                for (size_t p = 1; p + 1 < w.size(); ++p)
                    if (w[p] == n) {
                        ballot_side[{des(span), w[p - 1], w[p + 1]}] += 1;
                        break;
                    }
                d_hi = std::max(d_hi, des(span));
            }
            Permutation perm = Permutation::unchecked(w);
            if (is_odd_order(perm) && perm.apply(n) != n) {
                int pre = 0;
                for (int v = 1; v <= n; ++v)
                    if (perm.apply(v) == n) pre = v;
                int m = m_stat(perm);
                odd_side[{m, pre, perm.apply(n)}] += 1;
                d_hi = std::max(d_hi, m);
            }
        });
        for (int d = 0; d <= d_hi; ++d) {
            for (int j = 2; j <= n - 1; ++j) {
                auto get = [](const auto& m, int a, int b, int c) -> mpz_class {
                    auto it = m.find(std::tuple<int, int, int>{a, b, c});
                    return it == m.end() ? mpz_class(0) : it->second;
                };
                ConjectureRecord rec;
                rec.n = n;
                rec.d = d;
                rec.i = 1;
                rec.j = j;
                rec.lhs = get(ballot_side, d, 1, j) + get(ballot_side, d, j, 1);
                rec.rhs = 2 * get(odd_side, d, 1, j);
                rec.equal = (rec.lhs == rec.rhs);
                out.push_back(std::move(rec));
            }
        }
    }
    return out;
}

}  // namespace ballotlab
