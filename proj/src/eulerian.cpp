#include "ballotlab/eulerian.hpp"

#include <mutex>
#include <stdexcept>

namespace ballotlab {

namespace {
const mpz_class kZero = 0;
}

void EulerianTable::grow(int n_max) {
    if (rows_.empty()) rows_.push_back({mpz_class(1)});  // E(0,0) = 1
    for (int n = static_cast<int>(rows_.size()); n <= n_max; ++n) {
        const auto& prev = rows_.back();
        std::vector<mpz_class> row(static_cast<size_t>(n));
        for (int d = 0; d <= n - 1; ++d) {
            mpz_class v = 0;
            if (d < static_cast<int>(prev.size())) v += (d + 1) * prev[static_cast<size_t>(d)];
            if (d - 1 >= 0 && d - 1 < static_cast<int>(prev.size()))
                v += (n - d) * prev[static_cast<size_t>(d - 1)];
            row[static_cast<size_t>(d)] = v;
        }
        rows_.push_back(std::move(row));
    }
}

const mpz_class& EulerianTable::at(int n, int d) const {
    if (n < 0 || d < 0 || d > n || (n >= 1 && d >= n)) return kZero;
    if (n == 0) return rows_[0][0];  // d == 0 here
    if (n > n_max()) throw std::out_of_range("EulerianTable: row not built");
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(d)];
}

mpz_class eulerian(int n, int d) {
    if (n < 0 || d < 0 || d > n || (n >= 1 && d >= n)) return 0;
    static EulerianTable table;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    table.grow(n);
    return table.at(n, d);
}

mpz_class binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class factorial(int n) {
    if (n < 0) throw std::domain_error("factorial of negative value");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class double_factorial(int n) {
    if (n < -1) throw std::domain_error("double factorial below -1");
    if (n <= 0) return 1;
    mpz_class r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class ballot_count(int n) {
    if (n < 0) throw std::domain_error("ballot_count: n must be nonnegative");
    if (n % 2 == 0) {
        mpz_class f = double_factorial(n - 1);
        return f * f;
    }
    return double_factorial(n) * double_factorial(n - 2);
}

}  // namespace ballotlab
