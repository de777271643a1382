#include "ballotlab/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ballotlab {

int enumeration_limit() {
    if (const char* env = std::getenv("BALLOTLAB_ENUM_LIMIT")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0) return static_cast<int>(v);
    }
    return 10;
}

void check_enumerable(int n) {
    if (n < 0) throw std::domain_error("enumeration: n must be nonnegative");
    if (n > enumeration_limit())
        throw std::domain_error("enumeration: n=" + std::to_string(n) +
                                " exceeds limit " + std::to_string(enumeration_limit()) +
                                " (set BALLOTLAB_ENUM_LIMIT to raise)");
}

namespace detail {

PermIterator::PermIterator(int n, bool ballot_only)
    : word_(static_cast<size_t>(n)), ballot_only_(ballot_only), done_(false) {
    std::iota(word_.begin(), word_.end(), 1);
    settle();
}

void PermIterator::settle() {
    while (true) {
        if (!fresh_) {
            if (!std::next_permutation(word_.begin(), word_.end())) {
                done_ = true;
                current_ = Permutation();
                return;
            }
        }
        fresh_ = false;
        if (!ballot_only_ || is_ballot(std::span<const int>(word_))) {
            current_ = Permutation::unchecked(word_);
            return;
        }
    }
}

PermIterator& PermIterator::operator++() {
    if (!done_) settle();
    return *this;
}

}  // namespace detail

PermutationRange::PermutationRange(int n, bool ballot_only)
    : n_(n), ballot_only_(ballot_only) {
    check_enumerable(n);
}

PermutationRange permutations(int n) { return PermutationRange(n, false); }
PermutationRange ballot_permutations(int n) { return PermutationRange(n, true); }

void for_each_word(int n, const std::function<void(const std::vector<int>&)>& fn) {
    check_enumerable(n);
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        fn(w);
    } while (std::next_permutation(w.begin(), w.end()));
}

}  // namespace ballotlab
