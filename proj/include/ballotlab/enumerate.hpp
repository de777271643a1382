#pragma once

#include <functional>
#include <iterator>
#include <numeric>
#include <vector>

#include "ballotlab/permutation.hpp"

namespace ballotlab {

/// Largest n for which exhaustive enumeration of S_n is allowed. Defaults
/// to 10; the BALLOTLAB_ENUM_LIMIT environment variable overrides it.
int enumeration_limit();

/// Throws std::domain_error when n is negative or above the limit.
void check_enumerable(int n);

namespace detail {

// Shared iteration core: lexicographic S_n via std::next_permutation,
// optionally filtered. Restartable (begin() builds a fresh word).
class PermIterator {
public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    PermIterator() = default;  // end
    PermIterator(int n, bool ballot_only);

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    PermIterator& operator++();
    void operator++(int) { ++(*this); }

    friend bool operator==(const PermIterator& a, const PermIterator& b) {
        return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
    }

private:
    void settle();  // advance word_ until it passes the filter or ends

    std::vector<int> word_;
    Permutation current_;
    bool ballot_only_ = false;
    bool done_ = true;
    bool fresh_ = true;
};

}  // namespace detail

/// Range over S_n (ballot_only: over B_n) in lexicographic order.
class PermutationRange {
public:
    explicit PermutationRange(int n, bool ballot_only = false);
    detail::PermIterator begin() const { return {n_, ballot_only_}; }
    detail::PermIterator end() const { return {}; }
    int n() const { return n_; }

private:
    int n_;
    bool ballot_only_;
};

PermutationRange permutations(int n);
PermutationRange ballot_permutations(int n);

/// Fast path used by the table builders: visits every word of S_n in
/// lexicographic order through a reused buffer.
void for_each_word(int n, const std::function<void(const std::vector<int>&)>& fn);

}  // namespace ballotlab
