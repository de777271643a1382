#pragma once

#include <span>
#include <string>
#include <vector>

namespace ballotlab {

/// A permutation of [n] in one-line notation. n = 0 is the empty
/// permutation. Immutable after construction; the constructor rejects
/// words that are not bijections onto {1..n}.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    /// Wraps a word that is already known to be a permutation of [n].
    static Permutation unchecked(std::vector<int> word);

    int size() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const { return word_; }
    /// Image of i under the permutation, 1 <= i <= n.
    int apply(int i) const { return word_[static_cast<size_t>(i) - 1]; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    std::string to_string() const;

private:
    std::vector<int> word_;
};

// Linear statistics. All are defined on arbitrary words of distinct
// integers (they only compare entries), so the word forms double as the
// statistics of rho/tau blocks before standardization.

int des(std::span<const int> w);
int asc(std::span<const int> w);
int height(std::span<const int> w);
int pk(std::span<const int> w);

inline int des(const Permutation& p) { return des(std::span(p.word())); }
inline int asc(const Permutation& p) { return asc(std::span(p.word())); }
inline int height(const Permutation& p) { return height(std::span(p.word())); }
inline int pk(const Permutation& p) { return pk(std::span(p.word())); }

/// Heights of all prefixes, h(w_1..w_i) for i = 1..n. Throws
/// std::domain_error on the empty word (depth handles that case itself).
std::vector<int> prefix_heights(std::span<const int> w);
inline std::vector<int> prefix_heights(const Permutation& p) {
    return prefix_heights(std::span(p.word()));
}

/// -min prefix height; 0 on the empty word.
int depth(std::span<const int> w);
inline int depth(const Permutation& p) { return depth(std::span(p.word())); }

/// 1-based positions i where the prefix height attains -depth(w); sorted
/// ascending. Throws std::domain_error on the empty word.
std::vector<int> lowest_positions(std::span<const int> w);
inline std::vector<int> lowest_positions(const Permutation& p) {
    return lowest_positions(std::span(p.word()));
}

/// True iff every prefix height is nonnegative (equivalently depth = 0).
bool is_ballot(std::span<const int> w);
inline bool is_ballot(const Permutation& p) { return is_ballot(std::span(p.word())); }

/// Ballot with total height 0.
bool is_dyck(std::span<const int> w);
inline bool is_dyck(const Permutation& p) { return is_dyck(std::span(p.word())); }

Permutation reverse(const Permutation& p);
std::vector<int> reverse_word(std::span<const int> w);

/// The unique permutation of [|w|] order-isomorphic to w. Throws
/// std::invalid_argument on repeated entries.
Permutation standardize(std::span<const int> w);

}  // namespace ballotlab
