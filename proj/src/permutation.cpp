#include "ballotlab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ballotlab {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : word_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("word is not a permutation of 1..n");
        seen[static_cast<size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return unchecked(std::move(w));
}

Permutation Permutation::unchecked(std::vector<int> word) {
    Permutation p;
    p.word_ = std::move(word);
    return p;
}

std::string Permutation::to_string() const {
    if (word_.empty()) return "e";
    std::string s;
    bool wide = size() > 9;
    for (size_t i = 0; i < word_.size(); ++i) {
        if (wide && i > 0) s += ' ';
        s += std::to_string(word_[i]);
    }
    return s;
}

int des(std::span<const int> w) {
    int d = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) ++d;
    return d;
}

int asc(std::span<const int> w) {
    int a = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) ++a;
    return a;
}

int height(std::span<const int> w) { return asc(w) - des(w); }

int pk(std::span<const int> w) {
    int k = 0;
    for (size_t i = 1; i + 1 < w.size(); ++i)
        if (w[i - 1] < w[i] && w[i] > w[i + 1]) ++k;
    return k;
}

std::vector<int> prefix_heights(std::span<const int> w) {
    if (w.empty()) throw std::domain_error("prefix_heights: empty word has no prefixes");
    std::vector<int> hs(w.size());
    int h = 0;
    hs[0] = 0;
    for (size_t i = 1; i < w.size(); ++i) {
        h += (w[i - 1] < w[i]) ? 1 : -1;
        hs[i] = h;
    }
    return hs;
}

int depth(std::span<const int> w) {
    if (w.empty()) return 0;
    int h = 0, lo = 0;
    for (size_t i = 1; i < w.size(); ++i) {
        h += (w[i - 1] < w[i]) ? 1 : -1;
        lo = std::min(lo, h);
    }
    return -lo;
}

std::vector<int> lowest_positions(std::span<const int> w) {
    if (w.empty()) throw std::domain_error("lowest_positions: empty word");
    const int lo = -depth(w);
    std::vector<int> out;
    int h = 0;
    if (h == lo) out.push_back(1);
    for (size_t i = 1; i < w.size(); ++i) {
        h += (w[i - 1] < w[i]) ? 1 : -1;
        if (h == lo) out.push_back(static_cast<int>(i) + 1);
    }
    return out;
}

bool is_ballot(std::span<const int> w) {
    int h = 0;
    for (size_t i = 1; i < w.size(); ++i) {
        h += (w[i - 1] < w[i]) ? 1 : -1;
        if (h < 0) return false;
    }
    return true;
}

bool is_dyck(std::span<const int> w) { return is_ballot(w) && height(w) == 0; }

std::vector<int> reverse_word(std::span<const int> w) {
    return std::vector<int>(w.rbegin(), w.rend());
}

Permutation reverse(const Permutation& p) {
    return Permutation::unchecked(reverse_word(std::span(p.word())));
}

Permutation standardize(std::span<const int> w) {
    const size_t n = w.size();
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return w[a] < w[b]; });
    std::vector<int> out(n);
    for (size_t r = 0; r < n; ++r) {
        if (r > 0 && w[idx[r]] == w[idx[r - 1]])
            throw std::invalid_argument("standardize: repeated entry");
        out[idx[r]] = static_cast<int>(r) + 1;
    }
    return Permutation::unchecked(std::move(out));
}

}  // namespace ballotlab
