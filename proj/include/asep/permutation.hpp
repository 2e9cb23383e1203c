#ifndef ASEP_PERMUTATION_HPP
#define ASEP_PERMUTATION_HPP

#include <string>
#include <vector>

#include "asep/errors.hpp"

namespace asep {

// One-line notation permutation of {1, ..., n}.
class Permutation {
public:
    explicit Permutation(std::vector<int> one_line);
    static Permutation identity(int n);
    static Permutation longest(int n); // (n, n-1, ..., 1)

    int size() const noexcept { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_.at(static_cast<std::size_t>(i) - 1); } // 1-based
    const std::vector<int>& one_line() const noexcept { return w_; }

    Permutation inverse() const;
    // Positions i with w(i) > w(i+1), 1-based.
    std::vector<int> descents() const;
    // Number of inversions = degree of the attached polynomial.
    int length() const;
    // w * s_i: swaps the entries at positions i and i+1 (1-based).
    Permutation times_adjacent_transposition(int i) const;

    std::string to_string() const; // "1432" (comma-separated past 9)

    bool operator==(const Permutation& o) const { return w_ == o.w_; }
    bool operator<(const Permutation& o) const { return w_ < o.w_; }

private:
    std::vector<int> w_;
};

// True iff some length-|p| subsequence of w is order-isomorphic to p.
bool contains_pattern(const Permutation& w, const Permutation& p);

// Avoids 2413, 4132, 4213 and 3214.
bool is_evil_avoiding(const Permutation& w);

} // namespace asep

#endif
