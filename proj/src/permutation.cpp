#include "asep/permutation.hpp"

#include <algorithm>
#include <sstream>

namespace asep {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<bool> seen(w_.size(), false);
    for (int x : w_) {
        if (x < 1 || x > static_cast<int>(w_.size()) || seen[x - 1])
            throw Error("not a permutation of 1..n");
        seen[x - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> v(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) v[w_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(v));
}

std::vector<int> Permutation::descents() const {
    std::vector<int> d;
    for (std::size_t i = 0; i + 1 < w_.size(); ++i)
        if (w_[i] > w_[i + 1]) d.push_back(static_cast<int>(i) + 1);
    return d;
}

int Permutation::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
        for (std::size_t j = i + 1; j < w_.size(); ++j)
            if (w_[i] > w_[j]) ++inv;
    return inv;
}

Permutation Permutation::times_adjacent_transposition(int i) const {
    if (i < 1 || i >= size()) throw Error("adjacent transposition index out of range");
    std::vector<int> v = w_;
    std::swap(v[i - 1], v[i]);
    return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
    bool small = size() <= 9;
    std::ostringstream os;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (!small && i) os << ',';
        os << w_[i];
    }
    return os.str();
}

bool contains_pattern(const Permutation& w, const Permutation& p) {
    const int n = w.size(), m = p.size();
    if (m > n) throw Error("pattern longer than the host permutation");
    // DFS over index-increasing subsequences; prune on relative order early.
    std::vector<int> picked;
    picked.reserve(m);
    auto consistent = [&](int value) {
        int k = static_cast<int>(picked.size()); // position being filled (0-based)
        for (int t = 0; t < k; ++t) {
            bool host = picked[t] < value;
            bool pat = p(t + 1) < p(k + 1);
            if (host != pat) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int start) -> bool {
        if (static_cast<int>(picked.size()) == m) return true;
        int need = m - static_cast<int>(picked.size());
        for (int i = start; i <= n - need + 1; ++i) {
            if (!consistent(w(i))) continue;
            picked.push_back(w(i));
            if (self(self, i + 1)) return true;
            picked.pop_back();
        }
        return false;
    };
    return rec(rec, 1);
}

bool is_evil_avoiding(const Permutation& w) {
    static const std::vector<std::vector<int>> evil = {
        {2, 4, 1, 3}, {4, 1, 3, 2}, {4, 2, 1, 3}, {3, 2, 1, 4}};
    if (w.size() < 4) return true;
    for (const auto& p : evil)
        if (contains_pattern(w, Permutation(p))) return false;
    return true;
}

} // namespace asep
