#include "asep/models.hpp"

#include <algorithm>
#include <sstream>

namespace asep {

std::string open_word_string(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (int x : w) s += (x ? 'B' : 'O');
    return s;
}

Word parse_open_word(const std::string& s) {
    Word w;
    w.reserve(s.size());
    for (char c : s) {
        if (c == 'B' || c == 'b' || c == '1')
            w.push_back(1);
        else if (c == 'O' || c == 'o' || c == '0')
            w.push_back(0);
        else
            throw Error(std::string("invalid site letter '") + c + "' (use B/O)");
    }
    if (w.empty()) throw Error("empty word");
    return w;
}

std::string ring_word_string(const Word& w) {
    bool small = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x <= 9; });
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!small && i) os << ',';
        os << w[i];
    }
    return os.str();
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw Error("empty partition");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw Error("partition parts must be nonnegative");
        if (i && parts[i] > parts[i - 1])
            throw Error("partition parts must be weakly decreasing");
    }
}

bool Partition::constant() const {
    return std::all_of(parts.begin(), parts.end(),
                       [&](int x) { return x == parts.front(); });
}

std::vector<Word> open_words(int n) {
    std::vector<Word> out;
    out.reserve(std::size_t(1) << n);
    Word w(n, 1);
    // Recursion-free: count through 2^n with B(=1) ordered before O(=0).
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        for (int i = 0; i < n; ++i) w[i] = (mask >> (n - 1 - i)) & 1 ? 0 : 1;
        out.push_back(w);
    }
    return out;
}

std::vector<Word> ring_words(const Partition& lambda) {
    Word w = lambda.parts;
    std::sort(w.begin(), w.end());
    std::vector<Word> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

namespace {

using RateMap = SymbolicChain::RateMap;

void add_rate(RateMap& rates, std::size_t from, std::size_t to, const MultiPoly& r) {
    auto [it, inserted] = rates.try_emplace({from, to}, r);
    if (!inserted) it->second += r;
}

ChainPtr build_open(int n, bool five_param) {
    if (n < 1) throw Error("lattice size must be at least 1");
    RingPtr ring = five_param ? rings::open5() : rings::open3();
    MultiPoly alpha = MultiPoly::variable(ring, "alpha");
    MultiPoly beta = MultiPoly::variable(ring, "beta");
    MultiPoly q = MultiPoly::variable(ring, "q");
    MultiPoly one = MultiPoly::constant(ring, 1);

    std::vector<Word> words = open_words(n);
    std::map<Word, std::size_t> index;
    std::vector<std::string> states;
    for (std::size_t i = 0; i < words.size(); ++i) {
        index[words[i]] = i;
        states.push_back(open_word_string(words[i]));
    }

    RateMap rates;
    for (std::size_t i = 0; i < words.size(); ++i) {
        const Word& w = words[i];
        for (int s = 0; s + 1 < n; ++s) {
            if (w[s] == 1 && w[s + 1] == 0) {
                Word v = w;
                std::swap(v[s], v[s + 1]);
                add_rate(rates, i, index[v], one); // hop right
                add_rate(rates, index[v], i, q);   // hop left
            }
        }
        if (w[0] == 0) {
            Word v = w;
            v[0] = 1;
            add_rate(rates, i, index[v], alpha); // enter left
        }
        if (w[n - 1] == 1) {
            Word v = w;
            v[n - 1] = 0;
            add_rate(rates, i, index[v], beta); // exit right
        }
        if (five_param) {
            if (w[0] == 1) {
                Word v = w;
                v[0] = 0;
                add_rate(rates, i, index[v], MultiPoly::variable(ring, "gamma")); // exit left
            }
            if (w[n - 1] == 0) {
                Word v = w;
                v[n - 1] = 1;
                add_rate(rates, i, index[v], MultiPoly::variable(ring, "delta")); // enter right
            }
        }
    }
    return SymbolicChain::create(ring, std::move(states), std::move(rates));
}

} // namespace

ChainPtr build_open_asep3(int n) { return build_open(n, false); }
ChainPtr build_open_asep5(int n) { return build_open(n, true); }

ChainPtr build_masep(const Partition& lambda) {
    if (lambda.constant())
        throw Error("the partition must have at least two distinct part values");
    RingPtr ring = rings::masep();
    MultiPoly t = MultiPoly::variable(ring, "t");
    MultiPoly one = MultiPoly::constant(ring, 1);

    std::vector<Word> words = ring_words(lambda);
    std::map<Word, std::size_t> index;
    std::vector<std::string> states;
    for (std::size_t i = 0; i < words.size(); ++i) {
        index[words[i]] = i;
        states.push_back(ring_word_string(words[i]));
    }

    const int n = static_cast<int>(lambda.size());
    RateMap rates;
    for (std::size_t i = 0; i < words.size(); ++i) {
        const Word& w = words[i];
        for (int s = 0; s < n; ++s) {
            int s2 = (s + 1) % n;
            if (w[s] == w[s2]) continue;
            Word v = w;
            std::swap(v[s], v[s2]);
            add_rate(rates, i, index[v], w[s] > w[s2] ? t : one);
        }
    }
    return SymbolicChain::create(ring, std::move(states), std::move(rates));
}

ChainPtr build_inhom_tasep(const Partition& lambda, bool with_y) {
    if (lambda.constant())
        throw Error("the partition must have at least two distinct part values");
    RingPtr ring = rings::xy(std::min(lambda.parts.back(), 1), lambda.parts.front(), with_y);

    std::vector<Word> words = ring_words(lambda);
    std::map<Word, std::size_t> index;
    std::vector<std::string> states;
    for (std::size_t i = 0; i < words.size(); ++i) {
        index[words[i]] = i;
        states.push_back(ring_word_string(words[i]));
    }

    const int n = static_cast<int>(lambda.size());
    RateMap rates;
    for (std::size_t i = 0; i < words.size(); ++i) {
        const Word& w = words[i];
        for (int s = 0; s < n; ++s) {
            int s2 = (s + 1) % n;
            if (w[s] >= w[s2]) continue; // only the lighter-first pair swaps
            Word v = w;
            std::swap(v[s], v[s2]);
            MultiPoly r = MultiPoly::variable(ring, "x" + std::to_string(w[s]));
            if (with_y) r -= MultiPoly::variable(ring, "y" + std::to_string(w[s2]));
            add_rate(rates, i, index[v], r);
        }
    }
    return SymbolicChain::create(ring, std::move(states), std::move(rates));
}

ChainPtr build_five_state_demo() {
    RingPtr ring = rings::single_q();
    MultiPoly q = MultiPoly::variable(ring, "q");
    MultiPoly one = MultiPoly::constant(ring, 1);
    std::vector<std::string> states{"1", "2", "3", "4", "5"};
    RateMap rates;
    auto put = [&](std::size_t a, std::size_t b, const MultiPoly& r) {
        rates.emplace(std::make_pair(a - 1, b - 1), r);
    };
    put(1, 3, one);
    put(1, 4, q);
    put(2, 5, one);
    put(3, 1, q);
    put(3, 2, one);
    put(3, 5, one);
    put(4, 1, one);
    put(4, 2, q);
    put(4, 5, q);
    put(5, 3, q);
    put(5, 4, one);
    return SymbolicChain::create(ring, std::move(states), std::move(rates));
}

} // namespace asep
