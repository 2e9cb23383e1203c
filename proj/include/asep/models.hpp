#ifndef ASEP_MODELS_HPP
#define ASEP_MODELS_HPP

#include <string>
#include <vector>

#include "asep/markov.hpp"

namespace asep {

// Site words.  Open-boundary models use letters {1 = particle, 0 = hole};
// ring models use nonnegative particle types (the parts of a partition).
using Word = std::vector<int>;

// Open-boundary encoding: B = particle, O = hole.
std::string open_word_string(const Word& w);
Word parse_open_word(const std::string& s);

// Ring encoding: comma-free digit string when all parts are <= 9,
// comma-separated otherwise.
std::string ring_word_string(const Word& w);

// Weakly decreasing nonnegative parts.
struct Partition {
    std::vector<int> parts;
    explicit Partition(std::vector<int> p);
    std::size_t size() const { return parts.size(); }
    bool constant() const;
};

// Open-boundary chain with entry rate alpha (left), exit rate beta (right),
// right hops at rate 1 and left hops at rate q.  2^n states.
ChainPtr build_open_asep3(int n);

// Adds the reverse boundary moves: exit left at gamma, enter right at delta.
ChainPtr build_open_asep5(int n);

// Ring chain on the distinct arrangements of the partition's parts; each
// cyclic adjacent unequal pair swaps at rate t (heavier first) or 1
// (lighter first).  Parallel swaps to the same target accumulate.
ChainPtr build_masep(const Partition& lambda);

// Totally asymmetric ring chain: a cyclic adjacent pair with the lighter
// type first swaps at rate x_a - y_b, a the smaller and b the larger of the
// two types.  When with_y is false the y terms are omitted.
ChainPtr build_inhom_tasep(const Partition& lambda, bool with_y);

// A small five-state chain over the single parameter q, used by the
// verification suite and available from the CLI as model "demo5".
ChainPtr build_five_state_demo();

// All length-n words over {1, 0}, most-particles first (B before O).
std::vector<Word> open_words(int n);

// All distinct arrangements of the partition's parts, lexicographically
// increasing.
std::vector<Word> ring_words(const Partition& lambda);

} // namespace asep

#endif
