#ifndef ASEP_ARBORESCENCE_HPP
#define ASEP_ARBORESCENCE_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "asep/markov.hpp"

namespace asep {

inline constexpr std::size_t kDefaultArborescenceCap = 1'000'000;

// A spanning in-tree of the state diagram: one out-edge per non-root state,
// every edge on a path directed toward the root.
struct Arborescence {
    std::size_t root;
    std::vector<std::pair<std::size_t, std::size_t>> edges; // sorted by source
};

// Every arborescence rooted at `root`, exactly once, in a fixed order
// (states choose their out-edges in state order, targets ascending).
// Throws EnumerationCapError beyond `cap` results.
std::vector<Arborescence> enumerate_arborescences(const SymbolicChain& chain,
                                                  std::size_t root,
                                                  std::size_t cap = kDefaultArborescenceCap);

// Product of the edge rates.
MultiPoly arborescence_weight(const SymbolicChain& chain, const Arborescence& a);

// Sum of arborescence weights rooted at `root`, computed as the determinant
// of the out-degree Laplacian with the root's row and column deleted.
MultiPoly psi_tree(const SymbolicChain& chain, std::size_t root);

// The same determinant with rates first evaluated at an assignment, taken
// over exact rationals (big-integer elimination after clearing is implicit
// in the rational arithmetic).
Rat psi_tree_evaluated(const SymbolicChain& chain, std::size_t root,
                       const std::map<std::string, Rat>& assignment);

// The tree-theorem measure (psi_tree per state); deliberately not
// compactified.
Measure mctt_measure(const ChainPtr& chain);

// The common exact quotient psi_tree(s) / reference(s), verified identical
// across all states; throws NotDivisibleError or Error when the reference
// is not proportional to the stationary measure.
MultiPoly ratio_q(const SymbolicChain& chain, const Measure& reference);

} // namespace asep

#endif
