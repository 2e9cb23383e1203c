#ifndef ASEP_MARKOV_HPP
#define ASEP_MARKOV_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "asep/matrix.hpp"
#include "asep/poly.hpp"

namespace asep {

class SymbolicChain;
using ChainPtr = std::shared_ptr<const SymbolicChain>;

// A finite state set with symbolic off-diagonal transition rates.  The
// built-in models all carry a uniform time-scale factor (1/n or 1/(n+1))
// together with self-loop probabilities; both are dropped here, which
// leaves the stationary vector unchanged.  No self-loops are stored and
// every stored rate is a nonzero polynomial.
class SymbolicChain {
public:
    using RateMap = std::map<std::pair<std::size_t, std::size_t>, MultiPoly>;

    static ChainPtr create(RingPtr ring, std::vector<std::string> states, RateMap rates);

    std::size_t size() const noexcept { return states_.size(); }
    const std::vector<std::string>& states() const noexcept { return states_; }
    const std::string& state(std::size_t i) const { return states_.at(i); }
    std::size_t state_index(const std::string& label) const;
    const RingPtr& ring() const noexcept { return ring_; }
    const RateMap& rates() const noexcept { return rates_; }

    // nullptr when no transition is stored.
    const MultiPoly* rate(std::size_t from, std::size_t to) const;
    MultiPoly rate_or_zero(std::size_t from, std::size_t to) const;

    // Rate matrix Q: off-diagonal entries are the stored rates, diagonal
    // entries the negated off-diagonal row sums.
    PolyMatrix rate_matrix() const;

    // Strong connectivity of the directed graph of stored rate edges;
    // symbolic rates count as nonzero (parameters are generic).
    bool irreducible() const;

    // Same chain with states listed in a new order.
    ChainPtr reordered(const std::vector<std::size_t>& new_to_old) const;

private:
    SymbolicChain(RingPtr ring, std::vector<std::string> states, RateMap rates);
    RingPtr ring_;
    std::vector<std::string> states_;
    RateMap rates_;
    std::map<std::string, std::size_t> index_;
};

// An unnormalized measure: one polynomial per state label.
struct Measure {
    RingPtr ring;
    std::vector<std::string> states;
    std::vector<MultiPoly> values;

    const MultiPoly& at(const std::string& label) const;
    bool all_zero() const;
};

// Surjective map from the states of a source chain onto target labels.
struct LumpingMap {
    ChainPtr source;
    std::vector<std::string> target_states;
    std::vector<std::size_t> assignment; // source index -> target index

    static LumpingMap identity(ChainPtr chain);
    void validate() const; // surjectivity, sizes
};

// Stationary measure with the gcd of all entries (polynomial and integer
// content) removed; the compact representative of the kernel line.
Measure stationary_compact(const ChainPtr& chain);

// Exact polynomial check of the global balance identity at every state.
bool check_global_balance(const SymbolicChain& chain, const Measure& m);

struct Classification {
    bool manifestly_positive;
    bool compact;
};
Classification classify(const Measure& m);

// The lumped chain; throws LumpingError (with a witnessing state pair)
// when the strong-lumping condition fails.  The condition is checked on
// off-diagonal fibers; self-loops are determined by complementarity.
ChainPtr lump(const LumpingMap& f);

// Sum of measure entries over each fiber.  Defined for any surjection,
// lumpable or not.
Measure pushforward(const Measure& m, const LumpingMap& f);

// Exact proportionality by cross-multiplication (never division).
bool proportional(const Measure& a, const Measure& b);

} // namespace asep

#endif
