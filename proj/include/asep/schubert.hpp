#ifndef ASEP_SCHUBERT_HPP
#define ASEP_SCHUBERT_HPP

#include <map>
#include <optional>
#include <vector>

#include "asep/markov.hpp"
#include "asep/permutation.hpp"
#include "asep/poly.hpp"

namespace asep {

// (f - s_i f) / (x_i - x_{i+1}); always an exact division.
MultiPoly divided_difference(const MultiPoly& f, int i);

// Swap the exponents of x_i and x_{i+1}.
MultiPoly swap_x_vars(const MultiPoly& f, int i);

// The polynomial attached to w, computed by divided differences down from
// the staircase monomial x1^{n-1} x2^{n-2} ... x_{n-1} of the longest
// permutation.  The ring must contain x1..xn.
MultiPoly schubert_poly(const Permutation& w, const RingPtr& ring);

// Convenience overload over the ring x1..xn.
MultiPoly schubert_poly(const Permutation& w);

// Every member of S_n at once (the table the factor search draws from).
std::map<Permutation, MultiPoly> schubert_table(int n, const RingPtr& ring);

// Sum of all degree-k products of the listed variables (repeats allowed,
// each listed slot counted separately).
MultiPoly complete_homogeneous(int k, const RingPtr& ring,
                               const std::vector<std::size_t>& vars);

// prod_{i=1..n} h_{n-i}(x1, ..., x_{i-1}, x_i, x_i).
MultiPoly kw_partition_function(int n, const RingPtr& ring);

struct KwStateReport {
    std::string state;
    Permutation w;
    bool evil_avoiding = false;
    int k = 0;              // descents of w^{-1}
    bool found = false;     // factorization located
    MultiPoly psi;          // the theorem-normalized stationary entry
    MultiPoly monomial;     // leftover monomial factor
    std::vector<Permutation> factors;
};

struct KwReport {
    int n = 0;
    bool z_identity_ok = false; // solver mass matches the product formula
    Int scale = 0;              // integer scaling solver -> theorem normalization
    std::vector<KwStateReport> states;
    bool all_found() const;
};

// For lambda = (n, ..., 1) with y = 0: solves the chain, checks the total
// mass against kw_partition_function, and for every state with first entry
// 1 that avoids the four patterns searches for psi = monomial * (product of
// exactly k Schubert polynomials) by greedy trial division with
// backtracking.  Failures are reported, never silently passed.
KwReport verify_kw(int n);

} // namespace asep

#endif
