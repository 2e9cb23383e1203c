#ifndef ASEP_ANSATZ_HPP
#define ASEP_ANSATZ_HPP

#include <vector>

#include "asep/matrix.hpp"
#include "asep/models.hpp"
#include "asep/poly.hpp"

namespace asep {

// Finite window of the transfer-matrix solution over (alpha, beta, q):
//   D has alpha on the superdiagonal and zeros elsewhere;
//   E is lower triangular with
//     e_{ij} = beta^{i-j+1} (q^{j-1} C(i-1, j-1)
//              + alpha * sum_{r=0}^{j-2} C(i-j+r, r) q^r)   for j <= i;
//   W = (1, 0, ..., 0),  V = (1, 1, ..., 1)^T.
struct AnsatzTruncation {
    int dim;
    PolyMatrix D;
    PolyMatrix E;
    std::vector<MultiPoly> W;
    std::vector<MultiPoly> V;
    RingPtr ring;
};

AnsatzTruncation build_truncation(int dim);

// Verifies the three defining relations with constant c = alpha*beta on the
// largest window unaffected by truncation:
//   D E - q E D = c (D + E)   on the leading N x N window (built at N+1),
//   beta D V = c V            on the first N-1 rows,
//   alpha W E = c W           on all N columns.
bool check_relations(int dim);

// Same check with an arbitrary constant in place of alpha*beta (the defining
// relations pin the constant; anything else must fail).
bool check_relations_with_constant(int dim, const MultiPoly& c);

// W (prod_i: word_i ? D : E) V at truncation dim |word|+1, which is exact:
// D raises the active index by at most one per factor and E never does.
MultiPoly transfer_psi(const Word& word);

// Same product evaluated at an explicit truncation dimension (>= |word|+1
// reproduces the exact value; used to test truncation stability).
MultiPoly transfer_psi_at_dim(const Word& word, int dim);

// W (D+E)^n V, the transfer-matrix partition function.
MultiPoly transfer_partition_function(int n);

} // namespace asep

#endif
