#ifndef ASEP_TABLEAUX_HPP
#define ASEP_TABLEAUX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "asep/models.hpp"
#include "asep/poly.hpp"

namespace asep {

enum class Letter : std::int8_t { alpha = 0, beta = 1, gamma = 2, delta = 3 };

enum class TableauMode { two_letter, four_letter };

// A filling of the staircase shape with rows i = 1..n of length n+1-i.
// The boxes (i, n+1-i) form the anti-diagonal; reading them from i = 1 to
// i = n gives the type word.  Validity:
//   - every anti-diagonal box is filled;
//   - a beta/delta forces all boxes to its left in its row to be empty;
//   - an alpha/gamma forces all boxes above it in its column to be empty.
class StaircaseTableau {
public:
    explicit StaircaseTableau(int n);

    int size() const noexcept { return n_; }
    bool in_shape(int i, int j) const noexcept {
        return i >= 1 && i <= n_ && j >= 1 && j <= n_ + 1 - i;
    }
    std::optional<Letter> letter_at(int i, int j) const;
    void set(int i, int j, std::optional<Letter> l);

    // Total number of boxes, n(n+1)/2.
    int box_count() const noexcept { return n_ * (n_ + 1) / 2; }

    // Validity w.r.t. the given letter alphabet.
    bool valid(TableauMode mode) const;

    bool operator==(const StaircaseTableau& o) const { return n_ == o.n_ && cells_ == o.cells_; }
    bool operator<(const StaircaseTableau& o) const { return cells_ < o.cells_; }

private:
    int flat(int i, int j) const { return offsets_[i - 1] + (j - 1); }
    int n_;
    std::vector<int> offsets_;
    std::vector<std::int8_t> cells_; // -1 empty, else Letter
};

struct WeightedTableau {
    StaircaseTableau tableau;
    std::vector<std::pair<int, int>> q_boxes; // boxes that receive a q
    MultiPoly weight;                         // a single monomial
};

// All valid tableaux of the given size and alphabet, optionally filtered by
// type, each exactly once in a fixed deterministic order (anti-diagonal
// letters first, then interior boxes row-major, empty before letters).
std::vector<StaircaseTableau> enumerate_tableaux(int n, TableauMode mode,
                                                 const std::optional<Word>& type_filter = {});

// Anti-diagonal reading: alpha/delta -> particle, beta/gamma -> hole.
Word tableau_type(const StaircaseTableau& t);

// Marks each empty box whose nearest filled box to the right in its row is
// a delta, or whose nearest filled right-in-row is alpha/gamma and nearest
// filled below-in-column is beta/gamma; assembles the monomial weight.
// On two-letter tableaux this reduces to: right neighbor alpha and below
// neighbor beta.  The ring must provide the letter names and q.
WeightedTableau place_q(const StaircaseTableau& t, const RingPtr& ring);

// Sum of weights over tableaux of the given type.
MultiPoly psi_tableaux(int n, const Word& type, TableauMode mode, const RingPtr& ring);

// Sum of weights over all tableaux of the given size.
MultiPoly partition_function(int n, TableauMode mode, const RingPtr& ring);

// Weight measure over all 2^n types, in open_words order.
Measure tableaux_measure(int n, TableauMode mode, const RingPtr& ring);

} // namespace asep

#endif
