#include "asep/tableaux.hpp"

#include <algorithm>

namespace asep {

namespace {

bool row_clearing(Letter l) { return l == Letter::beta || l == Letter::delta; }
bool col_clearing(Letter l) { return l == Letter::alpha || l == Letter::gamma; }
bool particle_letter(Letter l) { return l == Letter::alpha || l == Letter::delta; }

} // namespace

StaircaseTableau::StaircaseTableau(int n) : n_(n) {
    if (n < 1) throw Error("tableau size must be at least 1");
    offsets_.resize(n);
    int off = 0;
    for (int i = 1; i <= n; ++i) {
        offsets_[i - 1] = off;
        off += n + 1 - i;
    }
    cells_.assign(off, -1);
}

std::optional<Letter> StaircaseTableau::letter_at(int i, int j) const {
    if (!in_shape(i, j)) throw Error("box outside the staircase shape");
    std::int8_t c = cells_[flat(i, j)];
    if (c < 0) return std::nullopt;
    return static_cast<Letter>(c);
}

void StaircaseTableau::set(int i, int j, std::optional<Letter> l) {
    if (!in_shape(i, j)) throw Error("box outside the staircase shape");
    cells_[flat(i, j)] = l ? static_cast<std::int8_t>(*l) : -1;
}

bool StaircaseTableau::valid(TableauMode mode) const {
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_ + 1 - i; ++j) {
            auto l = letter_at(i, j);
            bool anti = (j == n_ + 1 - i);
            if (anti && !l) return false;
            if (!l) continue;
            if (mode == TableauMode::two_letter && *l != Letter::alpha && *l != Letter::beta)
                return false;
            if (row_clearing(*l)) {
                for (int j2 = 1; j2 < j; ++j2)
                    if (letter_at(i, j2)) return false;
            }
            if (col_clearing(*l)) {
                for (int i2 = 1; i2 < i; ++i2)
                    if (letter_at(i2, j)) return false;
            }
        }
    }
    return true;
}

Word tableau_type(const StaircaseTableau& t) {
    Word w;
    const int n = t.size();
    w.reserve(n);
    for (int i = 1; i <= n; ++i) {
        auto l = t.letter_at(i, n + 1 - i);
        if (!l) throw Error("tableau has an empty anti-diagonal box");
        w.push_back(particle_letter(*l) ? 1 : 0);
    }
    return w;
}

namespace {

struct Enumerator {
    int n;
    TableauMode mode;
    const std::optional<Word>& filter;
    std::vector<StaircaseTableau>& out;
    StaircaseTableau work;

    // Interior boxes row-major, assigned after the whole anti-diagonal.
    std::vector<std::pair<int, int>> interior;

    Enumerator(int n, TableauMode mode, const std::optional<Word>& filter,
               std::vector<StaircaseTableau>& out)
        : n(n), mode(mode), filter(filter), out(out), work(n) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n - i; ++j) interior.emplace_back(i, j);
    }

    void run() { anti(1); }

    // Choose the anti-diagonal letter of row i; this fixes the type.
    void anti(int i) {
        if (i > n) {
            fill(0);
            return;
        }
        const int letters = (mode == TableauMode::four_letter) ? 4 : 2;
        for (int v = 0; v < letters; ++v) {
            Letter l = static_cast<Letter>(v);
            if (filter && particle_letter(l) != ((*filter)[i - 1] == 1)) continue;
            work.set(i, n + 1 - i, l);
            anti(i + 1);
        }
        work.set(i, n + 1 - i, std::nullopt);
    }

    bool can_place(int i, int j, Letter l) {
        // The anti-diagonal letter of row i clears the whole row interior
        // when it is beta/delta; of column j, when alpha/gamma.
        if (row_clearing(*work.letter_at(i, n + 1 - i))) return false;
        if (col_clearing(*work.letter_at(n + 1 - j, j))) return false;
        if (row_clearing(l)) {
            for (int j2 = 1; j2 < j; ++j2)
                if (work.letter_at(i, j2)) return false;
        }
        if (col_clearing(l)) {
            for (int i2 = 1; i2 < i; ++i2)
                if (work.letter_at(i2, j)) return false;
        }
        return true;
    }

    void fill(std::size_t k) {
        if (k == interior.size()) {
            out.push_back(work);
            return;
        }
        auto [i, j] = interior[k];
        fill(k + 1); // empty first
        const int letters = (mode == TableauMode::four_letter) ? 4 : 2;
        for (int v = 0; v < letters; ++v) {
            Letter l = static_cast<Letter>(v);
            if (!can_place(i, j, l)) continue;
            work.set(i, j, l);
            fill(k + 1);
        }
        work.set(i, j, std::nullopt);
    }
};

} // namespace

std::vector<StaircaseTableau> enumerate_tableaux(int n, TableauMode mode,
                                                 const std::optional<Word>& type_filter) {
    if (n < 1) throw Error("tableau size must be at least 1");
    if (type_filter && static_cast<int>(type_filter->size()) != n)
        throw Error("type filter length must equal the tableau size");
    std::vector<StaircaseTableau> out;
    Enumerator e(n, mode, type_filter, out);
    e.run();
    return out;
}

WeightedTableau place_q(const StaircaseTableau& t, const RingPtr& ring) {
    const int n = t.size();
    int counts[4] = {0, 0, 0, 0};
    std::vector<std::pair<int, int>> q_boxes;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n + 1 - i; ++j) {
            auto l = t.letter_at(i, j);
            if (l) {
                ++counts[static_cast<int>(*l)];
                continue;
            }
            // Nearest filled box to the right in row i.
            std::optional<Letter> right;
            for (int j2 = j + 1; j2 <= n + 1 - i; ++j2)
                if ((right = t.letter_at(i, j2))) break;
            if (!right) continue;
            bool marked = false;
            if (*right == Letter::delta) {
                marked = true;
            } else if (*right == Letter::alpha || *right == Letter::gamma) {
                std::optional<Letter> below;
                for (int i2 = i + 1; i2 <= n + 1 - j; ++i2)
                    if ((below = t.letter_at(i2, j))) break;
                marked = below && (*below == Letter::beta || *below == Letter::gamma);
            }
            if (marked) q_boxes.emplace_back(i, j);
        }
    }
    static const char* names[4] = {"alpha", "beta", "gamma", "delta"};
    MultiPoly::Exponents e(ring->size(), 0);
    for (int v = 0; v < 4; ++v) {
        if (counts[v] == 0) continue;
        e[ring->require(names[v])] = static_cast<std::uint32_t>(counts[v]);
    }
    e[ring->require("q")] = static_cast<std::uint32_t>(q_boxes.size());
    MultiPoly w = MultiPoly::monomial(ring, std::move(e), 1);
    return WeightedTableau{t, std::move(q_boxes), std::move(w)};
}

MultiPoly psi_tableaux(int n, const Word& type, TableauMode mode, const RingPtr& ring) {
    if (static_cast<int>(type.size()) != n) throw Error("type length must equal n");
    MultiPoly sum = MultiPoly::zero(ring);
    for (const auto& t : enumerate_tableaux(n, mode, type))
        sum += place_q(t, ring).weight;
    return sum;
}

MultiPoly partition_function(int n, TableauMode mode, const RingPtr& ring) {
    MultiPoly sum = MultiPoly::zero(ring);
    for (const auto& t : enumerate_tableaux(n, mode))
        sum += place_q(t, ring).weight;
    return sum;
}

Measure tableaux_measure(int n, TableauMode mode, const RingPtr& ring) {
    Measure m;
    m.ring = ring;
    for (const Word& w : open_words(n)) {
        m.states.push_back(open_word_string(w));
        m.values.push_back(psi_tableaux(n, w, mode, ring));
    }
    return m;
}

} // namespace asep
