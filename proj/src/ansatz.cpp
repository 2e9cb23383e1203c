#include "asep/ansatz.hpp"

namespace asep {

namespace {

Int binom(long a, long b) {
    if (b < 0 || b > a || a < 0) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

// beta^(i-j+1) * (q^(j-1) C(i-1, j-1) + alpha * sum_{r=0}^{j-2} C(i-j+r, r) q^r),
// with 1-based i >= j.
MultiPoly e_entry(const RingPtr& ring, int i, int j) {
    const std::size_t va = ring->require("alpha");
    const std::size_t vb = ring->require("beta");
    const std::size_t vq = ring->require("q");
    MultiPoly::Exponents e(ring->size(), 0);
    MultiPoly sum = MultiPoly::zero(ring);
    e[vb] = static_cast<std::uint32_t>(i - j + 1);
    e[vq] = static_cast<std::uint32_t>(j - 1);
    sum += MultiPoly::monomial(ring, e, binom(i - 1, j - 1));
    for (int r = 0; r <= j - 2; ++r) {
        e[va] = 1;
        e[vq] = static_cast<std::uint32_t>(r);
        sum += MultiPoly::monomial(ring, e, binom(i - j + r, r));
    }
    return sum;
}

} // namespace

AnsatzTruncation build_truncation(int dim) {
    if (dim < 1) throw Error("truncation dimension must be at least 1");
    RingPtr ring = rings::open3();
    const std::size_t n = static_cast<std::size_t>(dim);
    PolyMatrix D(ring, n, n), E(ring, n, n);
    MultiPoly alpha = MultiPoly::variable(ring, "alpha");
    for (std::size_t i = 0; i + 1 < n; ++i) D.at(i, i + 1) = alpha;
    for (int i = 1; i <= dim; ++i)
        for (int j = 1; j <= i; ++j) E.at(i - 1, j - 1) = e_entry(ring, i, j);
    std::vector<MultiPoly> W(n, MultiPoly::zero(ring)), V(n, MultiPoly::constant(ring, 1));
    W[0] = MultiPoly::constant(ring, 1);
    return AnsatzTruncation{dim, std::move(D), std::move(E), std::move(W), std::move(V), ring};
}

bool check_relations_with_constant(int dim, const MultiPoly& c) {
    if (dim < 2) throw Error("relation check needs dimension at least 2");
    AnsatzTruncation t = build_truncation(dim + 1);
    const RingPtr& ring = t.ring;
    MultiPoly alpha = MultiPoly::variable(ring, "alpha");
    MultiPoly beta = MultiPoly::variable(ring, "beta");
    MultiPoly q = MultiPoly::variable(ring, "q");
    MultiPoly cc = c.map_to(ring);

    // D E - q E D - c (D + E): the product entries at indices <= dim only
    // involve inputs at indices <= dim+1 because D is a single shift.
    PolyMatrix lhs = t.D * t.E - (t.E * t.D).scaled(q) - (t.D + t.E).scaled(cc);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (!lhs.at(i, j).is_zero()) return false;

    // beta D V = c V on rows that do not touch the truncation edge.
    for (int i = 0; i + 1 < dim; ++i) {
        MultiPoly row = MultiPoly::zero(ring);
        for (int k = 0; k < dim; ++k) {
            if (t.D.at(i, k).is_zero()) continue;
            row += t.D.at(i, k) * t.V[k];
        }
        if (beta * row != cc * t.V[i]) return false;
    }

    // alpha W E = c W on all dim columns.
    for (int j = 0; j < dim; ++j) {
        MultiPoly col = MultiPoly::zero(ring);
        for (int k = 0; k < dim; ++k) {
            if (t.W[k].is_zero() || t.E.at(k, j).is_zero()) continue;
            col += t.W[k] * t.E.at(k, j);
        }
        if (alpha * col != cc * t.W[j]) return false;
    }
    return true;
}

bool check_relations(int dim) {
    RingPtr ring = rings::open3();
    MultiPoly c = MultiPoly::variable(ring, "alpha") * MultiPoly::variable(ring, "beta");
    return check_relations_with_constant(dim, c);
}

MultiPoly transfer_psi_at_dim(const Word& word, int dim) {
    if (word.empty()) throw Error("transfer product needs a nonempty word");
    if (dim < static_cast<int>(word.size()) + 1)
        throw Error("truncation dimension too small for exactness");
    AnsatzTruncation t = build_truncation(dim);
    std::vector<MultiPoly> row = t.W;
    std::vector<MultiPoly> next(row.size(), MultiPoly::zero(t.ring));
    for (int letter : word) {
        const PolyMatrix& m = letter ? t.D : t.E;
        for (auto& p : next) p = MultiPoly::zero(t.ring);
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i].is_zero()) continue;
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (m.at(i, j).is_zero()) continue;
                next[j] += row[i] * m.at(i, j);
            }
        }
        std::swap(row, next);
    }
    MultiPoly out = MultiPoly::zero(t.ring);
    for (std::size_t i = 0; i < row.size(); ++i) out += row[i] * t.V[i];
    return out;
}

MultiPoly transfer_psi(const Word& word) {
    return transfer_psi_at_dim(word, static_cast<int>(word.size()) + 1);
}

MultiPoly transfer_partition_function(int n) {
    if (n < 1) throw Error("lattice size must be at least 1");
    AnsatzTruncation t = build_truncation(n + 1);
    PolyMatrix s = t.D + t.E;
    std::vector<MultiPoly> row = t.W;
    std::vector<MultiPoly> next(row.size(), MultiPoly::zero(t.ring));
    for (int step = 0; step < n; ++step) {
        for (auto& p : next) p = MultiPoly::zero(t.ring);
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i].is_zero()) continue;
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (s.at(i, j).is_zero()) continue;
                next[j] += row[i] * s.at(i, j);
            }
        }
        std::swap(row, next);
    }
    MultiPoly out = MultiPoly::zero(t.ring);
    for (std::size_t i = 0; i < row.size(); ++i) out += row[i] * t.V[i];
    return out;
}

} // namespace asep
