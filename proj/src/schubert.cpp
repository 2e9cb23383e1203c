#include "asep/schubert.hpp"

#include <algorithm>

#include "asep/models.hpp"

namespace asep {

MultiPoly swap_x_vars(const MultiPoly& f, int i) {
    const RingPtr& ring = f.ring();
    std::size_t a = ring->require("x" + std::to_string(i));
    std::size_t b = ring->require("x" + std::to_string(i + 1));
    MultiPoly out = MultiPoly::zero(ring);
    for (auto [e, c] : f.terms()) {
        std::swap(e[a], e[b]);
        out += MultiPoly::monomial(ring, std::move(e), std::move(c));
    }
    return out;
}

MultiPoly divided_difference(const MultiPoly& f, int i) {
    const RingPtr& ring = f.ring();
    MultiPoly num = f - swap_x_vars(f, i);
    if (num.is_zero()) return num;
    MultiPoly den = MultiPoly::variable(ring, "x" + std::to_string(i)) -
                    MultiPoly::variable(ring, "x" + std::to_string(i + 1));
    return num.exact_div(den);
}

namespace {

MultiPoly staircase_monomial(int n, const RingPtr& ring) {
    MultiPoly::Exponents e(ring->size(), 0);
    for (int k = 1; k < n; ++k)
        e[ring->require("x" + std::to_string(k))] = static_cast<std::uint32_t>(n - k);
    return MultiPoly::monomial(ring, std::move(e), 1);
}

} // namespace

std::map<Permutation, MultiPoly> schubert_table(int n, const RingPtr& ring) {
    std::map<Permutation, MultiPoly> table;
    std::vector<std::vector<Permutation>> by_length(n * (n - 1) / 2 + 1);
    std::vector<int> line(n);
    for (int i = 0; i < n; ++i) line[i] = i + 1;
    do {
        Permutation w(line);
        by_length[static_cast<std::size_t>(w.length())].push_back(w);
    } while (std::next_permutation(line.begin(), line.end()));

    Permutation w0 = Permutation::longest(n);
    table.emplace(w0, staircase_monomial(n, ring));
    for (int len = w0.length() - 1; len >= 0; --len) {
        for (const Permutation& u : by_length[static_cast<std::size_t>(len)]) {
            // First ascent i: u s_i is one step longer and already computed.
            int i = 1;
            while (u(i) > u(i + 1)) ++i;
            const MultiPoly& longer = table.at(u.times_adjacent_transposition(i));
            table.emplace(u, divided_difference(longer, i));
        }
    }
    return table;
}

MultiPoly schubert_poly(const Permutation& w, const RingPtr& ring) {
    // Walk down from the longest permutation along ascents of w's suffix;
    // each step peels one divided difference.
    const int n = w.size();
    MultiPoly f = staircase_monomial(n, ring);
    Permutation u = Permutation::longest(n);
    while (!(u == w)) {
        // Any i where u has a descent but w does not force one yet; the
        // standard choice: find i with u(i) > u(i+1) and moving toward w.
        // Walking the inverse: pick the first position where u and w differ,
        // then bubble the needed value upward by adjacent transpositions.
        int pos = 1;
        while (u(pos) == w(pos)) ++pos;
        int at = pos;
        while (u(at) != w(pos)) ++at;
        // Bring w(pos) from position `at` to `pos`; each move is u -> u s_i
        // with u(i) > u(i+1), a length-decreasing step.
        for (int i = at - 1; i >= pos; --i) {
            f = divided_difference(f, i);
            u = u.times_adjacent_transposition(i);
        }
    }
    return f;
}

MultiPoly schubert_poly(const Permutation& w) {
    return schubert_poly(w, rings::xy(w.size(), false));
}

MultiPoly complete_homogeneous(int k, const RingPtr& ring,
                               const std::vector<std::size_t>& vars) {
    if (k < 0) throw Error("degree must be nonnegative");
    MultiPoly sum = MultiPoly::zero(ring);
    MultiPoly::Exponents e(ring->size(), 0);
    auto rec = [&](auto&& self, int remaining, std::size_t slot) -> void {
        if (remaining == 0) {
            sum += MultiPoly::monomial(ring, e, 1);
            return;
        }
        if (slot == vars.size()) return;
        self(self, remaining, slot + 1);
        e[vars[slot]] += 1;
        self(self, remaining - 1, slot);
        e[vars[slot]] -= 1;
    };
    rec(rec, k, 0);
    return sum;
}

MultiPoly kw_partition_function(int n, const RingPtr& ring) {
    MultiPoly z = MultiPoly::constant(ring, 1);
    for (int i = 1; i <= n; ++i) {
        std::vector<std::size_t> vars;
        for (int j = 1; j < i; ++j) vars.push_back(ring->require("x" + std::to_string(j)));
        std::size_t xi = ring->require("x" + std::to_string(i));
        vars.push_back(xi);
        vars.push_back(xi);
        z *= complete_homogeneous(n - i, ring, vars);
    }
    return z;
}

bool KwReport::all_found() const {
    return std::all_of(states.begin(), states.end(), [](const KwStateReport& s) {
        return !s.evil_avoiding || s.found;
    });
}

namespace {

struct Candidate {
    Permutation w;
    MultiPoly poly;
    long degree;
};

// Trial division, smallest degrees first, multiplicities allowed via
// non-decreasing candidate index; the remainder after k factors must be a
// single term.
bool search_factorization(const MultiPoly& target, int k,
                          const std::vector<Candidate>& candidates, std::size_t start,
                          std::vector<Permutation>& factors, MultiPoly& monomial) {
    if (k == 0) {
        if (!target.is_monomial()) return false;
        monomial = target;
        return true;
    }
    long deg = target.total_degree();
    for (std::size_t idx = start; idx < candidates.size(); ++idx) {
        const Candidate& c = candidates[idx];
        if (c.degree > deg - (k - 1)) break; // remaining factors need degree too
        if (!target.divisible_by(c.poly)) continue;
        factors.push_back(c.w);
        if (search_factorization(target.exact_div(c.poly), k - 1, candidates, idx,
                                 factors, monomial))
            return true;
        factors.pop_back();
    }
    return false;
}

} // namespace

KwReport verify_kw(int n) {
    if (n < 2) throw Error("verification needs n >= 2");
    std::vector<int> parts(n);
    for (int i = 0; i < n; ++i) parts[i] = n - i;
    ChainPtr chain = build_inhom_tasep(Partition(parts), false);
    const RingPtr& ring = chain->ring();
    Measure solver = stationary_compact(chain);

    KwReport report;
    report.n = n;

    // Anchor the theorem normalization through the partition-function
    // identity: the solver mass and the product formula must have equal
    // primitive parts, and the content ratio is the integer scale.
    MultiPoly z = kw_partition_function(n, ring);
    MultiPoly mass = MultiPoly::zero(ring);
    for (const auto& v : solver.values) mass += v;
    Int cz = z.integer_content();
    Int cm = mass.integer_content();
    report.z_identity_ok = (z * cm == mass * cz) && cz % cm == 0;
    if (!report.z_identity_ok) return report;
    report.scale = cz / cm;

    std::map<Permutation, MultiPoly> table = schubert_table(n, ring);
    std::vector<Candidate> candidates;
    for (const auto& [w, p] : table) {
        if (w == Permutation::identity(n)) continue;
        candidates.push_back(Candidate{w, p, p.total_degree()});
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.w < b.w;
    });

    for (std::size_t s = 0; s < solver.states.size(); ++s) {
        Word word;
        for (char c : solver.states[s]) word.push_back(c - '0');
        if (word[0] != 1) continue;
        KwStateReport st{solver.states[s], Permutation(word)};
        st.evil_avoiding = is_evil_avoiding(st.w);
        st.k = static_cast<int>(st.w.inverse().descents().size());
        st.psi = solver.values[s] * report.scale;
        st.monomial = MultiPoly::zero(ring);
        if (st.evil_avoiding)
            st.found = search_factorization(st.psi, st.k, candidates, 0, st.factors,
                                            st.monomial);
        report.states.push_back(std::move(st));
    }
    return report;
}

} // namespace asep
