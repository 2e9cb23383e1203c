#include "asep/arborescence.hpp"

#include <algorithm>

#include "asep/matrix.hpp"

namespace asep {

namespace {

// Non-root states in chain order, each with its out-edges sorted by target.
struct SearchSpace {
    std::vector<std::size_t> order;                     // recursion depth -> state
    std::vector<std::vector<std::size_t>> out_targets;  // per state
};

SearchSpace make_space(const SymbolicChain& chain, std::size_t root) {
    SearchSpace s;
    s.out_targets.resize(chain.size());
    for (const auto& [edge, rate] : chain.rates())
        s.out_targets[edge.first].push_back(edge.second);
    for (auto& v : s.out_targets) std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < chain.size(); ++i)
        if (i != root) s.order.push_back(i);
    return s;
}

} // namespace

std::vector<Arborescence> enumerate_arborescences(const SymbolicChain& chain,
                                                  std::size_t root, std::size_t cap) {
    if (root >= chain.size()) throw Error("root state out of range");
    if (!chain.irreducible()) throw Error("chain is not irreducible");
    SearchSpace space = make_space(chain, root);
    const std::size_t none = chain.size();
    std::vector<std::size_t> succ(chain.size(), none);
    std::vector<Arborescence> out;

    auto closes_cycle = [&](std::size_t from, std::size_t to) {
        std::size_t u = to;
        while (u != none) {
            if (u == from) return true;
            if (u == root) return false;
            u = succ[u];
        }
        return false;
    };

    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == space.order.size()) {
            Arborescence a;
            a.root = root;
            for (std::size_t s : space.order) a.edges.emplace_back(s, succ[s]);
            std::sort(a.edges.begin(), a.edges.end());
            out.push_back(std::move(a));
            if (out.size() > cap)
                throw EnumerationCapError("arborescence count exceeds cap of " +
                                          std::to_string(cap));
            return;
        }
        std::size_t s = space.order[depth];
        for (std::size_t t : space.out_targets[s]) {
            if (closes_cycle(s, t)) continue;
            succ[s] = t;
            self(self, depth + 1);
            succ[s] = none;
        }
    };
    rec(rec, 0);
    return out;
}

MultiPoly arborescence_weight(const SymbolicChain& chain, const Arborescence& a) {
    MultiPoly w = MultiPoly::constant(chain.ring(), 1);
    for (auto [from, to] : a.edges) {
        const MultiPoly* r = chain.rate(from, to);
        if (!r) throw Error("arborescence uses an edge the chain does not have");
        w *= *r;
    }
    return w;
}

namespace {

// Out-degree Laplacian with row and column `root` deleted.
PolyMatrix laplacian_minor(const SymbolicChain& chain, std::size_t root) {
    const std::size_t n = chain.size();
    if (n == 1) {
        PolyMatrix m(chain.ring(), 1, 1);
        m.at(0, 0) = MultiPoly::constant(chain.ring(), 1);
        return m; // by convention det of the empty minor is 1
    }
    PolyMatrix m(chain.ring(), n - 1, n - 1);
    auto idx = [&](std::size_t i) { return i < root ? i : i - 1; };
    for (const auto& [edge, rate] : chain.rates()) {
        auto [from, to] = edge;
        if (from != root) m.at(idx(from), idx(from)) += rate;
        if (from != root && to != root) m.at(idx(from), idx(to)) -= rate;
    }
    return m;
}

} // namespace

MultiPoly psi_tree(const SymbolicChain& chain, std::size_t root) {
    if (root >= chain.size()) throw Error("root state out of range");
    return determinant(laplacian_minor(chain, root));
}

Rat psi_tree_evaluated(const SymbolicChain& chain, std::size_t root,
                       const std::map<std::string, Rat>& assignment) {
    if (root >= chain.size()) throw Error("root state out of range");
    const std::size_t n = chain.size();
    if (n == 1) return 1;
    std::vector<std::vector<Rat>> m(n - 1, std::vector<Rat>(n - 1, Rat(0)));
    auto idx = [&](std::size_t i) { return i < root ? i : i - 1; };
    for (const auto& [edge, rate] : chain.rates()) {
        auto [from, to] = edge;
        Rat v = rate.evaluate(assignment);
        if (from != root) m[idx(from)][idx(from)] += v;
        if (from != root && to != root) m[idx(from)][idx(to)] -= v;
    }
    return determinant_rational(std::move(m));
}

Measure mctt_measure(const ChainPtr& chain) {
    Measure m;
    m.ring = chain->ring();
    m.states = chain->states();
    for (std::size_t i = 0; i < chain->size(); ++i)
        m.values.push_back(psi_tree(*chain, i));
    return m;
}

MultiPoly ratio_q(const SymbolicChain& chain, const Measure& reference) {
    if (reference.states != chain.states())
        throw Error("reference measure is not indexed by the chain's states");
    MultiPoly quotient = MultiPoly::zero(chain.ring());
    bool have = false;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (reference.values[i].is_zero())
            throw Error("reference measure vanishes at state '" + chain.state(i) + "'");
        MultiPoly q = psi_tree(chain, i).exact_div(reference.values[i].map_to(chain.ring()));
        if (!have) {
            quotient = std::move(q);
            have = true;
        } else if (q != quotient) {
            throw Error("quotient differs at state '" + chain.state(i) +
                        "': reference is not proportional to the stationary measure");
        }
    }
    return quotient;
}

} // namespace asep
