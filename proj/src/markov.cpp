#include "asep/markov.hpp"

#include <algorithm>

namespace asep {

SymbolicChain::SymbolicChain(RingPtr ring, std::vector<std::string> states, RateMap rates)
    : ring_(std::move(ring)), states_(std::move(states)), rates_(std::move(rates)) {
    if (states_.empty()) throw Error("a chain needs at least one state");
    for (std::size_t i = 0; i < states_.size(); ++i) {
        if (!index_.emplace(states_[i], i).second)
            throw Error("duplicate state label '" + states_[i] + "'");
    }
    for (const auto& [edge, rate] : rates_) {
        auto [from, to] = edge;
        if (from >= states_.size() || to >= states_.size())
            throw Error("rate edge out of range");
        if (from == to) throw Error("self-loop rates are not stored");
        if (rate.is_zero()) throw Error("stored rates must be nonzero");
        check_same_ring(ring_, rate.ring());
    }
}

ChainPtr SymbolicChain::create(RingPtr ring, std::vector<std::string> states, RateMap rates) {
    return ChainPtr(new SymbolicChain(std::move(ring), std::move(states), std::move(rates)));
}

std::size_t SymbolicChain::state_index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw Error("unknown state '" + label + "'");
    return it->second;
}

const MultiPoly* SymbolicChain::rate(std::size_t from, std::size_t to) const {
    auto it = rates_.find({from, to});
    return it == rates_.end() ? nullptr : &it->second;
}

MultiPoly SymbolicChain::rate_or_zero(std::size_t from, std::size_t to) const {
    const MultiPoly* r = rate(from, to);
    return r ? *r : MultiPoly::zero(ring_);
}

PolyMatrix SymbolicChain::rate_matrix() const {
    const std::size_t n = size();
    PolyMatrix q(ring_, n, n);
    for (const auto& [edge, rate] : rates_) {
        auto [from, to] = edge;
        q.at(from, to) = rate;
        q.at(from, from) -= rate;
    }
    return q;
}

bool SymbolicChain::irreducible() const {
    const std::size_t n = size();
    std::vector<std::vector<std::size_t>> fwd(n), bwd(n);
    for (const auto& [edge, rate] : rates_) {
        fwd[edge.first].push_back(edge.second);
        bwd[edge.second].push_back(edge.first);
    }
    auto reaches_all = [n](const std::vector<std::vector<std::size_t>>& adj) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v : adj[u])
                if (!seen[v]) {
                    seen[v] = true;
                    ++count;
                    stack.push_back(v);
                }
        }
        return count == n;
    };
    return reaches_all(fwd) && reaches_all(bwd);
}

ChainPtr SymbolicChain::reordered(const std::vector<std::size_t>& new_to_old) const {
    if (new_to_old.size() != size()) throw Error("reorder permutation size mismatch");
    std::vector<std::size_t> old_to_new(size());
    std::vector<std::string> states(size());
    for (std::size_t i = 0; i < size(); ++i) {
        states[i] = states_[new_to_old[i]];
        old_to_new[new_to_old[i]] = i;
    }
    RateMap rates;
    for (const auto& [edge, rate] : rates_)
        rates.emplace(std::make_pair(old_to_new[edge.first], old_to_new[edge.second]), rate);
    return create(ring_, std::move(states), std::move(rates));
}

const MultiPoly& Measure::at(const std::string& label) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == label) return values[i];
    throw Error("measure has no state '" + label + "'");
}

bool Measure::all_zero() const {
    return std::all_of(values.begin(), values.end(),
                       [](const MultiPoly& p) { return p.is_zero(); });
}

LumpingMap LumpingMap::identity(ChainPtr chain) {
    LumpingMap f;
    f.target_states = chain->states();
    f.assignment.resize(chain->size());
    for (std::size_t i = 0; i < f.assignment.size(); ++i) f.assignment[i] = i;
    f.source = std::move(chain);
    return f;
}

void LumpingMap::validate() const {
    if (!source) throw Error("lumping map has no source chain");
    if (assignment.size() != source->size())
        throw Error("lumping assignment length must match the source state count");
    std::vector<bool> hit(target_states.size(), false);
    for (std::size_t t : assignment) {
        if (t >= target_states.size()) throw Error("lumping target index out of range");
        hit[t] = true;
    }
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
        throw Error("lumping map is not surjective");
}

namespace {

// Fold a gcd across the entries, smallest first; the running gcd shrinks
// quickly and later steps reduce to cheap divisibility checks.
MultiPoly vector_gcd(const std::vector<MultiPoly>& values, const RingPtr& ring) {
    std::vector<const MultiPoly*> order;
    for (const auto& p : values)
        if (!p.is_zero()) order.push_back(&p);
    std::sort(order.begin(), order.end(), [](const MultiPoly* x, const MultiPoly* y) {
        return x->term_count() < y->term_count();
    });
    MultiPoly g = MultiPoly::zero(ring);
    for (const MultiPoly* p : order) {
        g = g.is_zero() ? p->normalized() : MultiPoly::gcd(g, *p);
        if (g.is_one()) break;
    }
    return g;
}

} // namespace

Measure stationary_compact(const ChainPtr& chain) {
    if (!chain->irreducible()) throw Error("chain is not irreducible");
    std::vector<MultiPoly> v = left_kernel(chain->rate_matrix());
    // Remove the common polynomial factor; left_kernel already cleared the
    // integer content, and dividing by a normalized-primitive gcd keeps it 1.
    MultiPoly g = vector_gcd(v, chain->ring());
    if (!g.is_one())
        for (auto& p : v) p = p.exact_div(g);
    bool flip = false;
    for (const auto& p : v) {
        if (p.is_zero()) continue;
        flip = p.leading_coefficient() < 0;
        break;
    }
    if (flip)
        for (auto& p : v) p = -p;
    return Measure{chain->ring(), chain->states(), std::move(v)};
}

bool check_global_balance(const SymbolicChain& chain, const Measure& m) {
    if (m.states != chain.states())
        throw Error("measure is not indexed by the chain's states");
    const std::size_t n = chain.size();
    std::vector<MultiPoly> outflow(n, MultiPoly::zero(chain.ring()));
    std::vector<MultiPoly> inflow(n, MultiPoly::zero(chain.ring()));
    for (const auto& [edge, rate] : chain.rates()) {
        auto [from, to] = edge;
        outflow[from] += m.values[from] * rate;
        inflow[to] += m.values[from] * rate;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (outflow[i] != inflow[i]) return false;
    return true;
}

Classification classify(const Measure& m) {
    if (m.all_zero()) throw Error("classify expects a nonzero measure");
    bool positive = true;
    for (const auto& p : m.values)
        if (p.has_negative_coefficient()) {
            positive = false;
            break;
        }
    MultiPoly g = vector_gcd(m.values, m.ring);
    return Classification{positive, g.is_constant()};
}

ChainPtr lump(const LumpingMap& f) {
    f.validate();
    const SymbolicChain& src = *f.source;
    const std::size_t nt = f.target_states.size();
    std::vector<std::vector<std::size_t>> fiber(nt);
    for (std::size_t x = 0; x < src.size(); ++x) fiber[f.assignment[x]].push_back(x);

    SymbolicChain::RateMap rates;
    for (std::size_t y0 = 0; y0 < nt; ++y0) {
        for (std::size_t y1 = 0; y1 < nt; ++y1) {
            if (y0 == y1) continue;
            bool have = false;
            MultiPoly common = MultiPoly::zero(src.ring());
            std::size_t ref = 0;
            for (std::size_t x0 : fiber[y0]) {
                MultiPoly s = MultiPoly::zero(src.ring());
                for (std::size_t x1 : fiber[y1]) s += src.rate_or_zero(x0, x1);
                if (!have) {
                    common = std::move(s);
                    ref = x0;
                    have = true;
                } else if (s != common) {
                    throw LumpingError(src.state(ref), src.state(x0), f.target_states[y1]);
                }
            }
            if (have && !common.is_zero())
                rates.emplace(std::make_pair(y0, y1), std::move(common));
        }
    }
    return SymbolicChain::create(src.ring(), f.target_states, std::move(rates));
}

Measure pushforward(const Measure& m, const LumpingMap& f) {
    f.validate();
    if (m.states != f.source->states())
        throw Error("measure is not indexed by the lumping map's source states");
    std::vector<MultiPoly> values(f.target_states.size(), MultiPoly::zero(m.ring));
    for (std::size_t x = 0; x < m.values.size(); ++x)
        values[f.assignment[x]] += m.values[x];
    return Measure{m.ring, f.target_states, std::move(values)};
}

bool proportional(const Measure& a, const Measure& b) {
    if (a.states.size() != b.states.size()) return false;
    const std::size_t n = a.states.size();
    // Zero patterns must agree; then one anchor identity per entry suffices
    // because the polynomial ring is an integral domain.
    std::size_t anchor = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (a.values[i].is_zero() != b.values[i].is_zero()) return false;
        if (anchor == n && !a.values[i].is_zero()) anchor = i;
    }
    if (anchor == n) return true; // both identically zero
    for (std::size_t i = 0; i < n; ++i) {
        if (i == anchor || a.values[i].is_zero()) continue;
        if (a.values[i] * b.values[anchor] != a.values[anchor] * b.values[i]) return false;
    }
    return true;
}

} // namespace asep
