#include <doctest.h>

#include <algorithm>

#include "asep/markov.hpp"
#include "asep/models.hpp"
#include "asep/reference_tables.hpp"
#include "util.hpp"

using namespace asep;
using testutil::P;

namespace {

ChainPtr two_state(const RingPtr& ring, const std::string& a, const std::string& b) {
    SymbolicChain::RateMap rates;
    rates.emplace(std::make_pair(0, 1), P(ring, a));
    rates.emplace(std::make_pair(1, 0), P(ring, b));
    return SymbolicChain::create(ring, {"1", "2"}, std::move(rates));
}

ChainPtr directed_cycle(const RingPtr& ring, int n) {
    SymbolicChain::RateMap rates;
    std::vector<std::string> states;
    for (int i = 0; i < n; ++i) {
        states.push_back(std::to_string(i + 1));
        rates.emplace(std::make_pair(i, (i + 1) % n), MultiPoly::constant(ring, 1));
    }
    return SymbolicChain::create(ring, std::move(states), std::move(rates));
}

} // namespace

TEST_CASE("two-state detailed balance") {
    RingPtr r = Ring::create({"a", "b"});
    Measure m = stationary_compact(two_state(r, "a", "b"));
    CHECK(m.values[0] == P(r, "b"));
    CHECK(m.values[1] == P(r, "a"));
}

TEST_CASE("open chain n=2 compact measure matches the reference exactly") {
    ChainPtr chain = build_open_asep3(2);
    Measure m = stationary_compact(chain);
    for (const auto& [state, poly] : tables::open2_measure())
        CHECK(m.at(state) == P(chain->ring(), poly));
    CHECK(check_global_balance(*chain, m));
    CHECK(classify(m).compact);
}

TEST_CASE("global balance detects a perturbed measure") {
    ChainPtr chain = build_open_asep3(2);
    Measure m = stationary_compact(chain);
    CHECK(check_global_balance(*chain, m));
    Measure bad = m;
    bad.values[chain->state_index("OB")] = P(chain->ring(), "alpha^2");
    CHECK(!check_global_balance(*chain, bad));

    Measure uniform;
    ChainPtr cycle = directed_cycle(rings::single_q(), 3);
    uniform.ring = cycle->ring();
    uniform.states = cycle->states();
    uniform.values.assign(3, MultiPoly::constant(cycle->ring(), 1));
    CHECK(check_global_balance(*cycle, uniform));
}

TEST_CASE("classification of the demo measures") {
    RingPtr rq = rings::single_q();
    Measure tree, compact;
    tree.ring = compact.ring = rq;
    for (const auto& [s, p] : tables::demo5_tree_measure()) {
        tree.states.push_back(s);
        tree.values.push_back(P(rq, p));
    }
    for (const auto& [s, p] : tables::demo5_compact_measure()) {
        compact.states.push_back(s);
        compact.values.push_back(P(rq, p));
    }
    Classification ct = classify(tree);
    CHECK(ct.manifestly_positive);
    CHECK(!ct.compact);
    Classification cc = classify(compact);
    CHECK(!cc.manifestly_positive);
    CHECK(cc.compact);

    Measure one;
    one.ring = rq;
    one.states = {"x"};
    one.values = {MultiPoly::constant(rq, 1)};
    Classification c1 = classify(one);
    CHECK(c1.manifestly_positive);
    CHECK(c1.compact);
}

TEST_CASE("identity lumping returns the same chain") {
    ChainPtr chain = build_open_asep3(2);
    ChainPtr lumped = lump(LumpingMap::identity(chain));
    CHECK(lumped->states() == chain->states());
    CHECK(lumped->rates() == chain->rates());
}

TEST_CASE("antipodal lumping of a directed 4-cycle") {
    ChainPtr cycle = directed_cycle(rings::single_q(), 4);
    LumpingMap f;
    f.source = cycle;
    f.target_states = {"A", "B"};
    f.assignment = {0, 1, 0, 1};
    ChainPtr lumped = lump(f);
    REQUIRE(lumped->size() == 2);
    CHECK(*lumped->rate(0, 1) == MultiPoly::constant(cycle->ring(), 1));
    CHECK(*lumped->rate(1, 0) == MultiPoly::constant(cycle->ring(), 1));
}

TEST_CASE("full collapse lumps to a single state") {
    ChainPtr chain = build_open_asep3(2);
    LumpingMap f;
    f.source = chain;
    f.target_states = {"all"};
    f.assignment = {0, 0, 0, 0};
    ChainPtr lumped = lump(f);
    CHECK(lumped->size() == 1);
    CHECK(lumped->rates().empty());

    // Pushforward of the stationary measure is the full partition function.
    Measure m = pushforward(stationary_compact(chain), f);
    CHECK(m.values[0] ==
          P(chain->ring(),
            "alpha^2 + alpha^2*beta + alpha*beta^2 + alpha*beta*q + alpha*beta + beta^2"));
}

TEST_CASE("lumping violation reports a witness pair") {
    RingPtr r = Ring::create({"a", "b"});
    // States 1,3 both map to the same class but feed state 2 at different rates.
    SymbolicChain::RateMap rates;
    rates.emplace(std::make_pair(0, 1), P(r, "a"));
    rates.emplace(std::make_pair(1, 0), P(r, "a"));
    rates.emplace(std::make_pair(1, 2), P(r, "a"));
    rates.emplace(std::make_pair(2, 1), P(r, "b"));
    ChainPtr chain = SymbolicChain::create(r, {"s1", "s2", "s3"}, std::move(rates));
    LumpingMap f;
    f.source = chain;
    f.target_states = {"lo", "hi"};
    f.assignment = {0, 1, 0};
    CHECK_THROWS_AS(lump(f), LumpingError);
    try {
        lump(f);
    } catch (const LumpingError& e) {
        CHECK(e.witness_a == "s1");
        CHECK(e.witness_b == "s3");
        CHECK(e.target_state == "hi");
    }
}

TEST_CASE("particle-count pushforward of the two-site measure") {
    ChainPtr chain = build_open_asep3(2);
    Measure m = stationary_compact(chain);
    LumpingMap f;
    f.source = chain;
    f.target_states = {"0", "1", "2"};
    f.assignment.resize(4);
    for (std::size_t i = 0; i < 4; ++i) {
        const std::string& s = chain->state(i);
        f.assignment[i] = static_cast<std::size_t>(std::count(s.begin(), s.end(), 'B'));
    }
    Measure pf = pushforward(m, f);
    const RingPtr& r = chain->ring();
    CHECK(pf.at("0") == P(r, "beta^2"));
    CHECK(pf.at("1") == P(r, "alpha^2*beta + alpha*beta^2 + alpha*beta*q + alpha*beta"));
    CHECK(pf.at("2") == P(r, "alpha^2"));

    Measure id_pf = pushforward(m, LumpingMap::identity(chain));
    CHECK(id_pf.values == m.values);
}

TEST_CASE("pushforward commutes with solving on lumpable maps") {
    // Five constructed examples: identity, full collapse, antipodal cycle,
    // a particle-count map that happens to be lumpable for n=1, and a
    // two-block chain built to satisfy the condition.
    ChainPtr open1 = build_open_asep3(1);
    std::vector<std::pair<ChainPtr, LumpingMap>> cases;

    cases.emplace_back(open1, LumpingMap::identity(open1));

    ChainPtr cycle4 = directed_cycle(rings::single_q(), 4);
    LumpingMap anti;
    anti.source = cycle4;
    anti.target_states = {"A", "B"};
    anti.assignment = {0, 1, 0, 1};
    cases.emplace_back(cycle4, anti);

    ChainPtr cycle6 = directed_cycle(rings::single_q(), 6);
    LumpingMap thirds;
    thirds.source = cycle6;
    thirds.target_states = {"A", "B", "C"};
    thirds.assignment = {0, 1, 2, 0, 1, 2};
    cases.emplace_back(cycle6, thirds);

    RingPtr r = Ring::create({"a", "b"});
    ChainPtr pair = two_state(r, "a", "b");
    LumpingMap idp = LumpingMap::identity(pair);
    cases.emplace_back(pair, idp);

    // Doubled two-state chain: states {1,2}x{1,2} with independent copies.
    {
        SymbolicChain::RateMap rates;
        // Product chain moving one coordinate at a time.
        auto idx = [](int x, int y) { return static_cast<std::size_t>(2 * x + y); };
        for (int x = 0; x < 2; ++x) {
            rates.emplace(std::make_pair(idx(x, 0), idx(x, 1)), P(r, "a"));
            rates.emplace(std::make_pair(idx(x, 1), idx(x, 0)), P(r, "b"));
            rates.emplace(std::make_pair(idx(0, x), idx(1, x)), P(r, "a"));
            rates.emplace(std::make_pair(idx(1, x), idx(0, x)), P(r, "b"));
        }
        ChainPtr prod = SymbolicChain::create(r, {"00", "01", "10", "11"}, std::move(rates));
        LumpingMap first;
        first.source = prod;
        first.target_states = {"0", "1"};
        first.assignment = {0, 0, 1, 1};
        cases.emplace_back(prod, first);
    }

    for (auto& [chain, f] : cases) {
        Measure direct = stationary_compact(lump(f));
        Measure pushed = pushforward(stationary_compact(chain), f);
        CHECK(proportional(direct, pushed));
    }
}

TEST_CASE("relabeling states permutes the measure") {
    ChainPtr chain = build_open_asep3(2);
    std::vector<std::size_t> perm{2, 0, 3, 1};
    ChainPtr shuffled = chain->reordered(perm);
    Measure a = stationary_compact(chain);
    Measure b = stationary_compact(shuffled);
    for (std::size_t i = 0; i < perm.size(); ++i)
        CHECK(b.values[i] == a.values[perm[i]]);
}

TEST_CASE("reducible chains are rejected") {
    RingPtr r = Ring::create({"a"});
    SymbolicChain::RateMap rates;
    rates.emplace(std::make_pair(0, 1), P(r, "a"));
    ChainPtr chain = SymbolicChain::create(r, {"1", "2"}, std::move(rates));
    CHECK(!chain->irreducible());
    CHECK_THROWS_AS(stationary_compact(chain), Error);
}
