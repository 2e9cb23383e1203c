#include "asep/json_io.hpp"

namespace asep {

Json chain_to_json(const SymbolicChain& chain) {
    Json j;
    j["variables"] = chain.ring()->names();
    j["states"] = chain.states();
    Json rates = Json::array();
    for (const auto& [edge, rate] : chain.rates()) {
        rates.push_back(Json::array(
            {chain.state(edge.first), chain.state(edge.second), rate.to_string()}));
    }
    j["rates"] = std::move(rates);
    return j;
}

ChainPtr chain_from_json(const Json& j) {
    RingPtr ring = Ring::create(j.at("variables").get<std::vector<std::string>>());
    std::vector<std::string> states = j.at("states").get<std::vector<std::string>>();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = i;
    SymbolicChain::RateMap rates;
    for (const auto& entry : j.at("rates")) {
        std::size_t from = index.at(entry.at(0).get<std::string>());
        std::size_t to = index.at(entry.at(1).get<std::string>());
        MultiPoly rate = MultiPoly::parse(ring, entry.at(2).get<std::string>());
        if (!rates.emplace(std::make_pair(from, to), std::move(rate)).second)
            throw Error("duplicate rate entry in chain JSON");
    }
    return SymbolicChain::create(std::move(ring), std::move(states), std::move(rates));
}

Json measure_to_json(const Measure& m) {
    Json j;
    j["variables"] = m.ring->names();
    j["states"] = m.states;
    Json values = Json::object();
    for (std::size_t i = 0; i < m.states.size(); ++i)
        values[m.states[i]] = m.values[i].to_string();
    j["values"] = std::move(values);
    return j;
}

Measure measure_from_json(const Json& j) {
    Measure m;
    m.ring = Ring::create(j.at("variables").get<std::vector<std::string>>());
    m.states = j.at("states").get<std::vector<std::string>>();
    const Json& values = j.at("values");
    for (const auto& s : m.states)
        m.values.push_back(MultiPoly::parse(m.ring, values.at(s).get<std::string>()));
    return m;
}

} // namespace asep
