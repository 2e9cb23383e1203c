#ifndef ASEP_JSON_IO_HPP
#define ASEP_JSON_IO_HPP

#include <json.hpp>

#include "asep/markov.hpp"

namespace asep {

using Json = nlohmann::ordered_json;

// Chains and measures serialize with states as strings and every rate or
// value in the canonical polynomial text format; importing an export gives
// back an identical object.
Json chain_to_json(const SymbolicChain& chain);
ChainPtr chain_from_json(const Json& j);

Json measure_to_json(const Measure& m);
Measure measure_from_json(const Json& j);

} // namespace asep

#endif
