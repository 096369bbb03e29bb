#pragma once

#include <json.hpp>

#include "forest/canonical.hpp"
#include "forest/distribution.hpp"
#include "forest/monte_carlo.hpp"
#include "forest/search.hpp"

namespace forest {

using Json = nlohmann::ordered_json;

/// {"n":..,"m":..,"probs":{"1":"2/3",...}} with keys in increasing k.
Json to_json(const ForestDistribution& d);

/// Inverse of to_json; throws Error{MalformedInput}.
ForestDistribution distribution_from_json(const Json& j);

std::string to_hex(const CanonicalKey& key);

Json to_json(const PairReport& r);
Json to_json(const TwinReport& r);
Json to_json(const EstimatedDistribution& d);
Json to_json(const DecayRow& row);

}  // namespace forest
