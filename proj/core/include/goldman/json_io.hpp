#pragma once

#include "goldman/decide.hpp"
#include "goldman/intersect.hpp"

#include <string>

namespace goldman {

/// FormalSum as a JSON array of {"coeff": "p/q", "word": "..."} objects,
/// sorted by word.
std::string to_json(const FormalSum& sum);

std::string to_json(const BracketResult& result);
std::string to_json(const SeparabilityVerdict& verdict);
std::string to_json(const WscVerdict& verdict);
std::string to_json(const SscConditions& conditions);
std::string to_json(const CenterVerdict& verdict);

/// Debug dump of a directed geodesic: endpoints and direction.
std::string to_json(const DirectedGeodesic& geodesic);

}  // namespace goldman
