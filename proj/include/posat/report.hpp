#pragma once

#include <json.hpp>

#include "posat/constructions.hpp"
#include "posat/embedding.hpp"
#include "posat/oracle.hpp"
#include "posat/saturation.hpp"

namespace posat {

using Json = nlohmann::ordered_json;

/// Every document carries {"schema": "posat.<kind>/<version>"}.
inline constexpr int kReportVersion = 1;

Json poset_json(const Poset& p);
Json family_json(const SetFamily& f);
/// [{"element": p, "set": "1,3"}, ...]
Json embedding_json(const SetFamily& f, const Embedding& e);

Json saturation_json(const SaturationReport& r, const SetFamily& f);
/// Decisions as two strings of '0'/'1', one character per index.
Json greedy_json(const GreedyTrace& t);
Json oracle_json(const OracleResult& r);
Json classification_json(const Classification& c);
Json estar_json(const EstarEstimate& e, const Poset& p, CopyMode mode);
Json construction_json(const TaggedFamily& t);
Json embed_json(const SetFamily& f, const Poset& p, CopyMode mode, const std::optional<Embedding>& e);

}  // namespace posat
