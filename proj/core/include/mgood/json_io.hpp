#pragma once

#include <json.hpp>

#include "mgood/campaign.hpp"
#include "mgood/construct.hpp"
#include "mgood/nice.hpp"
#include "mgood/scheme.hpp"
#include "mgood/search.hpp"

namespace mgood {

// {"n":N,"m":M,"parts":[[a,b,c],...]}
nlohmann::json to_json(const GoodPartition& p);
std::optional<GoodPartition> partition_from_json(const nlohmann::json& j, std::string* error = nullptr);

// {"n":N,"steps":[{"rule":...,"from":...,"to":...,"added":[...],"removed":[...]}],"terminal":...}
nlohmann::json to_json(const ReductionTrace& t);

nlohmann::json to_json(const SearchOutcome& o);
nlohmann::json to_json(const NiceCertificate& c);
nlohmann::json to_json(const OffsetScheme& s);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const CampaignReport& r);
nlohmann::json to_json(const PatternReport& r);
nlohmann::json to_json(const ExtensionRow& r);

}  // namespace mgood
