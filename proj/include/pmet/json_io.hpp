#pragma once

#include <string>

#include <json.hpp>

#include "pmet/level.hpp"
#include "pmet/morphism.hpp"
#include "pmet/report.hpp"
#include "pmet/space.hpp"
#include "pmet/systems.hpp"

namespace pmet {

using Json = nlohmann::json;

Json toJson(const Distribution& d);
Distribution distributionFromJson(const Json& j);

Json toJson(const PMSpace& space);
PMSpace spaceFromJson(const Json& j);

Json toJson(const LevelFamily& family);
LevelFamily familyFromJson(const Json& j);

Json toJson(const DistanceTable& table);
DistanceTable distanceTableFromJson(const Json& j);

Json toJson(const LocalTable& table);
LocalTable localTableFromJson(const Json& j);

Json toJson(const AxiomReport& report);

/// Assignment document; domain/codomain are file paths resolved by the
/// caller.
struct MapDocument {
    std::string domainPath;
    std::string codomainPath;
    std::map<std::string, std::string> assign;
};
MapDocument mapDocumentFromJson(const Json& j);

/// Sorted keys, lowest-terms rationals, trailing newline: the byte form
/// used for round-trip equality.
std::string canonicalDump(const Json& j);

Json loadJsonFile(const std::string& path);
void writeTextFile(const std::string& path, const std::string& contents);

}  // namespace pmet
