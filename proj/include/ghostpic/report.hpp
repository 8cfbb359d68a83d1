#pragma once

#include "ghostpic/ghosts.hpp"

#include <json.hpp>

namespace ghostpic {

nlohmann::json cone_json(const Cone& k);
nlohmann::json names_json(const BrickCatalog& c, const std::vector<int>& ids);
nlohmann::json ghost_json(const ModuleClass& cls, const Ghost& g);
nlohmann::json bifurcation_json(const ModuleClass& cls, const std::vector<Ghost>& ghosts, const BifurcationReport& r);
nlohmann::json chambers_json(const ModuleClass& cls, const ChamberGraph& g);
nlohmann::json ghosts_json(const ModuleClass& cls);

// walls, chambers, edges, ghost census and bifurcations under schema ghostpic-report/1
nlohmann::json export_report(const ModuleClass& cls);

}  // namespace ghostpic
