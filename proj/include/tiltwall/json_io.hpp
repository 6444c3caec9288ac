#pragma once

#include "tiltwall/chern.hpp"
#include "tiltwall/grid.hpp"
#include "tiltwall/search.hpp"
#include "tiltwall/walls.hpp"

#include <json.hpp>

#include <string>

namespace tiltwall {

// Serialization contract: every rational renders as the exact string "p/q"
// (or "p"), objects serialize with alphabetically ordered keys, so output
// is byte-identical across runs and worker counts.

nlohmann::json rat_json(const Rat& x);
nlohmann::json chern_json(const ChernVector& v);
nlohmann::json point_json(const TiltPoint& p);
nlohmann::json wall_json(const WallLocus& w);            // locus + resolved shape
nlohmann::json counts_json(const SignCounts& c);
nlohmann::json grid_json(const GridSpec& g);
nlohmann::json candidate_json(const CandidateReport& c);
nlohmann::json vertical_json(const VerticalLineCheck& c);
nlohmann::json report_json(const VerificationReport& r);  // carries report_version

// indent < 0: compact single line (the default CLI form)
std::string dump_json(const nlohmann::json& j, int indent);

}  // namespace tiltwall
