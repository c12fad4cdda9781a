#pragma once

#include <string>

#include "json.hpp"
#include "queens/analysis.hpp"
#include "queens/board.hpp"
#include "queens/search.hpp"

namespace queens {

// {"n": <int>, "queens": [[x, y], ...]}; order-insensitive, duplicates and
// off-board squares rejected.  Unknown keys are ignored.
Placement placement_from_json(const nlohmann::json& j);
Placement placement_from_json_text(const std::string& text);
nlohmann::json placement_to_json(const Placement& p);

nlohmann::json line_to_json(Line line, BoardDim dim);
nlohmann::json lines_to_json(const LineSet& ls);
nlohmann::json certificate_to_json(const Certificate& cert);
nlohmann::json search_result_to_json(const SearchResult& r);
nlohmann::json critical_ring_to_json(const CriticalRingReport& r);

// Full analyze report: counts, occupied lines, line budget, bound
// comparisons; optional certificate and ring sections.
nlohmann::json analyze_report(const Placement& p, bool with_certificate,
                              bool with_rings);

// CSV rows "m,G,F,source" for m = 2..max_m.
std::string bound_table_csv(long long max_m, bool maximize);
// CSV rows "k,m_star" for k = 1..max_k.
std::string m_star_table_csv(long long max_k);

}  // namespace queens
