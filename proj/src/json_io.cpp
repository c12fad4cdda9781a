#include "queens/json_io.hpp"

#include <sstream>

#include "queens/formulas.hpp"

namespace queens {

using nlohmann::json;

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw domain_error(what);
}

int int_field(const json& j, const char* key) {
  require(j.contains(key), std::string("missing key: ") + key);
  require(j[key].is_number_integer(), std::string(key) + " must be an integer");
  return j[key].get<int>();
}

}  // namespace

Placement placement_from_json(const json& j) {
  require(j.is_object(), "placement must be a JSON object");
  int n = int_field(j, "n");
  require(j.contains("queens"), "missing key: queens");
  const json& arr = j["queens"];
  require(arr.is_array(), "queens must be an array");
  std::vector<Square> queens;
  for (const json& q : arr) {
    require(q.is_array() && q.size() == 2 && q[0].is_number_integer() &&
                q[1].is_number_integer(),
            "each queen must be an [x, y] pair of integers");
    queens.push_back({q[0].get<int>(), q[1].get<int>()});
  }
  return make_placement(n, std::move(queens));
}

Placement placement_from_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  require(!j.is_discarded(), "invalid JSON");
  return placement_from_json(j);
}

json placement_to_json(const Placement& p) {
  json queens = json::array();
  for (Square q : p.queens) queens.push_back({q.x, q.y});
  return {{"n", p.dim.n}, {"queens", queens}};
}

json line_to_json(Line line, BoardDim dim) {
  return {{"kind", to_string(line.kind)},
          {"index", line.index},
          {"length", line_length(line, dim)}};
}

json lines_to_json(const LineSet& ls) {
  return {{"rows", ls.rows},
          {"cols", ls.cols},
          {"pos_diags", ls.pos_diags},
          {"neg_diags", ls.neg_diags}};
}

json certificate_to_json(const Certificate& cert) {
  json lines = json::array();
  for (Line line : cert.lines)
    lines.push_back({{"kind", to_string(line.kind)}, {"index", line.index}});
  return {{"a", cert.a},
          {"b", cert.b},
          {"c", cert.c},
          {"m", cert.m},
          {"lines", lines},
          {"total_length", cert.total_length},
          {"n_times_m", cert.n_times_m},
          {"f_closed_m", cert.f_closed_m},
          {"sound", cert.sound}};
}

json search_result_to_json(const SearchResult& r) {
  json witnesses = json::array();
  for (const Placement& w : r.witnesses) witnesses.push_back(placement_to_json(w));
  return {{"k", r.k},
          {"n", r.n},
          {"optimum", r.optimum},
          {"witnesses", witnesses},
          {"nodes_explored", r.nodes_explored},
          {"wall_seconds", r.wall_seconds},
          {"budget_exceeded", r.budget_exceeded},
          {"threads_used", r.threads_used}};
}

json critical_ring_to_json(const CriticalRingReport& r) {
  json out = {{"applicable", r.applicable},
              {"a", r.a},
              {"b", r.b},
              {"c", r.c}};
  if (!r.applicable) {
    out["reason"] = r.reason;
    return out;
  }
  json skew = json::array();
  for (int i = 0; i < 4; ++i)
    skew.push_back({{"kind", to_string(r.skew_diagonals[i].kind)},
                    {"index", r.skew_diagonals[i].index},
                    {"length", r.skew_lengths[i]}});
  out["level"] = r.level;
  out["edge_offsets"] = r.edge_offsets;
  out["offsets_agree"] = r.offsets_agree;
  out["offset"] = r.offset;
  out["side_cols"] = r.side_cols;
  out["side_rows"] = r.side_rows;
  out["ring_is_square"] = r.ring_is_square;
  out["skew_diagonals"] = skew;
  out["ring_points_selected"] = r.ring_points_selected;
  out["diag_total_length"] = r.diag_total_length;
  out["single_hit_total"] = r.single_hit_total;
  out["ring_bound_twice"] = r.ring_bound_twice;
  out["ring_bound_holds"] = r.ring_bound_holds;
  out["combined_bound"] = r.combined_bound;
  out["combined_bound_holds"] = r.combined_bound_holds;
  out["premises_hold"] = r.premises_hold;
  out["odd_side_checked"] = r.odd_side_checked;
  return out;
}

json analyze_report(const Placement& p, bool with_certificate, bool with_rings) {
  const long long k = (long long)p.queens.size();
  LineBudget budget = k ? line_budget(p) : LineBudget{};
  json out = {{"n", p.dim.n},
              {"k", k},
              {"covered", covered_count(p)},
              {"attacked", attacked_count(p)},
              {"lines", lines_to_json(lines_of(p))},
              {"line_budget",
               {{"a", budget.a}, {"b", budget.b}, {"c", budget.c}, {"m", budget.m}}}};
  if (budget.m >= 2) {
    out["bounds"] = {{"f_closed_m", F_closed(budget.m)},
                     {"g_m", g_of(budget.m)},
                     {"k_le_f", k <= F_closed(budget.m)}};
  }
  if (with_certificate && k)
    out["certificate"] = certificate_to_json(lower_bound_certificate(p));
  if (with_rings && k) {
    LineSet ls = lines_of(p);
    LineSelection sel{p.dim, ls.cols, ls.rows, {}};
    for (int d : ls.pos_diags) sel.diags.push_back({LineKind::DiagPos, d});
    for (int s : ls.neg_diags) sel.diags.push_back({LineKind::DiagNeg, s});
    json rings = json::array();
    for (const Ring& ring : rings_of(sel)) {
      json points = json::array();
      for (Square s : ring.points) points.push_back({s.x, s.y});
      rings.push_back({{"level", ring.level}, {"points", points}});
    }
    RingBoundReport rb = ring_bound_check(sel);
    out["rings"] = rings;
    out["ring_bound"] = {{"point_count", rb.point_count},
                         {"eq_bound", rb.eq_bound},
                         {"f_closed_bound", rb.f_closed_bound},
                         {"eq_holds", rb.eq_holds},
                         {"f_holds", rb.f_holds}};
    out["critical_ring"] = critical_ring_to_json(critical_ring_report(sel));
  }
  return out;
}

std::string bound_table_csv(long long max_m, bool maximize) {
  std::ostringstream out;
  out << "m,G,F,source\n";
  for (const BoundRow& row : bound_table(max_m, maximize))
    out << row.m << ',' << row.g << ',' << row.f << ',' << row.source << '\n';
  return out.str();
}

std::string m_star_table_csv(long long max_k) {
  if (max_k < 1) throw domain_error("table needs max_k >= 1");
  std::ostringstream out;
  out << "k,m_star\n";
  for (long long k = 1; k <= max_k; ++k) out << k << ',' << m_star(k) << '\n';
  return out.str();
}

}  // namespace queens
