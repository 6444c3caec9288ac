#include "tiltwall/json_io.hpp"

namespace tiltwall {

using nlohmann::json;

json rat_json(const Rat& x) { return to_string(x); }

json chern_json(const ChernVector& v) {
  return json::array({to_string(v.e0), to_string(v.e1), to_string(v.e2), to_string(v.e3)});
}

json point_json(const TiltPoint& p) {
  return json{{"s", to_string(p.s())}, {"beta", to_string(p.beta())}};
}

json wall_json(const WallLocus& w) {
  json j{{"x", to_string(w.x)}, {"y", to_string(w.y)}, {"z", to_string(w.z)}};
  WallShape s = shape(w);
  switch (s.kind) {
    case WallKind::Semicircle:
      j["shape"] = "semicircle";
      j["center"] = to_string(s.center);
      j["radius_sq"] = to_string(s.radius_sq);
      break;
    case WallKind::VerticalLine:
      j["shape"] = "vertical";
      j["beta"] = to_string(s.beta);
      break;
    case WallKind::Empty:
      j["shape"] = "empty";
      break;
  }
  return j;
}

json counts_json(const SignCounts& c) {
  return json{{"negative", c.negative}, {"zero", c.zero}, {"positive", c.positive}};
}

json grid_json(const GridSpec& g) {
  return json{{"beta_min", to_string(g.beta_min)}, {"beta_max", to_string(g.beta_max)},
              {"s_min", to_string(g.s_min)},       {"s_max", to_string(g.s_max)},
              {"n_beta", g.n_beta},                {"n_s", g.n_s}};
}

static json e2_json(const E2Solutions& s) {
  json values = json::array();
  for (const Rat& t : s.values) values.push_back(to_string(t));
  json excluded = json::array();
  for (const Rat& t : s.excluded) excluded.push_back(to_string(t));
  return json{{"all_e2", s.all_e2}, {"values", values}, {"excluded", excluded}};
}

json candidate_json(const CandidateReport& c) {
  json constraints = json::array();
  for (const ConstraintRecord& r : c.constraints)
    constraints.push_back(json{{"name", r.name}, {"passed", r.passed}});
  json j{{"e0", to_string(c.e0)},
         {"e1", to_string(c.e1)},
         {"e2_solutions", e2_json(c.e2)},
         {"constraints", constraints},
         {"matches_target", c.matches_target}};
  j["witness_e2"] = c.witness_e2 ? json(to_string(*c.witness_e2)) : json(nullptr);
  j["induced_wall"] = c.induced_wall ? wall_json(*c.induced_wall) : json(nullptr);
  return j;
}

json vertical_json(const VerticalLineCheck& c) {
  json admissible = json::array();
  for (const Rat& t : c.admissible) admissible.push_back(to_string(t));
  return json{{"applicable", c.applicable},
              {"beta", to_string(c.beta)},
              {"cap", to_string(c.cap)},
              {"step", to_string(c.step)},
              {"admissible", admissible},
              {"truncated", c.truncated},
              {"degenerate", c.degenerate},
              {"stable", c.stable},
              {"note", c.note}};
}

json report_json(const VerificationReport& r) {
  json candidates = json::array();
  for (const CandidateReport& c : r.candidates) candidates.push_back(candidate_json(c));
  json j{{"report_version", 1},
         {"class", chern_json(r.v)},
         {"q_wall", wall_json(r.target)},
         {"beta_interval", json{{"lo", r.beta_lo.str()}, {"hi", r.beta_hi.str()}}},
         {"candidates", candidates},
         {"enumeration_complete", r.enumeration_complete},
         {"conclusion", conclusion_str(r.conclusion)},
         {"notes", r.notes}};
  j["vertical_line"] = r.vertical ? vertical_json(*r.vertical) : json(nullptr);
  if (r.witness) {
    json w = point_json(*r.witness);
    w["q_value"] = to_string(r.witness_q);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

std::string dump_json(const json& j, int indent) {
  return indent < 0 ? j.dump() : j.dump(indent);
}

}  // namespace tiltwall
