#include "cli_driver.hpp"

#include <json.hpp>

#include "helly/actions/coset_action.hpp"
#include "helly/errors.hpp"
#include "helly/io/json_io.hpp"
#include "helly/rank2/oracle.hpp"

namespace helly::cli {

using nlohmann::json;

namespace {

json index_array(const std::vector<std::size_t>& v) {
  json a = json::array();
  for (std::size_t i : v) a.push_back(i);
  return a;
}

json rat_array(const exact::RatVec& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(exact::rat_to_string(r));
  return a;
}

json selection_json(const rank2::SelectionReport& rep,
                    const std::vector<std::size_t>& kept,
                    const std::vector<std::size_t>& stripped) {
  json out;
  std::vector<std::size_t> original;
  for (std::size_t i : rep.indices) original.push_back(kept[i]);
  out["indices"] = index_array(original);
  out["closed"] = rep.closed;
  out["dim_full"] = rep.dim_full;
  out["dim_selected"] = rep.dim_selected;
  out["stripped"] = index_array(stripped);
  return out;
}

json run_kappa(const std::string& input) {
  io::CosetSystem sys = io::parse_coset_system(
      std::string("{\"invariant_factors\":") +
      json::parse(input).at("invariant_factors").dump() + ",\"cosets\":[]}");
  json out;
  out["kappa"] = abelian::kappa_abelian(sys.group);
  out["min_generators"] = abelian::min_generators(sys.group);
  return out;
}

json run_intersect(const std::string& input, const Options& opts) {
  io::CosetSystem sys = io::parse_coset_system(input);
  if (sys.cosets.empty()) throw domain_error("intersect: no cosets given");
  auto result = abelian::intersect_cosets(sys.cosets);
  json out;
  if (result) {
    out["empty"] = false;
    out["coset"] = json::parse(io::render_coset(*result));
  } else {
    out["empty"] = true;
    out["certificate"] =
        index_array(abelian::helly_certificate(sys.cosets, opts.max_subset));
  }
  return out;
}

json run_witness(const std::string& input) {
  json j = json::parse(input);
  exact::Int p(static_cast<long>(j.at("p").get<long long>()));
  std::size_t d = j.at("d").get<std::size_t>();
  std::vector<abelian::Coset> cosets = abelian::witness_system(p, d);
  io::CosetSystem sys{cosets[0].subgroup.ambient(), std::move(cosets)};
  return json::parse(io::render_coset_system(sys));
}

json run_brute_kappa(const std::string& input, const Options& opts) {
  json j = json::parse(input);
  abelian::FiniteAbelianGroup g(
      io::parse_coset_system(std::string("{\"invariant_factors\":") +
                             j.at("invariant_factors").dump() +
                             ",\"cosets\":[]}")
          .group);
  json out;
  out["kappa"] = abelian::brute_kappa(g, opts.max_order);
  return out;
}

json run_progressions(const std::string& input) {
  auto progs = io::parse_progressions(input);
  auto meet = abelian::intersect_progressions(progs);
  json out;
  if (meet) {
    out["empty"] = false;
    out["a"] = meet->a.get_str();
    out["m"] = meet->m.get_str();
  } else {
    out["empty"] = true;
    for (std::size_t i = 0; i < progs.size(); ++i)
      for (std::size_t j = i + 1; j < progs.size(); ++j)
        if (!abelian::intersect_progressions({progs[i], progs[j]})) {
          out["certificate"] = index_array({i, j});
          return out;
        }
  }
  return out;
}

json run_torus_check(const std::string& input) {
  torus::WeightSystem w = io::parse_weight_system(input);
  torus::ClosednessResult r = torus::orbit_closed(w);
  json out;
  out["closed"] = r.closed;
  out["dim"] = torus::orbit_dimension(w);
  if (r.certificate) out["combination"] = rat_array(r.certificate->coefficients);
  return out;
}

json run_torus_select(const std::string& input) {
  torus::WeightSystem w = io::parse_weight_system(input);
  torus::SelectionReport rep = torus::select_factors(w);
  json out;
  out["indices"] = index_array(rep.indices);
  out["closed"] = rep.closed;
  out["dim_full"] = rep.dim_full;
  out["dim_selected"] = rep.dim_selected;
  json st;
  st["selected"] = index_array(rep.steinitz.selected);
  st["combination"] = rat_array(rep.steinitz.combination.coefficients);
  out["steinitz"] = st;
  return out;
}

json escape_json(const rank2::OracleVerdict& v) {
  json e;
  if (v.escape) {
    json line;
    line["p"] = static_cast<long>(v.escape->eigenline.p.get_si());
    line["q"] = static_cast<long>(v.escape->eigenline.q.get_si());
    e["eigenline"] = line;
    e["slope"] = exact::rat_to_string(v.escape->slope);
  } else {
    e["scalar_direction"] = v.scalar_direction;
  }
  return e;
}

json run_sl2_closed(const std::string& input) {
  io::StrippedSl2 t = io::to_sl2_tuple(io::parse_components(input));
  json out;
  out["stripped"] = index_array(t.stripped);
  if (t.forms.empty()) {
    out["closed"] = true;
    out["dim"] = 0;
    return out;
  }
  bool closed = rank2::sl2_orbit_closed(t.forms);
  out["closed"] = closed;
  out["dim"] = rank2::sl2_orbit_dimension(t.forms);
  if (!closed) out["escape"] = escape_json(rank2::oracle_sl2_verdict(t.forms));
  return out;
}

json run_sl2_select(const std::string& input) {
  io::StrippedSl2 t = io::to_sl2_tuple(io::parse_components(input));
  if (t.forms.empty()) {
    json out;
    out["indices"] = json::array();
    out["closed"] = true;
    out["dim_full"] = 0;
    out["dim_selected"] = 0;
    out["stripped"] = index_array(t.stripped);
    return out;
  }
  return selection_json(rank2::sl2_select(t.forms), t.kept, t.stripped);
}

json run_gl2_closed(const std::string& input) {
  io::StrippedGl2 t = io::to_gl2_tuple(io::parse_components(input));
  json out;
  out["stripped"] = index_array(t.stripped);
  if (t.components.empty()) {
    out["closed"] = true;
    out["dim"] = 0;
    return out;
  }
  bool closed = rank2::gl2_orbit_closed(t.components);
  out["closed"] = closed;
  out["dim"] = rank2::gl2_orbit_dimension(t.components);
  if (!closed)
    out["escape"] = escape_json(rank2::oracle_gl2_verdict(t.components));
  return out;
}

json run_gl2_select(const std::string& input) {
  io::StrippedGl2 t = io::to_gl2_tuple(io::parse_components(input));
  if (t.components.empty()) {
    json out;
    out["indices"] = json::array();
    out["closed"] = true;
    out["dim_full"] = 0;
    out["dim_selected"] = 0;
    out["stripped"] = index_array(t.stripped);
    return out;
  }
  return selection_json(rank2::gl2_select(t.components), t.kept, t.stripped);
}

json run_oracle(const std::string& input) {
  json j = json::parse(input);
  std::string group = j.at("group").get<std::string>();
  json out;
  if (group == "SL2") {
    io::StrippedSl2 t = io::to_sl2_tuple(io::parse_components(input));
    if (t.forms.empty()) {
      out["closed"] = true;
      return out;
    }
    rank2::OracleVerdict v = rank2::oracle_sl2_verdict(t.forms);
    out["closed"] = v.closed;
    if (!v.closed) out["escape"] = escape_json(v);
  } else if (group == "GL2") {
    io::StrippedGl2 t = io::to_gl2_tuple(io::parse_components(input));
    if (t.components.empty()) {
      out["closed"] = true;
      return out;
    }
    rank2::OracleVerdict v = rank2::oracle_gl2_verdict(t.components);
    out["closed"] = v.closed;
    if (!v.closed) out["escape"] = escape_json(v);
  } else {
    throw parse_error("oracle: group must be SL2 or GL2");
  }
  return out;
}

json run_separate(const std::string& input) {
  io::ActionInput in = io::parse_action(input);
  actions::FiniteGroupTable g(in.table);
  actions::CosetSpaceAction action(g, in.stabilizers);
  actions::ProductPoint x{in.x}, y{in.y};
  json out;
  if (actions::same_orbit(action, x, y)) {
    out["same_orbit"] = true;
  } else {
    out["same_orbit"] = false;
    out["separating"] =
        index_array(actions::min_separating_projection(action, x, y));
  }
  return out;
}

}  // namespace

std::vector<std::string> verb_names() {
  return {"kappa",      "intersect",  "witness",    "brute-kappa",
          "progressions", "torus-check", "torus-select", "sl2-closed",
          "sl2-select", "gl2-closed", "gl2-select", "oracle",
          "separate"};
}

RunResult run_verb(const std::string& verb, const std::string& input,
                   const Options& opts) {
  try {
    json out;
    try {
      if (verb == "kappa") out = run_kappa(input);
      else if (verb == "intersect") out = run_intersect(input, opts);
      else if (verb == "witness") out = run_witness(input);
      else if (verb == "brute-kappa") out = run_brute_kappa(input, opts);
      else if (verb == "progressions") out = run_progressions(input);
      else if (verb == "torus-check") out = run_torus_check(input);
      else if (verb == "torus-select") out = run_torus_select(input);
      else if (verb == "sl2-closed") out = run_sl2_closed(input);
      else if (verb == "sl2-select") out = run_sl2_select(input);
      else if (verb == "gl2-closed") out = run_gl2_closed(input);
      else if (verb == "gl2-select") out = run_gl2_select(input);
      else if (verb == "oracle") out = run_oracle(input);
      else if (verb == "separate") out = run_separate(input);
      else throw parse_error("unknown verb: " + verb);
    } catch (const json::exception& e) {
      throw parse_error(e.what());
    }
    return {0, out.dump() + "\n"};
  } catch (const parse_error& e) {
    return {2, json{{"error", e.what()}}.dump() + "\n"};
  } catch (const resource_error& e) {
    return {3, json{{"error", e.what()}}.dump() + "\n"};
  } catch (const domain_error& e) {
    return {1, json{{"error", e.what()}}.dump() + "\n"};
  }
}

}  // namespace helly::cli
