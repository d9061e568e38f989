#include "helly/io/json_io.hpp"

#include <json.hpp>

#include "helly/errors.hpp"

namespace helly::io {

using nlohmann::json;
using exact::Int;
using exact::Rat;

namespace {

json must_parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw parse_error("invalid JSON");
  return j;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw parse_error(std::string("missing field: ") + name);
  return j.at(name);
}

Int to_int(const json& v) {
  if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw parse_error("bad integer literal");
    }
  }
  throw parse_error("expected an integer");
}

Rat to_rat(const json& v) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    try {
      return exact::rat_from_string(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw parse_error("bad rational literal");
    }
  }
  throw parse_error("expected a rational as integer or \"p/q\" string");
}

exact::IntVec to_int_vec(const json& v) {
  if (!v.is_array()) throw parse_error("expected an array of integers");
  exact::IntVec out;
  for (const auto& e : v) out.push_back(to_int(e));
  return out;
}

std::vector<std::size_t> to_index_vec(const json& v) {
  if (!v.is_array()) throw parse_error("expected an array of indices");
  std::vector<std::size_t> out;
  for (const auto& e : v) {
    if (!e.is_number_unsigned() && !e.is_number_integer())
      throw parse_error("expected a nonnegative index");
    long long x = e.get<long long>();
    if (x < 0) throw parse_error("expected a nonnegative index");
    out.push_back(static_cast<std::size_t>(x));
  }
  return out;
}

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json vec_to_json(const exact::IntVec& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(int_to_json(e));
  return a;
}

}  // namespace

CosetSystem parse_coset_system(const std::string& text) {
  json j = must_parse(text);
  abelian::FiniteAbelianGroup g(to_int_vec(field(j, "invariant_factors")));
  std::vector<abelian::Coset> cosets;
  const json& cs = field(j, "cosets");
  if (!cs.is_array()) throw parse_error("cosets must be an array");
  for (const auto& c : cs) {
    exact::IntVec rep = g.reduce(to_int_vec(field(c, "rep")));
    std::vector<exact::IntVec> gens;
    const json& gj = field(c, "gens");
    if (!gj.is_array()) throw parse_error("gens must be an array");
    for (const auto& row : gj) gens.push_back(to_int_vec(row));
    cosets.push_back(
        abelian::Coset{std::move(rep), abelian::Subgroup(g, std::move(gens))});
  }
  return {std::move(g), std::move(cosets)};
}

std::string render_coset(const abelian::Coset& coset) {
  json c;
  c["rep"] = vec_to_json(coset.representative);
  json gens = json::array();
  for (const auto& g : coset.subgroup.generators()) gens.push_back(vec_to_json(g));
  c["gens"] = gens;
  return c.dump();
}

std::string render_coset_system(const CosetSystem& system) {
  json j;
  j["invariant_factors"] = vec_to_json(system.group.invariant_factors());
  json cs = json::array();
  for (const auto& c : system.cosets) cs.push_back(json::parse(render_coset(c)));
  j["cosets"] = cs;
  return j.dump();
}

std::vector<abelian::ArithmeticProgression> parse_progressions(
    const std::string& text) {
  json j = must_parse(text);
  const json& ps = field(j, "progressions");
  if (!ps.is_array()) throw parse_error("progressions must be an array");
  std::vector<abelian::ArithmeticProgression> out;
  for (const auto& p : ps)
    out.push_back(abelian::ArithmeticProgression::make(to_int(field(p, "a")),
                                                       to_int(field(p, "m"))));
  return out;
}

torus::WeightSystem parse_weight_system(const std::string& text) {
  json j = must_parse(text);
  torus::WeightSystem w;
  const json& rank = field(j, "rank");
  if (!rank.is_number_unsigned() && !rank.is_number_integer())
    throw parse_error("rank must be an integer");
  long long r = rank.get<long long>();
  if (r < 0) throw parse_error("rank must be nonnegative");
  w.rank = static_cast<std::size_t>(r);
  const json& fs = field(j, "factors");
  if (!fs.is_array()) throw parse_error("factors must be an array");
  for (const auto& f : fs) {
    if (!f.is_array()) throw parse_error("factor must be an array of weights");
    std::vector<exact::IntVec> weights;
    for (const auto& wv : f) weights.push_back(to_int_vec(wv));
    w.factors.push_back(std::move(weights));
  }
  w.validate();
  return w;
}

std::vector<RawComponent> parse_components(const std::string& text) {
  json j = must_parse(text);
  const json& cs = field(j, "components");
  if (!cs.is_array()) throw parse_error("components must be an array");
  std::vector<RawComponent> out;
  for (const auto& c : cs) {
    RawComponent rc;
    rc.coeff = to_rat(field(c, "coeff"));
    const json& roots = field(c, "roots");
    if (!roots.is_array()) throw parse_error("roots must be an array");
    for (const auto& r : roots) {
      Int p = to_int(field(r, "p"));
      Int q = to_int(field(r, "q"));
      const json& mj = field(r, "mult");
      if (!mj.is_number_integer() || mj.get<long long>() < 1)
        throw parse_error("mult must be a positive integer");
      rc.roots.emplace_back(rank2::ProjectiveRoot::make(p, q),
                            static_cast<std::size_t>(mj.get<long long>()));
    }
    if (c.contains("det_twist")) {
      const json& t = c.at("det_twist");
      if (!t.is_number_integer()) throw parse_error("det_twist must be integer");
      rc.det_twist = static_cast<long>(t.get<long long>());
      rc.has_twist = true;
    }
    out.push_back(std::move(rc));
  }
  return out;
}

StrippedSl2 to_sl2_tuple(const std::vector<RawComponent>& raw) {
  StrippedSl2 out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].has_twist)
      throw parse_error("sl2 component must not carry det_twist");
    std::size_t degree = 0;
    for (const auto& [r, m] : raw[i].roots) degree += m;
    if (raw[i].coeff == 0 || degree == 0) {
      out.stripped.push_back(i);
      continue;
    }
    out.forms.push_back(rank2::FactoredForm::make(raw[i].coeff, raw[i].roots));
    out.kept.push_back(i);
  }
  return out;
}

StrippedGl2 to_gl2_tuple(const std::vector<RawComponent>& raw) {
  StrippedGl2 out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::size_t degree = 0;
    for (const auto& [r, m] : raw[i].roots) degree += m;
    bool trivial_module = degree == 0 && raw[i].det_twist == 0;
    if (raw[i].coeff == 0 || trivial_module) {
      out.stripped.push_back(i);
      continue;
    }
    out.components.push_back(rank2::Gl2Component::make(
        rank2::FactoredForm::make(raw[i].coeff, raw[i].roots),
        raw[i].det_twist));
    out.kept.push_back(i);
  }
  return out;
}

ActionInput parse_action(const std::string& text) {
  json j = must_parse(text);
  ActionInput out;
  const json& t = field(j, "table");
  if (!t.is_array()) throw parse_error("table must be an array of rows");
  for (const auto& row : t) out.table.push_back(to_index_vec(row));
  const json& st = field(j, "stabilizers");
  if (!st.is_array()) throw parse_error("stabilizers must be an array");
  for (const auto& s : st) out.stabilizers.push_back(to_index_vec(s));
  out.x = to_index_vec(field(j, "x"));
  out.y = to_index_vec(field(j, "y"));
  return out;
}

}  // namespace helly::io
