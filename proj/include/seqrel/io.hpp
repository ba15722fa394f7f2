#pragma once

#include "seqrel/compare.hpp"

#include <json.hpp>

#include <fstream>

namespace seqrel {

using json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json monomials_to_json(const MonomialSet& s, const MonomialOrder& ord) {
  json a = json::array();
  for (const auto& m : s) a.push_back(format_monomial(m, ord));
  return a;
}

inline MonomialSet monomials_from_json(const json& a, const MonomialOrder& ord) {
  MonomialSet out;
  for (const auto& m : a) out.push_back(parse_monomial(m.get<std::string>(), ord));
  return out;
}

// Terms in decreasing order.
template <class K>
json poly_terms_json(const Poly<K>& f, const MonomialOrder& ord) {
  auto terms = f.terms();
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return ord.less(b.first, a.first); });
  json a = json::array();
  for (const auto& [m, c] : terms) a.push_back({{"monomial", format_monomial(m, ord)}, {"coefficient", to_string(c)}});
  return a;
}

// Accepts "x*y - y - 1" or [{"monomial": .., "coefficient": ..}, ..].
template <class F>
Poly<typename F::Element> poly_from_json(const json& j, const MonomialOrder& ord, const F& field) {
  if (j.is_string()) return parse_poly(j.get<std::string>(), ord, field);
  std::vector<typename Poly<typename F::Element>::Term> terms;
  for (const auto& t : j) {
    const json& c = t.at("coefficient");
    auto v = c.is_number_integer() ? field.from_int(c.get<long long>()) : field.parse(c.get<std::string>());
    terms.emplace_back(parse_monomial(t.at("monomial").get<std::string>(), ord), v);
  }
  return Poly<typename F::Element>::from_terms(std::move(terms));
}

inline json ops_to_json(const OpCounter& ops) {
  return {{"mults", ops.multiplications},
          {"inversions", ops.inversions},
          {"adds", ops.additions},
          {"basic", ops.basic()}};
}

template <class K>
json to_json(const RelationSet<K>& rs) {
  const auto& ord = rs.order;
  json rels = json::array();
  for (const auto& r : rs.relations) {
    json e{{"poly", format_poly(r.poly, ord)},
           {"terms", poly_terms_json(r.poly, ord)},
           {"lm", format_monomial(r.lm, ord)},
           {"shift", r.shift ? json(format_monomial(*r.shift, ord)) : json(nullptr)}};
    rels.push_back(std::move(e));
  }
  json out{{"algorithm", rs.algorithm},
           {"order", ord.spec()},
           {"relations", std::move(rels)},
           {"staircase", monomials_to_json(rs.staircase, ord)},
           {"open_relations", monomials_to_json(rs.open_relations, ord)},
           {"queries", rs.queries},
           {"ops", ops_to_json(rs.ops)},
           {"minimal", rs.minimal}};
  if (rs.shift_set) out["certified_shift_set"] = monomials_to_json(*rs.shift_set, ord);
  return out;
}

template <class F>
RelationSet<typename F::Element> relation_set_from_json(const json& j, const F& field) {
  using K = typename F::Element;
  MonomialOrder ord = MonomialOrder::parse(j.at("order").get<std::string>());
  RelationSet<K> rs{j.at("algorithm").get<std::string>(), ord, {}, {}, {}, 0, {}, true, {}};
  for (const auto& r : j.at("relations")) {
    auto poly = poly_from_json(r.contains("terms") ? r.at("terms") : r.at("poly"), ord, field);
    std::optional<Monomial> shift;
    if (!r.at("shift").is_null()) shift = parse_monomial(r.at("shift").get<std::string>(), ord);
    rs.relations.push_back({poly, parse_monomial(r.at("lm").get<std::string>(), ord), shift});
  }
  rs.staircase = monomials_from_json(j.at("staircase"), ord);
  if (j.contains("open_relations")) rs.open_relations = monomials_from_json(j.at("open_relations"), ord);
  rs.queries = j.value("queries", std::size_t{0});
  rs.minimal = j.value("minimal", true);
  if (j.contains("certified_shift_set")) rs.shift_set = monomials_from_json(j.at("certified_shift_set"), ord);
  return rs;
}

template <class K>
json to_json(const SfglmResult<K>& r, const MonomialOrder& ord, bool tweaked) {
  json gb = json::array();
  for (const auto& g : r.gb) gb.push_back(format_poly(g, ord));
  json rejected = json::array();
  for (const auto& c : r.rejected)
    rejected.push_back({{"lm", format_monomial(c.t, ord)},
                        {"relation", format_poly(c.relation, ord)},
                        {"row", format_monomial(c.row, ord)},
                        {"value", to_string(c.value)}});
  return {{"algorithm", tweaked ? "sfglm-tweaked" : "sfglm"},
          {"order", ord.spec()},
          {"gb", std::move(gb)},
          {"staircase", monomials_to_json(r.staircase, ord)},
          {"useful_staircase", monomials_to_json(r.useful_staircase, ord)},
          {"certified_shift_set", monomials_to_json(r.T, ord)},
          {"rejected", std::move(rejected)},
          {"queries", r.queries},
          {"ops", ops_to_json(r.ops)}};
}

template <class K>
json to_json(const ComparisonReport<K>& rep) {
  json runs = json::array();
  for (std::size_t i = 0; i < rep.runs.size(); ++i) {
    json r = to_json(rep.runs[i]);
    r["zero_dimensional"] = bool(rep.zero_dimensional[i]);
    r["certified"] = bool(rep.certified[i]);
    runs.push_back(std::move(r));
  }
  json contains = json::array();
  for (std::size_t i = 0; i < rep.runs.size(); ++i)
    for (std::size_t j = 0; j < rep.runs.size(); ++j)
      if (i != j)
        contains.push_back({{"big", rep.runs[i].algorithm},
                            {"small", rep.runs[j].algorithm},
                            {"contained", bool(rep.contains[i][j])}});
  bool equal = true;
  for (const auto& row : rep.contains)
    for (bool b : row) equal = equal && b;
  return {{"runs", std::move(runs)}, {"containment", std::move(contains)}, {"window", rep.window}, {"equal_ideals", equal}};
}

template <class K>
json to_json(const GorensteinReport<K>& rep, const MonomialOrder& ord) {
  json trials = json::array();
  for (const auto& t : rep.trials) {
    json found = json::array();
    for (const auto& g : t.found) found.push_back(format_poly(g, ord));
    trials.push_back({{"seed", t.seed}, {"rank", t.rank}, {"larger", t.larger}, {"relations", std::move(found)}});
  }
  return {{"verdict", to_string(rep.verdict)},
          {"staircase_size", rep.staircase_size},
          {"T", monomials_to_json(rep.T, ord)},
          {"trials", std::move(trials)}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

// {"dim": n, "field": "...", "shape": [..], "entries": [..]}, row-major.
template <class F>
SequenceOracle<F> table_from_json(const json& j, const F& field, std::string name = "table") {
  auto shape = j.at("shape").get<std::vector<unsigned>>();
  if (j.contains("dim") && j.at("dim").get<std::size_t>() != shape.size())
    throw InputError("table dim does not match its shape");
  std::vector<typename F::Element> entries;
  for (const auto& e : j.at("entries"))
    entries.push_back(e.is_number_integer() ? field.from_int(e.get<long long>()) : field.parse(e.get<std::string>()));
  return make_table(field, std::move(shape), std::move(entries), std::move(name));
}

template <class F>
json table_to_json(const SequenceOracle<F>& u, const std::vector<unsigned>& shape) {
  json entries = json::array();
  std::size_t total = 1;
  for (unsigned d : shape) total *= d;
  Monomial idx(shape.size());
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t r = flat;
    for (std::size_t k = shape.size(); k-- > 0;) {
      idx.set(k, static_cast<unsigned>(r % shape[k]));
      r /= shape[k];
    }
    entries.push_back(to_string(u.get(idx)));
  }
  return {{"dim", shape.size()}, {"field", u.field().spec()}, {"shape", shape}, {"entries", std::move(entries)}};
}

// {"gb": [...], "order": "...", "initial": {"x*y": "3", ...}} or a list of
// {"monomial", "value"} objects.
template <class F>
IdealSequenceSpec<typename F::Element> ideal_spec_from_json(const json& j, const F& field) {
  using K = typename F::Element;
  MonomialOrder ord = MonomialOrder::parse(j.at("order").get<std::string>());
  IdealSequenceSpec<K> spec{{}, ord, {}};
  for (const auto& g : j.at("gb")) spec.gb.push_back(poly_from_json(g, ord, field));
  auto value = [&](const json& v) { return v.is_number_integer() ? field.from_int(v.get<long long>()) : field.parse(v.get<std::string>()); };
  const json& init = j.at("initial");
  if (init.is_object()) {
    for (const auto& [k, v] : init.items()) spec.initial.emplace_back(parse_monomial(k, ord), value(v));
  } else {
    for (const auto& e : init) spec.initial.emplace_back(parse_monomial(e.at("monomial").get<std::string>(), ord), value(e.at("value")));
  }
  return spec;
}

// {"generator": name, "params": {"dim": n}} or {"ideal": {...}}.
template <class F>
SequenceOracle<F> oracle_from_json(const json& j, const F& field) {
  if (j.contains("generator")) {
    std::size_t dim = 2;
    if (j.contains("params")) dim = j.at("params").value("dim", std::size_t{2});
    return make_generator(j.at("generator").get<std::string>(), field, dim);
  }
  if (j.contains("ideal")) return from_ideal(field, ideal_spec_from_json(j.at("ideal"), field), "ideal");
  if (j.contains("entries")) return table_from_json(j, field);
  throw InputError("expected a table, a generator spec or an ideal spec");
}

}  // namespace seqrel
