#include "tgp/json_io.hpp"

namespace tgp {

json to_json(const QPoly& p) {
  json j = json::object();
  for (int i = 0; i <= p.degree(); ++i)
    if (p.at(i) != 0) j[std::to_string(i)] = p.at(i);
  return j;
}

json to_json(const CharacterVector& v) {
  json j = json::object();
  for (const auto& [mu, m] : v.mult) j[mu.str()] = m;
  return j;
}

json to_json(const GDecomposition& g) {
  json mult = json::object();
  for (const auto& [mu, m] : g.mult) mult[mu.str()] = m;
  return json{{"rank", g.rank}, {"mult", mult}};
}

json to_json(const MPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::array();
    for (int i = 0; i < p.nvars(); ++i) exps.push_back(m.e[i]);
    terms.push_back(json{{"exponents", exps}, {"coeff", rat_str(c)}});
  }
  return terms;
}

json to_json(const GroebnerBasis& g) {
  json gens = json::array();
  for (const MPoly& p : g.gens) gens.push_back(to_json(p));
  return json{{"order", order_name(g.order)}, {"nvars", g.nvars},
              {"generators", gens}};
}

json to_json(const TanisakiSet& s) {
  json entries = json::array();
  for (const TanisakiEntry& e : s.entries) {
    entries.push_back(json{{"n", e.n},
                           {"J", e.J},
                           {"r", e.r},
                           {"poly", e.poly.str()},
                           {"terms", to_json(e.poly)}});
  }
  json j{{"lambda", s.lam.str()}, {"entries", entries},
         {"count", s.entries.size()}};
  if (s.params) j["params"] = s.params->str();
  return j;
}

json to_json(const RatMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const RepMatrices& m) {
  json sigma = json::array(), t = json::array();
  for (const RatMat& s : m.sigma) sigma.push_back(to_json(s));
  for (const RatMat& x : m.t) t.push_back(to_json(x));
  return json{{"d", m.d}, {"amended", m.amended}, {"sigma", sigma}, {"t", t}};
}

json to_json(const std::map<int, CharacterVector>& graded) {
  json j = json::object();
  for (const auto& [deg, cv] : graded) j[std::to_string(deg)] = to_json(cv);
  return j;
}

json to_json(const FlatReport& r) {
  return json{{"lambda", r.lam.str()},
              {"params", r.params.str()},
              {"dim", r.dim},
              {"d_lambda", r.d_lam},
              {"flat", r.dim_match},
              {"character", to_json(r.character)},
              {"checks", json{{"dim", r.dim_match}, {"character", r.char_match}}}};
}

json to_json(const SplitReport& r) {
  json blocks = json::array();
  for (const auto& [value, part] : r.blocks)
    blocks.push_back(json{{"value", rat_str(value)}, {"lambda", part.str()}});
  return json{{"lambda", r.lam.str()},
              {"params", r.params.str()},
              {"blocks", blocks},
              {"dim", r.dim},
              {"expected_dim", r.expected_dim},
              {"checks", json{{"dim", r.dim_match}, {"character", r.char_match}}}};
}

json to_json(const ModuleFingerprint& f) {
  json span = json::object();
  for (const auto& [mu, s] : f.t_span) span[mu.str()] = s;
  return json{{"dim", f.dim}, {"character", to_json(f.character)},
              {"t_span", span}};
}

json to_json(const Example6Report& r) {
  return json{{"a", rat_str(r.a)},
              {"b", rat_str(r.b)},
              {"relations_hold", r.relations_hold},
              {"limit_relations_hold", r.limit_relations_hold},
              {"m", to_json(r.m)},
              {"m_irreducible", r.m_irreducible},
              {"m0", to_json(r.m0)},
              {"m0_decomposable", r.m0_decomposable},
              {"m1", to_json(r.m1)},
              {"m1_matches_amended", r.m1_matches_amended},
              {"m2", to_json(r.m2)},
              {"m2_dual_pattern", r.m2_dual_pattern},
              {"limits_distinct", r.limits_distinct}};
}

json to_json(const SuiteReport& r) {
  json results = json::array();
  std::map<std::string, std::pair<int, int>> by_check;  // pass/fail
  for (const CheckResult& c : r.results) {
    json item{{"check", c.check}, {"lambda", c.lam}, {"params", c.params},
              {"pass", c.pass}};
    if (!c.note.empty()) item["note"] = c.note;
    results.push_back(item);
    auto& [p, f] = by_check[c.check];
    c.pass ? ++p : ++f;
  }
  json summary = json::object();
  for (const auto& [name, pf] : by_check)
    summary[name] = json{{"pass", pf.first}, {"fail", pf.second}};
  return json{{"max_d", r.max_d},
              {"trials", r.trials},
              {"seed", r.seed},
              {"passed", r.passed()},
              {"failed", r.failed()},
              {"summary", summary},
              {"results", results}};
}

}  // namespace tgp
