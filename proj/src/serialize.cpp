#include "cei/serialize.hpp"

#include <stdexcept>

namespace cei {

json to_json(VertexSet s) { return s.labels(); }

json to_json(const SqfIdeal& ideal) {
  json out = json::array();
  for (SqfMonomial u : ideal.generators()) out.push_back(to_string(u));
  return out;
}

SqfIdeal ideal_from_json(int n, const json& j) {
  std::vector<SqfMonomial> gens;
  for (const auto& item : j) gens.push_back(parse_monomial(item.get<std::string>()));
  return SqfIdeal(n, std::move(gens));
}

json to_json(const SimplicialComplex& complex) {
  json out = json::array();
  for (VertexSet f : complex.facets()) out.push_back(to_json(f));
  return out;
}

json to_json(const BettiTable& table) {
  json entries = json::object();
  for (const auto& [key, value] : table.entries()) {
    if (value != 0) entries[std::to_string(key.first) + "," + std::to_string(key.second)] = value;
  }
  return {{"field", table.field().name()},
          {"table", entries},
          {"pd", table.pd()},
          {"reg", table.reg()}};
}

BettiTable betti_from_json(int n, const json& j) {
  const std::string name = j.at("field").get<std::string>();
  int characteristic = 0;
  if (name != "QQ") {
    if (name.rfind("GF(", 0) != 0 || name.back() != ')') {
      throw std::invalid_argument("unknown field '" + name + "'");
    }
    characteristic = std::stoi(name.substr(3, name.size() - 4));
  }
  BettiTable table(n, FieldSpec(characteristic));
  for (const auto& [key, value] : j.at("table").items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad Betti key '" + key + "'");
    table.add(std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1)),
              value.get<long>());
  }
  return table;
}

json to_json(const PropertyReport& r) {
  return {{"pd", r.pd},
          {"reg", r.reg},
          {"linear_resolution", r.linear_resolution},
          {"pure_resolution", r.pure_resolution},
          {"unmixed", r.unmixed},
          {"cohen_macaulay", r.cohen_macaulay},
          {"gorenstein", r.gorenstein},
          {"level", r.level},
          {"componentwise_linear_dual", r.componentwise_linear_dual},
          {"sequentially_cm", r.sequentially_cm}};
}

json to_json(const ClassificationReport& r) {
  const GraphDescriptors& d = r.graph;
  const Predictions& p = r.predicted;
  return {{"mode", to_string(r.mode)},
          {"graph",
           {{"n", d.n},
            {"edges", d.edge_count},
            {"components", d.component_count},
            {"connected", d.connected},
            {"complete", d.complete},
            {"forest", d.forest},
            {"tree", d.tree},
            {"chordal", d.chordal},
            {"triangle_free", d.triangle_free},
            {"disjoint_union_of_edges", d.disjoint_union_of_edges},
            {"has_cycle", d.has_cycle}}},
          {"predicted",
           {{"unmixed", p.unmixed},
            {"sequentially_cm", p.sequentially_cm},
            {"cohen_macaulay", p.cohen_macaulay},
            {"gorenstein", p.gorenstein},
            {"linear_resolution", p.linear_resolution},
            {"pure_resolution", p.pure_resolution},
            {"level", p.level},
            {"pd", p.pd},
            {"reg", p.reg}}}};
}

json to_json(const ConsistencyResult& result) {
  json claims = json::array();
  for (const ClaimResult& c : result.claims) {
    json item = {{"claim", c.claim}, {"status", c.match ? "match" : "mismatch"}};
    if (!c.match) {
      item["predicted"] = c.predicted;
      item["computed"] = c.computed;
    }
    claims.push_back(std::move(item));
  }
  return {{"graph6", result.graph6},
          {"field", result.field.name()},
          {"mode", to_string(result.mode)},
          {"all_match", result.all_match()},
          {"claims", claims}};
}

json to_json(const MonomialOrderCert& cert) {
  json steps = json::array();
  for (std::size_t k = 0; k < cert.order.size(); ++k) {
    json colon = json::array();
    for (VertexSet q : cert.colon_steps[k]) colon.push_back(to_string(SqfMonomial{q}));
    steps.push_back({{"generator", to_string(cert.order[k])},
                     {"index", cert.permutation[k]},
                     {"colon", colon}});
  }
  return {{"status", "ok"}, {"order", steps}};
}

json to_json(const SweepReport& report, bool include_timing) {
  json counts = json::object();
  for (const auto& [n, c] : report.graph_count_by_n) counts[std::to_string(n)] = c;
  json tallies = json::object();
  long failures = 0;
  for (const auto& [field, claims] : report.tallies) {
    json per = json::object();
    for (const auto& [claim, t] : claims) {
      per[claim] = {{"pass", t.pass}, {"fail", t.fail}};
      failures += t.fail;
    }
    tallies[field] = per;
  }
  json mismatches = json::array();
  for (const Mismatch& m : report.mismatches) {
    mismatches.push_back({{"graph6", m.graph6},
                          {"field", m.field},
                          {"claim", m.claim},
                          {"predicted", m.predicted},
                          {"computed", m.computed}});
  }
  json disagreements = json::array();
  for (const FieldDisagreement& d : report.field_disagreements) {
    disagreements.push_back({{"graph6", d.graph6}, {"tables", d.tables}});
  }
  json out = {{"schema", kSweepSchema},
              {"n_min", report.n_min},
              {"n_max", report.n_max},
              {"mode", to_string(report.mode)},
              {"fields", report.fields},
              {"graph_count", report.graph_count},
              {"graph_count_by_n", counts},
              {"tallies", tallies},
              {"mismatch_count", failures},
              {"mismatches", mismatches},
              {"field_disagreements", disagreements}};
  if (include_timing) out["wall_seconds"] = report.wall_seconds;
  return out;
}

json analysis_document(const GraphAnalysis& a) {
  json edges = json::array();
  for (const Edge& e : a.graph.edges()) edges.push_back({e.u + 1, e.v + 1});
  json primes = json::array();
  for (VertexSet p : a.minimal_primes) primes.push_back(to_json(p));

  json nonedge_part = json::array();
  json triangle_part = json::array();
  for (SqfMonomial u : a.dual.generators()) {
    (u.degree() == 2 ? nonedge_part : triangle_part).push_back(to_string(u));
  }

  json doc = {{"schema", kAnalysisSchema},
              {"input", {{"graph6", to_graph6(a.graph)}, {"n", a.graph.order()}, {"edges", edges}}},
              {"generators", to_json(a.ideal)},
              {"minimal_primes", primes},
              {"alexander_dual",
               {{"generators", to_json(a.dual)},
                {"complement_edges", nonedge_part},
                {"triangles", triangle_part}}},
              {"betti", to_json(a.betti)},
              {"properties", to_json(a.properties)},
              {"classification", to_json(a.classification)},
              {"consistency", to_json(a.consistency)}};
  if (a.koszul) doc["koszul_betti"] = to_json(*a.koszul);
  if (a.order) doc["linear_quotient_order"] = to_json(*a.order);
  return doc;
}

}  // namespace cei
