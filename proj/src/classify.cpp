#include "cei/classify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cei/complex.hpp"
#include "cei/errors.hpp"

namespace cei {

std::string to_string(Mode mode) {
  return mode == Mode::Corrected ? "corrected" : "paper-literal";
}

Mode parse_mode(const std::string& text) {
  if (text == "corrected") return Mode::Corrected;
  if (text == "paper-literal") return Mode::PaperLiteral;
  throw std::invalid_argument("unknown mode '" + text + "'");
}

GraphDescriptors describe(const Graph& g) {
  GraphDescriptors d;
  d.n = g.order();
  d.edge_count = g.edge_count();
  d.component_count = static_cast<int>(connected_components(g).size());
  d.connected = d.component_count <= 1;
  d.complete = is_complete(g);
  d.forest = d.edge_count == d.n - d.component_count;
  d.tree = d.forest && d.connected;
  d.chordal = is_chordal(g);
  d.triangle_free = is_triangle_free(g);
  d.disjoint_union_of_edges = is_disjoint_union_of_edges(g);
  d.has_cycle = !d.forest;
  return d;
}

ClassificationReport classify_graph(const Graph& g, Mode mode) {
  validate_standing_assumptions(g);
  ClassificationReport report;
  report.mode = mode;
  report.graph = describe(g);
  const GraphDescriptors& d = report.graph;
  Predictions& p = report.predicted;

  p.unmixed = d.complete || d.triangle_free;
  p.sequentially_cm = d.chordal;
  p.cohen_macaulay = d.complete || d.forest;
  p.gorenstein = d.disjoint_union_of_edges && d.edge_count == 2;
  p.linear_resolution = d.connected;
  p.pure_resolution = d.connected || d.disjoint_union_of_edges;
  p.level = d.complete || d.tree || d.disjoint_union_of_edges;

  const int n = d.n;
  if (d.complete) {
    p.pd = mode == Mode::PaperLiteral ? 1 : 2;
    p.reg = n - 2;
  } else if (d.tree) {
    p.pd = 1;
    p.reg = n - 2;
  } else if (d.forest) {
    p.pd = 1;
    p.reg = n - 1;
  } else if (d.connected) {
    p.pd = 2;
    p.reg = n - 2;
  } else {
    p.pd = 2;
    p.reg = n - 1;
  }
  return report;
}

bool ConsistencyResult::all_match() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.match; });
}

const std::vector<std::string>& claim_names() {
  static const std::vector<std::string> names{
      "stanley_reisner_roundtrip",
      "minimal_primes",
      "height",
      "unmixed",
      "dual_decomposition",
      "dual_involution",
      "componentwise_linear",
      "cohen_macaulay",
      "gorenstein",
      "linear_equivalences",
      "lcm_line_graph",
      "betti_positions",
      "forest_betti",
      "pure_resolution",
      "level",
      "pd_reg_bounds",
      "pd_reg_classification",
      "koszul_oracle",
  };
  return names;
}

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string set_list(const std::vector<VertexSet>& sets) {
  std::string out;
  for (VertexSet s : sets) {
    if (!out.empty()) out += ' ';
    out += to_string(s);
  }
  return out.empty() ? "-" : out;
}

std::string pair_text(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void add_claim(ConsistencyResult& result, std::string name, const std::string& predicted,
               const std::string& computed) {
  result.claims.push_back({std::move(name), predicted == computed, predicted, computed});
}

// β_{1,j} = 0 for every j other than d + 1.
bool betti_linearly_related(const BettiTable& table, int d) {
  for (const auto& [key, value] : table.entries()) {
    if (key.first == 1 && value != 0 && key.second != d + 1) return false;
  }
  return true;
}

}  // namespace

GraphAnalysis analyze_graph(const Graph& g, FieldSpec field, const VerifyOptions& options) {
  const ClassificationReport classification = classify_graph(g, options.mode);
  const GraphDescriptors& d = classification.graph;
  const Predictions& p = classification.predicted;
  const int n = g.order();

  SqfIdeal ideal = complementary_edge_ideal(g);
  std::vector<VertexSet> primes = minimal_primes(ideal);
  SqfIdeal dual = alexander_dual(ideal);
  BettiTable table = hochster_betti(ideal, field);
  const PropertyReport props = ring_properties(ideal, table);

  GraphAnalysis analysis{g, ideal, primes, dual, table, props, classification, {}, {}, {}};
  ConsistencyResult& result = analysis.consistency;
  result.graph6 = to_graph6(g);
  result.field = field;
  result.mode = options.mode;

  // Stanley-Reisner complex of I_c(G) is Γ_G.
  add_claim(result, "stanley_reisner_roundtrip", "true",
            yes_no(stanley_reisner_ideal(gamma_complex(g)) == ideal));

  // Minimal primes are the nonedges and the triangles.
  std::vector<VertexSet> expected_primes = nonedges(g);
  for (VertexSet t : triangles(g)) expected_primes.push_back(t);
  std::sort(expected_primes.begin(), expected_primes.end(), graded_lex_less);
  add_claim(result, "minimal_primes", set_list(expected_primes), set_list(primes));
  add_claim(result, "height", std::to_string(d.complete ? 3 : 2),
            std::to_string(primes.front().size()));

  add_claim(result, "unmixed", yes_no(p.unmixed), yes_no(props.unmixed));

  std::vector<VertexSet> dual_supports;
  for (SqfMonomial u : dual.generators()) dual_supports.push_back(u.support);
  add_claim(result, "dual_decomposition", set_list(expected_primes), set_list(dual_supports));
  add_claim(result, "dual_involution", "true", yes_no(alexander_dual(dual) == ideal));

  add_claim(result, "componentwise_linear", yes_no(p.sequentially_cm),
            yes_no(props.componentwise_linear_dual && props.sequentially_cm));
  add_claim(result, "cohen_macaulay", yes_no(p.cohen_macaulay), yes_no(props.cohen_macaulay));
  add_claim(result, "gorenstein", yes_no(p.gorenstein), yes_no(props.gorenstein));

  // Linear quotients, linear resolution, linear relations and connectivity.
  std::string quotients = "unchecked";
  if (d.connected) {
    MonomialOrderCert cert = linear_quotient_order(g);
    quotients = yes_no(is_linear_quotient_order(ideal, cert.permutation));
    analysis.order = std::move(cert);
  } else if (ideal.size() <= 24) {
    quotients = yes_no(find_linear_quotient_order(ideal).has_value());
  }
  const bool related = is_linearly_related(ideal);
  const bool betti_related = betti_linearly_related(table, n - 2);
  const std::string connected = yes_no(d.connected);
  std::ostringstream computed_linear;
  computed_linear << "quotients=" << quotients
                  << " resolution=" << yes_no(props.linear_resolution)
                  << " related=" << yes_no(related) << " related_betti=" << yes_no(betti_related);
  // Above 24 generators the exhaustive order search is skipped on both sides.
  const std::string predicted_quotients = quotients == "unchecked" ? quotients : connected;
  const std::string predicted_linear = "quotients=" + predicted_quotients +
                                       " resolution=" + connected +
                                       " related=" + connected + " related_betti=" + connected;
  add_claim(result, "linear_equivalences", predicted_linear, computed_linear.str());

  // The lcm graph of I_c(G) is the line graph under e -> u_e.
  if (ideal.size() <= static_cast<std::size_t>(Graph::kMaxVertices)) {
    const Graph lcm = lcm_graph(ideal);
    const Graph line = line_graph(g);
    const std::vector<Edge> es = g.edges();
    std::vector<std::size_t> slot;
    for (const Edge& e : es) slot.push_back(*ideal.index_of(edge_generator(g, e)));
    bool same = true;
    for (std::size_t a = 0; a < es.size(); ++a) {
      for (std::size_t b = a + 1; b < es.size(); ++b) {
        same = same && line.adjacent(static_cast<int>(a), static_cast<int>(b)) ==
                           lcm.adjacent(static_cast<int>(slot[a]), static_cast<int>(slot[b]));
      }
    }
    add_claim(result, "lcm_line_graph", "true", yes_no(same));
  }

  add_claim(result, "betti_positions", "true", yes_no(betti_positions_check(table)));

  if (d.forest && !d.connected) {
    const std::string predicted = "b0=" + std::to_string(n - d.component_count) +
                                  " b1n=nonzero b1n-1=" +
                                  (d.disjoint_union_of_edges ? "zero" : "nonzero") + " b2n=zero";
    auto z = [](long v) { return v == 0 ? std::string("zero") : std::string("nonzero"); };
    const std::string computed = "b0=" + std::to_string(table.at(0, n - 2)) +
                                 " b1n=" + z(table.at(1, n)) + " b1n-1=" + z(table.at(1, n - 1)) +
                                 " b2n=" + z(table.at(2, n));
    add_claim(result, "forest_betti", predicted, computed);
  } else {
    // β_{0,n-2} = |E(G)| holds for every graph.
    add_claim(result, "forest_betti", "b0=" + std::to_string(d.edge_count),
              "b0=" + std::to_string(table.at(0, n - 2)));
  }

  add_claim(result, "pure_resolution", yes_no(p.pure_resolution), yes_no(props.pure_resolution));
  add_claim(result, "level", yes_no(p.level), yes_no(props.level));

  const bool bounded =
      props.pd >= 1 && props.pd <= 2 && props.reg >= n - 2 && props.reg <= n - 1;
  add_claim(result, "pd_reg_bounds", "within", bounded ? "within" : pair_text(props.pd, props.reg));
  add_claim(result, "pd_reg_classification", pair_text(p.pd, p.reg),
            pair_text(props.pd, props.reg));

  if (options.koszul_check) {
    BettiTable koszul = koszul_betti(ideal, field);
    add_claim(result, "koszul_oracle", "equal", koszul == table ? "equal" : "different");
    analysis.koszul = std::move(koszul);
  }
  return analysis;
}

ConsistencyResult verify_graph(const Graph& g, FieldSpec field, Mode mode) {
  return analyze_graph(g, field, {mode, false}).consistency;
}

// ---------------------------------------------------------------------------
// sweeps

namespace {

bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

void require_enumerable(int n) {
  if (n < 0 || n > 11) throw std::invalid_argument("graph enumeration supports n <= 11");
}

struct ChunkResult {
  long graphs = 0;
  std::map<std::string, std::map<std::string, ClaimTally>> tallies;
  std::vector<Mismatch> mismatches;
  std::vector<FieldDisagreement> disagreements;
};

ChunkResult run_chunk(int n, std::uint64_t lo, std::uint64_t hi, const std::vector<FieldSpec>& fields,
                      const VerifyOptions& verify) {
  ChunkResult out;
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    const Graph g = Graph::from_edge_mask(n, mask);
    if (has_isolated_vertex(g)) continue;
    ++out.graphs;
    std::vector<BettiTable> tables;
    for (FieldSpec field : fields) {
      const GraphAnalysis analysis = analyze_graph(g, field, verify);
      auto& tally = out.tallies[field.name()];
      for (const ClaimResult& claim : analysis.consistency.claims) {
        ClaimTally& t = tally[claim.claim];
        if (claim.match) {
          ++t.pass;
        } else {
          ++t.fail;
          out.mismatches.push_back({analysis.consistency.graph6, field.name(), claim.claim,
                                    claim.predicted, claim.computed});
        }
      }
      tables.push_back(analysis.betti);
    }
    const bool agree = std::all_of(tables.begin(), tables.end(),
                                   [&](const BettiTable& t) { return t == tables.front(); });
    if (!agree) {
      FieldDisagreement dis{to_graph6(g), {}};
      for (std::size_t k = 0; k < fields.size(); ++k) {
        dis.tables[fields[k].name()] = render_betti_table(tables[k]);
      }
      out.disagreements.push_back(std::move(dis));
    }
  }
  return out;
}

}  // namespace

void for_each_graph(int n, const std::function<void(const Graph&)>& visit) {
  require_enumerable(n);
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const Graph g = Graph::from_edge_mask(n, mask);
    if (!has_isolated_vertex(g)) visit(g);
  }
}

SweepReport sweep(const SweepOptions& options) {
  if (options.n_min < 4 || options.n_min > options.n_max || options.n_max > 7) {
    throw std::invalid_argument("sweep range must satisfy 4 <= n_min <= n_max <= 7");
  }
  if (options.workers < 1) throw std::invalid_argument("sweep needs at least one worker");
  const auto start = std::chrono::steady_clock::now();

  std::vector<FieldSpec> fields{options.field};
  if (options.cross_field) fields = {FieldSpec::gf(2), FieldSpec::gf(3), FieldSpec::rationals()};
  const VerifyOptions verify{options.mode, options.koszul_check};

  SweepReport report;
  report.n_min = options.n_min;
  report.n_max = options.n_max;
  report.mode = options.mode;
  for (FieldSpec f : fields) report.fields.push_back(f.name());

  for (int n = options.n_min; n <= options.n_max; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    const auto workers = static_cast<std::uint64_t>(options.workers);
    std::vector<ChunkResult> chunks(workers);
    std::vector<std::thread> threads;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t lo = total * w / workers;
      const std::uint64_t hi = total * (w + 1) / workers;
      threads.emplace_back([&, w, lo, hi] { chunks[w] = run_chunk(n, lo, hi, fields, verify); });
    }
    for (auto& t : threads) t.join();

    long graphs = 0;
    for (ChunkResult& chunk : chunks) {
      graphs += chunk.graphs;
      for (const auto& [field, claims] : chunk.tallies) {
        for (const auto& [claim, tally] : claims) {
          ClaimTally& into = report.tallies[field][claim];
          into.pass += tally.pass;
          into.fail += tally.fail;
        }
      }
      std::move(chunk.mismatches.begin(), chunk.mismatches.end(),
                std::back_inserter(report.mismatches));
      std::move(chunk.disagreements.begin(), chunk.disagreements.end(),
                std::back_inserter(report.field_disagreements));
    }
    report.graph_count_by_n[n] = graphs;
    report.graph_count += graphs;
    if (options.progress) options.progress(n, graphs);
  }

  std::sort(report.mismatches.begin(), report.mismatches.end(),
            [](const Mismatch& a, const Mismatch& b) {
              return std::tie(a.graph6, a.field, a.claim) < std::tie(b.graph6, b.field, b.claim);
            });
  std::sort(report.field_disagreements.begin(), report.field_disagreements.end(),
            [](const FieldDisagreement& a, const FieldDisagreement& b) {
              return a.graph6 < b.graph6;
            });
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<std::string> gorenstein_census(int n, FieldSpec field) {
  if (n < 4) throw std::invalid_argument("gorenstein_census: need n >= 4");
  std::vector<std::string> out;
  for_each_graph(n, [&](const Graph& g) {
    const SqfIdeal ideal = complementary_edge_ideal(g);
    if (ring_properties(ideal, field).gorenstein) out.push_back(to_graph6(g));
  });
  return out;
}

}  // namespace cei
