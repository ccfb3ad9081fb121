#include "cei/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cei/betti.hpp"
#include "cei/classify.hpp"
#include "cei/errors.hpp"
#include "cei/graph.hpp"
#include "cei/ideal.hpp"
#include "cei/serialize.hpp"

namespace cei::cli {

namespace {

struct Settings {
  std::string format = "graph6";
  std::string graph_text;
  std::string field = "2";
  std::string mode = "corrected";
  bool cross_check = false;
  bool cross_field = false;
  bool json_output = false;
  bool text_output = false;
  bool timing = false;
  int workers = 1;
  std::string out_file;
  std::string n_range = "4..6";
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

FieldSpec parse_field(const std::string& text) {
  if (text == "q" || text == "Q" || text == "QQ" || text == "0") return FieldSpec::rationals();
  try {
    std::size_t used = 0;
    const int p = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return FieldSpec(p);
  } catch (const std::exception&) {
    throw UsageError("--field expects 2, 3, another prime, or q; got '" + text + "'");
  }
}

Mode parse_mode_flag(const std::string& text) {
  try {
    return parse_mode(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("--mode expects corrected or paper-literal; got '" + text + "'");
  }
}

std::pair<int, int> parse_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--n expects N or A..B; got '" + text + "'");
  }
}

Graph read_graph(const Settings& s, std::istream& in) {
  std::string text = s.graph_text;
  if (text.empty()) text.assign(std::istreambuf_iterator<char>(in), {});
  return parse_graph(text, s.format == "edge-list" ? GraphFormat::EdgeList : GraphFormat::Graph6);
}

// Writes to --out when given, otherwise to `out`.
void emit(const Settings& s, std::ostream& out, const std::string& payload) {
  if (s.out_file.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(s.out_file);
  if (!file) throw std::runtime_error("cannot open '" + s.out_file + "' for writing");
  file << payload;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string labels_text(const std::vector<SqfMonomial>& ms) {
  std::string out;
  for (SqfMonomial m : ms) {
    if (!out.empty()) out += ", ";
    out += to_string(m);
  }
  return out.empty() ? "-" : out;
}

std::string gens_text(const SqfIdeal& ideal) {
  return labels_text({ideal.generators().begin(), ideal.generators().end()});
}

std::string analysis_text(const GraphAnalysis& a) {
  std::ostringstream out;
  const PropertyReport& p = a.properties;
  out << "graph6: " << to_graph6(a.graph) << "\n"
      << "n: " << a.graph.order() << "\n"
      << "generators: " << gens_text(a.ideal) << "\n";
  out << "minimal primes:";
  for (VertexSet t : a.minimal_primes) out << ' ' << to_string(t);
  out << "\nalexander dual: " << gens_text(a.dual) << "\n\n";
  out << render_betti_table(a.betti) << "\n";
  out << "pd=" << p.pd << " reg=" << p.reg << "\n"
      << "linear_resolution=" << p.linear_resolution << " pure_resolution=" << p.pure_resolution
      << " unmixed=" << p.unmixed << " cohen_macaulay=" << p.cohen_macaulay
      << " gorenstein=" << p.gorenstein << " level=" << p.level
      << " sequentially_cm=" << p.sequentially_cm << "\n";
  out << "consistency (" << a.consistency.field.name() << ", " << to_string(a.consistency.mode)
      << "): " << (a.consistency.all_match() ? "all claims match" : "MISMATCH") << "\n";
  for (const ClaimResult& c : a.consistency.claims) {
    if (!c.match) {
      out << "  " << c.claim << ": predicted " << c.predicted << ", computed " << c.computed
          << "\n";
    }
  }
  return out.str();
}

std::string sweep_text(const SweepReport& r) {
  std::ostringstream out;
  out << "sweep n=" << r.n_min << ".." << r.n_max << " mode=" << to_string(r.mode) << "\n";
  out << "graphs: " << r.graph_count << "\n";
  for (const auto& [field, claims] : r.tallies) {
    out << field << ":\n";
    for (const auto& [claim, t] : claims) {
      out << "  " << claim << ": " << t.pass << " pass, " << t.fail << " fail\n";
    }
  }
  out << "mismatches: " << r.mismatches.size() << "\n";
  for (const Mismatch& m : r.mismatches) {
    out << "  " << m.graph6 << " [" << m.field << "] " << m.claim << ": predicted " << m.predicted
        << ", computed " << m.computed << "\n";
  }
  out << "field disagreements: " << r.field_disagreements.size() << "\n";
  return out.str();
}

int cmd_analyze(const Settings& s, std::istream& in, std::ostream& out) {
  const Graph g = read_graph(s, in);
  const GraphAnalysis a =
      analyze_graph(g, parse_field(s.field), {parse_mode_flag(s.mode), s.cross_check});
  emit(s, out, s.text_output ? analysis_text(a) : dump(analysis_document(a)));
  return a.consistency.all_match() ? kSuccess : kMismatch;
}

int cmd_betti(const Settings& s, std::istream& in, std::ostream& out) {
  const Graph g = read_graph(s, in);
  const FieldSpec field = parse_field(s.field);
  const SqfIdeal ideal = complementary_edge_ideal(g);
  const BettiTable table = hochster_betti(ideal, field);
  std::optional<bool> agrees;
  if (s.cross_check) agrees = koszul_betti(ideal, field) == table;
  if (s.text_output) {
    std::string text = render_betti_table(table);
    if (agrees) text += *agrees ? "koszul oracle: equal\n" : "koszul oracle: DIFFERENT\n";
    emit(s, out, text);
  } else {
    json j = to_json(table);
    if (agrees) j["koszul_equal"] = *agrees;
    emit(s, out, dump(j));
  }
  return agrees.value_or(true) ? kSuccess : kMismatch;
}

int cmd_dual(const Settings& s, std::istream& in, std::ostream& out) {
  const Graph g = read_graph(s, in);
  const SqfIdeal dual = alexander_dual(complementary_edge_ideal(g));
  std::vector<SqfMonomial> pairs, triples;
  for (SqfMonomial u : dual.generators()) (u.degree() == 2 ? pairs : triples).push_back(u);
  if (s.text_output) {
    emit(s, out,
         "dual: " + gens_text(dual) + "\ncomplement edges: " + labels_text(pairs) +
             "\ntriangles: " + labels_text(triples) + "\n");
  } else {
    json p = json::array(), t = json::array();
    for (SqfMonomial u : pairs) p.push_back(to_string(u));
    for (SqfMonomial u : triples) t.push_back(to_string(u));
    emit(s, out,
         dump({{"generators", to_json(dual)}, {"complement_edges", p}, {"triangles", t}}));
  }
  return kSuccess;
}

int cmd_order(const Settings& s, std::istream& in, std::ostream& out) {
  const Graph g = read_graph(s, in);
  try {
    const MonomialOrderCert cert = linear_quotient_order(g);
    if (s.text_output) {
      std::ostringstream text;
      for (std::size_t k = 0; k < cert.order.size(); ++k) {
        std::vector<SqfMonomial> colon;
        for (VertexSet q : cert.colon_steps[k]) colon.push_back({q});
        text << to_string(cert.order[k]) << "  colon: " << (k == 0 ? "-" : labels_text(colon))
             << "\n";
      }
      emit(s, out, text.str());
    } else {
      emit(s, out, dump(to_json(cert)));
    }
  } catch (const NoOrderExists& e) {
    if (s.text_output) {
      emit(s, out, std::string(e.what()) + "\n");
    } else {
      json comps = json::array();
      for (VertexSet c : e.components()) comps.push_back(to_json(c));
      emit(s, out, dump({{"status", "NoOrderExists"}, {"components", comps}}));
    }
  }
  return kSuccess;
}

int cmd_sweep(const Settings& s, std::ostream& out, std::ostream& err) {
  SweepOptions options;
  std::tie(options.n_min, options.n_max) = parse_range(s.n_range);
  options.field = parse_field(s.field);
  options.mode = parse_mode_flag(s.mode);
  options.cross_field = s.cross_field;
  options.koszul_check = s.cross_check;
  options.workers = s.workers;
  if (options.n_min < 4 || options.n_min > options.n_max || options.n_max > 7) {
    throw UsageError("--n must satisfy 4 <= A <= B <= 7");
  }
  if (options.workers < 1) throw UsageError("--workers must be positive");
  options.progress = [&err](int n, long graphs) {
    err << "n=" << n << ": " << graphs << " graphs verified\n" << std::flush;
  };
  const SweepReport report = sweep(options);
  emit(s, out, s.text_output ? sweep_text(report) : dump(to_json(report, s.timing)));
  return report.mismatches.empty() ? kSuccess : kMismatch;
}

int cmd_census(const Settings& s, std::ostream& out) {
  const auto [n, n_hi] = parse_range(s.n_range);
  if (n != n_hi || n < 4 || n > 7) throw UsageError("census takes a single --n between 4 and 7");
  const std::vector<std::string> found = gorenstein_census(n, parse_field(s.field));
  if (s.text_output) {
    std::string text;
    for (const auto& g6 : found) text += g6 + "\n";
    emit(s, out, text);
  } else {
    emit(s, out, dump({{"n", n}, {"gorenstein", found}}));
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Complementary edge ideals of graphs: invariants and theorem checks", "cei"};
  app.require_subcommand(1);
  Settings s;

  auto graph_options = [&s](CLI::App* cmd) {
    cmd->add_option("--format", s.format, "Input format")
        ->check(CLI::IsMember({"graph6", "edge-list"}));
    cmd->add_option("-g,--graph", s.graph_text, "Graph text (default: read stdin)");
  };
  auto output_options = [&s](CLI::App* cmd) {
    auto* j = cmd->add_flag("--json", s.json_output, "JSON output (default)");
    auto* t = cmd->add_flag("--text", s.text_output, "Plain text output");
    j->excludes(t);
    cmd->add_option("--out", s.out_file, "Write the result to FILE");
  };
  auto field_option = [&s](CLI::App* cmd) {
    cmd->add_option("--field", s.field, "Coefficient field: 2, 3, another prime, or q");
  };
  auto mode_option = [&s](CLI::App* cmd) {
    cmd->add_option("--mode", s.mode, "corrected or paper-literal");
  };

  auto* analyze = app.add_subcommand("analyze", "Full analysis document for one graph");
  graph_options(analyze);
  output_options(analyze);
  field_option(analyze);
  mode_option(analyze);
  analyze->add_flag("--cross-check", s.cross_check, "Also compute the Koszul oracle table");

  auto* betti = app.add_subcommand("betti", "Graded Betti table of I_c(G)");
  graph_options(betti);
  output_options(betti);
  field_option(betti);
  betti->add_flag("--cross-check", s.cross_check, "Compare against the Koszul oracle");

  auto* dual = app.add_subcommand("dual", "Alexander dual of I_c(G)");
  graph_options(dual);
  output_options(dual);

  auto* order = app.add_subcommand("order", "Linear quotient order certificate");
  graph_options(order);
  output_options(order);

  auto* sweep_cmd = app.add_subcommand("sweep", "Verify every graph in a vertex range");
  output_options(sweep_cmd);
  field_option(sweep_cmd);
  mode_option(sweep_cmd);
  sweep_cmd->add_option("--n", s.n_range, "Vertex range A..B (4 <= A <= B <= 7)");
  sweep_cmd->add_option("--workers", s.workers, "Worker threads");
  sweep_cmd->add_flag("--cross-check", s.cross_check, "Also compare with the Koszul oracle");
  sweep_cmd->add_flag("--cross-field", s.cross_field, "Verify over GF(2), GF(3) and QQ");
  sweep_cmd->add_flag("--timing", s.timing, "Include wall time in the JSON report");

  auto* census = app.add_subcommand("census", "Graphs with Gorenstein quotient ring");
  output_options(census);
  field_option(census);
  census->add_option("--n", s.n_range, "Vertex count")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(s, in, out);
    if (betti->parsed()) return cmd_betti(s, in, out);
    if (dual->parsed()) return cmd_dual(s, in, out);
    if (order->parsed()) return cmd_order(s, in, out);
    if (sweep_cmd->parsed()) return cmd_sweep(s, out, err);
    if (census->parsed()) return cmd_census(s, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kValidation;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kUsage;
}

}  // namespace cei::cli
