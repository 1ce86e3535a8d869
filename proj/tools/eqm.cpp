// eqm: matching-theory toolkit CLI.
//
// Subcommands: check, gen, census, verify, convert. Machine output (JSON) on
// stdout, diagnostics on stderr. Exit codes: 0 success/pass, 1 property false
// or counterexample found, 2 usage or parse error. Fully deterministic.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqm/census.hpp"
#include "eqm/equimatch.hpp"
#include "eqm/families.hpp"
#include "eqm/graph.hpp"
#include "eqm/matching.hpp"

namespace {

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Input argument: "-" for stdin, an existing file path, or a graph6 literal.
std::string read_input_text(const std::string& arg) {
  if (arg == "-") return slurp(std::cin);
  std::ifstream f(arg);
  if (f) return slurp(f);
  return arg;
}

bool looks_like_edge_list(const std::string& text) {
  for (char c : text)
    if (c == ' ' || c == '\t') return true;
  return false;
}

eqm::Graph parse_any(const std::string& text) {
  std::string t = text;
  while (!t.empty() && (t.back() == '\n' || t.back() == '\r')) t.pop_back();
  if (looks_like_edge_list(t)) return eqm::parse_edge_list(t);
  return eqm::parse_graph6(t);
}

nlohmann::json labels_to_json(const std::map<std::string, eqm::VertexSet>& m) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, set] : m) {
    std::vector<int> vs;
    EQM_FOR_EACH_VERTEX(v, set) vs.push_back(v);
    j[name] = vs;
  }
  return j;
}

int run_check(const std::string& input, const std::vector<std::string>& props,
              bool all) {
  eqm::Graph g = parse_any(read_input_text(input));
  eqm::ReportOptions opt = all ? eqm::ReportOptions{} : eqm::ReportOptions::none();
  if (all) opt.well_covered = true;
  for (const auto& p : props) {
    if (p == "basics") opt.basics = true;
    else if (p == "equimatchable") opt.equimatchable = true;
    else if (p == "factor-critical") opt.factor_critical = true;
    else if (p == "randomly-matchable") opt.randomly_matchable = true;
    else if (p == "bipartite") opt.bipartite = true;
    else if (p == "efc") opt.efc = true;
    else if (p == "ece") opt.ece = true;
    else if (p == "vce") opt.vce = true;
    else if (p == "ese") opt.ese = true;
    else if (p == "well-covered") opt.well_covered = true;
    else throw CLI::ValidationError("--prop", "unknown property '" + p + "'");
  }
  eqm::PropertyReport rep = eqm::property_report(g, opt);
  std::cout << eqm::report_to_json(rep).dump() << "\n";
  // A requested property that evaluates false flips the exit code.
  auto bad = [](const std::optional<bool>& v) { return v && !*v; };
  if (!all) {
    for (const auto& p : props) {
      if ((p == "equimatchable" && bad(rep.equimatchable)) ||
          (p == "factor-critical" && bad(rep.factor_critical)) ||
          (p == "randomly-matchable" && bad(rep.randomly_matchable)) ||
          (p == "bipartite" && bad(rep.bipartite)) ||
          (p == "efc" && bad(rep.efc)) || (p == "ece" && bad(rep.ece)) ||
          (p == "vce" && bad(rep.vce)) || (p == "ese" && bad(rep.ese)) ||
          (p == "well-covered" && bad(rep.well_covered)))
        return 1;
    }
  }
  return 0;
}

int run_gen(const std::string& descriptor) {
  eqm::FamilyDescriptor d = eqm::parse_descriptor(descriptor);
  eqm::GenResult r = eqm::generate(d);
  nlohmann::json j;
  j["descriptor"] = eqm::print_descriptor(d);
  j["graph6"] = eqm::emit_graph6(r.graph);
  j["order"] = r.graph.order();
  j["size"] = r.graph.size();
  j["labels"] = labels_to_json(r.labels);
  std::cout << j.dump() << "\n";
  return 0;
}

int run_census(int n, const std::string& preds_csv, const std::string& input,
               int workers) {
  std::vector<std::string> preds;
  std::stringstream ss(preds_csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) preds.push_back(item);
  if (!input.empty()) {
    // Graph6 stream ingest: apply the predicates to the given graphs.
    std::vector<eqm::Graph> graphs;
    if (input == "-") {
      graphs = eqm::parse_graph6_stream(std::cin);
    } else {
      std::ifstream f(input);
      if (!f) throw CLI::ValidationError("--input", "cannot open " + input);
      graphs = eqm::parse_graph6_stream(f);
    }
    const auto& reg = eqm::predicate_registry();
    std::vector<std::function<bool(const eqm::Graph&)>> fns;
    for (const auto& p : preds) {
      auto it = reg.find(p);
      if (it == reg.end())
        throw CLI::ValidationError("--pred", "unknown predicate '" + p + "'");
      fns.push_back(it->second);
    }
    for (const auto& g : graphs) {
      if (!eqm::is_connected(g)) {
        std::cerr << "skipping disconnected graph " << eqm::emit_graph6(g)
                  << "\n";
        continue;
      }
      bool keep = true;
      for (const auto& f : fns)
        if (!f(g)) { keep = false; break; }
      if (!keep) continue;
      eqm::CensusRecord rec;
      rec.g6 = eqm::emit_graph6(g);
      rec.report = eqm::property_report(g);
      if (rec.report.efc && *rec.report.efc && g.size() >= 1)
        rec.family_label = eqm::efc_label_name(eqm::classify_efc(g).label);
      std::cout << eqm::census_record_to_json(rec).dump() << "\n";
    }
    return 0;
  }
  for (const auto& rec : eqm::run_census(n, preds, workers))
    std::cout << eqm::census_record_to_json(rec).dump() << "\n";
  return 0;
}

int run_verify(const std::string& id, int n, int workers, int cap, bool list) {
  if (list) {
    for (const auto& i : eqm::verify_ids()) std::cout << i << "\n";
    return 0;
  }
  eqm::VerifyReport rep = eqm::verify(id, n, workers, cap);
  std::cout << eqm::verify_report_to_json(rep).dump() << "\n";
  std::cerr << rep.id << ": scanned " << rep.scanned << " graphs in "
            << rep.elapsed_s << "s, " << rep.counterexamples.size()
            << " counterexample(s)\n";
  return rep.counterexamples.empty() ? 0 : 1;
}

int run_convert(const std::string& input, const std::string& to) {
  const std::string text = read_input_text(input);
  if (to == "edges") {
    // One graph6 line per graph in; edge-list blocks out.
    std::istringstream in(text);
    for (const eqm::Graph& g : eqm::parse_graph6_stream(in))
      std::cout << eqm::emit_edge_list(g);
    return 0;
  }
  if (to == "g6") {
    if (looks_like_edge_list(text))
      std::cout << eqm::emit_graph6(eqm::parse_edge_list(text)) << "\n";
    else {
      std::istringstream in(text);
      for (const eqm::Graph& g : eqm::parse_graph6_stream(in))
        std::cout << eqm::emit_graph6(g) << "\n";
    }
    return 0;
  }
  throw CLI::ValidationError("--to", "expected 'g6' or 'edges'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matching-theory toolkit: equimatchable graph census and "
               "verification"};
  app.require_subcommand(1);

  std::string check_input;
  std::vector<std::string> check_props;
  bool check_all = false;
  auto* check = app.add_subcommand("check", "property report for one graph");
  check->add_option("input", check_input,
                    "graph6 literal, edge-list/graph6 file, or '-' for stdin")
      ->required();
  check->add_flag("--all", check_all, "compute the full report");
  for (const char* p :
       {"basics", "equimatchable", "factor-critical", "randomly-matchable",
        "bipartite", "efc", "ece", "vce", "ese", "well-covered"})
    check->add_flag_callback(
        std::string("--") + p, [&check_props, p] { check_props.push_back(p); },
        std::string("evaluate ") + p);

  std::string gen_desc;
  auto* gen = app.add_subcommand("gen", "generate a named family instance");
  gen->add_option("descriptor", gen_desc,
                  "e.g. \"typeI p=1 q=1 b1=2\" or \"famE r=2 comps=k2+b2\"")
      ->required();

  int census_n = 0, census_workers = 1;
  std::string census_preds, census_input;
  auto* census =
      app.add_subcommand("census", "predicate census over connected graphs");
  census->add_option("--n", census_n, "number of vertices (1..10)");
  census->add_option("--pred", census_preds,
                     "comma-separated predicate names");
  census->add_option("--input", census_input,
                     "graph6 stream file ('-' for stdin) instead of "
                     "enumeration");
  census->add_option("--workers", census_workers, "worker threads");

  std::string verify_id;
  int verify_n = 8, verify_workers = 1, verify_cap = 25;
  bool verify_list = false;
  auto* verify = app.add_subcommand("verify", "re-verify a registered claim");
  verify->add_option("theorem", verify_id, "registered theorem id");
  verify->add_option("--n", verify_n, "max vertex count to scan");
  verify->add_option("--workers", verify_workers, "worker threads");
  verify->add_option("--cap", verify_cap, "max counterexamples to report");
  verify->add_flag("--list", verify_list, "list registered theorem ids");

  std::string conv_input, conv_to = "g6";
  auto* convert = app.add_subcommand("convert", "graph6 <-> edge list");
  convert
      ->add_option("input", conv_input, "file, literal, or '-' for stdin")
      ->required();
  convert->add_option("--to", conv_to, "target format: g6 or edges");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(check_input, check_props, check_all);
    if (gen->parsed()) return run_gen(gen_desc);
    if (census->parsed()) {
      if (census_input.empty() && census_n == 0)
        throw CLI::ValidationError("--n", "census needs --n or --input");
      return run_census(census_n, census_preds, census_input, census_workers);
    }
    if (verify->parsed()) {
      if (!verify_list && verify_id.empty())
        throw CLI::ValidationError("theorem", "verify needs a theorem id");
      return run_verify(verify_id, verify_n, verify_workers, verify_cap,
                        verify_list);
    }
    if (convert->parsed()) return run_convert(conv_input, conv_to);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const eqm::GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
