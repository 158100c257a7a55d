#include "lpalab/cli.hpp"

#include <algorithm>

#include <CLI11.hpp>

#include "lpalab/io.hpp"

namespace lpa {

namespace {

struct InputRecord {
  std::string source;
  std::string bytes;
};

InputRecord record_input(const std::string& path_or_sig) {
  if (path_or_sig.rfind("sig:", 0) == 0) return {path_or_sig, path_or_sig};
  return {path_or_sig, read_file(path_or_sig)};
}

Json report(const std::string& command, const std::vector<InputRecord>& inputs, Json result) {
  Json j;
  j["command"] = command;
  Json ins = Json::array();
  for (const auto& in : inputs) ins.push_back(Json{{"source", in.source}, {"digest", digest(in.bytes)}});
  j["inputs"] = std::move(ins);
  j["result"] = std::move(result);
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"invariants, case classification and isomorphism decisions for "
               "Leavitt path algebras of finite multigraphs"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string graph_arg, graph_arg2, matrix_arg;
  int64_t budget = 128;
  int from = 0, to = 0;
  int64_t max_mult = 64;
  int depth = 6;
  int max_states = 50000;
  int64_t max_param = 5;
  std::string family = "nonibn";

  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* inv = app.add_subcommand("invariants", "full invariant set of one graph");
  inv->add_option("graph", graph_arg, "graph file or sig:l1,t1;l2,t2")->required();
  add_format(inv);

  auto* cls = app.add_subcommand("classify", "case label and invariants (<= 2 vertices)");
  cls->add_option("graph", graph_arg)->required();
  add_format(cls);

  auto* cmp = app.add_subcommand("compare", "three-valued isomorphism decision");
  cmp->add_option("a", graph_arg)->required();
  cmp->add_option("b", graph_arg2)->required();
  cmp->add_option("--budget", budget, "exponent bound for the pointed-group search");
  cmp->add_option("--max-mult", max_mult, "orbit search multiplicity bound");
  cmp->add_option("--depth", depth, "orbit search depth bound");
  add_format(cmp);

  auto* enu = app.add_subcommand("enumerate", "classified table of a signature family");
  enu->add_option("--family", family)->check(CLI::IsMember({"nonibn", "ibn", "onevertex"}))->required();
  enu->add_option("--max", max_param, "largest parameter value")->required();
  add_format(enu);

  auto* snf = app.add_subcommand("snf", "Smith normal form with transforms");
  snf->add_option("matrix", matrix_arg, "matrix file {\"rows\": [[...]]}")->required();
  add_format(snf);

  auto* shf = app.add_subcommand("shift", "apply one shift move");
  shf->add_option("graph", graph_arg)->required();
  shf->add_option("--from", from)->required();
  shf->add_option("--to", to)->required();
  add_format(shf);

  auto* orb = app.add_subcommand("orbit", "bidirectional shift-orbit witness search");
  orb->add_option("a", graph_arg)->required();
  orb->add_option("b", graph_arg2)->required();
  orb->add_option("--max-mult", max_mult);
  orb->add_option("--depth", depth);
  orb->add_option("--max-states", max_states);
  add_format(orb);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (args.empty()) err << app.help();
    return 1;
  }

  try {
    if (inv->parsed()) {
      InputRecord in = record_input(graph_arg);
      MultiGraph g = load_graph(graph_arg);
      InvariantBundle b = invariant_bundle(g);
      if (format == "json")
        emit(out, report("invariants", {in}, bundle_to_json(b)));
      else
        out << bundle_to_text(b);
      return 0;
    }
    if (cls->parsed()) {
      InputRecord in = record_input(graph_arg);
      MultiGraph g = load_graph(graph_arg);
      ClassifyResult c = classify(g);
      if (format == "json")
        emit(out, report("classify", {in}, classify_to_json(c)));
      else
        out << classify_to_text(c);
      return 0;
    }
    if (cmp->parsed()) {
      InputRecord ia = record_input(graph_arg), ib = record_input(graph_arg2);
      MultiGraph a = load_graph(graph_arg), b = load_graph(graph_arg2);
      CompareConfig cfg;
      cfg.group_budget = budget;
      cfg.orbit.max_total_multiplicity = max_mult;
      cfg.orbit.max_depth = depth;
      IsoDecision d = compare(a, b, cfg);
      if (format == "json")
        emit(out, report("compare", {ia, ib}, decision_to_json(d)));
      else
        out << decision_to_text(d);
      return 0;
    }
    if (enu->parsed()) {
      TableFamily fam = family == "nonibn" ? TableFamily::NonIBN
                        : family == "ibn"  ? TableFamily::IBN
                                           : TableFamily::OneVertex;
      auto rows = enumerate_table(max_param, fam);
      if (format == "json") {
        Json jrows = Json::array();
        for (const auto& r : rows) jrows.push_back(table_row_to_json(r));
        emit(out, report("enumerate", {}, std::move(jrows)));
      } else if (format == "csv") {
        out << table_to_csv(rows);
      } else {
        out << table_to_text(rows);
      }
      return 0;
    }
    if (snf->parsed()) {
      InputRecord in = record_input(matrix_arg);
      IntMatrix m = load_matrix(matrix_arg);
      SmithDecomposition s = smith_normal_form(m);
      if (format == "json") {
        Json r;
        r["p"] = matrix_to_json(s.p);
        r["d"] = matrix_to_json(s.d);
        r["q"] = matrix_to_json(s.q);
        r["diagonal"] = s.diagonal();
        emit(out, report("snf", {in}, std::move(r)));
      } else {
        auto print = [&](const char* name, const IntMatrix& mm) {
          out << name << ":\n";
          for (std::size_t i = 0; i < mm.rows(); ++i) {
            for (std::size_t j = 0; j < mm.cols(); ++j) out << (j ? " " : "  ") << mm.at(i, j);
            out << "\n";
          }
        };
        print("P", s.p);
        print("D", s.d);
        print("Q", s.q);
      }
      return 0;
    }
    if (shf->parsed()) {
      InputRecord in = record_input(graph_arg);
      MultiGraph g = load_graph(graph_arg);
      MultiGraph h = shift(g, ShiftSpec{from, to});
      if (format == "json")
        emit(out, report("shift", {in}, graph_to_json(h)));
      else {
        for (const auto& row : h.adjacency_rows()) {
          for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
          out << "\n";
        }
      }
      return 0;
    }
    if (orb->parsed()) {
      InputRecord ia = record_input(graph_arg), ib = record_input(graph_arg2);
      MultiGraph a = load_graph(graph_arg), b = load_graph(graph_arg2);
      OrbitConfig cfg{max_mult, depth, max_states};
      auto w = orbit_search(a, b, cfg);
      if (!w) {
        if (format == "json")
          emit(out, report("orbit", {ia, ib}, Json{{"found", false}}));
        else
          out << "no witness within the budget\n";
        return 2;
      }
      if (format == "json") {
        Json r;
        r["found"] = true;
        r["witness"] = witness_path_to_json(*w);
        emit(out, report("orbit", {ia, ib}, std::move(r)));
      } else {
        out << "witness with " << w->steps.size() << " step(s); meet:\n";
        for (const auto& row : w->meet.adjacency_rows()) {
          for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
          out << "\n";
        }
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: " << errc_name(Errc::UnknownCommand) << "\n";
  return 1;
}

}  // namespace lpa
