// Command-line front end: proof checking, the proof transformations, axiom
// verification, bounded search and the native-system translations, for batch
// use and test scripting. Reports are stable `key: value` lines.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include <superll/instance_text.hpp>
#include <superll/native_text.hpp>
#include <superll/proof_text.hpp>
#include <superll/search.hpp>
#include <superll/transform.hpp>
#include <superll/translate.hpp>

namespace {

using namespace superll;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << text;
}

Instance resolve_instance(const std::string& ref) {
  if (ref.rfind("preset:", 0) == 0)
    return make_preset(PresetId::parse(ref.substr(7)));
  return parse_instance(slurp(ref));
}

Bounds parse_bounds(const std::string& text) {
  Bounds b;
  if (text.empty()) return b;
  auto comma = text.find(',');
  if (comma == std::string::npos) throw Error("--bounds expects K,N");
  b.max_contraction_arity = std::stoull(text.substr(0, comma));
  b.max_promotion_width = std::stoull(text.substr(comma + 1));
  return b;
}

void print_axiom_report(const AxiomReport& r) {
  std::cout << "table: " << to_string(r.table) << "\n";
  std::cout << "bounds: K=" << r.bounds.max_contraction_arity
            << " N=" << r.bounds.max_promotion_width << "\n";
  std::cout << "claim: " << (r.analytically_proved ? "proved" : "bounded")
            << "\n";
  for (const auto& [axiom, pass] : r.verdicts)
    std::cout << axiom << ": " << (pass ? "pass" : "fail") << "\n";
  for (const Counterexample& ce : r.counterexamples)
    std::cout << "counterexample: " << ce.text << "\n";
  std::cout << "result: " << (r.ok() ? "pass" : "fail") << "\n";
}

void print_transform_report(const TransformReport& rep) {
  std::cout << "input-size: " << rep.input_size << "\n";
  std::cout << "output-size: " << rep.output_size << "\n";
  for (const auto& [label, count] : rep.steps)
    std::cout << "step." << label << ": " << count << "\n";
  std::cout << "witness-queries: " << rep.witness_queries << "\n";
}

// Writes the proof to `out_path` (report on stdout) or to stdout (report on
// stderr), keeping piped output clean.
void emit_proof(const std::string& out_path, const std::string& text,
                const TransformReport* rep) {
  if (!out_path.empty()) {
    spill(out_path, text);
    if (rep) print_transform_report(*rep);
    std::cout << "output: " << out_path << "\n";
  } else {
    if (rep)
      std::cerr << "input-size: " << rep->input_size << "\n"
                << "output-size: " << rep->output_size << "\n";
    std::cout << text;
  }
}

int run(int argc, char** argv) {
  CLI::App app{"proof kernel for parameterized exponential linear logics"};
  app.require_subcommand(1);

  std::string instance_ref, out_path, bounds_str, measure = "exchange-free";
  bool strict = false, annotate = false;

  auto add_common = [&](CLI::App* cmd, bool needs_instance) {
    if (needs_instance)
      cmd->add_option("--instance", instance_ref,
                      "instance file or preset:NAME")
          ->required();
    cmd->add_option("-o,--output", out_path, "output file (default stdout)");
    cmd->add_option("--bounds", bounds_str, "axiom-check bounds K,N");
    return cmd;
  };

  // check
  std::string check_file, native_sys;
  auto* check =
      add_common(app.add_subcommand("check", "validate a proof"), true);
  check->add_flag("--strict", strict, "require list-equal conclusions");
  check->add_option("--measure", measure, "size measure: raw|exchange-free");
  check->add_option("--native", native_sys,
                    "check a native-system proof (preset name)");
  check->add_option("file", check_file, "proof file")->required();

  // transformations
  struct TransformCmd {
    const char* name;
    const char* help;
    std::string file;
    CLI::App* cmd = nullptr;
  };
  TransformCmd transforms[] = {
      {"cut-elim", "eliminate every cut", "", nullptr},
      {"girardize",
       "replace functorial promotion and digging by Girard's promotion", "",
       nullptr},
      {"desubsume",
       "replace functorial promotion and unary contraction by ordered"
       " promotion",
       "", nullptr},
      {"expand", "expand axioms down to atoms", "", nullptr},
      {"forget", "collapse all signatures into the full singleton instance",
       "", nullptr},
  };
  for (auto& tc : transforms) {
    tc.cmd = add_common(app.add_subcommand(tc.name, tc.help),
                        std::string(tc.name) != "forget");
    tc.cmd->add_flag("--annotate", annotate,
                     "annotate output nodes with :concl");
    tc.cmd->add_option("file", tc.file, "proof file")->required();
  }

  // verify-axioms
  std::string table = "all";
  auto* verify = add_common(
      app.add_subcommand("verify-axioms", "check an axiom table"), true);
  verify->add_option(
      "--table", table,
      "cut | expansion | girardization | subsumption | functional | all");

  // search
  std::string goal_str;
  SearchBudget budget;
  auto* search = add_common(
      app.add_subcommand("search", "bounded cut-free proof search"), true);
  search->add_option("--goal", goal_str, "goal sequent \"|- ...\"")
      ->required();
  search->add_option("--depth", budget.max_depth, "depth bound");
  search->add_option("--nodes", budget.max_nodes, "visited-sequent bound");
  search->add_option("--co-arity", budget.max_contraction_arity,
                     "backward contraction arity bound");
  search->add_option("--dg-chain", budget.max_dg_chain,
                     "consecutive backward digging bound");

  // translate
  std::string preset_name, direction, translate_file;
  auto* translate = app.add_subcommand(
      "translate", "move between a native system and its instance");
  translate->add_option("--preset", preset_name, "preset name")->required();
  translate->add_option("--direction", direction, "to-super | from-super")
      ->required();
  translate->add_option("-o,--output", out_path, "output file");
  translate->add_option("file", translate_file, "input proof file")
      ->required();

  // export-latex
  std::string latex_file;
  auto* latex =
      app.add_subcommand("export-latex", "emit a bussproofs inference tree");
  latex->add_option("-o,--output", out_path, "output file");
  latex->add_option("file", latex_file, "proof file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors are exit 2, --help is success
  }

  if (check->parsed()) {
    if (!native_sys.empty()) {
      NativeSystem sys = make_native_system(PresetId::parse(native_sys));
      NativeProof np = read_native_proof(sys, slurp(check_file));
      CheckReport report = check_native(sys, np);
      std::cout << "proof: " << (report.ok ? "valid" : "invalid") << "\n";
      std::cout << "size: " << native_size(np) << "\n";
      std::cout << "cut-free: " << (native_cut_free(np) ? "yes" : "no")
                << "\n";
      if (!report.ok) {
        std::cout << "error: " << report.path << ": " << report.message
                  << "\n";
        return 1;
      }
      return 0;
    }
    Instance inst = resolve_instance(instance_ref);
    Proof p = read_proof(slurp(check_file));
    CheckReport report = check_proof(inst, p, {strict});
    SizeMode mode = measure == "raw" ? SizeMode::Raw : SizeMode::ExchangeFree;
    std::cout << "proof: " << (report.ok ? "valid" : "invalid") << "\n";
    std::cout << "size: " << proof_size(p, mode) << "\n";
    std::cout << "depth: " << proof_depth(p, mode) << "\n";
    std::cout << "cut-free: " << (cut_free(p) ? "yes" : "no") << "\n";
    if (!report.ok) {
      std::cout << "error: " << report.path << ": " << report.message << "\n";
      return 1;
    }
    return 0;
  }

  for (auto& tc : transforms) {
    if (!tc.cmd->parsed()) continue;
    std::string name = tc.name;
    Proof p = read_proof(slurp(tc.file));
    TransformReport rep;
    Bounds bounds = parse_bounds(bounds_str);
    Proof out = [&] {
      if (name == "forget") return forget_to_ll(p, &rep);
      Instance inst = resolve_instance(instance_ref);
      if (name == "cut-elim") return eliminate_cut(inst, p, &rep, bounds);
      if (name == "girardize") return girardize(inst, p, &rep, bounds);
      if (name == "desubsume")
        return eliminate_subsumption(inst, p, &rep, bounds);
      return expand_axioms(inst, p, &rep);
    }();
    emit_proof(out_path, write_proof(out, annotate), &rep);
    return 0;
  }

  if (verify->parsed()) {
    Instance inst = resolve_instance(instance_ref);
    Bounds bounds = parse_bounds(bounds_str);
    bool ok = true;
    auto run_table = [&](AxiomTable t) {
      AxiomReport r = check_axiom_table(inst, t, bounds);
      print_axiom_report(r);
      ok = ok && r.ok();
    };
    if (table == "cut" || table == "all") run_table(AxiomTable::CutElimination);
    if (table == "expansion" || table == "all")
      run_table(AxiomTable::Expansion);
    if (table == "girardization" || table == "all")
      run_table(AxiomTable::Girardization);
    if (table == "subsumption" || table == "all")
      run_table(AxiomTable::Subsumption);
    if (table == "functional") {
      FunctionalReport fr = is_functional(inst, bounds);
      for (const auto& [rel, pass] : fr.verdicts)
        std::cout << rel << ": " << (pass ? "pass" : "fail") << "\n";
      for (const std::string& v : fr.violations)
        std::cout << "violation: " << v << "\n";
      std::cout << "result: " << (fr.functional ? "pass" : "fail") << "\n";
      ok = fr.functional;
    } else if (table != "cut" && table != "expansion" &&
               table != "girardization" && table != "subsumption" &&
               table != "all") {
      throw Error("unknown table: " + table);
    }
    return ok ? 0 : 1;
  }

  if (search->parsed()) {
    Instance inst = resolve_instance(instance_ref);
    Sequent goal = parse_sequent(goal_str);
    SearchResult r = search_cutfree(inst, goal, budget);
    std::cout << "goal: " << to_string(goal) << "\n";
    std::cout << "status: "
              << (r.status == SearchStatus::Found       ? "found"
                  : r.status == SearchStatus::Exhausted ? "exhausted"
                                                        : "not-provable-within-budget")
              << "\n";
    std::cout << "visited: " << r.visited << "\n";
    if (r.found()) {
      std::cout << "size: " << proof_size(*r.proof, SizeMode::ExchangeFree)
                << "\n";
      if (!out_path.empty()) spill(out_path, write_proof(*r.proof));
      return 0;
    }
    return 1;
  }

  if (translate->parsed()) {
    PresetId id = PresetId::parse(preset_name);
    if (direction == "to-super") {
      NativeSystem sys = make_native_system(id);
      NativeProof np = read_native_proof(sys, slurp(translate_file));
      Proof out = encode_native(id, np);
      emit_proof(out_path, write_proof(out), nullptr);
      return 0;
    }
    if (direction == "from-super") {
      Proof p = read_proof(slurp(translate_file));
      TransformReport rep;
      NativeProof out = decode_native(id, p, &rep);
      emit_proof(out_path, write_native_proof(out), nullptr);
      return 0;
    }
    throw Error("unknown direction: " + direction +
                " (use to-super or from-super)");
  }

  if (latex->parsed()) {
    Proof p = read_proof(slurp(latex_file));
    emit_proof(out_path, export_latex(p), nullptr);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const superll::ParseError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const superll::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}
