#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "finmodal/census.hpp"
#include "finmodal/dsem.hpp"
#include "finmodal/glue.hpp"
#include "finmodal/json_io.hpp"
#include "finmodal/search.hpp"
#include "finmodal/suites.hpp"

using namespace finmodal;
using nlohmann::json;

namespace {

constexpr int kExitValid = 0;
constexpr int kExitCountermodel = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

struct Options {
  std::string file;
  std::string formula_text;
  std::optional<int> circumference;
  int max_size = 4;
  std::uint64_t seed = 20260810;
  bool as_json = false;
  std::string semantics = "d";
  std::string mode = "frame";
  bool transitive = false;
  bool reflexive = false;
  std::string final_clusters = "any";
  bool iso_dedup = false;
  std::string assignment = "default:2";
  std::string assignment_file;
  std::string suite_id;
};

FrameConstraints build_constraints(const Options& opt) {
  FrameConstraints c;
  c.transitive = opt.transitive;
  c.reflexive = opt.reflexive;
  c.circumference_at_most = opt.circumference;
  c.iso_dedup = opt.iso_dedup;
  if (opt.final_clusters == "any")
    c.final_clusters = FinalClusterConstraint::any;
  else if (opt.final_clusters == "all-degenerate")
    c.final_clusters = FinalClusterConstraint::all_degenerate;
  else if (opt.final_clusters == "all-nondegenerate")
    c.final_clusters = FinalClusterConstraint::all_nondegenerate;
  else if (opt.final_clusters == "all-simple")
    c.final_clusters = FinalClusterConstraint::all_simple;
  else
    throw std::invalid_argument("unknown final-cluster constraint: " +
                                opt.final_clusters);
  return c;
}

json frame_classification(const Frame& f) {
  json out;
  out["points"] = f.n;
  out["transitive"] = is_transitive(f);
  out["reflexive"] = is_reflexive(f);
  if (is_transitive(f)) {
    ClusterDecomposition d = clusters(f);
    out["circumference"] = circumference(f);
    json cl = json::array();
    for (int i = 0; i < d.count(); ++i) {
      const char* kind = d.kinds[i] == ClusterKind::degenerate ? "degenerate"
                         : d.kinds[i] == ClusterKind::simple
                             ? "simple"
                             : "nondegenerate-proper";
      json successors = json::array();
      std::uint64_t rest = d.strict_order[i];
      while (rest) {
        successors.push_back(first_point(rest));
        rest &= rest - 1;
      }
      cl.push_back({{"points", point_set_to_json(d.clusters[i])},
                    {"kind", kind},
                    {"final", static_cast<bool>(d.is_final[i])},
                    {"strict_successors", successors}});
    }
    out["clusters"] = cl;
  }
  return out;
}

json space_classification(const TopSpace& x, int k) {
  SpacePredicates p = classify(x);
  json out;
  out["points"] = x.points();
  out["open_sets"] = static_cast<int>(x.opens().size());
  out["TD"] = p.is_TD;
  out["T1"] = p.is_T1;
  out["scattered"] = p.is_scattered;
  out["crowded"] = p.is_crowded;
  out["densely_discrete"] = p.is_densely_discrete;
  out["door"] = p.is_door;
  out["isolated_points"] = point_set_to_json(p.isolated_points);
  KResolvable kr = k_resolvable(x, k);
  out["k"] = k;
  out["k_resolvable"] = kr.resolvable;
  if (kr.resolvable) {
    json cells = json::array();
    for (PointSet c : kr.cells) cells.push_back(point_set_to_json(c));
    out["witness_cells"] = cells;
  }
  out["hereditarily_k_irresolvable"] =
      hereditarily_k_irresolvable(x, k).holds;
  out["openly_irresolvable"] = openly_irresolvable(x).holds;
  return out;
}

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{
      "finmodal: finite-model workbench for transitive modal logics under "
      "relational and topological (derived-set / closure) semantics"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool with_file, bool with_formula) {
    if (with_file)
      cmd->add_option("--file", opt.file, "input JSON file")->required();
    if (with_formula)
      cmd->add_option("--formula", opt.formula_text,
                      "formula, e.g. \"<>p -> []q\"");
    cmd->add_flag("--json", opt.as_json, "machine-readable output");
  };

  CLI::App* frame = app.add_subcommand("frame", "frame operations");
  frame->require_subcommand(1);
  CLI::App* frame_check =
      frame->add_subcommand("check", "validate a frame JSON file");
  add_common(frame_check, true, false);
  CLI::App* frame_classify = frame->add_subcommand(
      "classify", "cluster decomposition, kinds, circumference");
  add_common(frame_classify, true, false);
  CLI::App* frame_validate =
      frame->add_subcommand("validate", "exhaustive frame validity");
  add_common(frame_validate, true, true);

  CLI::App* space = app.add_subcommand("space", "topological space operations");
  space->require_subcommand(1);
  CLI::App* space_check =
      space->add_subcommand("check", "validate a space JSON file");
  add_common(space_check, true, false);
  CLI::App* space_classify = space->add_subcommand(
      "classify", "separation/resolvability classification");
  add_common(space_classify, true, false);
  space_classify->add_option("--n", opt.circumference,
                             "k for the resolvability flags (default 2)");
  CLI::App* space_validate =
      space->add_subcommand("validate", "exhaustive d- or C-validity");
  add_common(space_validate, true, true);
  space_validate->add_option("--semantics", opt.semantics,
                             "d (derived set) or c (closure)");

  CLI::App* glue_cmd = app.add_subcommand(
      "glue", "replace clusters by spaces and glue (frame JSON via --file)");
  add_common(glue_cmd, true, false);
  glue_cmd->add_option("--assignment", opt.assignment,
                       "default:<cell_size> (default default:2)");
  glue_cmd->add_option("--assignment-file", opt.assignment_file,
                       "JSON assignment file (overrides --assignment)");

  CLI::App* counter = app.add_subcommand(
      "countermodel", "bounded countermodel search over frames or spaces");
  add_common(counter, false, true);
  counter->add_option("--max-size", opt.max_size, "largest model size");
  counter->add_option("--mode", opt.mode, "frame | space-d | space-c");
  counter->add_option("--n", opt.circumference,
                      "restrict to circumference <= n (frame mode)");
  counter->add_flag("--transitive", opt.transitive, "transitive frames only");
  counter->add_flag("--reflexive", opt.reflexive, "reflexive frames only");
  counter->add_option("--final", opt.final_clusters,
                      "any | all-degenerate | all-nondegenerate | all-simple");
  counter->add_flag("--iso-dedup", opt.iso_dedup,
                    "one frame per isomorphism class");

  CLI::App* census_cmd = app.add_subcommand(
      "census",
      "classify every labeled topology up to --max-size points (cap 4)");
  census_cmd->add_option("--max-size", opt.max_size, "largest space size");
  census_cmd->add_flag("--json", opt.as_json, "JSON instead of CSV");

  CLI::App* suite = app.add_subcommand("suite", "registered property suites");
  suite->require_subcommand(1);
  CLI::App* suite_run = suite->add_subcommand("run", "run a suite (or 'all')");
  suite_run->add_option("id", opt.suite_id, "suite id")->required();
  suite_run->add_option("--max-size", opt.max_size,
                        "frame/space size cap override");
  suite_run->add_option("--seed", opt.seed, "RNG seed");
  suite_run->add_flag("--json", opt.as_json, "machine-readable output");
  CLI::App* suite_list = suite->add_subcommand("list", "list suite ids");

  CLI11_PARSE(app, argc, argv);

  if (frame_check->parsed()) {
    Frame f = frame_from_json(load_json(opt.file));
    emit(json{{"ok", true}, {"points", f.n}}, opt.as_json,
         "ok: frame with " + std::to_string(f.n) + " points");
    return kExitValid;
  }
  if (frame_classify->parsed()) {
    Frame f = frame_from_json(load_json(opt.file));
    json j = frame_classification(f);
    emit(j, opt.as_json, j.dump(2));
    return kExitValid;
  }
  if (frame_validate->parsed()) {
    if (opt.formula_text.empty())
      throw std::invalid_argument("--formula is required");
    Frame f = frame_from_json(load_json(opt.file));
    ValidityResult r = valid_in_frame(f, parse(opt.formula_text));
    if (r.valid) {
      emit(json{{"valid", true}}, opt.as_json, "valid");
      return kExitValid;
    }
    json witness = {{"valid", false},
                    {"valuation", valuation_to_json(r.countermodel->valuation)},
                    {"point", r.countermodel->point}};
    emit(witness, opt.as_json,
         "not valid: fails at point " + std::to_string(r.countermodel->point) +
             " under " + valuation_to_json(r.countermodel->valuation).dump());
    return kExitCountermodel;
  }

  if (space_check->parsed()) {
    TopSpace x = space_from_json(load_json(opt.file));
    emit(json{{"ok", true},
              {"points", x.points()},
              {"open_sets", static_cast<int>(x.opens().size())}},
         opt.as_json,
         "ok: topology with " + std::to_string(x.points()) + " points, " +
             std::to_string(x.opens().size()) + " open sets");
    return kExitValid;
  }
  if (space_classify->parsed()) {
    TopSpace x = space_from_json(load_json(opt.file));
    json j = space_classification(x, opt.circumference.value_or(2));
    emit(j, opt.as_json, j.dump(2));
    return kExitValid;
  }
  if (space_validate->parsed()) {
    if (opt.formula_text.empty())
      throw std::invalid_argument("--formula is required");
    if (opt.semantics != "d" && opt.semantics != "c")
      throw std::invalid_argument("--semantics must be d or c");
    TopSpace x = space_from_json(load_json(opt.file));
    Formula f = parse(opt.formula_text);
    ValidityResult r = opt.semantics == "d" ? d_valid(x, f) : c_valid(x, f);
    if (r.valid) {
      emit(json{{"valid", true}, {"semantics", opt.semantics}}, opt.as_json,
           "valid (" + opt.semantics + "-semantics)");
      return kExitValid;
    }
    json witness = {{"valid", false},
                    {"semantics", opt.semantics},
                    {"valuation", valuation_to_json(r.countermodel->valuation)},
                    {"point", r.countermodel->point}};
    emit(witness, opt.as_json,
         "not valid: fails at point " + std::to_string(r.countermodel->point) +
             " under " + valuation_to_json(r.countermodel->valuation).dump());
    return kExitCountermodel;
  }

  if (glue_cmd->parsed()) {
    Frame f = frame_from_json(load_json(opt.file));
    ClusterAssignment assignment;
    if (!opt.assignment_file.empty()) {
      assignment = assignment_from_json(load_json(opt.assignment_file), f);
    } else if (opt.assignment.rfind("default:", 0) == 0) {
      assignment = default_assignment(f, std::stoi(opt.assignment.substr(8)));
    } else {
      throw std::invalid_argument(
          "--assignment must be default:<cell_size>, or use --assignment-file");
    }
    GluedSpace g = glue(f, assignment);
    DMorphismCheck check = d_morphism_check(g.morphism(f));
    json out = {{"space", space_to_json(g.space)},
                {"map", g.to_frame},
                {"d_morphism", check.ok},
                {"d_morphism_detail", check.describe()}};
    emit(out, opt.as_json, out.dump(2));
    return check.ok ? kExitValid : kExitCountermodel;
  }

  if (counter->parsed()) {
    if (opt.formula_text.empty())
      throw std::invalid_argument("--formula is required");
    SearchSpec spec;
    spec.formula = parse(opt.formula_text);
    spec.max_size = opt.max_size;
    if (opt.mode == "frame")
      spec.mode = SearchMode::frame_relational;
    else if (opt.mode == "space-d")
      spec.mode = SearchMode::space_d;
    else if (opt.mode == "space-c")
      spec.mode = SearchMode::space_c;
    else
      throw std::invalid_argument("unknown mode: " + opt.mode);
    spec.constraints = build_constraints(opt);
    SearchResult r = countermodel_search(spec);
    if (!r.found) {
      // Bounded search only: exhaustion is not a theoremhood proof.
      emit(json{{"found", false}, {"exhausted_size", r.exhausted_size}},
           opt.as_json,
           "no countermodel up to " + std::to_string(r.exhausted_size) +
               " points (bounded search; not a theoremhood proof)");
      return kExitValid;
    }
    json w;
    w["found"] = true;
    w["size"] = r.witness->size;
    if (r.witness->frame) w["frame"] = frame_to_json(*r.witness->frame);
    if (r.witness->space) w["space"] = space_to_json(*r.witness->space);
    w["valuation"] = valuation_to_json(r.witness->valuation);
    w["point"] = r.witness->point;
    emit(w, opt.as_json,
         "countermodel found at size " + std::to_string(r.witness->size) +
             ":\n" + w.dump(2));
    return kExitCountermodel;
  }

  if (census_cmd->parsed()) {
    std::vector<CensusRow> rows = census(opt.max_size);
    if (opt.as_json)
      std::cout << census_to_json(rows).dump(2) << '\n';
    else
      std::cout << census_to_csv(rows);
    return kExitValid;
  }

  if (suite_list->parsed()) {
    for (const auto& id : suite_ids()) std::cout << id << '\n';
    return kExitValid;
  }
  if (suite_run->parsed()) {
    SuiteCaps caps;
    caps.seed = opt.seed;
    if (suite_run->count("--max-size")) {
      caps.frame_points = opt.max_size;
      caps.space_points = opt.max_size;
    }
    std::vector<Report> reports = run_property_suite(opt.suite_id, caps);
    bool failed = false;
    json all = json::array();
    for (const Report& r : reports) {
      failed = failed || r.failed();
      if (opt.as_json)
        all.push_back(report_to_json(r));
      else
        std::cout << report_to_text(r) << '\n';
    }
    if (opt.as_json) std::cout << all.dump(2) << '\n';
    return failed ? kExitCountermodel : kExitValid;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const ParseError& e) {
    std::cerr << "syntax error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
