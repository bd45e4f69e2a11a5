#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relift/axiom_check.hpp"
#include "relift/bisim.hpp"
#include "relift/distlaw.hpp"
#include "relift/errors.hpp"
#include "relift/harness.hpp"
#include "relift/model_io.hpp"
#include "relift/registry.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace relift;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

FunctorPtr functor_by_name(const std::string& name) {
  if (name == "P") return powerset_functor();
  if (name == "N") return neighbourhood_functor();
  if (name == "M") return monotone_neighbourhood_functor();
  if (name == "Id") return identity_functor();
  throw contract_error("unknown functor '" + name + "'; expected P, N, M, or Id");
}

std::size_t resolve_bound(int requested, const std::string& functor_name) {
  if (requested >= 0) return static_cast<std::size_t>(requested);
  return functor_name == "P" ? 3 : 2;
}

std::string fn_text(const Function& f) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < f.source().size(); ++i) {
    if (i) os << ",";
    os << f.source().at(i).text() << "->" << f.target().at(f.apply_index(i)).text();
  }
  os << "]";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw contract_error("cannot read model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const ordered_json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw contract_error("cannot open report path '" + out_path + "'");
  out << text;
}

ordered_json lift_counterexample_json(const Counterexample& ce) {
  ordered_json j;
  j["condition"] = condition_name(ce.condition);
  j["X"] = ce.X.text();
  j["Y"] = ce.Y.text();
  if (ce.condition == LiftCondition::lax_functoriality) j["Z"] = ce.Z.text();
  if (ce.R) j["R"] = ce.R->text();
  if (ce.S) j["S"] = ce.S->text();
  if (ce.f) j["f"] = fn_text(*ce.f);
  j["left"] = ce.left.text();
  j["right"] = ce.right.text();
  if (!ce.detail.empty()) j["detail"] = ce.detail;
  return j;
}

ordered_json condition_json(const ConditionResult& c) {
  ordered_json j;
  j["verdict"] = verdict_name(c.verdict);
  if (c.witness) j["counterexample"] = lift_counterexample_json(*c.witness);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

ordered_json law_counterexample_json(const LawCounterexample& ce) {
  ordered_json j;
  j["condition"] = law_condition_name(ce.condition);
  ordered_json sets = ordered_json::array();
  for (const auto& s : ce.sets) sets.push_back(s.text());
  j["sets"] = std::move(sets);
  if (ce.f) j["f"] = fn_text(*ce.f);
  if (ce.g) j["g"] = fn_text(*ce.g);
  j["at"] = ce.at.text();
  j["left"] = ce.left.text();
  j["right"] = ce.right.text();
  if (!ce.detail.empty()) j["detail"] = ce.detail;
  return j;
}

ordered_json law_condition_json(const LawConditionResult& c) {
  ordered_json j;
  j["verdict"] = verdict_name(c.verdict);
  if (c.witness) j["counterexample"] = law_counterexample_json(*c.witness);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

int run_check_lifting(const std::string& functor_name, const std::string& lifting_expr,
                      int bound_arg, const std::string& out) {
  const FunctorPtr F = functor_by_name(functor_name);
  const LiftingPtr L = parse_lifting(lifting_expr, F);
  const std::size_t bound = resolve_bound(bound_arg, functor_name);
  const AxiomReport r = check_lifting_axioms(L, bound);

  ordered_json rep;
  rep["version"] = 1;
  rep["command"] = "check-lifting";
  rep["config"] = {{"functor", functor_name}, {"lifting", L->name()}, {"bound", bound}};
  ordered_json conds;
  conds["monotonicity"] = condition_json(r.monotonicity);
  conds["lax-functoriality"] = condition_json(r.lax_functoriality);
  conds["graph-inequality"] = condition_json(r.graph_inequality);
  conds["converse-graph-inequality"] = condition_json(r.converse_graph_inequality);
  conds["diagonal-preservation"] = condition_json(r.diagonal_preservation);
  conds["symmetry"] = condition_json(r.symmetry);
  rep["conditions"] = std::move(conds);
  rep["instances_checked"] = r.instances_checked;
  rep["required_pass"] = r.core_pass();
  rep["all_pass"] = r.all_pass();
  emit(rep, out);
  return r.core_pass() ? kExitPass : kExitCounterexample;
}

int run_check_law(const std::string& functor_name, const std::string& lifting_expr,
                  int bound_arg, const std::string& out) {
  const FunctorPtr F = functor_by_name(functor_name);
  const LiftingPtr L = parse_lifting(lifting_expr, F);
  const std::size_t bound = resolve_bound(bound_arg, functor_name);
  const DistLawPtr law = law_from_lifting(L);
  const LawReport r = check_distlaw_axioms(law, bound);

  ordered_json rep;
  rep["version"] = 1;
  rep["command"] = "check-law";
  rep["config"] = {{"functor", functor_name},
                   {"lifting", L->name()},
                   {"law", law->name()},
                   {"bound", bound}};
  ordered_json conds;
  conds["monotonicity"] = law_condition_json(r.monotonicity);
  conds["lax-naturality"] = law_condition_json(r.lax_naturality);
  conds["lax-eilenberg-moore"] = law_condition_json(r.lax_eilenberg_moore);
  conds["lax-extensionality"] = law_condition_json(r.lax_extensionality);
  conds["symmetry"] = law_condition_json(r.symmetry);
  rep["conditions"] = std::move(conds);
  rep["instances_checked"] = r.instances_checked;
  rep["instances_skipped"] = r.instances_skipped;
  rep["required_pass"] = r.core_pass();
  rep["all_pass"] = r.all_pass();
  emit(rep, out);
  return r.core_pass() ? kExitPass : kExitCounterexample;
}

// Component and membership tables above this many rows are omitted from
// convert reports; round-trip verification is unaffected.
constexpr std::size_t kTableRowCap = 256;

int run_convert(const std::string& functor_name, const std::string& lifting_expr,
                const std::string& direction, bool roundtrip, int bound_arg,
                const std::string& out) {
  const FunctorPtr F = functor_by_name(functor_name);
  const LiftingPtr L = parse_lifting(lifting_expr, F);
  const std::size_t bound = resolve_bound(bound_arg, functor_name);
  const auto universe = axiom_universe(bound);
  const DistLawPtr law = law_from_lifting(L);

  ordered_json rep;
  rep["version"] = 1;
  rep["command"] = "convert";
  rep["config"] = {{"functor", functor_name},
                   {"lifting", L->name()},
                   {"direction", direction},
                   {"roundtrip", roundtrip},
                   {"bound", bound}};

  if (direction == "to-law") {
    rep["law"] = law->name();
    ordered_json comps = ordered_json::array();
    for (const auto& X : universe) {
      ordered_json c;
      c["at"] = X.text();
      if (F->carrier(powerset(X)).size() > kTableRowCap) {
        c["omitted"] = "component table exceeds " + std::to_string(kTableRowCap) + " rows";
      } else {
        const Function comp = law->component_of(X);
        ordered_json entries = ordered_json::array();
        for (std::size_t i = 0; i < comp.source().size(); ++i)
          entries.push_back(ordered_json::array(
              {comp.source().at(i).text(), comp.target().at(comp.apply_index(i)).text()}));
        c["entries"] = std::move(entries);
      }
      comps.push_back(std::move(c));
    }
    rep["components"] = std::move(comps);
  } else {
    const LiftingPtr back = lifting_from_law(law);
    rep["lifting"] = back->name();
    ordered_json tables = ordered_json::array();
    for (const auto& X : universe) {
      ordered_json t;
      t["at"] = X.text();
      if (F->carrier(powerset(X)).size() > kTableRowCap) {
        t["omitted"] = "lift table exceeds " + std::to_string(kTableRowCap) + " rows";
      } else {
        t["membership_lift"] = back->lift_of(membership(X)).text();
      }
      tables.push_back(std::move(t));
    }
    rep["membership_tables"] = std::move(tables);
  }

  int code = kExitPass;
  if (roundtrip) {
    const LiftingPtr back = lifting_from_law(law);
    const DistLawPtr law2 = law_from_lifting(back);
    bool lift_ok = true;
    bool law_ok = true;
    std::uint64_t instances = 0;
    for (const auto& X : universe) {
      ++instances;
      if (law->component_of(X) != law2->component_of(X)) law_ok = false;
      for (const auto& Y : universe) {
        for (const auto& R : all_relations(X, Y)) {
          ++instances;
          if (L->lift_of(R) != back->lift_of(R)) lift_ok = false;
        }
      }
    }
    rep["roundtrip"] = {{"lifting-identity", lift_ok ? "pass" : "counterexample"},
                        {"law-identity", law_ok ? "pass" : "counterexample"},
                        {"instances_checked", instances}};
    if (!lift_ok || !law_ok) code = kExitCounterexample;
  }
  emit(rep, out);
  return code;
}

int run_bisim(const std::string& functor_name, const std::string& lifting_expr,
              const std::vector<std::string>& model_paths, const std::string& out) {
  if (model_paths.empty() || model_paths.size() > 2)
    throw contract_error("bisim expects one or two --model files");
  std::vector<ModelDocument> docs;
  for (const auto& p : model_paths) docs.push_back(ModelDocument::from_json(read_file(p)));

  const std::string fname = docs[0].coalgebra().functor()->name();
  for (const auto& d : docs)
    if (d.coalgebra().functor()->name() != fname)
      throw contract_error("model documents use different functors");
  if (!functor_name.empty() && functor_name != fname)
    throw contract_error("--functor " + functor_name + " disagrees with the model functor " + fname);

  const LiftingPtr L = parse_lifting(lifting_expr, functor_by_name(fname));
  const ModelDocument& left = docs.front();
  const ModelDocument& right = docs.back();
  const Relation R = greatest_bisim(L, left.coalgebra(), right.coalgebra());

  ordered_json rep;
  rep["version"] = 1;
  rep["command"] = "bisim";
  rep["config"] = {{"functor", fname}, {"lifting", L->name()}, {"models", model_paths}};
  rep["left_states"] = left.labels();
  rep["right_states"] = right.labels();
  ordered_json pairs = ordered_json::array();
  for (const auto& [x, y] : R.pairs())
    pairs.push_back(ordered_json::array({left.label_of(x), right.label_of(y)}));
  rep["pairs"] = std::move(pairs);
  rep["pair_count"] = R.pair_count();
  rep["is_bisimulation"] = is_bisimulation(L, left.coalgebra(), right.coalgebra(), R);
  emit(rep, out);
  return kExitPass;
}

int run_oracle_compare(const std::string& functor_name, const std::string& lifting_expr,
                       std::uint64_t seed, const std::vector<std::string>& model_paths,
                       const std::string& out) {
  if (!functor_name.empty() && functor_name != "P")
    throw contract_error("oracle-compare works on powerset models only");
  const FunctorPtr P = powerset_functor();
  const LiftingPtr L = parse_lifting(lifting_expr, P);

  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  ordered_json first_mismatch;
  const auto compare = [&](const Coalgebra& c, const Coalgebra& d, ordered_json echo) {
    ++checked;
    const Relation computed = greatest_bisim(L, c, d);
    const Relation oracle = kripke_bisim_oracle(c, d);
    if (computed != oracle) {
      ++mismatches;
      if (first_mismatch.is_null())
        first_mismatch = {{"instance", std::move(echo)},
                          {"computed", computed.text()},
                          {"oracle", oracle.text()}};
    }
  };

  ordered_json rep;
  rep["version"] = 1;
  rep["command"] = "oracle-compare";
  if (model_paths.empty()) {
    constexpr std::size_t kInstances = 50;
    constexpr std::size_t kMaxStates = 4;
    rep["config"] = {{"lifting", L->name()},
                     {"seed", seed},
                     {"instances", kInstances},
                     {"max_states", kMaxStates}};
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < kInstances; ++k) {
      const std::size_t n = 1 + k % kMaxStates;
      const FiniteSet states = FiniteSet::atoms(n);
      const Coalgebra c = random_coalgebra(P, states, rng);
      const Coalgebra d = random_coalgebra(P, states, rng);
      compare(c, d, {{"index", k}, {"states", n}});
    }
  } else {
    std::vector<ModelDocument> docs;
    for (const auto& p : model_paths) {
      docs.push_back(ModelDocument::from_json(read_file(p)));
      if (docs.back().coalgebra().functor()->name() != "P")
        throw contract_error("model '" + p + "' is not a powerset coalgebra");
    }
    rep["config"] = {{"lifting", L->name()}, {"models", model_paths}};
    for (std::size_t i = 0; i < docs.size(); ++i)
      for (std::size_t j = i; j < docs.size(); ++j)
        compare(docs[i].coalgebra(), docs[j].coalgebra(),
                {{"left", model_paths[i]}, {"right", model_paths[j]}});
  }
  rep["instances_checked"] = checked;
  rep["mismatches"] = mismatches;
  if (!first_mismatch.is_null()) rep["first_mismatch"] = std::move(first_mismatch);
  emit(rep, out);
  return mismatches == 0 ? kExitPass : kExitCounterexample;
}

int run_verify_theorems(const std::string& suite, int bound_arg, const std::string& out) {
  const std::size_t bound = bound_arg < 0 ? 0 : static_cast<std::size_t>(bound_arg);
  std::vector<SuiteReport> reports;
  if (suite == "all") {
    reports = run_all_suites(bound);
  } else {
    reports.push_back(run_suite(suite, bound));
  }

  ordered_json rep;
  rep["version"] = 1;
  rep["command"] = "verify-theorems";
  rep["config"] = {{"suite", suite}, {"bound", bound}};
  bool all = true;
  ordered_json suites = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json s;
    s["suite"] = r.suite;
    s["bound"] = r.bound;
    s["all_pass"] = r.all_pass();
    ordered_json props = ordered_json::array();
    for (const auto& p : r.properties) {
      ordered_json pj;
      pj["name"] = p.name;
      pj["verdict"] = verdict_name(p.verdict);
      pj["instances_checked"] = p.instances_checked;
      pj["instances_skipped"] = p.instances_skipped;
      if (!p.detail.empty()) pj["detail"] = p.detail;
      props.push_back(std::move(pj));
    }
    s["properties"] = std::move(props);
    suites.push_back(std::move(s));
    all = all && r.all_pass();
  }
  rep["suites"] = std::move(suites);
  rep["all_pass"] = all;
  emit(rep, out);
  return all ? kExitPass : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relift: finite checker for relational liftings, their distributive laws, "
               "and coalgebraic bisimilarity"};
  app.require_subcommand(1);

  std::string functor = "P";
  std::string functor_claim;  // bisim/oracle-compare: optional cross-check, no default
  std::string lifting = "barr";
  std::string out;
  std::string suite = "all";
  std::string direction = "to-law";
  int bound = -1;
  std::uint64_t seed = 1729;
  std::vector<std::string> models;
  bool roundtrip = false;

  const auto add_functor = [&](CLI::App* sub) {
    sub->add_option("--functor", functor, "Functor: P, N, M, Id")->capture_default_str();
  };
  const auto add_functor_claim = [&](CLI::App* sub) {
    sub->add_option("--functor", functor_claim, "Functor: P, N, M, Id");
  };
  const auto add_lifting = [&](CLI::App* sub) {
    sub->add_option("--lifting", lifting, "Lifting expression")->capture_default_str();
  };
  const auto add_bound = [&](CLI::App* sub) {
    sub->add_option("--bound", bound, "Universe bound (default: 3 for P, 2 otherwise)")
        ->check(CLI::Range(0, 3));
  };
  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out, "Report path (default: stdout)");
  };

  CLI::App* check_lifting = app.add_subcommand(
      "check-lifting", "Audit the lifting conditions over the bounded universe");
  add_functor(check_lifting);
  add_lifting(check_lifting);
  add_bound(check_lifting);
  add_out(check_lifting);

  CLI::App* check_law = app.add_subcommand(
      "check-law", "Audit the distributive-law conditions of a lifting's transpose");
  add_functor(check_law);
  add_lifting(check_law);
  add_bound(check_law);
  add_out(check_law);

  CLI::App* convert = app.add_subcommand(
      "convert", "Convert between a lifting and its distributive law");
  add_functor(convert);
  add_lifting(convert);
  add_bound(convert);
  add_out(convert);
  convert->add_option("--direction", direction, "to-law or to-lifting")
      ->check(CLI::IsMember({"to-law", "to-lifting"}))
      ->capture_default_str();
  convert->add_flag("--roundtrip", roundtrip, "Verify both conversion round trips");

  CLI::App* bisim = app.add_subcommand(
      "bisim", "Greatest bisimulation between one or two coalgebra models");
  add_functor_claim(bisim);
  add_lifting(bisim);
  add_out(bisim);
  bisim->add_option("--model", models, "Model JSON file (repeat for a second model)")
      ->expected(-1);

  CLI::App* verify = app.add_subcommand(
      "verify-theorems", "Run the theorem property suites");
  verify->add_option("--suite", suite, "Suite name or 'all'")
      ->check(CLI::IsMember({"lattice", "cospan", "barr-minimal", "mtilde-minimal",
                             "lj-classification", "distlaw-bijection", "transport", "all"}))
      ->capture_default_str();
  verify->add_option("--bound", bound, "Universe bound (default: per-suite native bound)")
      ->check(CLI::Range(0, 3));
  add_out(verify);

  CLI::App* oracle = app.add_subcommand(
      "oracle-compare", "Compare lifted bisimilarity against the partition oracle");
  add_functor_claim(oracle);
  add_lifting(oracle);
  add_out(oracle);
  oracle->add_option("--seed", seed, "Random-model seed")->capture_default_str();
  oracle->add_option("--model", models, "Compare on given models instead of random ones")
      ->expected(-1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  int code = kExitUsage;
  std::string command;
  try {
    if (app.got_subcommand(check_lifting)) {
      command = "check-lifting";
      code = run_check_lifting(functor, lifting, bound, out);
    } else if (app.got_subcommand(check_law)) {
      command = "check-law";
      code = run_check_law(functor, lifting, bound, out);
    } else if (app.got_subcommand(convert)) {
      command = "convert";
      code = run_convert(functor, lifting, direction, roundtrip, bound, out);
    } else if (app.got_subcommand(bisim)) {
      command = "bisim";
      code = run_bisim(functor_claim, lifting, models, out);
    } else if (app.got_subcommand(verify)) {
      command = "verify-theorems";
      code = run_verify_theorems(suite, bound, out);
    } else if (app.got_subcommand(oracle)) {
      command = "oracle-compare";
      code = run_oracle_compare(functor_claim, lifting, seed, models, out);
    }
  } catch (const contract_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  std::fprintf(stderr, "# relift %s: %.2fs\n", command.c_str(), secs);
  return code;
}
