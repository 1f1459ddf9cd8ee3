// Command line front end. One command per process; every command builds a
// single JSON report and renders it either as JSON (--json) or as indented
// key/value text, so both renderings agree on all values by construction.
//
// Exit codes: 0 success, 1 mathematically meaningful refutation (a Verdict
// came back refuted, a gallery expectation failed, a queried property is
// false), 2 input or usage errors.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dirlim/congruence.hpp"
#include "dirlim/core.hpp"
#include "dirlim/dirsys.hpp"
#include "dirlim/division.hpp"
#include "dirlim/eset.hpp"
#include "dirlim/gallery.hpp"
#include "dirlim/json_io.hpp"
#include "dirlim/poset_analysis.hpp"

namespace {

using namespace dirlim;
using Clock = std::chrono::steady_clock;

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, ',')) out.push_back(cur);
  return out;
}

std::map<std::string, std::uint32_t> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, std::uint32_t> out;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw ParseError("--param expects key=value, got '" + kv + "'");
    try {
      out[kv.substr(0, eq)] = static_cast<std::uint32_t>(std::stoul(kv.substr(eq + 1)));
    } catch (const std::exception&) {
      throw ParseError("--param value in '" + kv + "' is not a number");
    }
  }
  return out;
}

void render_human(const json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array()))) {
        os << pad << k << ":\n";
        render_human(v, os, indent + 1);
      } else {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        os << pad << "- [" << i << "]\n";
        render_human(v, os, indent + 1);
      } else {
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
      ++i;
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

struct Output {
  bool as_json = false;
  bool timings = false;
  Clock::time_point t0 = Clock::now();

  int finish(json report, bool refuted) const {
    if (timings) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
      report["timing_ms"] = ms.count();
    }
    if (as_json)
      std::cout << report.dump(2) << "\n";
    else
      render_human(report, std::cout, 0);
    return refuted ? 1 : 0;
  }
};

std::vector<ElemId> poset_ids(const Poset& p, const std::vector<std::string>& names) {
  std::vector<ElemId> out;
  for (const auto& n : names) {
    auto id = p.index_of(n);
    if (!id) throw ParseError("unknown poset element '" + n + "'");
    out.push_back(*id);
  }
  return out;
}

std::vector<ElemId> monoid_ids(const FiniteMonoid& m, const std::vector<std::string>& names) {
  std::vector<ElemId> out;
  for (const auto& n : names) {
    ElemId found = kNone;
    for (ElemId a = 0; a < m.n(); ++a)
      if (m.name(a) == n) { found = a; break; }
    if (found == kNone) throw ParseError("unknown monoid element '" + n + "'");
    out.push_back(found);
  }
  return out;
}

json names_of(const Poset& p, const std::vector<ElemId>& xs) {
  json out = json::array();
  for (ElemId x : xs) out.push_back(p.name(x));
  return out;
}

// A = explicit list, or the minimal elements for "auto".
std::vector<ElemId> resolve_a(const Poset& p, const std::string& a_spec) {
  if (a_spec == "auto") return p.minimal_elements();
  return poset_ids(p, split_csv(a_spec));
}

LazySystem make_lazy(const std::string& name, std::map<std::string, std::uint32_t> params,
                     std::uint32_t* default_horizon) {
  for (const auto& [k, v] : params) {
    (void)v;
    if (k != "h") throw ValidationError("unknown parameter '" + k + "' for system '" + name + "'");
  }
  if (name == "dyadic") {
    std::uint32_t h = params.count("h") ? params["h"] : 6;
    *default_horizon = h;
    return dyadic_group_system(h);
  }
  if (name == "pinje-plusminus" || name == "pinje-empty") {
    std::uint32_t h = params.count("h") ? params["h"] : 4;
    *default_horizon = h + 1;
    return pinje_system(name == "pinje-plusminus", h);
  }
  throw ValidationError("unknown lazy system '" + name + "'; available: dyadic, pinje-plusminus, pinje-empty");
}

// --- command bodies -------------------------------------------------------

int cmd_category_validate(const Output& out, const std::string& file) {
  FiniteCategory cat = category_from_json(load_file(file));
  json rep{{"command", "category validate"},
           {"valid", true},
           {"objects", cat.n_objects()},
           {"morphisms", cat.n_morphisms()}};
  return out.finish(rep, false);
}

int cmd_category_emultdiv(const Output& out, const std::string& file, std::size_t budget,
                          bool min) {
  FiniteCategory cat = category_from_json(load_file(file));
  CategoryDivisionWitness w = emultdiv_check(cat, min ? budget : 0);
  json seed = json::array();
  for (MorId a : w.seed) seed.push_back(cat.morphism_name(a));
  json rep{{"command", "category emultdiv"},
           {"seed", seed},
           {"seed_size", w.seed.size()},
           {"exact", w.exact},
           {"budget_exhausted", w.budget_exhausted}};
  return out.finish(rep, false);
}

int cmd_poset_analyze(const Output& out, const std::string& file, const std::string& a_spec,
                      std::size_t budget, bool dot) {
  Poset p = poset_from_json(load_file(file));
  std::vector<ElemId> a = resolve_a(p, a_spec);
  std::vector<ElemId> crit = critical_elements(p, a);
  MinimalGatheringSet g = minimal_gathering_set(p, a, budget);
  if (dot) {
    std::cout << poset_dot(p, a, crit, g.set);
    return 0;
  }
  AboveFinReport above = abovefin_check(p);
  json witness = json::object();
  for (ElemId x = 0; x < p.n(); ++x) witness[p.name(x)] = p.name(above.witness_below[x]);
  json rep{{"command", "poset analyze"},
           {"elements", p.n()},
           {"directed", p.is_directed()},
           {"minimal", names_of(p, p.minimal_elements())},
           {"maximal", names_of(p, p.maximal_elements())},
           {"a", names_of(p, a)},
           {"every_element_above_a_witness", witness},
           {"critical", names_of(p, crit)},
           {"gathering_set", names_of(p, g.set)},
           {"gathering_exact", g.exact}};
  try {
    rep["directed_downset_families_intersect"] = capne_oracle(p);
  } catch (const GuardError&) {
    rep["directed_downset_families_intersect"] = "skipped (size guard)";
  }
  return out.finish(rep, false);
}

int cmd_poset_gather(const Output& out, const std::string& file, const std::string& a_spec,
                     const std::string& b_csv, const std::string& under) {
  Poset p = poset_from_json(load_file(file));
  GatherQuery q;
  q.a = resolve_a(p, a_spec);
  q.b = poset_ids(p, split_csv(b_csv));
  auto u = p.index_of(under);
  if (!u) throw ParseError("unknown poset element '" + under + "'");
  q.under = *u;
  GatherResult r = gathers(p, q);
  json rep = gather_to_json(p, r);
  rep["command"] = "poset gather";
  rep["under"] = under;
  return out.finish(rep, !r.gathers);
}

int cmd_poset_critical(const Output& out, const std::string& file, const std::string& a_spec) {
  Poset p = poset_from_json(load_file(file));
  std::vector<ElemId> a = resolve_a(p, a_spec);
  json rep{{"command", "poset critical"}, {"critical", names_of(p, critical_elements(p, a))}};
  return out.finish(rep, false);
}

int cmd_poset_dot(const std::string& file, const std::string& a_spec,
                  const std::string& gathering_csv, std::size_t budget) {
  Poset p = poset_from_json(load_file(file));
  std::vector<ElemId> a = resolve_a(p, a_spec);
  std::vector<ElemId> crit = critical_elements(p, a);
  std::vector<ElemId> g = gathering_csv.empty()
                              ? minimal_gathering_set(p, a, budget).set
                              : poset_ids(p, split_csv(gathering_csv));
  std::cout << poset_dot(p, a, crit, g);
  return 0;
}

int cmd_monoid_battery(const Output& out, const std::string& file, std::size_t budget) {
  FiniteMonoid m = monoid_from_json(load_file(file));
  json rep = battery_to_json(m, condition_battery(m, budget));
  rep["command"] = "monoid battery";
  return out.finish(rep, false);
}

int cmd_monoid_multdiv(const Output& out, const std::string& file, std::size_t budget,
                       bool min) {
  FiniteMonoid m = monoid_from_json(load_file(file));
  MultdivWitness w = multdiv_holds(m, min ? budget : 0);
  json seed = json::array();
  for (ElemId a : w.seed) seed.push_back(m.name(a));
  json rep{{"command", "monoid multdiv"},
           {"seed", seed},
           {"seed_size", w.seed.size()},
           {"exact", w.exact},
           {"budget_exhausted", w.budget_exhausted}};
  return out.finish(rep, false);
}

int cmd_monoid_congruences(const Output& out, const std::string& file, bool enumerate) {
  FiniteMonoid m = monoid_from_json(load_file(file));
  json rep{{"command", "monoid congruences"}, {"count", left_congruence_count(m)}};
  if (enumerate) {
    json all = json::array();
    for (const auto& cls : left_congruences_enumerate(m)) {
      json classes = json::array();
      std::uint32_t k = 0;
      for (std::uint32_t c : cls) k = std::max(k, c + 1);
      for (std::uint32_t c = 0; c < k; ++c) {
        json one = json::array();
        for (ElemId x = 0; x < m.n(); ++x)
          if (cls[x] == c) one.push_back(m.name(x));
        classes.push_back(one);
      }
      all.push_back(classes);
    }
    rep["congruences"] = all;
  }
  return out.finish(rep, false);
}

int cmd_eset_limit(const Output& out, const std::string& cat_file, const std::string& eset_file) {
  auto cat = std::make_shared<const FiniteCategory>(category_from_json(load_file(cat_file)));
  ESet x = eset_from_json(cat, load_file(eset_file));
  std::vector<LimitElement> lims = limit(x);
  json rep{{"command", "eset limit"},
           {"count", lims.size()},
           {"limit", limit_elements_to_json(x, lims)}};
  return out.finish(rep, false);
}

int cmd_eset_quotient(const Output& out, const std::string& cat_file,
                      const std::string& eset_file, const std::string& pairs_file) {
  auto cat = std::make_shared<const FiniteCategory>(category_from_json(load_file(cat_file)));
  ESet x = eset_from_json(cat, load_file(eset_file));
  RelationFamily r = relation_family_from_json(x, load_file(pairs_file));
  CongruenceFamily c = congruence_closure(x, r);
  Quotient q = quotient(x, c);
  json rep{{"command", "eset quotient"},
           {"improper", is_improper(c)},
           {"classes", congruence_to_json(x, c)["classes"]},
           {"quotient", eset_to_json(q.eset)}};
  return out.finish(rep, false);
}

int cmd_congruence_close(const Output& out, const std::string& cat_file,
                         const std::string& eset_file, const std::string& pairs_file) {
  auto cat = std::make_shared<const FiniteCategory>(category_from_json(load_file(cat_file)));
  ESet x = eset_from_json(cat, load_file(eset_file));
  RelationFamily r = relation_family_from_json(x, load_file(pairs_file));
  CongruenceFamily c = congruence_closure(x, r);
  json rep = congruence_to_json(x, c);
  rep["command"] = "congruence close";
  rep["improper"] = is_improper(c);
  rep["total_classes"] = c.total_classes();
  return out.finish(rep, false);
}

int cmd_congruence_minimal_gens(const Output& out, const std::string& cat_file,
                                const std::string& eset_file, std::size_t budget) {
  auto cat = std::make_shared<const FiniteCategory>(category_from_json(load_file(cat_file)));
  ESet x = eset_from_json(cat, load_file(eset_file));
  MinimalGenerators g = minimal_improper_generators(x, budget);
  json rep = relation_family_to_json(x, g.family);
  rep["command"] = "congruence minimal-gens";
  rep["total_pairs"] = g.total_pairs;
  rep["exact"] = g.exact;
  rep["budget_exhausted"] = g.budget_exhausted;
  return out.finish(rep, false);
}

int cmd_dirsys_iota(const Output& out, const std::string& system_file, const std::string& lazy,
                    const std::vector<std::string>& params, std::uint32_t horizon) {
  if (system_file.empty() == lazy.empty())
    throw ParseError("dirsys iota needs exactly one of --system or --lazy");
  IotaReport r;
  if (!system_file.empty()) {
    r = iota(system_from_json(load_file(system_file)));
  } else {
    std::uint32_t def = 0;
    LazySystem s = make_lazy(lazy, parse_params(params), &def);
    r = iota_at_horizon(s, horizon == kNone ? def : horizon);
  }
  json rep = iota_report_to_json(r);
  rep["command"] = "dirsys iota";
  return out.finish(rep, r.injectivity.is_refuted() || r.surjectivity.is_refuted());
}

int cmd_dirsys_stabilize(const Output& out, const std::string& lazy,
                         const std::vector<std::string>& params, const std::string& gens_csv,
                         std::uint32_t from_stage, std::uint32_t elem, std::uint32_t horizon) {
  std::uint32_t def = 0;
  LazySystem s = make_lazy(lazy, parse_params(params), &def);
  std::vector<std::uint32_t> probes;
  if (gens_csv.empty()) {
    for (std::uint32_t p = 0; p < s.n_probes(); ++p) probes.push_back(p);
  } else {
    for (const auto& n : split_csv(gens_csv)) {
      std::uint32_t found = kNone;
      for (std::uint32_t p = 0; p < s.n_probes(); ++p)
        if (s.probe_name(p) == n) { found = p; break; }
      if (found == kNone) throw ParseError("unknown probe '" + n + "'");
      probes.push_back(found);
    }
  }
  std::uint32_t h = horizon == kNone ? def : horizon;
  Stabilization st = stabilization_stage(s, probes, from_stage, elem, h);
  json rep = stabilization_to_json(st);
  rep["command"] = "dirsys stabilize";
  json names = json::array();
  for (std::uint32_t p : probes) names.push_back(s.probe_name(p));
  rep["probes"] = names;
  return out.finish(rep, st.verdict.is_refuted());
}

int cmd_gallery_list(const Output& out) {
  json rep{{"command", "gallery list"}, {"items", gallery_names()}};
  return out.finish(rep, false);
}

int cmd_gallery_run(const Output& out, const std::string& name,
                    const std::vector<std::string>& params) {
  GalleryReport rep = run_gallery_item(name, parse_params(params));
  json j = gallery_report_to_json(rep);
  j["command"] = "gallery run";
  return out.finish(j, !rep.all_passed());
}

// Synthetic single object closure benchmark: the carrier is acted on by the
// powers of one permutation whose order divides the morphism count, so the
// action table closes. Reports merges = initial classes - final classes.
int cmd_bench_closure(const Output& out, std::uint32_t elements, std::uint32_t n_pairs,
                      std::uint32_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint32_t order = 10;

  std::vector<MorphismDecl> decls;
  std::map<std::pair<MorId, MorId>, MorId> compose;
  for (std::uint32_t i = 0; i < order; ++i) decls.push_back({"s" + std::to_string(i), 0, 0});
  for (std::uint32_t i = 0; i < order; ++i)
    for (std::uint32_t j = 0; j < order; ++j) compose[{i, j}] = (i + j) % order;
  auto cat = std::make_shared<const FiniteCategory>(
      FiniteCategory::validated({"*"}, decls, compose));

  // one permutation of order dividing 10: random 10-cycles, remainder fixed
  std::vector<ElemId> sigma(elements);
  std::vector<ElemId> shuffled(elements);
  for (ElemId v = 0; v < elements; ++v) shuffled[v] = v;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  ElemId full = elements / order * order;
  for (ElemId v = 0; v < full; ++v)
    sigma[shuffled[v]] = shuffled[v / order * order + (v + 1) % order];
  for (ElemId v = full; v < elements; ++v) sigma[shuffled[v]] = shuffled[v];

  std::vector<std::vector<ElemId>> actions(order, std::vector<ElemId>(elements));
  for (ElemId v = 0; v < elements; ++v) actions[0][v] = v;
  for (std::uint32_t i = 1; i < order; ++i)
    for (ElemId v = 0; v < elements; ++v) actions[i][v] = sigma[actions[i - 1][v]];

  ESet x = ESet::validated(cat, std::vector<std::uint32_t>{elements}, actions);

  RelationFamily r = RelationFamily::empty(1);
  std::uniform_int_distribution<ElemId> pick(0, elements - 1);
  for (std::uint32_t k = 0; k < n_pairs; ++k) r.pairs[0].push_back({pick(rng), pick(rng)});

  auto t0 = Clock::now();
  CongruenceFamily c = congruence_closure(x, r);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);

  json rep{{"command", "bench closure"},
           {"elements", elements},
           {"pairs", n_pairs},
           {"seed", seed},
           {"initial_classes", elements},
           {"final_classes", c.n_classes[0]},
           {"merges", elements - c.n_classes[0]},
           {"closure_ms", ms.count()}};
  return out.finish(rep, false);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"limits, directed colimits and the comparison map for set valued functors"};
  app.require_subcommand(1);

  Output out;
  app.add_flag("--json", out.as_json, "emit the report as JSON");
  app.add_flag("--timings", out.timings, "add wall clock timing to the report");

  // category
  auto* cat_cmd = app.add_subcommand("category", "finite category operations");
  cat_cmd->require_subcommand(1);
  std::string cat_file;
  auto* cat_validate = cat_cmd->add_subcommand("validate", "parse and validate a category");
  cat_validate->add_option("file", cat_file, "category JSON file")->required();
  std::size_t cat_budget = 200000;
  bool cat_min = false;
  auto* cat_emultdiv = cat_cmd->add_subcommand(
      "emultdiv", "smallest morphism seed closing to everything under composition and right division");
  cat_emultdiv->add_option("file", cat_file, "category JSON file")->required();
  cat_emultdiv->add_option("--budget", cat_budget, "exact search budget");
  cat_emultdiv->add_flag("--min", cat_min, "search for a smallest seed");

  // poset
  auto* poset_cmd = app.add_subcommand("poset", "poset gathering analysis");
  poset_cmd->require_subcommand(1);
  std::string poset_file, a_spec = "auto", b_csv, under, gathering_csv;
  std::size_t poset_budget = 200000;
  bool analyze_dot = false;
  auto* poset_analyze = poset_cmd->add_subcommand("analyze", "full report on one poset");
  poset_analyze->add_option("file", poset_file, "poset JSON file")->required();
  poset_analyze->add_option("--A", a_spec, "reference set: 'auto' (minimal elements) or a name list");
  poset_analyze->add_option("--budget", poset_budget, "gathering search budget");
  poset_analyze->add_flag("--dot", analyze_dot, "emit DOT instead of the report");
  auto* poset_gather = poset_cmd->add_subcommand("gather", "does B gather A under E?");
  poset_gather->add_option("file", poset_file, "poset JSON file")->required();
  poset_gather->add_option("--A", a_spec, "reference set");
  poset_gather->add_option("--B", b_csv, "proposed gathering set")->required();
  poset_gather->add_option("--under", under, "the element E")->required();
  auto* poset_critical = poset_cmd->add_subcommand("critical", "elements no gathering set can omit");
  poset_critical->add_option("file", poset_file, "poset JSON file")->required();
  poset_critical->add_option("--A", a_spec, "reference set");
  auto* poset_dot_cmd = poset_cmd->add_subcommand("dot", "Graphviz rendering");
  poset_dot_cmd->add_option("file", poset_file, "poset JSON file")->required();
  poset_dot_cmd->add_option("--A", a_spec, "reference set");
  poset_dot_cmd->add_option("--gathering", gathering_csv, "gathering set to highlight");
  poset_dot_cmd->add_option("--budget", poset_budget, "gathering search budget");

  // monoid
  auto* monoid_cmd = app.add_subcommand("monoid", "finite monoid conditions");
  monoid_cmd->require_subcommand(1);
  std::string monoid_file;
  std::size_t monoid_budget = 200000;
  bool monoid_min = false, enumerate = false;
  auto* monoid_battery = monoid_cmd->add_subcommand("battery", "all finiteness condition witnesses");
  monoid_battery->add_option("file", monoid_file, "monoid JSON file")->required();
  monoid_battery->add_option("--budget", monoid_budget, "exact search budget");
  auto* monoid_multdiv = monoid_cmd->add_subcommand(
      "multdiv", "seed whose product and right division closure is the whole monoid");
  monoid_multdiv->add_option("file", monoid_file, "monoid JSON file")->required();
  monoid_multdiv->add_option("--budget", monoid_budget, "exact search budget");
  monoid_multdiv->add_flag("--min", monoid_min, "search for a smallest seed");
  auto* monoid_congruences = monoid_cmd->add_subcommand("congruences", "count left congruences");
  monoid_congruences->add_option("file", monoid_file, "monoid JSON file")->required();
  monoid_congruences->add_flag("--enumerate", enumerate, "list the congruences");

  // eset
  auto* eset_cmd = app.add_subcommand("eset", "set valued functor operations");
  eset_cmd->require_subcommand(1);
  std::string e_cat, e_eset, e_pairs;
  auto* eset_limit = eset_cmd->add_subcommand("limit", "compatible tuples over all objects");
  eset_limit->add_option("--category", e_cat, "category JSON file")->required();
  eset_limit->add_option("--eset", e_eset, "functor JSON file")->required();
  auto* eset_quotient = eset_cmd->add_subcommand("quotient", "quotient by a congruence closure");
  eset_quotient->add_option("--category", e_cat, "category JSON file")->required();
  eset_quotient->add_option("--eset", e_eset, "functor JSON file")->required();
  eset_quotient->add_option("--pairs", e_pairs, "relation family JSON file")->required();

  // congruence
  auto* cong_cmd = app.add_subcommand("congruence", "congruence closure operations");
  cong_cmd->require_subcommand(1);
  std::size_t cong_budget = 200000;
  auto* cong_close = cong_cmd->add_subcommand("close", "least congruence containing the pairs");
  cong_close->add_option("--category", e_cat, "category JSON file")->required();
  cong_close->add_option("--eset", e_eset, "functor JSON file")->required();
  cong_close->add_option("--pairs", e_pairs, "relation family JSON file")->required();
  auto* cong_min = cong_cmd->add_subcommand("minimal-gens",
                                            "smallest family generating an improper congruence");
  cong_min->add_option("--category", e_cat, "category JSON file")->required();
  cong_min->add_option("--eset", e_eset, "functor JSON file")->required();
  cong_min->add_option("--budget", cong_budget, "exact search budget");

  // dirsys
  auto* dirsys_cmd = app.add_subcommand("dirsys", "directed systems and the comparison map");
  dirsys_cmd->require_subcommand(1);
  std::string d_system, d_lazy, d_gens;
  std::vector<std::string> d_params;
  std::uint32_t d_horizon = kNone, d_from = 0, d_elem = 0;
  auto* dirsys_iota = dirsys_cmd->add_subcommand(
      "iota", "comparison from colimit of limits to limit of colimit");
  dirsys_iota->add_option("--system", d_system, "finite system JSON file");
  dirsys_iota->add_option("--lazy", d_lazy, "lazy system name (dyadic, pinje-plusminus, pinje-empty)");
  dirsys_iota->add_option("--param", d_params, "lazy system parameter key=value");
  dirsys_iota->add_option("--horizon", d_horizon, "stages to explore");
  auto* dirsys_stab = dirsys_cmd->add_subcommand("stabilize",
                                                 "least stage fixing an element under the probes");
  dirsys_stab->add_option("--lazy", d_lazy, "lazy system name")->required();
  dirsys_stab->add_option("--param", d_params, "lazy system parameter key=value");
  dirsys_stab->add_option("--gens", d_gens, "probe names (default: all)");
  dirsys_stab->add_option("--from", d_from, "starting stage");
  dirsys_stab->add_option("--elem", d_elem, "element index at the starting stage");
  dirsys_stab->add_option("--horizon", d_horizon, "stages to explore");

  // gallery
  auto* gallery_cmd = app.add_subcommand("gallery", "worked structures with frozen expectations");
  gallery_cmd->require_subcommand(1);
  std::string g_name;
  std::vector<std::string> g_params;
  gallery_cmd->add_subcommand("list", "available items");
  auto* gallery_run = gallery_cmd->add_subcommand("run", "run one item's expectations");
  gallery_run->add_option("name", g_name, "item name")->required();
  gallery_run->add_option("--param", g_params, "parameter key=value");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "performance harness");
  bench_cmd->require_subcommand(1);
  std::uint32_t b_elements = 1000000, b_pairs = 500000, b_seed = 42;
  auto* bench_closure = bench_cmd->add_subcommand("closure", "large congruence closure timing");
  bench_closure->add_option("--elements", b_elements, "carrier size");
  bench_closure->add_option("--pairs", b_pairs, "random seed pairs");
  bench_closure->add_option("--seed", b_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cat_validate->parsed()) return cmd_category_validate(out, cat_file);
    if (cat_emultdiv->parsed()) return cmd_category_emultdiv(out, cat_file, cat_budget, cat_min);
    if (poset_analyze->parsed())
      return cmd_poset_analyze(out, poset_file, a_spec, poset_budget, analyze_dot);
    if (poset_gather->parsed()) return cmd_poset_gather(out, poset_file, a_spec, b_csv, under);
    if (poset_critical->parsed()) return cmd_poset_critical(out, poset_file, a_spec);
    if (poset_dot_cmd->parsed())
      return cmd_poset_dot(poset_file, a_spec, gathering_csv, poset_budget);
    if (monoid_battery->parsed()) return cmd_monoid_battery(out, monoid_file, monoid_budget);
    if (monoid_multdiv->parsed())
      return cmd_monoid_multdiv(out, monoid_file, monoid_budget, monoid_min);
    if (monoid_congruences->parsed()) return cmd_monoid_congruences(out, monoid_file, enumerate);
    if (eset_limit->parsed()) return cmd_eset_limit(out, e_cat, e_eset);
    if (eset_quotient->parsed()) return cmd_eset_quotient(out, e_cat, e_eset, e_pairs);
    if (cong_close->parsed()) return cmd_congruence_close(out, e_cat, e_eset, e_pairs);
    if (cong_min->parsed()) return cmd_congruence_minimal_gens(out, e_cat, e_eset, cong_budget);
    if (dirsys_iota->parsed()) return cmd_dirsys_iota(out, d_system, d_lazy, d_params, d_horizon);
    if (dirsys_stab->parsed())
      return cmd_dirsys_stabilize(out, d_lazy, d_params, d_gens, d_from, d_elem, d_horizon);
    if (gallery_cmd->got_subcommand("list")) return cmd_gallery_list(out);
    if (gallery_run->parsed()) return cmd_gallery_run(out, g_name, g_params);
    if (bench_closure->parsed()) return cmd_bench_closure(out, b_elements, b_pairs, b_seed);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no command\n";
  return 2;
}
