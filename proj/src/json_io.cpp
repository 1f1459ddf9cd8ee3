#include "dirlim/json_io.hpp"

#include <algorithm>

namespace dirlim {

namespace {

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::string> string_list(const json& j, const char* key) {
  const json& f = field(j, key);
  if (!f.is_array()) throw ParseError(std::string("'") + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto& v : f) {
    if (!v.is_string()) throw ParseError(std::string("'") + key + "' must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::pair<std::string, std::string> split_pair(const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos)
    throw ParseError("key '" + key + "' must be 'first,second'");
  return {key.substr(0, comma), key.substr(comma + 1)};
}

ObjId object_id(const FiniteCategory& cat, const std::string& name) {
  auto id = cat.object_index(name);
  if (!id) throw ParseError("unknown object '" + name + "'");
  return *id;
}

MorId morphism_id(const FiniteCategory& cat, const std::string& name) {
  auto id = cat.morphism_index(name);
  if (!id) throw ParseError("unknown morphism '" + name + "'");
  return *id;
}

}  // namespace

json category_to_json(const FiniteCategory& cat) {
  json homs = json::object();
  for (ObjId e = 0; e < cat.n_objects(); ++e)
    for (ObjId f = 0; f < cat.n_objects(); ++f) {
      const auto& bucket = cat.hom(e, f);
      if (bucket.empty()) continue;
      json names = json::array();
      for (MorId a : bucket) names.push_back(cat.morphism_name(a));
      homs[cat.object_name(e) + "," + cat.object_name(f)] = names;
    }
  json compose = json::object();
  for (MorId a = 0; a < cat.n_morphisms(); ++a)
    for (MorId b = 0; b < cat.n_morphisms(); ++b)
      if (cat.composable(a, b))
        compose[cat.morphism_name(a) + "," + cat.morphism_name(b)] =
            cat.morphism_name(cat.compose(a, b));
  json objects = json::array();
  for (ObjId e = 0; e < cat.n_objects(); ++e) objects.push_back(cat.object_name(e));
  return json{{"objects", objects}, {"homs", homs}, {"compose", compose}};
}

FiniteCategory category_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("category must be an object");
  std::vector<std::string> objects = string_list(j, "objects");

  std::map<std::string, ObjId> obj_id;
  for (ObjId e = 0; e < objects.size(); ++e) {
    if (obj_id.count(objects[e])) throw ParseError("duplicate object '" + objects[e] + "'");
    obj_id[objects[e]] = e;
  }

  const json& homs = field(j, "homs");
  if (!homs.is_object()) throw ParseError("'homs' must be an object");
  std::vector<MorphismDecl> morphisms;
  std::map<std::string, MorId> mor_id;
  for (const auto& [key, names] : homs.items()) {
    auto [dn, cn] = split_pair(key);
    if (!obj_id.count(dn) || !obj_id.count(cn))
      throw ParseError("hom key '" + key + "' names unknown objects");
    if (!names.is_array()) throw ParseError("hom '" + key + "' must be an array");
    for (const auto& nm : names) {
      if (!nm.is_string()) throw ParseError("hom '" + key + "' must hold strings");
      std::string name = nm.get<std::string>();
      if (mor_id.count(name)) throw ParseError("duplicate morphism '" + name + "'");
      mor_id[name] = static_cast<MorId>(morphisms.size());
      morphisms.push_back({name, obj_id[dn], obj_id[cn]});
    }
  }

  const json& comp = field(j, "compose");
  if (!comp.is_object()) throw ParseError("'compose' must be an object");
  std::map<std::pair<MorId, MorId>, MorId> compose;
  for (const auto& [key, value] : comp.items()) {
    auto [an, bn] = split_pair(key);
    if (!mor_id.count(an) || !mor_id.count(bn) || !value.is_string() ||
        !mor_id.count(value.get<std::string>()))
      throw ParseError("compose entry '" + key + "' names unknown morphisms");
    compose[{mor_id[an], mor_id[bn]}] = mor_id[value.get<std::string>()];
  }
  return FiniteCategory::validated(std::move(objects), std::move(morphisms), compose);
}

json poset_to_json(const Poset& p) {
  json elements = json::array();
  for (ElemId x = 0; x < p.n(); ++x) elements.push_back(p.name(x));
  json leq = json::array();
  for (ElemId x = 0; x < p.n(); ++x)
    for (ElemId y = 0; y < p.n(); ++y)
      if (p.leq(x, y)) leq.push_back(json::array({p.name(x), p.name(y)}));
  return json{{"elements", elements}, {"leq", leq}};
}

Poset poset_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("poset must be an object");
  std::vector<std::string> elements = string_list(j, "elements");
  std::map<std::string, ElemId> ids;
  for (ElemId x = 0; x < elements.size(); ++x) {
    if (ids.count(elements[x])) throw ParseError("duplicate element '" + elements[x] + "'");
    ids[elements[x]] = x;
  }
  std::vector<std::vector<bool>> leq(elements.size(),
                                     std::vector<bool>(elements.size(), false));
  for (ElemId x = 0; x < elements.size(); ++x) leq[x][x] = true;
  const json& rel = field(j, "leq");
  if (!rel.is_array()) throw ParseError("'leq' must be an array of pairs");
  for (const auto& pr : rel) {
    if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string())
      throw ParseError("'leq' entries must be [lo, hi] name pairs");
    auto lo = ids.find(pr[0].get<std::string>()), hi = ids.find(pr[1].get<std::string>());
    if (lo == ids.end() || hi == ids.end())
      throw ParseError("'leq' names unknown elements");
    leq[lo->second][hi->second] = true;
  }
  return Poset::validated(std::move(elements), std::move(leq));
}

json monoid_to_json(const FiniteMonoid& m) {
  json elements = json::array();
  for (ElemId a = 0; a < m.n(); ++a) elements.push_back(m.name(a));
  json table = json::array();
  for (ElemId a = 0; a < m.n(); ++a) {
    json row = json::array();
    for (ElemId b = 0; b < m.n(); ++b) row.push_back(m.name(m.mult(a, b)));
    table.push_back(row);
  }
  return json{{"elements", elements}, {"table", table}, {"one", m.name(m.one())}};
}

FiniteMonoid monoid_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("monoid must be an object");
  std::vector<std::string> elements = string_list(j, "elements");
  std::map<std::string, ElemId> ids;
  for (ElemId x = 0; x < elements.size(); ++x) {
    if (ids.count(elements[x])) throw ParseError("duplicate element '" + elements[x] + "'");
    ids[elements[x]] = x;
  }
  const json& table = field(j, "table");
  if (!table.is_array() || table.size() != elements.size())
    throw ParseError("'table' must have one row per element");
  std::vector<std::vector<ElemId>> rows;
  for (const auto& row : table) {
    if (!row.is_array() || row.size() != elements.size())
      throw ParseError("'table' rows must have one entry per element");
    std::vector<ElemId> r;
    for (const auto& cell : row) {
      if (!cell.is_string() || !ids.count(cell.get<std::string>()))
        throw ParseError("'table' entries must name elements");
      r.push_back(ids[cell.get<std::string>()]);
    }
    rows.push_back(std::move(r));
  }
  const json& one = field(j, "one");
  if (!one.is_string() || !ids.count(one.get<std::string>()))
    throw ParseError("'one' must name an element");
  return FiniteMonoid::validated(std::move(elements), std::move(rows),
                                 ids[one.get<std::string>()]);
}

json eset_to_json(const ESet& x) {
  const FiniteCategory& cat = x.category();
  json carriers = json::object();
  for (ObjId e = 0; e < cat.n_objects(); ++e) {
    json names = json::array();
    for (ElemId v = 0; v < x.carrier_size(e); ++v) names.push_back(x.element_name(e, v));
    carriers[cat.object_name(e)] = names;
  }
  json actions = json::object();
  for (MorId a = 0; a < cat.n_morphisms(); ++a) {
    json img = json::array();
    for (ElemId v = 0; v < x.carrier_size(cat.dom(a)); ++v)
      img.push_back(x.element_name(cat.cod(a), x.apply(a, v)));
    actions[cat.morphism_name(a)] = img;
  }
  return json{{"carriers", carriers}, {"actions", actions}};
}

ESet eset_from_json(std::shared_ptr<const FiniteCategory> cat, const json& j) {
  if (!j.is_object()) throw ParseError("functor must be an object");
  const json& carriers = field(j, "carriers");
  if (!carriers.is_object()) throw ParseError("'carriers' must be an object");

  std::vector<std::vector<std::string>> names(cat->n_objects());
  std::vector<std::map<std::string, ElemId>> ids(cat->n_objects());
  for (const auto& [obj, list] : carriers.items()) {
    ObjId e = object_id(*cat, obj);
    if (!list.is_array()) throw ParseError("carrier of '" + obj + "' must be an array");
    for (const auto& nm : list) {
      if (!nm.is_string()) throw ParseError("carrier of '" + obj + "' must hold strings");
      std::string name = nm.get<std::string>();
      if (ids[e].count(name))
        throw ParseError("duplicate element '" + name + "' at object '" + obj + "'");
      ids[e][name] = static_cast<ElemId>(names[e].size());
      names[e].push_back(name);
    }
  }
  for (ObjId e = 0; e < cat->n_objects(); ++e)
    if (!carriers.contains(cat->object_name(e)))
      throw ParseError("missing carrier for object '" + cat->object_name(e) + "'");

  const json& actions = field(j, "actions");
  if (!actions.is_object()) throw ParseError("'actions' must be an object");
  std::vector<std::vector<ElemId>> acts(cat->n_morphisms());
  for (MorId a = 0; a < cat->n_morphisms(); ++a) {
    const std::string& an = cat->morphism_name(a);
    if (!actions.contains(an)) throw ParseError("missing action for morphism '" + an + "'");
    const json& img = actions[an];
    if (!img.is_array() || img.size() != names[cat->dom(a)].size())
      throw ParseError("action of '" + an + "' must list one image per domain element");
    for (const auto& cell : img) {
      if (!cell.is_string() || !ids[cat->cod(a)].count(cell.get<std::string>()))
        throw ParseError("action of '" + an + "' must name codomain elements");
      acts[a].push_back(ids[cat->cod(a)][cell.get<std::string>()]);
    }
  }
  return ESet::validated(std::move(cat), std::move(names), std::move(acts));
}

json relation_family_to_json(const ESet& x, const RelationFamily& r) {
  const FiniteCategory& cat = x.category();
  json pairs = json::object();
  for (ObjId e = 0; e < cat.n_objects(); ++e) {
    if (r.pairs[e].empty()) continue;
    json list = json::array();
    for (auto [s, t] : r.pairs[e])
      list.push_back(json::array({x.element_name(e, s), x.element_name(e, t)}));
    pairs[cat.object_name(e)] = list;
  }
  return json{{"pairs", pairs}};
}

RelationFamily relation_family_from_json(const ESet& x, const json& j) {
  if (!j.is_object()) throw ParseError("relation family must be an object");
  const FiniteCategory& cat = x.category();
  RelationFamily r = RelationFamily::empty(cat.n_objects());
  const json& pairs = field(j, "pairs");
  if (!pairs.is_object()) throw ParseError("'pairs' must be an object");
  for (const auto& [obj, list] : pairs.items()) {
    ObjId e = object_id(cat, obj);
    if (!list.is_array()) throw ParseError("pairs at '" + obj + "' must be an array");
    for (const auto& pr : list) {
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string())
        throw ParseError("pairs at '" + obj + "' must be [s, t] name pairs");
      auto s = x.element_index(e, pr[0].get<std::string>());
      auto t = x.element_index(e, pr[1].get<std::string>());
      if (!s || !t) throw ParseError("pairs at '" + obj + "' name unknown elements");
      r.pairs[e].push_back({*s, *t});
    }
  }
  return r;
}

json congruence_to_json(const ESet& x, const CongruenceFamily& c) {
  const FiniteCategory& cat = x.category();
  json classes = json::object();
  for (ObjId e = 0; e < cat.n_objects(); ++e) {
    std::vector<json> lists(c.n_classes[e], json::array());
    for (ElemId v = 0; v < x.carrier_size(e); ++v)
      lists[c.class_of[e][v]].push_back(x.element_name(e, v));
    classes[cat.object_name(e)] = lists;
  }
  return json{{"classes", classes}};
}

json system_to_json(const FiniteDirectedSystem& s) {
  json members = json::object();
  for (ElemId i = 0; i < s.index().n(); ++i)
    members[s.index().name(i)] = eset_to_json(s.member(i));
  json connects = json::object();
  for (ElemId i = 0; i < s.index().n(); ++i)
    for (ElemId j = 0; j < s.index().n(); ++j) {
      if (i == j || !s.index().leq(i, j)) continue;
      json comp = json::object();
      const FiniteCategory& cat = s.category();
      for (ObjId e = 0; e < cat.n_objects(); ++e) {
        json img = json::array();
        for (ElemId x = 0; x < s.member(i).carrier_size(e); ++x)
          img.push_back(
              s.member(j).element_name(e, s.connect(i, j).component[e][x]));
        comp[cat.object_name(e)] = img;
      }
      connects[s.index().name(i) + "," + s.index().name(j)] = comp;
    }
  return json{{"category", category_to_json(s.category())},
              {"index", poset_to_json(s.index())},
              {"members", members},
              {"connects", connects}};
}

FiniteDirectedSystem system_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("system must be an object");
  auto cat = std::make_shared<const FiniteCategory>(category_from_json(field(j, "category")));
  Poset index = poset_from_json(field(j, "index"));

  const json& members_j = field(j, "members");
  if (!members_j.is_object()) throw ParseError("'members' must be an object");
  std::vector<ESet> members;
  for (ElemId i = 0; i < index.n(); ++i) {
    if (!members_j.contains(index.name(i)))
      throw ParseError("missing member functor for index '" + index.name(i) + "'");
    members.push_back(eset_from_json(cat, members_j[index.name(i)]));
  }

  const json& connects_j = field(j, "connects");
  if (!connects_j.is_object()) throw ParseError("'connects' must be an object");
  std::map<std::pair<ElemId, ElemId>, std::vector<std::vector<ElemId>>> connects;
  for (const auto& [key, comp] : connects_j.items()) {
    auto [in, jn] = split_pair(key);
    auto i = index.index_of(in), jj = index.index_of(jn);
    if (!i || !jj) throw ParseError("connect key '" + key + "' names unknown indices");
    if (!comp.is_object()) throw ParseError("connect '" + key + "' must be an object");
    std::vector<std::vector<ElemId>> component(cat->n_objects());
    for (ObjId e = 0; e < cat->n_objects(); ++e) {
      const std::string& on = cat->object_name(e);
      if (!comp.contains(on))
        throw ParseError("connect '" + key + "' missing component at '" + on + "'");
      const json& img = comp[on];
      if (!img.is_array() || img.size() != members[*i].carrier_size(e))
        throw ParseError("connect '" + key + "' component at '" + on + "' has wrong length");
      for (const auto& cell : img) {
        if (!cell.is_string())
          throw ParseError("connect '" + key + "' must name target elements");
        auto v = members[*jj].element_index(e, cell.get<std::string>());
        if (!v) throw ParseError("connect '" + key + "' names unknown target elements");
        component[e].push_back(*v);
      }
    }
    connects[{*i, *jj}] = std::move(component);
  }
  return FiniteDirectedSystem::validated(std::move(index), std::move(members), connects);
}

json limit_elements_to_json(const ESet& x, const std::vector<LimitElement>& lims) {
  const FiniteCategory& cat = x.category();
  json out = json::array();
  for (const auto& t : lims) {
    json tuple = json::object();
    for (ObjId e = 0; e < cat.n_objects(); ++e)
      tuple[cat.object_name(e)] = x.element_name(e, t.coord[e]);
    out.push_back(tuple);
  }
  return out;
}

json verdict_to_json(const Verdict& v) {
  json out;
  switch (v.outcome) {
    case Verdict::Outcome::Proven:
      out["outcome"] = "proven";
      out["stage"] = v.stage;
      break;
    case Verdict::Outcome::RefutedWithinHorizon:
      out["outcome"] = "refuted-within-horizon";
      out["horizon"] = v.horizon;
      out["witness"] = v.witness;
      break;
    case Verdict::Outcome::Unknown:
      out["outcome"] = "unknown";
      out["horizon"] = v.horizon;
      break;
  }
  return out;
}

json iota_report_to_json(const IotaReport& rep) {
  json out;
  out["exact"] = rep.exact;
  if (rep.horizon != kNone) out["horizon"] = rep.horizon;
  out["domain_size"] = rep.domain_size;
  out["codomain_size"] = rep.codomain_size;
  out["domain"] = rep.domain_names;
  out["codomain"] = rep.codomain_names;
  out["image"] = rep.image;
  out["injectivity"] = verdict_to_json(rep.injectivity);
  out["surjectivity"] = verdict_to_json(rep.surjectivity);
  return out;
}

namespace {

json name_list(const FiniteMonoid& m, const std::vector<ElemId>& xs) {
  json out = json::array();
  for (ElemId x : xs) out.push_back(m.name(x));
  return out;
}

}  // namespace

json battery_to_json(const FiniteMonoid& m, const MonoidBattery& b) {
  json out;
  out["generating_set"] = name_list(m, b.generating_set);
  out["generating_exact"] = b.generating_exact;
  out["right_zeros"] = name_list(m, b.right_zeros);
  out["smallest_left_ideal"] = name_list(m, b.smallest_left_ideal);
  out["ideal_generator"] = m.name(b.ideal_generator);
  out["m0"] = name_list(m, b.m0);
  out["m0_generators"] = name_list(m, b.m0_generators);
  out["m0_interacting"] = name_list(m, b.m0_interacting);
  out["m0_exact"] = b.m0_exact;
  out["division_seed"] = name_list(m, b.multdiv.seed);
  out["division_exact"] = b.multdiv.exact;
  out["division_budget_exhausted"] = b.multdiv.budget_exhausted;
  return out;
}

json gather_to_json(const Poset& p, const GatherResult& g) {
  json out;
  out["gathers"] = g.gathers;
  out["vacuous"] = g.vacuous;
  out["n_classes"] = g.n_classes;
  json part = json::array();
  for (std::uint32_t c = 0; c < g.n_classes; ++c) {
    json cls = json::array();
    for (std::size_t i = 0; i < g.a_down.size(); ++i)
      if (g.class_of[i] == c) cls.push_back(p.name(g.a_down[i]));
    part.push_back(cls);
  }
  out["partition"] = part;
  return out;
}

json tgath_to_json(const TgathReport& t) {
  json out;
  json a = json::array(), b = json::array();
  for (ElemId e : t.a) a.push_back(t.skeleton.name(e));
  for (ElemId e : t.b) b.push_back(t.skeleton.name(e));
  out["skeleton"] = poset_to_json(t.skeleton);
  out["a"] = a;
  out["b"] = b;
  out["every_element_above_a"] = t.every_element_above_a;
  out["b_gathers_everywhere"] = t.b_gathers_everywhere;
  out["all_hold"] = t.all_hold();
  return out;
}

json gallery_report_to_json(const GalleryReport& rep) {
  json expectations = json::array();
  for (const auto& e : rep.expectations) {
    json one{{"label", e.label}, {"passed", e.passed}};
    if (!e.detail.empty()) one["detail"] = e.detail;
    expectations.push_back(one);
  }
  return json{{"item", rep.item},
              {"params", rep.params},
              {"expectations", expectations},
              {"all_passed", rep.all_passed()}};
}

json stabilization_to_json(const Stabilization& s) {
  json stages = json::array();
  for (auto k : s.probe_stage) {
    if (k == kNone)
      stages.push_back(nullptr);
    else
      stages.push_back(k);
  }
  return json{{"verdict", verdict_to_json(s.verdict)}, {"probe_stages", stages}};
}

}  // namespace dirlim
