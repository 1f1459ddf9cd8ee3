#include "dirlim/dirsys.hpp"

#include <algorithm>
#include <sstream>

#include "dirlim/congruence.hpp"

namespace dirlim {

std::string Verdict::describe() const {
  switch (outcome) {
    case Outcome::Proven:
      return "proven at stage " + std::to_string(stage);
    case Outcome::RefutedWithinHorizon:
      return "refuted within horizon " + std::to_string(horizon) + ": " + witness;
    case Outcome::Unknown:
      return "unknown up to horizon " + std::to_string(horizon);
  }
  return "";
}

// ---------------------------------------------------------------------------
// finite systems
// ---------------------------------------------------------------------------

FiniteDirectedSystem FiniteDirectedSystem::validated(
    Poset index, std::vector<ESet> members,
    const std::map<std::pair<ElemId, ElemId>, std::vector<std::vector<ElemId>>>& connects) {
  if (index.n() == 0 || !index.is_directed())
    throw ValidationError("directed system: index poset must be nonempty and directed");
  if (members.size() != index.n())
    throw ValidationError("directed system: need one member functor per index element");
  for (const ESet& m : members)
    if (m.category_ptr().get() != members.front().category_ptr().get())
      throw ValidationError("directed system: members must share one category");

  FiniteDirectedSystem s;
  const std::uint32_t n = index.n();
  s.index_ = std::move(index);
  s.members_ = std::move(members);
  s.slot_.assign(static_cast<std::size_t>(n) * n, kNone);

  auto put = [&](ElemId i, ElemId j, ESetMorphism m) {
    s.slot_[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint32_t>(s.connects_.size());
    s.connects_.push_back(std::move(m));
  };

  for (const auto& [key, comps] : connects) {
    auto [i, j] = key;
    if (i >= n || j >= n || !s.index_.leq(i, j))
      throw ValidationError("directed system: connecting map given for a pair not in the order");
    put(i, j, validated_morphism(s.members_[i], s.members_[j], comps));
  }

  const FiniteCategory& cat = s.members_.front().category();
  for (ElemId i = 0; i < n; ++i) {
    std::uint32_t& slot = s.slot_[static_cast<std::size_t>(i) * n + i];
    if (slot == kNone) {
      ESetMorphism id;
      id.component.resize(cat.n_objects());
      for (ObjId e = 0; e < cat.n_objects(); ++e) {
        id.component[e].resize(s.members_[i].carrier_size(e));
        for (ElemId x = 0; x < s.members_[i].carrier_size(e); ++x) id.component[e][x] = x;
      }
      put(i, i, std::move(id));
    } else {
      const auto& comp = s.connects_[slot].component;
      for (ObjId e = 0; e < cat.n_objects(); ++e)
        for (ElemId x = 0; x < s.members_[i].carrier_size(e); ++x)
          if (comp[e][x] != x)
            throw ValidationError("directed system: connect(i, i) must be the identity");
    }
  }

  for (ElemId i = 0; i < n; ++i)
    for (ElemId j = 0; j < n; ++j) {
      if (i == j || !s.index_.leq(i, j)) continue;
      if (s.slot_[static_cast<std::size_t>(i) * n + j] == kNone)
        throw ValidationError("directed system: missing connecting map for " +
                              s.index_.name(i) + " <= " + s.index_.name(j));
    }

  for (ElemId i = 0; i < n; ++i)
    for (ElemId j = 0; j < n; ++j) {
      if (!s.index_.leq(i, j)) continue;
      for (ElemId k = 0; k < n; ++k) {
        if (!s.index_.leq(j, k)) continue;
        const auto& f = s.connect(i, j).component;
        const auto& g = s.connect(j, k).component;
        const auto& h = s.connect(i, k).component;
        for (ObjId e = 0; e < cat.n_objects(); ++e)
          for (ElemId x = 0; x < s.members_[i].carrier_size(e); ++x)
            if (g[e][f[e][x]] != h[e][x])
              throw ValidationError("directed system: connecting maps fail to compose along " +
                                    s.index_.name(i) + " <= " + s.index_.name(j) + " <= " +
                                    s.index_.name(k));
      }
    }

  auto g = s.index_.greatest_element();
  if (!g) throw ValidationError("directed system: directed finite index lost its top");
  s.top_ = *g;
  return s;
}

const ESetMorphism& FiniteDirectedSystem::connect(ElemId i, ElemId j) const {
  std::uint32_t slot = slot_.at(static_cast<std::size_t>(i) * index_.n() + j);
  if (slot == kNone)
    throw ValidationError("directed system: connect queried outside the order");
  return connects_[slot];
}

FiniteColimit colimit_eset(const FiniteDirectedSystem& s) {
  return FiniteColimit{s.top(), s.member(s.top())};
}

ColimitEquality insertion_equal(const FiniteDirectedSystem& s, ElemId i, ObjId e, ElemId x,
                                ElemId j, ElemId y) {
  const Poset& idx = s.index();
  if (i >= idx.n() || j >= idx.n())
    throw ValidationError("insertion_equal: index out of range");
  if (e >= s.category().n_objects()) throw ValidationError("insertion_equal: object out of range");
  if (x >= s.member(i).carrier_size(e) || y >= s.member(j).carrier_size(e))
    throw ValidationError("insertion_equal: element out of range");
  for (ElemId k = 0; k < idx.n(); ++k) {
    if (!idx.leq(i, k) || !idx.leq(j, k)) continue;
    if (s.connect(i, k).component[e][x] == s.connect(j, k).component[e][y])
      return {true, k};
  }
  return {false, kNone};
}

namespace {

std::string tuple_label(const ESet& x, const LimitElement& t) {
  std::ostringstream os;
  os << "(";
  for (ObjId e = 0; e < x.category().n_objects(); ++e) {
    if (e) os << ", ";
    os << x.element_name(e, t.coord[e]);
  }
  os << ")";
  return os.str();
}

}  // namespace

IotaReport iota(const FiniteDirectedSystem& s) {
  const Poset& idx = s.index();
  const ElemId top = s.top();

  std::vector<std::vector<LimitElement>> lims(idx.n());
  std::vector<std::size_t> off(idx.n() + 1, 0);
  for (ElemId i = 0; i < idx.n(); ++i) {
    lims[i] = limit(s.member(i));
    off[i + 1] = off[i] + lims[i].size();
  }

  auto find_in = [&](ElemId j, const LimitElement& t) -> std::size_t {
    auto it = std::lower_bound(lims[j].begin(), lims[j].end(), t);
    if (it == lims[j].end() || !(*it == t))
      throw ValidationError("iota: a mapped limit element is not a limit element");
    return static_cast<std::size_t>(it - lims[j].begin());
  };

  UnionFind uf(off.back());
  for (ElemId i = 0; i < idx.n(); ++i)
    for (ElemId j = 0; j < idx.n(); ++j) {
      if (i == j || !idx.leq(i, j)) continue;
      const ESetMorphism& f = s.connect(i, j);
      for (std::size_t p = 0; p < lims[i].size(); ++p)
        uf.unite(off[i] + p, off[j] + find_in(j, map_limit_element(f, lims[i][p])));
    }

  IotaReport rep;
  rep.exact = true;

  // codomain: the limit of the colimit functor, which lives at the top index
  std::vector<LimitElement> cod = limit(s.member(top));
  rep.codomain_size = cod.size();
  for (const auto& t : cod) rep.codomain_names.push_back(tuple_label(s.member(top), t));

  // domain classes, numbered by least (index, limit point)
  std::vector<std::uint32_t> class_of(off.back(), kNone);
  std::vector<std::pair<ElemId, std::size_t>> rep_of;
  for (ElemId i = 0; i < idx.n(); ++i)
    for (std::size_t p = 0; p < lims[i].size(); ++p) {
      std::size_t root = uf.find(off[i] + p);
      if (class_of[root] == kNone) {
        class_of[root] = static_cast<std::uint32_t>(rep_of.size());
        rep_of.push_back({i, p});
      }
    }
  rep.domain_size = rep_of.size();

  std::vector<std::uint32_t> hit(cod.size(), kNone);
  for (std::uint32_t c = 0; c < rep_of.size(); ++c) {
    auto [i, p] = rep_of[c];
    rep.domain_names.push_back(idx.name(i) + ": " + tuple_label(s.member(i), lims[i][p]));
    LimitElement t = map_limit_element(s.connect(i, top), lims[i][p]);
    auto it = std::lower_bound(cod.begin(), cod.end(), t);
    if (it == cod.end() || !(*it == t))
      throw ValidationError("iota: image tuple missing from the codomain");
    std::uint32_t ci = static_cast<std::uint32_t>(it - cod.begin());
    rep.image.push_back(ci);
    if (hit[ci] == kNone) {
      hit[ci] = c;
    } else if (rep.injectivity.is_unknown()) {
      rep.injectivity = Verdict::refuted(
          top, rep.domain_names[hit[ci]] + " and " + rep.domain_names[c] +
                   " map to the same tuple " + rep.codomain_names[ci]);
    }
  }
  if (!rep.injectivity.is_refuted()) rep.injectivity = Verdict::proven(top);

  for (std::uint32_t ci = 0; ci < cod.size(); ++ci)
    if (hit[ci] == kNone) {
      rep.surjectivity =
          Verdict::refuted(top, "tuple " + rep.codomain_names[ci] + " has no preimage");
      break;
    }
  if (!rep.surjectivity.is_refuted()) rep.surjectivity = Verdict::proven(top);
  return rep;
}

// ---------------------------------------------------------------------------
// lazy systems
// ---------------------------------------------------------------------------

LazySystem::LazySystem(Presentation p) : pres_(std::move(p)) {
  if (pres_.objects.empty()) throw ValidationError("lazy system: needs at least one object");
  if (!pres_.stage_fn || !pres_.step_fn || !pres_.limit_step_fn)
    throw ValidationError("lazy system: all three callbacks are required");
  if (!pres_.window && pres_.probes.empty())
    throw ValidationError("lazy system: needs a window category or probes");
  if (!pres_.probes.empty() && pres_.objects.size() != 1)
    throw ValidationError("lazy system: probes require a single object");
  if (pres_.window) {
    if (pres_.window->n_objects() != pres_.objects.size())
      throw ValidationError("lazy system: window object count mismatch");
    for (ObjId e = 0; e < pres_.window->n_objects(); ++e)
      if (pres_.window->object_name(e) != pres_.objects[e])
        throw ValidationError("lazy system: window object names mismatch");
    for (const std::string& probe : pres_.probes)
      if (!pres_.window->morphism_index(probe))
        throw ValidationError("lazy system: probe '" + probe + "' is not a window morphism");
  }
}

void LazySystem::ensure_stage(std::uint32_t n) const {
  while (cache_.size() <= n) {
    const std::uint32_t k = static_cast<std::uint32_t>(cache_.size());
    Entry en;
    en.data = pres_.stage_fn(k);
    LazyStage& st = en.data;
    const std::string where = pres_.name + " stage " + std::to_string(k);

    if (st.sizes.size() != pres_.objects.size())
      throw ValidationError(where + ": carrier count mismatch");
    if (!st.names.empty()) {
      if (st.names.size() != st.sizes.size())
        throw ValidationError(where + ": name table shape mismatch");
      for (ObjId e = 0; e < st.sizes.size(); ++e)
        if (st.names[e].size() != st.sizes[e])
          throw ValidationError(where + ": name count mismatch at object " + pres_.objects[e]);
    }

    if (pres_.window) {
      if (st.names.empty())
        en.window_eset = ESet::validated(pres_.window, st.sizes, st.window_actions);
      else
        en.window_eset = ESet::validated(pres_.window, st.names, st.window_actions);
    } else if (!st.window_actions.empty()) {
      throw ValidationError(where + ": window actions given without a window category");
    }

    if (!pres_.probes.empty()) {
      if (pres_.window) {
        if (!st.probe_actions.empty())
          throw ValidationError(where + ": probes resolve through the window; drop probe_actions");
        for (const std::string& probe : pres_.probes)
          en.probe_acts.push_back(st.window_actions[*pres_.window->morphism_index(probe)]);
      } else {
        if (st.probe_actions.size() != pres_.probes.size())
          throw ValidationError(where + ": one action per probe required");
        for (std::uint32_t p = 0; p < st.probe_actions.size(); ++p) {
          if (st.probe_actions[p].size() != st.sizes[0])
            throw ValidationError(where + ": probe action domain mismatch");
          for (ElemId v : st.probe_actions[p])
            if (v >= st.sizes[0]) throw ValidationError(where + ": probe action out of range");
        }
        en.probe_acts = std::move(st.probe_actions);
        st.probe_actions.clear();
      }
    }

    for (const auto& pt : st.limits) {
      if (pt.coord.size() != pres_.objects.size())
        throw ValidationError(where + ": limit point '" + pt.name + "' coordinate count");
      for (ObjId e = 0; e < pt.coord.size(); ++e)
        if (pt.coord[e] >= st.sizes[e])
          throw ValidationError(where + ": limit point '" + pt.name + "' coordinate range");
      if (pres_.window) {
        const FiniteCategory& w = *pres_.window;
        for (MorId a = 0; a < w.n_morphisms(); ++a)
          if (st.window_actions[a][pt.coord[w.dom(a)]] != pt.coord[w.cod(a)])
            throw ValidationError(where + ": limit point '" + pt.name +
                                  "' is not compatible with " + w.morphism_name(a));
      }
      for (const auto& act : en.probe_acts)
        if (act[pt.coord[0]] != pt.coord[0])
          throw ValidationError(where + ": limit point '" + pt.name + "' is not probe-fixed");
    }

    cache_.push_back(std::move(en));
  }
}

void LazySystem::ensure_step(std::uint32_t n) const {
  ensure_stage(n + 1);
  Entry& en = cache_[n];
  if (en.step_ready) return;
  const Entry& nx = cache_[n + 1];
  const std::string where = pres_.name + " step " + std::to_string(n);

  en.steps.resize(pres_.objects.size());
  for (ObjId e = 0; e < pres_.objects.size(); ++e) {
    en.steps[e] = pres_.step_fn(n, e);
    if (en.steps[e].size() != en.data.sizes[e])
      throw ValidationError(where + ": domain size mismatch at " + pres_.objects[e]);
    for (ElemId v : en.steps[e])
      if (v >= nx.data.sizes[e])
        throw ValidationError(where + ": value out of range at " + pres_.objects[e]);
  }

  if (pres_.window) {
    const FiniteCategory& w = *pres_.window;
    for (MorId a = 0; a < w.n_morphisms(); ++a) {
      const auto& act0 = en.data.window_actions[a];
      const auto& act1 = nx.data.window_actions[a];
      const auto& sd = en.steps[w.dom(a)];
      const auto& sc = en.steps[w.cod(a)];
      for (ElemId x = 0; x < en.data.sizes[w.dom(a)]; ++x)
        if (sc[act0[x]] != act1[sd[x]])
          throw ValidationError(where + ": step is not natural for " + w.morphism_name(a));
    }
  }
  for (std::uint32_t p = 0; p < en.probe_acts.size(); ++p) {
    const auto& s0 = en.steps[0];
    for (ElemId x = 0; x < en.data.sizes[0]; ++x)
      if (s0[en.probe_acts[p][x]] != nx.probe_acts[p][s0[x]])
        throw ValidationError(where + ": step is not natural for probe " + pres_.probes[p]);
  }

  en.limit_step = pres_.limit_step_fn(n);
  if (en.limit_step.size() != en.data.limits.size())
    throw ValidationError(where + ": limit step size mismatch");
  for (std::size_t q = 0; q < en.limit_step.size(); ++q) {
    if (en.limit_step[q] >= nx.data.limits.size())
      throw ValidationError(where + ": limit step out of range");
    const auto& src = en.data.limits[q];
    const auto& dst = nx.data.limits[en.limit_step[q]];
    for (ObjId e = 0; e < pres_.objects.size(); ++e)
      if (en.steps[e][src.coord[e]] != dst.coord[e])
        throw ValidationError(where + ": limit step breaks coordinates of '" + src.name + "'");
  }
  en.step_ready = true;
}

const LazyStage& LazySystem::stage(std::uint32_t n) const {
  std::lock_guard<std::mutex> lk(mu_);
  ensure_stage(n);
  return cache_[n].data;
}

const ESet& LazySystem::window_eset(std::uint32_t n) const {
  std::lock_guard<std::mutex> lk(mu_);
  if (!pres_.window) throw ValidationError("lazy system: no window category");
  ensure_stage(n);
  return *cache_[n].window_eset;
}

const std::vector<ElemId>& LazySystem::step(std::uint32_t n, ObjId e) const {
  std::lock_guard<std::mutex> lk(mu_);
  ensure_step(n);
  return cache_[n].steps.at(e);
}

const std::vector<ElemId>& LazySystem::limit_step(std::uint32_t n) const {
  std::lock_guard<std::mutex> lk(mu_);
  ensure_step(n);
  return cache_[n].limit_step;
}

const std::vector<ElemId>& LazySystem::probe_action(std::uint32_t n, std::uint32_t p) const {
  std::lock_guard<std::mutex> lk(mu_);
  ensure_stage(n);
  return cache_[n].probe_acts.at(p);
}

std::string LazySystem::element_label(std::uint32_t n, ObjId e, ElemId x) const {
  std::lock_guard<std::mutex> lk(mu_);
  ensure_stage(n);
  const LazyStage& st = cache_[n].data;
  if (!st.names.empty()) return st.names[e][x];
  return "#" + std::to_string(x);
}

LazySystem LazySystem::from_window_stages(
    std::string name, std::shared_ptr<const FiniteCategory> window,
    std::vector<std::string> probes, std::function<ESet(std::uint32_t)> stage_eset,
    std::function<std::vector<ElemId>(std::uint32_t, ObjId)> step_fn) {
  Presentation p;
  p.name = std::move(name);
  for (ObjId e = 0; e < window->n_objects(); ++e) p.objects.push_back(window->object_name(e));
  p.window = window;
  p.probes = std::move(probes);

  auto stage_of = [stage_eset, window](std::uint32_t n) {
    ESet x = stage_eset(n);
    if (x.category_ptr().get() != window.get())
      throw ValidationError("from_window_stages: stage functor is not on the window");
    LazyStage st;
    st.sizes.resize(window->n_objects());
    st.window_actions.resize(window->n_morphisms());
    for (ObjId e = 0; e < window->n_objects(); ++e) st.sizes[e] = x.carrier_size(e);
    if (x.has_names()) {
      st.names.resize(window->n_objects());
      for (ObjId e = 0; e < window->n_objects(); ++e)
        for (ElemId i = 0; i < x.carrier_size(e); ++i)
          st.names[e].push_back(x.element_name(e, i));
    }
    for (MorId a = 0; a < window->n_morphisms(); ++a) st.window_actions[a] = x.action(a);
    for (const LimitElement& t : limit(x))
      st.limits.push_back({tuple_label(x, t), t.coord});
    return st;
  };
  p.stage_fn = stage_of;
  p.step_fn = step_fn;
  p.limit_step_fn = [stage_of, step_fn, window](std::uint32_t n) {
    LazyStage a = stage_of(n);
    LazyStage b = stage_of(n + 1);
    std::vector<LimitElement> next;
    for (const auto& pt : b.limits) next.push_back({pt.coord});
    std::vector<ElemId> out;
    for (const auto& pt : a.limits) {
      LimitElement t;
      t.coord.resize(window->n_objects());
      for (ObjId e = 0; e < window->n_objects(); ++e) t.coord[e] = step_fn(n, e)[pt.coord[e]];
      auto it = std::lower_bound(next.begin(), next.end(), t);
      if (it == next.end() || !(*it == t))
        throw ValidationError("from_window_stages: stepped limit point is not a limit point");
      out.push_back(static_cast<ElemId>(it - next.begin()));
    }
    return out;
  };
  return LazySystem(std::move(p));
}

// ---------------------------------------------------------------------------
// horizon exploration
// ---------------------------------------------------------------------------

HorizonColimit colimit_at_horizon(const LazySystem& s, std::uint32_t horizon) {
  HorizonColimit col;
  col.horizon = horizon;
  const std::uint32_t nobj = s.n_objects();
  col.classes.resize(nobj);
  col.class_of.resize(nobj);

  for (std::uint32_t n = 0; n < horizon; ++n) s.step(n, 0);  // force validation chain

  for (ObjId e = 0; e < nobj; ++e) {
    std::vector<std::size_t> off(horizon + 2, 0);
    for (std::uint32_t n = 0; n <= horizon; ++n)
      off[n + 1] = off[n] + s.stage(n).sizes[e];

    UnionFind uf(off[horizon + 1]);
    for (std::uint32_t n = 0; n < horizon; ++n) {
      const auto& st = s.step(n, e);
      for (ElemId x = 0; x < st.size(); ++x) uf.unite(off[n] + x, off[n + 1] + st[x]);
    }

    std::vector<std::uint32_t> class_of_root(off[horizon + 1], kNone);
    col.class_of[e].resize(horizon + 1);
    for (std::uint32_t n = 0; n <= horizon; ++n) {
      col.class_of[e][n].resize(s.stage(n).sizes[e]);
      for (ElemId x = 0; x < s.stage(n).sizes[e]; ++x) {
        std::size_t root = uf.find(off[n] + x);
        if (class_of_root[root] == kNone) {
          class_of_root[root] = static_cast<std::uint32_t>(col.classes[e].size());
          col.classes[e].emplace_back();
        }
        std::uint32_t c = class_of_root[root];
        col.class_of[e][n][x] = c;
        col.classes[e][c].push_back({n, x});
      }
    }
  }
  return col;
}

Verdict horizon_equal(const LazySystem& s, std::uint32_t horizon, ObjId e, std::uint32_t i,
                      ElemId x, std::uint32_t j, ElemId y) {
  if (i > horizon || j > horizon)
    throw ValidationError("horizon_equal: stage beyond horizon");
  if (x >= s.stage(i).sizes.at(e) || y >= s.stage(j).sizes.at(e))
    throw ValidationError("horizon_equal: element out of range");
  std::uint32_t k = std::max(i, j);
  ElemId px = x, py = y;
  for (std::uint32_t n = i; n < k; ++n) px = s.step(n, e)[px];
  for (std::uint32_t n = j; n < k; ++n) py = s.step(n, e)[py];
  for (;; ++k) {
    if (px == py) return Verdict::proven(k);
    if (k == horizon) return Verdict::unknown(horizon);
    px = s.step(k, e)[px];
    py = s.step(k, e)[py];
  }
}

namespace {

struct DomainClasses {
  // least (stage, point) representative per class
  std::vector<std::pair<std::uint32_t, std::uint32_t>> reps;
  std::vector<std::string> names;
};

DomainClasses domain_classes(const LazySystem& s, std::uint32_t horizon) {
  std::vector<std::size_t> off(horizon + 2, 0);
  for (std::uint32_t n = 0; n <= horizon; ++n)
    off[n + 1] = off[n] + s.stage(n).limits.size();

  UnionFind uf(off[horizon + 1]);
  for (std::uint32_t n = 0; n < horizon; ++n) {
    const auto& ls = s.limit_step(n);
    for (std::uint32_t q = 0; q < ls.size(); ++q) uf.unite(off[n] + q, off[n + 1] + ls[q]);
  }

  DomainClasses dc;
  std::vector<std::uint32_t> class_of_root(off[horizon + 1], kNone);
  for (std::uint32_t n = 0; n <= horizon; ++n)
    for (std::uint32_t q = 0; q < s.stage(n).limits.size(); ++q) {
      std::size_t root = uf.find(off[n] + q);
      if (class_of_root[root] == kNone) {
        class_of_root[root] = static_cast<std::uint32_t>(dc.reps.size());
        dc.reps.push_back({n, q});
        dc.names.push_back(s.stage(n).limits[q].name);
      }
    }
  return dc;
}

}  // namespace

IotaReport iota_at_horizon(const LazySystem& s, std::uint32_t horizon) {
  HorizonColimit col = colimit_at_horizon(s, horizon);
  DomainClasses dc = domain_classes(s, horizon);

  IotaReport rep;
  rep.exact = false;
  rep.horizon = horizon;
  rep.domain_size = dc.reps.size();
  rep.domain_names = dc.names;

  // image tuples: one horizon-colimit class per window object
  std::vector<std::vector<std::uint32_t>> images;
  for (auto [n, q] : dc.reps) {
    const auto& coord = s.stage(n).limits[q].coord;
    std::vector<std::uint32_t> img(s.n_objects());
    for (ObjId e = 0; e < s.n_objects(); ++e) img[e] = col.class_of[e][n][coord[e]];
    images.push_back(std::move(img));
  }

  auto class_label = [&](ObjId e, std::uint32_t c) {
    auto m = col.rep(e, c);
    return "[" + s.element_label(m.stage, e, m.elem) + "@" + std::to_string(m.stage) + "]";
  };

  std::vector<std::vector<std::uint32_t>> cod;  // codomain entries as class tuples
  if (s.has_window()) {
    const FiniteCategory& w = s.window();
    std::vector<std::uint32_t> sizes(w.n_objects());
    std::vector<std::vector<ElemId>> acts(w.n_morphisms());
    for (ObjId e = 0; e < w.n_objects(); ++e)
      sizes[e] = static_cast<std::uint32_t>(col.n_classes(e));
    for (MorId a = 0; a < w.n_morphisms(); ++a) {
      acts[a].resize(col.n_classes(w.dom(a)));
      for (std::uint32_t c = 0; c < col.n_classes(w.dom(a)); ++c) {
        auto m = col.rep(w.dom(a), c);
        ElemId y = s.stage(m.stage).window_actions[a][m.elem];
        acts[a][c] = col.class_of[w.cod(a)][m.stage][y];
      }
    }
    ESet colim = ESet::validated(s.window_ptr(), sizes, acts);
    for (const LimitElement& t : limit(colim))
      cod.push_back(std::vector<std::uint32_t>(t.coord.begin(), t.coord.end()));
  } else {
    // probe-fixed colimit classes at the single object
    for (std::uint32_t c = 0; c < col.n_classes(0); ++c) {
      bool fixed = true;
      auto m = col.rep(0, c);
      for (std::uint32_t p = 0; p < s.n_probes() && fixed; ++p) {
        ElemId y = s.probe_action(m.stage, p)[m.elem];
        fixed = col.class_of[0][m.stage][y] == c;
      }
      if (fixed) cod.push_back({c});
    }
  }

  rep.codomain_size = cod.size();
  for (const auto& t : cod) {
    std::string label = "(";
    for (ObjId e = 0; e < s.n_objects(); ++e) {
      if (e) label += ", ";
      label += class_label(e, t[e]);
    }
    label += ")";
    rep.codomain_names.push_back(label);
  }

  std::vector<std::uint32_t> hit(cod.size(), kNone);
  for (std::uint32_t c = 0; c < images.size(); ++c) {
    auto it = std::lower_bound(cod.begin(), cod.end(), images[c]);
    if (it == cod.end() || *it != images[c])
      throw ValidationError("iota_at_horizon: image tuple escaped the codomain");
    std::uint32_t ci = static_cast<std::uint32_t>(it - cod.begin());
    rep.image.push_back(ci);
    if (hit[ci] == kNone) {
      hit[ci] = c;
    } else if (!rep.injectivity.is_refuted()) {
      rep.injectivity =
          Verdict::refuted(horizon, dc.names[hit[ci]] + " and " + dc.names[c] +
                                        " map to the same tuple " + rep.codomain_names[ci]);
    }
  }
  if (!rep.injectivity.is_refuted()) rep.injectivity = Verdict::unknown(horizon);

  for (std::uint32_t ci = 0; ci < cod.size(); ++ci)
    if (hit[ci] == kNone) {
      rep.surjectivity = Verdict::refuted(
          horizon, "tuple " + rep.codomain_names[ci] + " has no preimage within the horizon");
      break;
    }
  if (!rep.surjectivity.is_refuted()) rep.surjectivity = Verdict::unknown(horizon);
  return rep;
}

namespace {

// least stage in [from, horizon] at which the push of x is fixed by probe p
std::uint32_t least_fixed_stage(const LazySystem& s, std::uint32_t p, std::uint32_t from,
                                ElemId x, std::uint32_t horizon) {
  ElemId cur = x;
  for (std::uint32_t k = from;; ++k) {
    if (s.probe_action(k, p)[cur] == cur) return k;
    if (k == horizon) return kNone;
    cur = s.step(k, 0)[cur];
  }
}

}  // namespace

Stabilization stabilization_stage(const LazySystem& s, const std::vector<std::uint32_t>& probes,
                                  std::uint32_t from_stage, ElemId x, std::uint32_t horizon) {
  if (s.n_probes() == 0 || probes.empty())
    throw ValidationError("stabilization_stage: needs at least one probe");
  if (from_stage > horizon) throw ValidationError("stabilization_stage: stage beyond horizon");
  if (x >= s.stage(from_stage).sizes[0])
    throw ValidationError("stabilization_stage: element out of range");
  for (std::uint32_t p : probes)
    if (p >= s.n_probes()) throw ValidationError("stabilization_stage: probe out of range");

  Stabilization out;
  std::uint32_t worst = 0;
  bool all = true;
  for (std::uint32_t p : probes) {
    std::uint32_t k = least_fixed_stage(s, p, from_stage, x, horizon);
    out.probe_stage.push_back(k);
    if (k == kNone)
      all = false;
    else
      worst = std::max(worst, k);
  }
  if (!all) {
    out.verdict = Verdict::unknown(horizon);
  } else {
    // fixedness persists along steps, so the max of the per-probe stages works
    out.verdict = Verdict::proven(worst);
  }
  return out;
}

std::vector<Verdict> eventual_fixedness_certificate(const LazySystem& s,
                                                    const std::vector<std::uint32_t>& probes,
                                                    std::uint32_t from_stage, ElemId x,
                                                    std::uint32_t horizon) {
  if (s.n_probes() == 0)
    throw ValidationError("eventual_fixedness_certificate: system has no probes");
  if (from_stage > horizon)
    throw ValidationError("eventual_fixedness_certificate: stage beyond horizon");
  if (x >= s.stage(from_stage).sizes[0])
    throw ValidationError("eventual_fixedness_certificate: element out of range");
  std::vector<Verdict> out;
  for (std::uint32_t p : probes) {
    if (p >= s.n_probes())
      throw ValidationError("eventual_fixedness_certificate: probe out of range");
    std::uint32_t k = least_fixed_stage(s, p, from_stage, x, horizon);
    out.push_back(k == kNone ? Verdict::unknown(horizon) : Verdict::proven(k));
  }
  return out;
}

}  // namespace dirlim
