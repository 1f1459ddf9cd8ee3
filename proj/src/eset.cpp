#include "dirlim/eset.hpp"

#include <algorithm>
#include <numeric>

namespace dirlim {

void ESet::index_offsets() {
  offsets_.resize(sizes_.size());
  std::size_t acc = 0;
  for (std::size_t e = 0; e < sizes_.size(); ++e) {
    acc += sizes_[e];
    offsets_[e] = acc;
  }
}

std::string ESet::element_name(ObjId e, ElemId x) const {
  if (!names_.empty() && x < names_[e].size()) return names_[e][x];
  return std::to_string(x);
}

std::optional<ElemId> ESet::element_index(ObjId e, const std::string& name) const {
  if (names_.empty()) return std::nullopt;
  for (ElemId x = 0; x < names_[e].size(); ++x)
    if (names_[e][x] == name) return x;
  return std::nullopt;
}

namespace {

void check_shapes(const FiniteCategory& cat, const std::vector<std::uint32_t>& sizes,
                  const std::vector<std::vector<ElemId>>& actions) {
  if (sizes.size() != cat.n_objects())
    throw ValidationError("carrier list does not match the object count");
  if (actions.size() != cat.n_morphisms())
    throw ValidationError("action list does not match the morphism count");
  for (MorId a = 0; a < cat.n_morphisms(); ++a) {
    if (actions[a].size() != sizes[cat.dom(a)])
      throw ValidationError("action of " + cat.morphism_name(a) +
                            " has wrong domain size");
    for (ElemId v : actions[a])
      if (v >= sizes[cat.cod(a)])
        throw ValidationError("action of " + cat.morphism_name(a) +
                              " maps outside its codomain carrier");
  }
}

void check_functor_laws(const FiniteCategory& cat,
                        const std::vector<std::uint32_t>& sizes,
                        const std::vector<std::vector<ElemId>>& actions) {
  for (ObjId e = 0; e < cat.n_objects(); ++e) {
    const auto& id = actions[cat.identity(e)];
    for (ElemId x = 0; x < sizes[e]; ++x)
      if (id[x] != x)
        throw ValidationError("identity of " + cat.object_name(e) +
                              " does not act as the identity map");
  }
  for (MorId a = 0; a < cat.n_morphisms(); ++a)
    for (MorId b : cat.into(cat.dom(a))) {
      const MorId ab = cat.compose(a, b);
      const auto& fa = actions[a];
      const auto& fb = actions[b];
      const auto& fab = actions[ab];
      for (ElemId x = 0; x < fb.size(); ++x)
        if (fab[x] != fa[fb[x]])
          throw ValidationError("functor law fails on (" + cat.morphism_name(a) +
                                ", " + cat.morphism_name(b) + ")");
    }
}

}  // namespace

ESet ESet::validated(std::shared_ptr<const FiniteCategory> cat,
                     std::vector<std::vector<std::string>> carrier_names,
                     std::vector<std::vector<ElemId>> actions) {
  if (carrier_names.size() != cat->n_objects())
    throw ValidationError("carrier list does not match the object count");
  std::vector<std::uint32_t> sizes;
  sizes.reserve(carrier_names.size());
  for (const auto& c : carrier_names) sizes.push_back(static_cast<std::uint32_t>(c.size()));
  check_shapes(*cat, sizes, actions);
  check_functor_laws(*cat, sizes, actions);
  ESet x;
  x.cat_ = std::move(cat);
  x.sizes_ = std::move(sizes);
  x.names_ = std::move(carrier_names);
  x.actions_ = std::move(actions);
  x.index_offsets();
  return x;
}

ESet ESet::validated(std::shared_ptr<const FiniteCategory> cat,
                     std::vector<std::uint32_t> carrier_sizes,
                     std::vector<std::vector<ElemId>> actions) {
  check_shapes(*cat, carrier_sizes, actions);
  check_functor_laws(*cat, carrier_sizes, actions);
  ESet x;
  x.cat_ = std::move(cat);
  x.sizes_ = std::move(carrier_sizes);
  x.actions_ = std::move(actions);
  x.index_offsets();
  return x;
}

ESet ESet::unchecked(std::shared_ptr<const FiniteCategory> cat,
                     std::vector<std::uint32_t> carrier_sizes,
                     std::vector<std::vector<ElemId>> actions) {
  check_shapes(*cat, carrier_sizes, actions);
  ESet x;
  x.cat_ = std::move(cat);
  x.sizes_ = std::move(carrier_sizes);
  x.actions_ = std::move(actions);
  x.index_offsets();
  return x;
}

std::vector<LimitElement> limit(const ESet& x) {
  const FiniteCategory& cat = x.category();
  const std::uint32_t no = cat.n_objects();
  if (no == 0) return {LimitElement{{}}};
  for (ObjId e = 0; e < no; ++e)
    if (x.carrier_size(e) == 0) return {};

  // Assign objects with many outgoing constraints first.
  std::vector<ObjId> order(no);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::uint32_t> out_degree(no, 0);
  for (MorId a = 0; a < cat.n_morphisms(); ++a)
    if (!cat.is_identity(a)) ++out_degree[cat.dom(a)];
  std::stable_sort(order.begin(), order.end(),
                   [&](ObjId l, ObjId r) { return out_degree[l] > out_degree[r]; });

  std::vector<std::uint32_t> position(no);  // object -> rank in assignment order
  for (std::uint32_t k = 0; k < no; ++k) position[order[k]] = k;

  // Per rank: constraints against already assigned objects, plus a forcing
  // morphism (some earlier object mapping onto this one) when available.
  struct Constraint {
    MorId mor;
    ObjId other;
    bool outgoing;  // a : this -> other, else a : other -> this
  };
  std::vector<std::vector<Constraint>> constraints(no);
  std::vector<MorId> forcing(no, kNone);
  for (MorId a = 0; a < cat.n_morphisms(); ++a) {
    if (cat.is_identity(a)) continue;
    const ObjId d = cat.dom(a), c = cat.cod(a);
    if (d == c) {
      constraints[position[d]].push_back({a, d, true});
    } else if (position[d] < position[c]) {
      constraints[position[c]].push_back({a, d, false});
      if (forcing[position[c]] == kNone) forcing[position[c]] = a;
    } else {
      constraints[position[d]].push_back({a, c, true});
    }
  }

  std::vector<LimitElement> result;
  std::vector<ElemId> chosen(no, 0);
  auto consistent = [&](std::uint32_t rank, ElemId v) {
    const ObjId e = order[rank];
    for (const Constraint& c : constraints[rank]) {
      if (c.other == e) {
        if (x.apply(c.mor, v) != v) return false;
      } else if (c.outgoing) {
        if (x.apply(c.mor, v) != chosen[c.other]) return false;
      } else {
        if (x.apply(c.mor, chosen[c.other]) != v) return false;
      }
    }
    return true;
  };

  std::vector<ElemId> stack(no, 0);
  std::uint32_t rank = 0;
  std::vector<bool> forced(no, false);
  while (true) {
    if (rank == no) {
      LimitElement le;
      le.coord = chosen;
      result.push_back(std::move(le));
      if (rank == 0) break;
      --rank;
      continue;
    }
    const ObjId e = order[rank];
    ElemId v = stack[rank];
    bool advanced = false;
    if (forcing[rank] != kNone) {
      // Single candidate determined by an assigned neighbour.
      if (v == 0) {
        const MorId a = forcing[rank];
        const ElemId cand = x.apply(a, chosen[cat.dom(a)]);
        if (consistent(rank, cand)) {
          chosen[e] = cand;
          stack[rank] = 1;
          ++rank;
          if (rank < no) stack[rank] = 0;
          advanced = true;
        }
      }
    } else {
      for (; v < x.carrier_size(e); ++v)
        if (consistent(rank, v)) break;
      if (v < x.carrier_size(e)) {
        chosen[e] = v;
        stack[rank] = v + 1;
        ++rank;
        if (rank < no) stack[rank] = 0;
        advanced = true;
      }
    }
    if (!advanced) {
      if (rank == 0) break;
      stack[rank] = 0;
      --rank;
    }
  }

  std::sort(result.begin(), result.end());
  return result;
}

ESetMorphism validated_morphism(const ESet& src, const ESet& tgt,
                                std::vector<std::vector<ElemId>> component) {
  if (src.category_ptr().get() != tgt.category_ptr().get())
    throw ValidationError("natural transformation between functors on different categories");
  const FiniteCategory& cat = src.category();
  if (component.size() != cat.n_objects())
    throw ValidationError("component list does not match the object count");
  for (ObjId e = 0; e < cat.n_objects(); ++e) {
    if (component[e].size() != src.carrier_size(e))
      throw ValidationError("component at " + cat.object_name(e) + " has wrong size");
    for (ElemId v : component[e])
      if (v >= tgt.carrier_size(e))
        throw ValidationError("component at " + cat.object_name(e) +
                              " maps outside the target carrier");
  }
  for (MorId a = 0; a < cat.n_morphisms(); ++a) {
    const ObjId e = cat.dom(a), f = cat.cod(a);
    for (ElemId s = 0; s < src.carrier_size(e); ++s)
      if (tgt.apply(a, component[e][s]) != component[f][src.apply(a, s)])
        throw ValidationError("naturality fails at " + cat.morphism_name(a));
  }
  return ESetMorphism{std::move(component)};
}

LimitElement map_limit_element(const ESetMorphism& f, const LimitElement& x) {
  LimitElement y;
  y.coord.resize(x.coord.size());
  for (std::size_t e = 0; e < x.coord.size(); ++e)
    y.coord[e] = f.component[e][x.coord[e]];
  return y;
}

ESet hom_functor(std::shared_ptr<const FiniteCategory> cat, ObjId base) {
  if (base >= cat->n_objects()) throw ValidationError("hom functor base out of range");
  const std::uint32_t no = cat->n_objects();
  const std::uint32_t nm = cat->n_morphisms();
  // Position of each morphism from base inside its carrier.
  std::vector<ElemId> slot(nm, kNone);
  std::vector<std::vector<std::string>> names(no);
  for (ObjId f = 0; f < no; ++f) {
    const auto& h = cat->hom(base, f);
    for (ElemId i = 0; i < h.size(); ++i) {
      slot[h[i]] = i;
      names[f].push_back(cat->morphism_name(h[i]));
    }
  }
  std::vector<std::vector<ElemId>> actions(nm);
  for (MorId a = 0; a < nm; ++a) {
    const auto& h = cat->hom(base, cat->dom(a));
    actions[a].resize(h.size());
    for (ElemId i = 0; i < h.size(); ++i)
      actions[a][i] = slot[cat->compose(a, h[i])];
  }
  return ESet::validated(std::move(cat), std::move(names), std::move(actions));
}

UnionHom union_hom(std::shared_ptr<const FiniteCategory> cat,
                   const std::vector<ObjId>& bases) {
  if (bases.empty()) throw ValidationError("union of hom functors needs at least one base");
  for (ObjId b : bases)
    if (b >= cat->n_objects()) throw ValidationError("hom union base out of range");
  {
    std::vector<ObjId> s = bases;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw ValidationError("hom union bases must be distinct");
  }
  const std::uint32_t no = cat->n_objects();
  const std::uint32_t nm = cat->n_morphisms();
  std::vector<ElemId> slot(nm, kNone);
  std::vector<std::vector<std::string>> names(no);
  std::vector<std::vector<MorId>> provenance(no);
  for (ObjId f = 0; f < no; ++f)
    for (ObjId b : bases)
      for (MorId h : cat->hom(b, f)) {
        slot[h] = static_cast<ElemId>(names[f].size());
        names[f].push_back(cat->morphism_name(h));
        provenance[f].push_back(h);
      }
  std::vector<std::vector<ElemId>> actions(nm);
  for (MorId a = 0; a < nm; ++a) {
    const auto& column = provenance[cat->dom(a)];
    actions[a].resize(column.size());
    for (ElemId i = 0; i < column.size(); ++i)
      actions[a][i] = slot[cat->compose(a, column[i])];
  }
  UnionHom u{ESet::validated(std::move(cat), std::move(names), std::move(actions)),
             std::move(provenance)};
  return u;
}

ESet trivial_eset(std::shared_ptr<const FiniteCategory> cat) {
  const std::uint32_t no = cat->n_objects();
  const std::uint32_t nm = cat->n_morphisms();
  std::vector<std::vector<std::string>> names(no, {"pt"});
  std::vector<std::vector<ElemId>> actions(nm, std::vector<ElemId>(1, 0));
  return ESet::validated(std::move(cat), std::move(names), std::move(actions));
}

SubESet generated_subeset(const ESet& x,
                          const std::vector<std::pair<ObjId, ElemId>>& seeds) {
  const FiniteCategory& cat = x.category();
  const std::uint32_t no = cat.n_objects();
  std::vector<std::vector<bool>> in(no);
  for (ObjId e = 0; e < no; ++e) in[e].assign(x.carrier_size(e), false);

  std::vector<std::pair<ObjId, ElemId>> work;
  for (auto [e, v] : seeds) {
    if (e >= no || v >= x.carrier_size(e))
      throw ValidationError("subfunctor seed out of range");
    if (!in[e][v]) {
      in[e][v] = true;
      work.emplace_back(e, v);
    }
  }
  while (!work.empty()) {
    auto [e, v] = work.back();
    work.pop_back();
    for (MorId a : cat.from(e)) {
      const ElemId w = x.apply(a, v);
      const ObjId f = cat.cod(a);
      if (!in[f][w]) {
        in[f][w] = true;
        work.emplace_back(f, w);
      }
    }
  }

  std::vector<std::vector<ElemId>> original(no);
  std::vector<std::vector<ElemId>> sub_index(no);
  std::vector<std::vector<std::string>> names(no);
  for (ObjId e = 0; e < no; ++e) {
    sub_index[e].assign(x.carrier_size(e), kNone);
    for (ElemId v = 0; v < x.carrier_size(e); ++v)
      if (in[e][v]) {
        sub_index[e][v] = static_cast<ElemId>(original[e].size());
        original[e].push_back(v);
        names[e].push_back(x.element_name(e, v));
      }
  }
  std::vector<std::vector<ElemId>> actions(cat.n_morphisms());
  for (MorId a = 0; a < cat.n_morphisms(); ++a) {
    const ObjId e = cat.dom(a), f = cat.cod(a);
    actions[a].resize(original[e].size());
    for (ElemId i = 0; i < original[e].size(); ++i)
      actions[a][i] = sub_index[f][x.apply(a, original[e][i])];
  }
  SubESet s{ESet::validated(x.category_ptr(), std::move(names), std::move(actions)),
            std::move(original)};
  return s;
}

}  // namespace dirlim
