#include "dirlim/congruence.hpp"

#include <algorithm>
#include <limits>

namespace dirlim {

namespace {

struct Pending {
  ObjId e;
  ElemId s, t;
};

// Closure state that supports incremental pair insertion: the union-find
// plus per-object class counts, so improperness is O(objects) to query.
class ClosureState {
 public:
  explicit ClosureState(const ESet& x) : x_(&x), uf_(x.total_size()) {
    const FiniteCategory& cat = x.category();
    counts_.resize(cat.n_objects());
    for (ObjId e = 0; e < cat.n_objects(); ++e) counts_[e] = x.carrier_size(e);
    propagate_.resize(cat.n_objects());
    for (MorId a = 0; a < cat.n_morphisms(); ++a)
      if (!cat.is_identity(a)) propagate_[cat.dom(a)].push_back(a);
  }

  void add_pair(ObjId e, ElemId s, ElemId t) {
    work_.push_back({e, s, t});
    drain();
  }

  bool related(ObjId e, ElemId s, ElemId t) {
    const std::size_t base = x_->offset(e);
    return uf_.find(static_cast<std::uint32_t>(base + s)) ==
           uf_.find(static_cast<std::uint32_t>(base + t));
  }

  bool improper() const {
    for (auto c : counts_)
      if (c > 1) return false;
    return true;
  }

  std::size_t total_classes() const {
    std::size_t t = 0;
    for (auto c : counts_) t += c;
    return t;
  }

  std::uint32_t merges() const { return uf_.merges(); }
  UnionFind& uf() { return uf_; }

 private:
  void drain() {
    const FiniteCategory& cat = x_->category();
    while (!work_.empty()) {
      const Pending p = work_.back();
      work_.pop_back();
      const std::size_t base = x_->offset(p.e);
      if (!uf_.unite(static_cast<std::uint32_t>(base + p.s),
                     static_cast<std::uint32_t>(base + p.t)))
        continue;
      --counts_[p.e];
      for (MorId a : propagate_[p.e])
        work_.push_back({cat.cod(a), x_->apply(a, p.s), x_->apply(a, p.t)});
    }
  }

  const ESet* x_;
  UnionFind uf_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::vector<MorId>> propagate_;  // non-identity, per domain
  std::vector<Pending> work_;
};

CongruenceFamily extract(const ESet& x, UnionFind& uf) {
  const std::uint32_t no = x.category().n_objects();
  CongruenceFamily c;
  c.class_of.resize(no);
  c.n_classes.assign(no, 0);
  std::vector<std::uint32_t> class_id(x.total_size(), kNone);
  for (ObjId e = 0; e < no; ++e) {
    const std::size_t base = x.offset(e);
    c.class_of[e].resize(x.carrier_size(e));
    for (ElemId v = 0; v < x.carrier_size(e); ++v) {
      const std::uint32_t root = uf.find(static_cast<std::uint32_t>(base + v));
      if (class_id[root] == kNone) class_id[root] = c.n_classes[e]++;
      c.class_of[e][v] = class_id[root];
    }
  }
  return c;
}

void check_family_shape(const ESet& x, const RelationFamily& r) {
  if (r.pairs.size() != x.category().n_objects())
    throw ValidationError("relation family does not match the object count");
  for (ObjId e = 0; e < r.pairs.size(); ++e)
    for (auto [s, t] : r.pairs[e])
      if (s >= x.carrier_size(e) || t >= x.carrier_size(e))
        throw ValidationError("relation pair out of carrier range at object " +
                              x.category().object_name(e));
}

}  // namespace

CongruenceFamily congruence_closure(const ESet& x, const RelationFamily& r) {
  check_family_shape(x, r);
  ClosureState state(x);
  for (ObjId e = 0; e < r.pairs.size(); ++e)
    for (auto [s, t] : r.pairs[e]) state.add_pair(e, s, t);
  return extract(x, state.uf());
}

bool is_improper(const CongruenceFamily& c) {
  for (auto n : c.n_classes)
    if (n > 1) return false;
  return true;
}

bool satisfies_congruence_laws(const ESet& x, const CongruenceFamily& c) {
  const FiniteCategory& cat = x.category();
  if (c.class_of.size() != cat.n_objects() || c.n_classes.size() != cat.n_objects())
    throw ValidationError("congruence family does not match the object count");
  for (ObjId e = 0; e < cat.n_objects(); ++e) {
    if (c.class_of[e].size() != x.carrier_size(e))
      throw ValidationError("congruence family has wrong carrier size at " +
                            cat.object_name(e));
    for (ElemId cls : c.class_of[e])
      if (cls >= c.n_classes[e])
        throw ValidationError("congruence class id out of range at " + cat.object_name(e));
  }
  for (MorId a = 0; a < cat.n_morphisms(); ++a) {
    const ObjId e = cat.dom(a), f = cat.cod(a);
    std::vector<std::uint32_t> image_class(c.n_classes[e], kNone);
    for (ElemId v = 0; v < x.carrier_size(e); ++v) {
      const std::uint32_t cls = c.class_of[e][v];
      const std::uint32_t img = c.class_of[f][x.apply(a, v)];
      if (image_class[cls] == kNone)
        image_class[cls] = img;
      else if (image_class[cls] != img)
        return false;
    }
  }
  return true;
}

CongruenceFamily congruence_from_classes(const ESet& x,
                                         std::vector<std::vector<ElemId>> class_of) {
  const std::uint32_t no = x.category().n_objects();
  if (class_of.size() != no)
    throw ValidationError("partition family does not match the object count");
  CongruenceFamily c;
  c.class_of.resize(no);
  c.n_classes.assign(no, 0);
  for (ObjId e = 0; e < no; ++e) {
    if (class_of[e].size() != x.carrier_size(e))
      throw ValidationError("partition has wrong carrier size at " +
                            x.category().object_name(e));
    c.class_of[e].resize(class_of[e].size());
    std::vector<std::pair<ElemId, std::uint32_t>> seen;  // original id -> new id
    for (ElemId v = 0; v < class_of[e].size(); ++v) {
      const ElemId orig = class_of[e][v];
      std::uint32_t renum = kNone;
      for (auto [o, n] : seen)
        if (o == orig) { renum = n; break; }
      if (renum == kNone) {
        renum = c.n_classes[e]++;
        seen.emplace_back(orig, renum);
      }
      c.class_of[e][v] = renum;
    }
  }
  if (!satisfies_congruence_laws(x, c))
    throw ValidationError("partition family is not closed under the actions");
  return c;
}

namespace {

struct Candidate {
  ObjId e;
  ElemId i, j;
};

std::vector<Candidate> candidate_pairs(const ESet& x) {
  std::vector<Candidate> cands;
  for (ObjId e = 0; e < x.category().n_objects(); ++e)
    for (ElemId i = 0; i + 1 < x.carrier_size(e); ++i)
      for (ElemId j = i + 1; j < x.carrier_size(e); ++j) cands.push_back({e, i, j});
  return cands;
}

// Depth-first combination search in lexicographic order. Pairs already
// related under the current state are skipped: a subset using one would
// have a strictly smaller improper subset, contradicting size minimality.
bool search(const ESet& x, const std::vector<Candidate>& cands, std::size_t from,
            std::size_t remaining, const ClosureState& state,
            std::vector<std::size_t>& chosen) {
  if (state.improper()) return remaining == 0;
  if (remaining == 0) return false;
  for (std::size_t k = from; k + remaining <= cands.size(); ++k) {
    ClosureState next = state;
    if (next.related(cands[k].e, cands[k].i, cands[k].j)) continue;
    next.add_pair(cands[k].e, cands[k].i, cands[k].j);
    chosen.push_back(k);
    if (search(x, cands, k + 1, remaining - 1, next, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

MinimalGenerators minimal_improper_generators(const ESet& x, std::size_t budget) {
  const std::uint32_t no = x.category().n_objects();
  const std::vector<Candidate> cands = candidate_pairs(x);
  const ClosureState fresh(x);

  const std::size_t cap = std::min(budget, cands.size());
  for (std::size_t size = 0; size <= cap; ++size) {
    std::vector<std::size_t> chosen;
    if (search(x, cands, 0, size, fresh, chosen)) {
      MinimalGenerators g;
      g.family = RelationFamily::empty(no);
      for (std::size_t k : chosen)
        g.family.pairs[cands[k].e].emplace_back(cands[k].i, cands[k].j);
      g.total_pairs = chosen.size();
      g.exact = true;
      g.budget_exhausted = false;
      return g;
    }
  }

  // Greedy upper bound: repeatedly add the pair that removes the most
  // classes, first in pair order on ties.
  MinimalGenerators g;
  g.family = RelationFamily::empty(no);
  g.exact = false;
  g.budget_exhausted = true;
  ClosureState state(x);
  while (!state.improper()) {
    std::size_t best = kNone;
    std::size_t best_drop = 0;
    for (std::size_t k = 0; k < cands.size(); ++k) {
      ClosureState probe = state;
      if (probe.related(cands[k].e, cands[k].i, cands[k].j)) continue;
      const std::size_t before = probe.total_classes();
      probe.add_pair(cands[k].e, cands[k].i, cands[k].j);
      const std::size_t drop = before - probe.total_classes();
      if (best == kNone || drop > best_drop) {
        best = k;
        best_drop = drop;
      }
    }
    state.add_pair(cands[best].e, cands[best].i, cands[best].j);
    g.family.pairs[cands[best].e].emplace_back(cands[best].i, cands[best].j);
    ++g.total_pairs;
  }
  return g;
}

TrivialPresentation trivial_eset_finitely_presented(
    std::shared_ptr<const FiniteCategory> cat) {
  if (cat->n_objects() == 0)
    throw ValidationError("the empty category has no base objects");
  const PreorderQuotient q = preorder_quotient(*cat);
  std::vector<ObjId> bases;
  for (ElemId m : q.poset.minimal_elements())
    for (ObjId e = 0; e < cat->n_objects(); ++e)
      if (q.class_of[e] == m) {
        bases.push_back(e);
        break;
      }
  std::sort(bases.begin(), bases.end());
  UnionHom u = union_hom(cat, bases);
  const std::size_t budget = u.eset.total_size();
  MinimalGenerators gens = minimal_improper_generators(u.eset, budget);
  return TrivialPresentation{std::move(bases), std::move(u), std::move(gens)};
}

Quotient quotient(const ESet& x, const CongruenceFamily& c) {
  if (!satisfies_congruence_laws(x, c))
    throw ValidationError("partition family is not closed under the actions");
  const FiniteCategory& cat = x.category();
  const std::uint32_t no = cat.n_objects();

  // Least member of each class, in canonical class order.
  std::vector<std::vector<ElemId>> rep(no);
  std::vector<std::vector<std::string>> names(no);
  for (ObjId e = 0; e < no; ++e) {
    rep[e].assign(c.n_classes[e], kNone);
    for (ElemId v = 0; v < x.carrier_size(e); ++v)
      if (rep[e][c.class_of[e][v]] == kNone) rep[e][c.class_of[e][v]] = v;
    for (std::uint32_t k = 0; k < c.n_classes[e]; ++k)
      names[e].push_back("[" + x.element_name(e, rep[e][k]) + "]");
  }

  std::vector<std::vector<ElemId>> actions(cat.n_morphisms());
  for (MorId a = 0; a < cat.n_morphisms(); ++a) {
    const ObjId e = cat.dom(a), f = cat.cod(a);
    actions[a].resize(c.n_classes[e]);
    for (std::uint32_t k = 0; k < c.n_classes[e]; ++k)
      actions[a][k] = c.class_of[f][x.apply(a, rep[e][k])];
  }

  ESet quo = ESet::validated(x.category_ptr(), std::move(names), std::move(actions));
  ESetMorphism proj = validated_morphism(x, quo, c.class_of);
  return Quotient{std::move(quo), std::move(proj)};
}

}  // namespace dirlim
