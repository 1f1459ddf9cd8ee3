#include "dirlim/division.hpp"

#include <algorithm>
#include <functional>

#include "dirlim/eset.hpp"

namespace dirlim {

namespace {

std::vector<ElemId> checked_ids(std::uint32_t n, const std::vector<ElemId>& raw,
                                const char* what) {
  std::vector<ElemId> out(raw);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (ElemId x : out)
    if (x >= n) throw ValidationError(std::string(what) + ": id out of range");
  return out;
}

// subsets of cands by size then lexicographic order, first accepted wins
bool subset_search(const std::vector<ElemId>& cands, std::size_t max_size,
                   const std::function<bool(const std::vector<ElemId>&)>& ok,
                   std::vector<ElemId>& out) {
  std::vector<ElemId> picked;
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t size, std::size_t from) {
    if (picked.size() == size) return ok(picked);
    for (std::size_t i = from; i + (size - picked.size()) <= cands.size(); ++i) {
      picked.push_back(cands[i]);
      if (rec(size, i + 1)) return true;
      picked.pop_back();
    }
    return false;
  };
  for (std::size_t size = 0; size <= std::min(max_size, cands.size()); ++size) {
    picked.clear();
    if (rec(size, 0)) {
      out = picked;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<ElemId> right_division_closure(const FiniteMonoid& m,
                                           const std::vector<ElemId>& seed) {
  auto seeds = checked_ids(m.n(), seed, "right_division_closure");
  std::vector<bool> in(m.n(), false);
  in[m.one()] = true;
  for (ElemId x : seeds) in[x] = true;

  bool changed = true;
  while (changed) {
    changed = false;
    for (ElemId b = 0; b < m.n(); ++b) {
      if (!in[b]) continue;
      for (ElemId a = 0; a < m.n(); ++a) {
        ElemId ab = m.mult(a, b);
        if (in[a] && !in[ab]) {
          in[ab] = true;
          changed = true;
        }
        if (!in[a] && in[ab]) {
          in[a] = true;  // right division: a = (ab) / b
          changed = true;
        }
      }
    }
  }
  std::vector<ElemId> out;
  for (ElemId x = 0; x < m.n(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

MultdivWitness multdiv_holds(const FiniteMonoid& m, std::size_t budget) {
  std::vector<ElemId> cands;
  for (ElemId x = 0; x < m.n(); ++x)
    if (x != m.one()) cands.push_back(x);

  auto full = [&](const std::vector<ElemId>& seed) {
    return right_division_closure(m, seed).size() == m.n();
  };

  MultdivWitness w;
  if (subset_search(cands, budget, full, w.seed)) return w;

  w.exact = false;
  w.budget_exhausted = true;
  std::vector<ElemId> seed;
  while (!full(seed)) {
    ElemId best = kNone;
    std::size_t best_gain = 0;
    for (ElemId x : cands) {
      if (std::find(seed.begin(), seed.end(), x) != seed.end()) continue;
      auto trial = seed;
      trial.push_back(x);
      std::size_t gain = right_division_closure(m, trial).size();
      if (best == kNone || gain > best_gain) {
        best = x;
        best_gain = gain;
      }
    }
    seed.push_back(best);
    std::sort(seed.begin(), seed.end());
  }
  w.seed = seed;
  return w;
}

MonoidBattery condition_battery(const FiniteMonoid& m, std::size_t budget) {
  MonoidBattery b;

  std::vector<ElemId> cands;
  for (ElemId x = 0; x < m.n(); ++x)
    if (x != m.one()) cands.push_back(x);

  auto generates = [&](const std::vector<ElemId>& t) {
    return m.generated_submonoid(t).size() == m.n();
  };
  if (!subset_search(cands, budget, generates, b.generating_set)) {
    b.generating_exact = false;
    b.generating_set = cands;  // everything except 1 always generates
  }

  for (ElemId z = 0; z < m.n(); ++z) {
    bool zero = true;
    for (ElemId a = 0; a < m.n() && zero; ++a) zero = m.mult(a, z) == z;
    if (zero) b.right_zeros.push_back(z);
  }

  for (ElemId a = 0; a < m.n(); ++a) {
    auto ideal = m.left_ideal(a);
    if (b.ideal_generator == kNone || ideal.size() < b.smallest_left_ideal.size() ||
        (ideal.size() == b.smallest_left_ideal.size() && ideal < b.smallest_left_ideal)) {
      b.ideal_generator = a;
      b.smallest_left_ideal = ideal;
    }
  }

  auto interacting = [&](const std::vector<ElemId>& m0) {
    std::vector<ElemId> d;
    std::vector<bool> inm0(m.n(), false);
    for (ElemId s : m0) inm0[s] = true;
    for (ElemId a = 0; a < m.n(); ++a)
      for (ElemId s : m0)
        if (inm0[m.mult(a, s)]) {
          d.push_back(a);
          break;
        }
    return d;
  };
  auto m0_ok = [&](const std::vector<ElemId>& t) {
    return generates(interacting(m.generated_submonoid(t)));
  };
  if (subset_search(cands, budget, m0_ok, b.m0_generators)) {
    b.m0 = m.generated_submonoid(b.m0_generators);
  } else {
    b.m0_exact = false;
    b.m0_generators = cands;
    b.m0 = m.generated_submonoid(cands);
  }
  b.m0_interacting = interacting(b.m0);

  b.multdiv = multdiv_holds(m, budget);
  return b;
}

CongruenceFamily left_congruence_closure(const FiniteMonoid& m,
                                         const std::vector<std::pair<ElemId, ElemId>>& pairs) {
  auto cat = std::make_shared<const FiniteCategory>(monoid_to_category(m));
  ESet reg = hom_functor(cat, 0);
  RelationFamily r = RelationFamily::empty(1);
  for (auto [s, t] : pairs) {
    if (s >= m.n() || t >= m.n())
      throw ValidationError("left_congruence_closure: pair out of range");
    r.pairs[0].push_back({s, t});
  }
  return congruence_closure(reg, r);
}

std::vector<std::vector<std::uint32_t>> left_congruences_enumerate(const FiniteMonoid& m) {
  if (m.n() > 6) throw GuardError("left_congruences_enumerate: monoid larger than 6");
  std::vector<std::vector<std::uint32_t>> out;
  const std::uint32_t n = m.n();
  if (n == 0) return out;

  std::vector<std::uint32_t> a(n, 0);
  auto is_left_congruence = [&]() {
    for (ElemId i = 0; i < n; ++i)
      for (ElemId j = i + 1; j < n; ++j) {
        if (a[i] != a[j]) continue;
        for (ElemId u = 0; u < n; ++u)
          if (a[m.mult(u, i)] != a[m.mult(u, j)]) return false;
      }
    return true;
  };

  // restricted growth strings enumerate set partitions in lexicographic order
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t i,
                                                              std::uint32_t mx) {
    if (i == n) {
      if (is_left_congruence()) out.push_back(a);
      return;
    }
    for (std::uint32_t v = 0; v <= mx + 1 && v < n; ++v) {
      a[i] = v;
      rec(i + 1, std::max(mx, v));
    }
  };
  a[0] = 0;
  rec(1, 0);
  return out;
}

std::size_t left_congruence_count(const FiniteMonoid& m) {
  return left_congruences_enumerate(m).size();
}

std::vector<std::uint32_t> quotient_fixed_classes(const FiniteMonoid& m,
                                                  const CongruenceFamily& c) {
  if (c.class_of.size() != 1 || c.class_of[0].size() != m.n())
    throw ValidationError("quotient_fixed_classes: family does not fit the monoid");
  std::vector<ElemId> rep(c.n_classes[0], kNone);
  for (ElemId v = 0; v < m.n(); ++v)
    if (rep[c.class_of[0][v]] == kNone) rep[c.class_of[0][v]] = v;

  std::vector<std::uint32_t> out;
  for (std::uint32_t k = 0; k < c.n_classes[0]; ++k) {
    bool fixed = true;
    for (ElemId u = 0; u < m.n() && fixed; ++u)
      fixed = c.class_of[0][m.mult(u, rep[k])] == k;
    if (fixed) out.push_back(k);
  }
  return out;
}

ClassOfOneReport class_of_one_correspondence(const FiniteMonoid& m,
                                             const std::vector<ElemId>& n) {
  auto nn = checked_ids(m.n(), n, "class_of_one_correspondence");
  ClassOfOneReport rep;

  std::vector<bool> in(m.n(), false);
  for (ElemId x : nn) in[x] = true;
  if (!in[m.one()]) {
    rep.n_is_division_closed_submonoid = false;
    rep.failure = "1 is not in N";
  }
  for (ElemId a : nn) {
    if (!rep.n_is_division_closed_submonoid) break;
    for (ElemId b : nn)
      if (!in[m.mult(a, b)]) {
        rep.n_is_division_closed_submonoid = false;
        rep.failure = "N is not closed under products: " + m.name(a) + "*" + m.name(b);
        break;
      }
  }
  if (rep.n_is_division_closed_submonoid) {
    for (ElemId a = 0; a < m.n() && rep.n_is_division_closed_submonoid; ++a)
      for (ElemId b : nn)
        if (in[m.mult(a, b)] && !in[a]) {
          rep.n_is_division_closed_submonoid = false;
          rep.failure = "N is not closed under right division: " + m.name(m.mult(a, b)) + " / " +
                        m.name(b);
          break;
        }
  }

  std::vector<std::pair<ElemId, ElemId>> pairs;
  for (ElemId x : nn) pairs.push_back({nn.front(), x});
  CongruenceFamily c = left_congruence_closure(m, pairs);
  const std::uint32_t one_class = c.class_of[0][m.one()];
  for (ElemId x = 0; x < m.n(); ++x)
    if (c.class_of[0][x] == one_class) rep.class_of_one.push_back(x);
  rep.class_equals_n = rep.class_of_one == nn;
  return rep;
}

// --- categories ---

std::vector<MorId> division_closed_closure(const FiniteCategory& cat,
                                           const std::vector<MorId>& seed) {
  auto seeds = checked_ids(cat.n_morphisms(), seed, "division_closed_closure");
  std::vector<bool> in(cat.n_morphisms(), false);
  for (ObjId e = 0; e < cat.n_objects(); ++e) in[cat.identity(e)] = true;
  for (MorId a : seeds) in[a] = true;

  bool changed = true;
  while (changed) {
    changed = false;
    for (MorId b = 0; b < cat.n_morphisms(); ++b) {
      if (!in[b]) continue;
      for (MorId a = 0; a < cat.n_morphisms(); ++a) {
        if (!cat.composable(a, b)) continue;
        MorId ab = cat.compose(a, b);
        if (in[a] && !in[ab]) {
          in[ab] = true;
          changed = true;
        }
        if (!in[a] && in[ab]) {
          in[a] = true;
          changed = true;
        }
      }
    }
  }
  std::vector<MorId> out;
  for (MorId a = 0; a < cat.n_morphisms(); ++a)
    if (in[a]) out.push_back(a);
  return out;
}

CategoryDivisionWitness emultdiv_check(const FiniteCategory& cat, std::size_t budget) {
  std::vector<MorId> cands;
  for (MorId a = 0; a < cat.n_morphisms(); ++a)
    if (!cat.is_identity(a)) cands.push_back(a);

  auto full = [&](const std::vector<MorId>& seed) {
    return division_closed_closure(cat, seed).size() == cat.n_morphisms();
  };

  CategoryDivisionWitness w;
  if (subset_search(cands, budget, full, w.seed)) return w;

  w.exact = false;
  w.budget_exhausted = true;
  std::vector<MorId> seed;
  while (!full(seed)) {
    MorId best = kNone;
    std::size_t best_gain = 0;
    for (MorId x : cands) {
      if (std::find(seed.begin(), seed.end(), x) != seed.end()) continue;
      auto trial = seed;
      trial.push_back(x);
      std::size_t gain = division_closed_closure(cat, trial).size();
      if (best == kNone || gain > best_gain) {
        best = x;
        best_gain = gain;
      }
    }
    seed.push_back(best);
    std::sort(seed.begin(), seed.end());
  }
  w.seed = seed;
  return w;
}

CategoryDivisionWitness s0s1_check(const FiniteCategory& cat, const std::vector<ObjId>& a,
                                   const std::vector<MorId>& s0, std::size_t budget) {
  auto objs = checked_ids(cat.n_objects(), a, "s0s1_check: A");
  auto sect = checked_ids(cat.n_morphisms(), s0, "s0s1_check: s0");
  std::vector<bool> in_a(cat.n_objects(), false);
  for (ObjId e : objs) in_a[e] = true;

  std::vector<std::uint32_t> hits(cat.n_objects(), 0);
  for (MorId s : sect) {
    if (!in_a[cat.dom(s)])
      throw ValidationError("s0s1_check: section morphism must start in A");
    if (in_a[cat.cod(s)])
      throw ValidationError("s0s1_check: section morphism must end outside A");
    ++hits[cat.cod(s)];
  }
  for (ObjId e = 0; e < cat.n_objects(); ++e) {
    if (in_a[e]) continue;
    if (hits[e] != 1)
      throw ValidationError("s0s1_check: object " + cat.object_name(e) +
                            " needs exactly one section morphism");
  }

  std::vector<MorId> cands;
  for (MorId x = 0; x < cat.n_morphisms(); ++x)
    if (!cat.is_identity(x) && !std::binary_search(sect.begin(), sect.end(), x))
      cands.push_back(x);

  auto full = [&](const std::vector<MorId>& extra) {
    std::vector<MorId> seed(sect);
    seed.insert(seed.end(), extra.begin(), extra.end());
    return division_closed_closure(cat, seed).size() == cat.n_morphisms();
  };

  CategoryDivisionWitness w;
  if (subset_search(cands, budget, full, w.seed)) return w;

  w.exact = false;
  w.budget_exhausted = true;
  std::vector<MorId> extra;
  while (!full(extra)) {
    MorId best = kNone;
    std::size_t best_gain = 0;
    for (MorId x : cands) {
      if (std::find(extra.begin(), extra.end(), x) != extra.end()) continue;
      auto trial = extra;
      trial.push_back(x);
      std::vector<MorId> seed(sect);
      seed.insert(seed.end(), trial.begin(), trial.end());
      std::size_t gain = division_closed_closure(cat, seed).size();
      if (best == kNone || gain > best_gain) {
        best = x;
        best_gain = gain;
      }
    }
    extra.push_back(best);
    std::sort(extra.begin(), extra.end());
  }
  w.seed = extra;
  return w;
}

SelectionReport division_closed_subcategory_correspondence(const FiniteCategory& cat,
                                                           const std::vector<bool>& selected) {
  if (selected.size() != cat.n_morphisms())
    throw ValidationError("selection: need one flag per morphism");

  SelectionReport rep;
  for (ObjId e = 0; e < cat.n_objects() && rep.selection_closed; ++e)
    if (!selected[cat.identity(e)]) {
      rep.selection_closed = false;
      rep.failure = "identity of " + cat.object_name(e) + " not selected";
    }
  for (MorId b = 0; b < cat.n_morphisms() && rep.selection_closed; ++b) {
    if (!selected[b]) continue;
    for (MorId a = 0; a < cat.n_morphisms(); ++a) {
      if (!cat.composable(a, b)) continue;
      MorId ab = cat.compose(a, b);
      if (selected[a] && !selected[ab]) {
        rep.selection_closed = false;
        rep.failure = "not closed under composition: " + cat.morphism_name(a) + " after " +
                      cat.morphism_name(b);
        break;
      }
      if (!selected[a] && selected[ab]) {
        rep.selection_closed = false;
        rep.failure = "not closed under right division: " + cat.morphism_name(ab) + " by " +
                      cat.morphism_name(b);
        break;
      }
    }
  }

  if (cat.n_objects() == 0) {
    rep.recovery_matches = true;
    return rep;
  }

  // congruence on the union of all hom functors, generated by relating
  // selected morphisms with a common codomain
  std::vector<ObjId> bases;
  for (ObjId e = 0; e < cat.n_objects(); ++e) bases.push_back(e);
  UnionHom uh = union_hom(std::make_shared<const FiniteCategory>(cat), bases);
  const ESet& h = uh.eset;

  // position of each morphism inside the carrier at its codomain
  std::vector<ElemId> pos(cat.n_morphisms(), kNone);
  for (ObjId f = 0; f < cat.n_objects(); ++f)
    for (ElemId i = 0; i < h.carrier_size(f); ++i) pos[uh.morphism_of[f][i]] = i;

  RelationFamily r = RelationFamily::empty(cat.n_objects());
  for (ObjId f = 0; f < cat.n_objects(); ++f) {
    MorId first = kNone;
    for (MorId b : cat.into(f)) {
      if (!selected[b]) continue;
      if (first == kNone)
        first = b;
      else
        r.pairs[f].push_back({pos[first], pos[b]});
    }
  }

  CongruenceFamily c = congruence_closure(h, r);
  for (MorId b = 0; b < cat.n_morphisms(); ++b) {
    ObjId f = cat.cod(b);
    if (c.class_of[f][pos[b]] == c.class_of[f][pos[cat.identity(f)]])
      rep.recovered.push_back(b);
  }
  std::vector<MorId> sel;
  for (MorId b = 0; b < cat.n_morphisms(); ++b)
    if (selected[b]) sel.push_back(b);
  rep.recovery_matches = rep.recovered == sel;
  return rep;
}

}  // namespace dirlim
