#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <string>

#include "dirlim/gallery.hpp"

namespace oracles {

using namespace dirlim;

CongruenceFamily closure_by_matrix(const ESet& x, const RelationFamily& r) {
  const FiniteCategory& cat = x.category();
  const ObjId n_obj = cat.n_objects();

  std::vector<std::vector<std::vector<bool>>> rel(n_obj);
  for (ObjId e = 0; e < n_obj; ++e) {
    const std::uint32_t m = x.carrier_size(e);
    rel[e].assign(m, std::vector<bool>(m, false));
    for (std::uint32_t v = 0; v < m; ++v) rel[e][v][v] = true;
    for (auto [s, t] : r.pairs[e]) {
      rel[e][s][t] = true;
      rel[e][t][s] = true;
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    // transitive closure per object
    for (ObjId e = 0; e < n_obj; ++e) {
      const std::uint32_t m = x.carrier_size(e);
      for (std::uint32_t k = 0; k < m; ++k)
        for (std::uint32_t i = 0; i < m; ++i) {
          if (!rel[e][i][k]) continue;
          for (std::uint32_t j = 0; j < m; ++j)
            if (rel[e][k][j] && !rel[e][i][j]) {
              rel[e][i][j] = true;
              changed = true;
            }
        }
    }
    // push every related pair through every action map
    for (MorId a = 0; a < cat.n_morphisms(); ++a) {
      const ObjId d = cat.dom(a), c = cat.cod(a);
      const std::uint32_t m = x.carrier_size(d);
      for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
          if (rel[d][i][j]) {
            const ElemId fi = x.apply(a, i), fj = x.apply(a, j);
            if (!rel[c][fi][fj]) {
              rel[c][fi][fj] = true;
              rel[c][fj][fi] = true;
              changed = true;
            }
          }
    }
  }

  CongruenceFamily out;
  out.class_of.resize(n_obj);
  out.n_classes.resize(n_obj);
  for (ObjId e = 0; e < n_obj; ++e) {
    const std::uint32_t m = x.carrier_size(e);
    out.class_of[e].assign(m, kNone);
    std::uint32_t next = 0;
    for (std::uint32_t v = 0; v < m; ++v) {
      if (out.class_of[e][v] != kNone) continue;
      for (std::uint32_t w = v; w < m; ++w)
        if (rel[e][v][w]) out.class_of[e][w] = next;
      ++next;
    }
    out.n_classes[e] = next;
  }
  return out;
}

std::vector<LimitElement> limit_by_product(const ESet& x, std::size_t cap) {
  const FiniteCategory& cat = x.category();
  const ObjId n_obj = cat.n_objects();

  std::size_t product = 1;
  for (ObjId e = 0; e < n_obj; ++e) {
    product *= x.carrier_size(e);
    if (product > cap) throw GuardError("limit_by_product: product exceeds cap");
    if (product == 0) return {};
  }

  std::vector<LimitElement> out;
  std::vector<ElemId> coord(n_obj, 0);
  while (true) {
    bool ok = true;
    for (MorId a = 0; a < cat.n_morphisms() && ok; ++a)
      if (x.apply(a, coord[cat.dom(a)]) != coord[cat.cod(a)]) ok = false;
    if (ok) out.push_back(LimitElement{coord});

    ObjId e = 0;
    while (e < n_obj) {
      if (++coord[e] < x.carrier_size(e)) break;
      coord[e] = 0;
      ++e;
    }
    if (e == n_obj) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::uint32_t>> partitions(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> s(n, 0);
  if (n == 0) {
    out.push_back({});
    return out;
  }
  // restricted growth: s[0] = 0, s[i] <= 1 + max(s[0..i-1])
  while (true) {
    out.push_back(s);
    std::uint32_t i = n;
    while (i-- > 1) {
      std::uint32_t mx = 0;
      for (std::uint32_t j = 0; j < i; ++j) mx = std::max(mx, s[j]);
      if (s[i] <= mx) {
        ++s[i];
        for (std::uint32_t j = i + 1; j < n; ++j) s[j] = 0;
        break;
      }
      if (i == 1) return out;
    }
    if (n == 1) return out;
  }
}

namespace {

// flat n*n tables with identity 0; 255 marks an unset cell
using Table = std::array<std::uint8_t, 25>;

bool assoc_ok_after(const Table& t, std::uint32_t n, std::uint32_t a, std::uint32_t b) {
  const std::uint8_t ab = t[a * n + b];
  // (a,b) as the inner product of either side
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::uint8_t xa = t[x * n + a];
    if (xa != 255 && t[xa * n + b] != 255 && t[x * n + ab] != 255 &&
        t[xa * n + b] != t[x * n + ab])
      return false;
  }
  for (std::uint32_t z = 0; z < n; ++z) {
    const std::uint8_t bz = t[b * n + z];
    if (bz != 255 && t[a * n + bz] != 255 && t[ab * n + z] != 255 &&
        t[a * n + bz] != t[ab * n + z])
      return false;
  }
  // (a,b) as the outer product: t[x][y] == a with z = b, or y.z == b with x = a
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      if (t[x * n + y] == a) {
        const std::uint8_t yb = t[y * n + b];
        if (yb != 255 && t[x * n + yb] != 255 && ab != t[x * n + yb]) return false;
      }
      if (t[x * n + y] == b) {
        const std::uint8_t ax = t[a * n + x];
        if (ax != 255 && t[ax * n + y] != 255 && ab != t[ax * n + y]) return false;
      }
    }
  return true;
}

void enumerate_tables(Table& t, std::uint32_t n, std::uint32_t cell,
                      std::vector<Table>& out) {
  // cells walk the (n-1) x (n-1) block row-major
  const std::uint32_t side = n - 1;
  if (cell == side * side) {
    out.push_back(t);
    return;
  }
  const std::uint32_t a = 1 + cell / side, b = 1 + cell % side;
  for (std::uint8_t v = 0; v < n; ++v) {
    t[a * n + b] = v;
    if (assoc_ok_after(t, n, a, b)) enumerate_tables(t, n, cell + 1, out);
  }
  t[a * n + b] = 255;
}

Table canonical_table(const Table& t, std::uint32_t n) {
  std::array<std::uint8_t, 5> perm{};
  for (std::uint32_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint8_t>(i);
  Table best;
  best.fill(255);
  bool first = true;
  do {
    Table cand;
    cand.fill(255);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        cand[perm[a] * n + perm[b]] = perm[t[a * n + b]];
    if (first || cand < best) {
      best = cand;
      first = false;
    }
  } while (std::next_permutation(perm.begin() + 1, perm.begin() + n));
  return best;
}

}  // namespace

std::vector<FiniteMonoid> monoid_catalog(std::uint32_t n) {
  if (n == 0 || n > 5) throw GuardError("monoid_catalog: size must be 1..5");
  Table t;
  t.fill(255);
  for (std::uint32_t i = 0; i < n; ++i) {
    t[0 * n + i] = static_cast<std::uint8_t>(i);
    t[i * n + 0] = static_cast<std::uint8_t>(i);
  }
  std::vector<Table> tables;
  enumerate_tables(t, n, 0, tables);

  std::set<Table> canon;
  for (const Table& tab : tables) canon.insert(canonical_table(tab, n));

  std::vector<FiniteMonoid> out;
  for (const Table& tab : canon) {
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < n; ++i) names.push_back("m" + std::to_string(i));
    std::vector<std::vector<ElemId>> rows(n, std::vector<ElemId>(n));
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) rows[a][b] = tab[a * n + b];
    out.push_back(FiniteMonoid::validated(std::move(names), std::move(rows), 0));
  }
  return out;
}

namespace {

// bit i*8+j set when i <= j; fits 7x7 in a uint64
using Pcode = std::uint64_t;

Pcode encode(const std::vector<std::vector<bool>>& leq) {
  Pcode c = 0;
  const std::size_t n = leq.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq[i][j]) c |= Pcode{1} << (i * 8 + j);
  return c;
}

// canonical form: minimum encoding over permutations that respect the
// (|down|, |up|) invariant blocks, elements pre-sorted by invariant
Pcode canonical_pcode(const std::vector<std::vector<bool>>& leq) {
  const std::uint32_t n = static_cast<std::uint32_t>(leq.size());
  std::vector<std::pair<std::pair<int, int>, std::uint32_t>> keyed(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    int dn = 0, up = 0;
    for (std::uint32_t y = 0; y < n; ++y) {
      if (leq[y][x]) ++dn;
      if (leq[x][y]) ++up;
    }
    keyed[x] = {{dn, up}, x};
  }
  std::sort(keyed.begin(), keyed.end());

  // block boundaries over equal invariants
  std::vector<std::pair<std::uint32_t, std::uint32_t>> blocks;
  for (std::uint32_t i = 0; i < n;) {
    std::uint32_t j = i;
    while (j < n && keyed[j].first == keyed[i].first) ++j;
    blocks.push_back({i, j});
    i = j;
  }

  std::vector<std::uint32_t> order(n);
  for (std::uint32_t i = 0; i < n; ++i) order[i] = keyed[i].second;

  Pcode best = ~Pcode{0};
  // iterate the product of within-block permutations
  std::vector<std::uint32_t> work = order;
  std::function<void(std::size_t)> rec = [&](std::size_t bi) {
    if (bi == blocks.size()) {
      // position of element x in work = its new label
      std::vector<std::uint32_t> label(n);
      for (std::uint32_t pos = 0; pos < n; ++pos) label[work[pos]] = pos;
      Pcode c = 0;
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
          if (leq[i][j]) c |= Pcode{1} << (label[i] * 8 + label[j]);
      best = std::min(best, c);
      return;
    }
    auto [lo, hi] = blocks[bi];
    std::sort(work.begin() + lo, work.begin() + hi);
    do {
      rec(bi + 1);
    } while (std::next_permutation(work.begin() + lo, work.begin() + hi));
  };
  rec(0);
  return best;
}

std::vector<std::vector<bool>> decode(Pcode c, std::uint32_t n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      leq[i][j] = (c >> (i * 8 + j)) & 1;
  return leq;
}

}  // namespace

std::vector<Poset> poset_catalog(std::uint32_t n) {
  if (n > 7) throw GuardError("poset_catalog: size must be <= 7");
  std::set<Pcode> level{Pcode{0}};  // the empty poset
  for (std::uint32_t k = 1; k <= n; ++k) {
    std::set<Pcode> next;
    for (Pcode pc : level) {
      auto leq = decode(pc, k - 1);
      // every downset of the (k-1)-poset can sit under the new maximal element
      for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        bool down_closed = true;
        for (std::uint32_t d = 0; d < k - 1 && down_closed; ++d) {
          if (!((mask >> d) & 1)) continue;
          for (std::uint32_t y = 0; y < k - 1; ++y)
            if (leq[y][d] && !((mask >> y) & 1)) down_closed = false;
        }
        if (!down_closed) continue;
        std::vector<std::vector<bool>> bigger(k, std::vector<bool>(k, false));
        for (std::uint32_t i = 0; i < k - 1; ++i)
          for (std::uint32_t j = 0; j < k - 1; ++j) bigger[i][j] = leq[i][j];
        for (std::uint32_t i = 0; i < k; ++i) bigger[i][i] = true;
        for (std::uint32_t d = 0; d < k - 1; ++d)
          if ((mask >> d) & 1) bigger[d][k - 1] = true;
        next.insert(canonical_pcode(bigger));
      }
    }
    level = std::move(next);
  }

  std::vector<Poset> out;
  for (Pcode pc : level) {
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    out.push_back(Poset::validated(std::move(names), decode(pc, n)));
  }
  return out;
}

// --- random corpus ---------------------------------------------------------

Poset random_poset(Rng& rng, std::uint32_t max_n) {
  const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % max_n);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::uint32_t i = 0; i < n; ++i) leq[i][i] = true;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (rng() % 5 < 2) leq[i][j] = true;
  for (std::uint32_t k = 0; k < n; ++k)
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  return Poset::validated(std::move(names), std::move(leq));
}

std::shared_ptr<const FiniteCategory> random_category(Rng& rng) {
  if (rng() % 5 < 3)
    return std::make_shared<const FiniteCategory>(poset_to_category(random_poset(rng, 4)));
  FiniteMonoid m = [&] {
    switch (rng() % 4) {
      case 0: return maxchain_monoid(1 + rng() % 4);
      case 1: return rightzero_monoid(1 + rng() % 3);
      case 2: return field_mult_monoid(rng() % 2 ? 3 : 5);
      default: return maxchain_monoid(1);
    }
  }();
  return std::make_shared<const FiniteCategory>(monoid_to_category(m));
}

ESet random_eset(std::shared_ptr<const FiniteCategory> cat, Rng& rng,
                 std::uint32_t max_carrier) {
  if (rng() % 5 == 0) return trivial_eset(cat);
  std::vector<ObjId> bases;
  const std::uint32_t n_bases = 1 + static_cast<std::uint32_t>(rng() % 3);
  for (std::uint32_t i = 0; i < n_bases; ++i)
    bases.push_back(static_cast<ObjId>(rng() % cat->n_objects()));
  ESet x = union_hom(cat, bases).eset;
  while (true) {
    bool small = true;
    for (ObjId e = 0; e < cat->n_objects(); ++e)
      if (x.carrier_size(e) > max_carrier) small = false;
    if (small) return x;
    RelationFamily r = random_pairs(x, rng, 2);
    if (r.total_pairs() == 0) return x;
    x = quotient(x, congruence_closure(x, r)).eset;
  }
}

RelationFamily random_pairs(const ESet& x, Rng& rng, std::uint32_t count) {
  const FiniteCategory& cat = x.category();
  RelationFamily r = RelationFamily::empty(cat.n_objects());
  std::vector<ObjId> nonempty;
  for (ObjId e = 0; e < cat.n_objects(); ++e)
    if (x.carrier_size(e) > 0) nonempty.push_back(e);
  if (nonempty.empty()) return r;
  for (std::uint32_t k = 0; k < count; ++k) {
    const ObjId e = nonempty[rng() % nonempty.size()];
    const ElemId s = static_cast<ElemId>(rng() % x.carrier_size(e));
    const ElemId t = static_cast<ElemId>(rng() % x.carrier_size(e));
    r.pairs[e].push_back({s, t});
  }
  return r;
}

FiniteDirectedSystem random_system(Rng& rng) {
  Poset base = random_poset(rng, 3);
  const std::uint32_t n = base.n() + 1;
  std::vector<std::string> names(base.names());
  names.push_back("T");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::uint32_t i = 0; i < base.n(); ++i)
    for (std::uint32_t j = 0; j < base.n(); ++j) leq[i][j] = base.leq(i, j);
  for (std::uint32_t i = 0; i < n; ++i) {
    leq[i][n - 1] = true;
    leq[i][i] = true;
  }
  Poset index = Poset::validated(std::move(names), std::move(leq));

  auto cat = random_category(rng);
  ESet y = random_eset(cat, rng, 6);

  std::vector<RelationFamily> extra;
  for (std::uint32_t i = 0; i < n; ++i)
    extra.push_back(random_pairs(y, rng, static_cast<std::uint32_t>(rng() % 3)));

  std::vector<CongruenceFamily> cong;
  std::vector<Quotient> quot;
  for (std::uint32_t i = 0; i < n; ++i) {
    RelationFamily all = RelationFamily::empty(cat->n_objects());
    for (std::uint32_t j = 0; j < n; ++j)
      if (index.leq(j, i))
        for (ObjId e = 0; e < cat->n_objects(); ++e)
          for (auto pr : extra[j].pairs[e]) all.pairs[e].push_back(pr);
    cong.push_back(congruence_closure(y, all));
    quot.push_back(quotient(y, cong.back()));
  }

  std::vector<ESet> members;
  for (std::uint32_t i = 0; i < n; ++i) members.push_back(quot[i].eset);

  std::map<std::pair<ElemId, ElemId>, std::vector<std::vector<ElemId>>> connects;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j || !index.leq(i, j)) continue;
      std::vector<std::vector<ElemId>> comp(cat->n_objects());
      for (ObjId e = 0; e < cat->n_objects(); ++e) {
        comp[e].resize(members[i].carrier_size(e));
        // least original element in each class represents it
        for (ElemId v = y.carrier_size(e); v-- > 0;)
          comp[e][quot[i].projection.component[e][v]] = quot[j].projection.component[e][v];
      }
      connects[{i, j}] = std::move(comp);
    }
  return FiniteDirectedSystem::validated(std::move(index), std::move(members), connects);
}

}  // namespace oracles
